"""Ring perception: cycle membership flags and a smallest-set-of-smallest-rings.

Cycle membership (the ``in_ring`` flags) is computed exactly via bridge
detection: a bond lies on a cycle iff it is not a bridge.  The SSSR is then
assembled greedily from per-bond shortest cycles (BFS, lowest-atom-index
tie-break), topped up with DFS fundamental cycles so the basis always reaches
the cyclomatic number.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..mol import Molecule


@dataclass
class RingSet:
    rings: list[list[int]]
    ring_bond_flags: list[bool]

    @property
    def count(self) -> int:
        return len(self.rings)


def _bond_indices(mol: Molecule) -> dict[tuple[int, int], int]:
    table = {}
    for idx, bond in enumerate(mol.bonds):
        table[(bond.a, bond.b)] = idx
        table[(bond.b, bond.a)] = idx
    return table


def bridge_bonds(mol: Molecule) -> set[int]:
    """Indices of bonds not on any cycle (iterative lowpoint DFS)."""
    n = mol.n_atoms
    index = _bond_indices(mol)
    disc = [-1] * n
    low = [0] * n
    bridges: set[int] = set()
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        stack = [root]
        positions = {root: 0}
        parent_bond = {root: -1}
        while stack:
            atom = stack[-1]
            if disc[atom] == -1:
                disc[atom] = low[atom] = timer
                timer += 1
            pos = positions[atom]
            nbrs = mol.neighbors(atom)
            advanced = False
            while pos < len(nbrs):
                nbr, _ = nbrs[pos]
                bidx = index[(atom, nbr)]
                pos += 1
                if bidx == parent_bond[atom]:
                    continue
                if disc[nbr] == -1:
                    positions[atom] = pos
                    positions[nbr] = 0
                    parent_bond[nbr] = bidx
                    stack.append(nbr)
                    advanced = True
                    break
                low[atom] = min(low[atom], disc[nbr])
            if advanced:
                continue
            positions[atom] = pos
            stack.pop()
            if stack:
                parent = stack[-1]
                low[parent] = min(low[parent], low[atom])
                if low[atom] > disc[parent]:
                    bridges.add(parent_bond[atom])
    return bridges


def _shortest_cycle_through(mol: Molecule, bond_idx: int) -> list[int] | None:
    """Shortest cycle containing the given bond (BFS avoiding the bond).

    Deterministic: BFS expands neighbors in ascending atom index, so among
    equal-length cycles the lowest-atom-index path wins.
    """
    avoid = mol.bonds[bond_idx]
    start, goal = avoid.a, avoid.b
    prev = {start: -1}
    queue = [start]
    while queue:
        nxt: list[int] = []
        for atom in queue:
            for nbr, bond in sorted(mol.neighbors(atom), key=lambda t: t[0]):
                if bond is avoid or nbr in prev:
                    continue
                prev[nbr] = atom
                if nbr == goal:
                    path = [goal]
                    while path[-1] != start:
                        path.append(prev[path[-1]])
                    return path
                nxt.append(nbr)
        queue = nxt
    return None


def _fundamental_cycles(mol: Molecule) -> list[list[int]]:
    """DFS-forest fundamental cycles; a full-rank backstop for the basis."""
    n = mol.n_atoms
    index = _bond_indices(mol)
    visited = [False] * n
    parent = [-1] * n
    depth = [0] * n
    cycles: list[list[int]] = []
    seen_bonds: set[int] = set()
    for root in range(n):
        if visited[root]:
            continue
        visited[root] = True
        stack = [root]
        while stack:
            atom = stack.pop()
            for nbr, _ in sorted(mol.neighbors(atom), key=lambda t: t[0]):
                bidx = index[(atom, nbr)]
                if bidx in seen_bonds:
                    continue
                seen_bonds.add(bidx)
                if not visited[nbr]:
                    visited[nbr] = True
                    parent[nbr] = atom
                    depth[nbr] = depth[atom] + 1
                    stack.append(nbr)
                else:
                    path_a, path_b = [atom], [nbr]
                    x, y = atom, nbr
                    while depth[x] > depth[y]:
                        x = parent[x]
                        path_a.append(x)
                    while depth[y] > depth[x]:
                        y = parent[y]
                        path_b.append(y)
                    while x != y:
                        x = parent[x]
                        y = parent[y]
                        path_a.append(x)
                        path_b.append(y)
                    cycles.append(path_a + path_b[-2::-1])
    return cycles


def _cycle_bond_mask(mol: Molecule, cycle: list[int]) -> int:
    index = _bond_indices(mol)
    mask = 0
    for i, atom in enumerate(cycle):
        nxt = cycle[(i + 1) % len(cycle)]
        mask |= 1 << index[(atom, nxt)]
    return mask


def perceive_rings(mol: Molecule) -> RingSet:
    """SSSR with exactly (bonds - atoms + components) rings.

    Also stamps ``in_ring`` flags onto the molecule's atoms and bonds
    (cycle membership, independent of which basis was selected).
    """
    bridges = bridge_bonds(mol)
    ring_bond_flags = [i not in bridges for i in range(mol.n_bonds)]
    for idx, bond in enumerate(mol.bonds):
        bond.in_ring = ring_bond_flags[idx]
    for atom in mol.atoms:
        atom.in_ring = False
    for idx, bond in enumerate(mol.bonds):
        if ring_bond_flags[idx]:
            mol.atoms[bond.a].in_ring = True
            mol.atoms[bond.b].in_ring = True

    components = _component_count(mol)
    target = mol.n_bonds - mol.n_atoms + components
    if target <= 0:
        mol.rings = []
        return RingSet(rings=[], ring_bond_flags=ring_bond_flags)

    candidates: list[list[int]] = []
    for idx in range(mol.n_bonds):
        if idx in bridges:
            continue
        cycle = _shortest_cycle_through(mol, idx)
        if cycle is not None:
            candidates.append(cycle)
    candidates.extend(_fundamental_cycles(mol))

    def cycle_key(cycle: list[int]) -> tuple[int, tuple[int, ...]]:
        return (len(cycle), tuple(sorted(cycle)))

    seen: set[tuple[int, ...]] = set()
    unique: list[list[int]] = []
    for cycle in sorted(candidates, key=cycle_key):
        key = tuple(sorted(cycle))
        if key not in seen:
            seen.add(key)
            unique.append(cycle)

    # Greedy minimum cycle basis: accept a candidate iff independent over
    # GF(2) on bond-membership vectors (classic xor-basis insertion).
    basis: list[list[int]] = []
    basis_by_msb: dict[int, int] = {}
    for cycle in unique:
        mask = _cycle_bond_mask(mol, cycle)
        while mask:
            msb = mask.bit_length() - 1
            if msb not in basis_by_msb:
                basis_by_msb[msb] = mask
                basis.append(cycle)
                break
            mask ^= basis_by_msb[msb]
        if len(basis) == target:
            break

    mol.rings = [_normalize_cycle(c) for c in basis]
    return RingSet(rings=mol.rings, ring_bond_flags=ring_bond_flags)


def _normalize_cycle(cycle: list[int]) -> list[int]:
    """Rotate/flip so the cycle starts at its smallest atom, smaller
    neighbor first; purely cosmetic determinism."""
    k = cycle.index(min(cycle))
    rotated = cycle[k:] + cycle[:k]
    if len(rotated) > 2 and rotated[1] > rotated[-1]:
        rotated = [rotated[0]] + rotated[:0:-1]
    return rotated


def _component_count(mol: Molecule) -> int:
    n = mol.n_atoms
    seen = [False] * n
    count = 0
    for root in range(n):
        if seen[root]:
            continue
        count += 1
        stack = [root]
        seen[root] = True
        while stack:
            atom = stack.pop()
            for nbr, _ in mol.neighbors(atom):
                if not seen[nbr]:
                    seen[nbr] = True
                    stack.append(nbr)
    return count
