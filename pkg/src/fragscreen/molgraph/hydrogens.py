"""Implicit hydrogen assignment and kekulization.

Aromatic (lowercase-parsed) systems are resolved to alternating single/double
bonds by a perfect matching over the atoms that still have a free valence
slot; implicit hydrogen counts then follow from the organic-subset valence
model.  Bracket atoms keep their explicit hydrogens only.
"""

from __future__ import annotations

from ..elements import ALLOWED_VALENCES, allowed_valences
from ..mol import Molecule
from .rings import perceive_rings


def sigma_consumed(mol: Molecule, idx: int) -> int:
    """Valence consumed by explicit bonds and explicit hydrogens.

    Unresolved aromatic bonds (order 0) count one, their sigma floor.
    """
    atom = mol.atoms[idx]
    total = atom.explicit_h
    for _, bond in mol.neighbors(idx):
        total += max(bond.order, 1)
    return total


def _needs_pi_bond(mol: Molecule, idx: int) -> bool:
    atom = mol.atoms[idx]
    if any(bond.order >= 2 for _, bond in mol.neighbors(idx)):
        # Already carries its one double bond (possibly written explicitly).
        return False
    allowed = allowed_valences(atom.element, atom.formal_charge)
    if not allowed:
        return False
    consumed = sigma_consumed(mol, idx)
    target = next((v for v in allowed if v >= consumed), None)
    return target is not None and target - consumed >= 1


def kekulize(mol: Molecule) -> None:
    """Resolve aromatic bond orders in place.

    Aromatic bonds outside rings are demoted to single (the implicit bond
    between two aromatic atoms is only aromatic within a ring).  On matching
    failure the molecule is flagged; the sanitizer reports it.
    """
    if mol.kekulization_done:
        return
    mol.kekulization_done = True
    if mol.rings is None:
        perceive_rings(mol)

    for bond in mol.bonds:
        if bond.order == 0 and not bond.in_ring:
            bond.aromatic = False
            bond.order = 1

    unresolved = [b for b in mol.bonds if b.order == 0]
    if not unresolved:
        mol.kekulized_ok = True
        return

    needy = [
        i
        for i in range(mol.n_atoms)
        if mol.atoms[i].aromatic
        and any(b.order == 0 for _, b in mol.neighbors(i))
        and _needs_pi_bond(mol, i)
    ]
    needy_set = set(needy)
    adj: dict[int, list[int]] = {i: [] for i in needy}
    pi_bonds: dict[tuple[int, int], object] = {}
    for bond in unresolved:
        if bond.a in needy_set and bond.b in needy_set:
            adj[bond.a].append(bond.b)
            adj[bond.b].append(bond.a)
            pi_bonds[(bond.a, bond.b)] = bond
            pi_bonds[(bond.b, bond.a)] = bond
    for i in adj:
        adj[i].sort()

    matching = _perfect_matching(needy, adj)
    if matching is None:
        mol.kekulized_ok = False
        mol.unkekulizable_atoms = needy
        return

    mol.kekulized_ok = True
    mol.unkekulizable_atoms = []
    for a, b in matching.items():
        if a < b:
            pi_bonds[(a, b)].order = 2
    for bond in unresolved:
        if bond.order == 0:
            bond.order = 1


def _perfect_matching(
    nodes: list[int], adj: dict[int, list[int]]
) -> dict[int, int] | None:
    """Backtracking perfect matching, fewest-candidates-first."""
    matched: dict[int, int] = {}

    def backtrack() -> bool:
        unmatched = [v for v in nodes if v not in matched]
        if not unmatched:
            return True
        v = min(
            unmatched,
            key=lambda u: (sum(1 for w in adj[u] if w not in matched), u),
        )
        candidates = [w for w in adj[v] if w not in matched]
        for w in candidates:
            matched[v] = w
            matched[w] = v
            if backtrack():
                return True
            del matched[v]
            del matched[w]
        return False

    return matched if backtrack() else None


def assign_implicit_hydrogens(mol: Molecule) -> Molecule:
    """Fill per-atom implicit hydrogen counts in place and return the molecule.

    Organic-subset atoms are topped up to the smallest allowed valence not
    below their consumed valence; deficits never go negative here (they
    surface as sanitize failures instead).
    """
    if mol.rings is None:
        perceive_rings(mol)
    if not mol.kekulization_done:
        kekulize(mol)

    for idx, atom in enumerate(mol.atoms):
        if atom.bracket:
            atom.implicit_h = 0
            continue
        allowed = ALLOWED_VALENCES.get(atom.element)
        if not allowed:
            atom.implicit_h = 0
            continue
        consumed = sigma_consumed(mol, idx)
        target = next((v for v in allowed if v >= consumed), None)
        atom.implicit_h = (target - consumed) if target is not None else 0
    mol.hydrogens_assigned = True
    return mol
