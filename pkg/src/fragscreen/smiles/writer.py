"""SMILES writer: molecular graph back to text.

The traversal is rank-driven: atoms are visited depth-first starting from the
lowest-ranked atom, branches in ascending neighbor rank, ring-closure digits
in discovery order.  With canonical ranks this yields the canonical SMILES;
with the identity ranking it is a plain deterministic writer.

Bracket atoms are emitted exactly when the bare token would not round-trip:
isotopes, charges, elements outside the organic subset, and hydrogen counts
the reader would infer differently (``[nH]`` being the classic case).
"""

from __future__ import annotations

import sys

from ..elements import ALLOWED_VALENCES, AROMATIC_SUBSET, ORGANIC_SUBSET
from ..mol import Bond, Molecule

_ORDER_SYMBOL = {2: "=", 3: "#"}


def write_smiles(mol: Molecule, ranks: list[int] | None = None) -> str:
    """Serialize a prepared molecule; ``ranks`` steer the traversal."""
    n = mol.n_atoms
    if n == 0:
        return ""
    if not mol.hydrogens_assigned:
        raise ValueError("molecule must have hydrogens assigned before writing")
    if ranks is None:
        ranks = list(range(n))

    start = min(range(n), key=lambda i: ranks[i])
    bond_ids = {id(b): k for k, b in enumerate(mol.bonds)}

    # Structure pass: true DFS so every non-tree bond is a back edge to an
    # ancestor (the earlier-emitted endpoint opens the ring digit).
    children: dict[int, list[int]] = {i: [] for i in range(n)}
    opens_at: dict[int, list[int]] = {i: [] for i in range(n)}
    closes_at: dict[int, list[int]] = {i: [] for i in range(n)}
    ring_bonds: list[Bond] = []
    visited: set[int] = set()
    used_bonds: set[int] = set()

    limit = sys.getrecursionlimit()
    if n + 100 > limit:
        sys.setrecursionlimit(n + 200)

    def dfs(atom: int) -> None:
        visited.add(atom)
        for nbr, bond in sorted(mol.neighbors(atom), key=lambda t: ranks[t[0]]):
            key = bond_ids[id(bond)]
            if key in used_bonds:
                continue
            used_bonds.add(key)
            if nbr in visited:
                ring_idx = len(ring_bonds)
                ring_bonds.append(bond)
                opens_at[nbr].append(ring_idx)
                closes_at[atom].append(ring_idx)
            else:
                children[atom].append(nbr)
                dfs(nbr)

    dfs(start)
    if len(visited) != n:
        raise ValueError("cannot write a disconnected molecule")

    digit_of: dict[int, int] = {}
    free_digits: list[int] = []
    counter = [1]
    out: list[str] = []

    def take_digit() -> int:
        if free_digits:
            digit = min(free_digits)
            free_digits.remove(digit)
            return digit
        digit = counter[0]
        counter[0] += 1
        return digit

    def bond_symbol(bond: Bond) -> str:
        if bond.aromatic:
            return ""
        if bond.order == 1:
            if mol.atoms[bond.a].aromatic and mol.atoms[bond.b].aromatic:
                # Plain single between two aromatic atoms (biphenyl linker);
                # without the dash the reader would take it as aromatic.
                return "-"
            return ""
        return _ORDER_SYMBOL.get(bond.order, "")

    def emit(atom: int) -> None:
        out.append(_atom_token(mol, atom))
        for ring_idx in opens_at[atom]:
            digit_of[ring_idx] = take_digit()
            out.append(bond_symbol(ring_bonds[ring_idx]) + _digit_token(digit_of[ring_idx]))
        for ring_idx in closes_at[atom]:
            digit = digit_of[ring_idx]
            out.append(_digit_token(digit))
            free_digits.append(digit)
        kids = children[atom]
        for i, child in enumerate(kids):
            bond = mol.bond_between(atom, child)
            last = i == len(kids) - 1
            if not last:
                out.append("(")
            out.append(bond_symbol(bond))
            emit(child)
            if not last:
                out.append(")")

    emit(start)
    return "".join(out)


def _digit_token(digit: int) -> str:
    return str(digit) if digit < 10 else f"%{digit:02d}"


def _reader_inferred_h(mol: Molecule, idx: int) -> int:
    """Hydrogen count the parser+kekulizer would infer for a bare token."""
    atom = mol.atoms[idx]
    allowed = ALLOWED_VALENCES.get(atom.element)
    if not allowed:
        return 0
    sigma = 0
    has_multiple = False
    for _, bond in mol.neighbors(idx):
        if bond.aromatic:
            sigma += 1
        else:
            sigma += max(bond.order, 1)
            if bond.order >= 2:
                has_multiple = True
    target = next((v for v in allowed if v >= sigma), None)
    if target is None:
        return 0
    pi = 0
    if atom.aromatic and not has_multiple and target - sigma >= 1:
        # The reader will hand this atom one double bond during kekulization.
        pi = 1
    target = next((v for v in allowed if v >= sigma + pi), None)
    if target is None:
        return 0
    return target - sigma - pi


def _atom_token(mol: Molecule, idx: int) -> str:
    atom = mol.atoms[idx]
    aromatic_ok = atom.element.lower() in AROMATIC_SUBSET or atom.element == "Se"
    symbol = atom.element.lower() if atom.aromatic and aromatic_ok else atom.element

    plain_ok = (
        atom.isotope is None
        and atom.formal_charge == 0
        and atom.element in ORGANIC_SUBSET
        and (not atom.aromatic or aromatic_ok)
        and _reader_inferred_h(mol, idx) == atom.total_h
    )
    if plain_ok:
        return symbol

    parts = ["["]
    if atom.isotope is not None:
        parts.append(str(atom.isotope))
    parts.append(symbol)
    h = atom.total_h
    if h == 1:
        parts.append("H")
    elif h > 1:
        parts.append(f"H{h}")
    charge = atom.formal_charge
    if charge == 1:
        parts.append("+")
    elif charge == -1:
        parts.append("-")
    elif charge > 1:
        parts.append(f"+{charge}")
    elif charge < -1:
        parts.append(f"-{-charge}")
    parts.append("]")
    return "".join(parts)
