"""Canonical atom ranking and canonical SMILES.

Iterative invariant refinement (Morgan-style): atoms start from the seed
invariant (element, degree, charge, total H, in-ring, aromatic), are refined
by hashed sorted neighbor-rank multisets until the partition is stable, and
remaining ties are broken by artificially lowering the smallest tied rank and
re-refining.  Stable refinement classes coincide with automorphism orbits on
chemical graphs, which is what makes the tie-break choice safe.

The refinement inner loop lives in ``fragscreen.kernels`` (compiled when
available).
"""

from __future__ import annotations

from .. import kernels
from ..mol import Molecule
from .writer import write_smiles

BOND_CODE_AROMATIC = 4


def _bond_code(order: int, aromatic: bool) -> int:
    return BOND_CODE_AROMATIC if aromatic or order == 0 else order


def _csr(mol: Molecule) -> tuple[list[int], list[int], list[int]]:
    nbr_ptr = [0]
    nbr_idx: list[int] = []
    nbr_bond: list[int] = []
    for i in range(mol.n_atoms):
        for nbr, bond in mol.neighbors(i):
            nbr_idx.append(nbr)
            nbr_bond.append(_bond_code(bond.order, bond.aromatic))
        nbr_ptr.append(len(nbr_idx))
    return nbr_ptr, nbr_idx, nbr_bond


def _dense(keys: list) -> list[int]:
    order = {key: rank for rank, key in enumerate(sorted(set(keys)))}
    return [order[key] for key in keys]


def canonical_ranks(mol: Molecule) -> list[int]:
    """Permutation-invariant total order on atoms (a 0..n-1 permutation)."""
    n = mol.n_atoms
    if n == 0:
        return []
    if not mol.hydrogens_assigned:
        raise ValueError("molecule must be prepared before canonical ranking")

    seeds = _dense(
        [
            (
                atom.element,
                mol.degree(i),
                atom.formal_charge,
                atom.total_h,
                atom.in_ring,
                atom.aromatic,
            )
            for i, atom in enumerate(mol.atoms)
        ]
    )
    nbr_ptr, nbr_idx, nbr_bond = _csr(mol)
    ranks = kernels.wl_refine(seeds, nbr_ptr, nbr_idx, nbr_bond)

    while len(set(ranks)) < n:
        counts: dict[int, int] = {}
        for r in ranks:
            counts[r] = counts.get(r, 0) + 1
        tied_rank = min(r for r, c in counts.items() if c > 1)
        chosen = min(i for i in range(n) if ranks[i] == tied_rank)
        keys = [(ranks[i], 0 if i == chosen else 1) for i in range(n)]
        ranks = kernels.wl_refine(_dense(keys), nbr_ptr, nbr_idx, nbr_bond)

    return ranks


def canonicalize(mol: Molecule) -> str:
    """Canonical SMILES of a prepared molecule."""
    if mol.n_atoms == 0:
        return ""
    return write_smiles(mol, ranks=canonical_ranks(mol))
