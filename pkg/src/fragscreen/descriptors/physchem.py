"""Scalar physicochemical descriptors: weight, sp2 fraction, basic counts."""

from __future__ import annotations

from dataclasses import dataclass

from ..elements import atomic_mass
from ..mol import Molecule

H_MASS = 1.008


def molecular_weight(mol: Molecule) -> float:
    """Sum of standard atomic masses over heavy atoms plus hydrogens (Da)."""
    if not mol.hydrogens_assigned:
        raise ValueError("molecule must have hydrogens assigned")
    total = 0.0
    for atom in mol.atoms:
        total += atomic_mass(atom.element)
        total += atom.total_h * H_MASS
    return total


def fraction_sp2(mol: Molecule) -> float:
    """Share of heavy atoms that are aromatic or in a double bond."""
    heavy = [i for i, a in enumerate(mol.atoms) if a.element != "H"]
    if not heavy:
        return 0.0
    sp2 = 0
    for idx in heavy:
        atom = mol.atoms[idx]
        if atom.aromatic or any(b.order == 2 for _, b in mol.neighbors(idx)):
            sp2 += 1
    return sp2 / len(heavy)


@dataclass(frozen=True)
class CountSet:
    hac: int
    heteroatoms: int
    s_plus_o: int
    hbd: int
    hba: int
    rotatable_bonds: int
    ring_count: int
    aromatic_rings: int
    formal_charge: int
    element_set: frozenset[str]


def basic_counts(mol: Molecule) -> CountSet:
    """The count descriptors the literature odor criteria consume."""
    if mol.rings is None:
        raise ValueError("molecule must be prepared before counting")
    heavy = [i for i, a in enumerate(mol.atoms) if a.element != "H"]
    elements = frozenset(a.element for a in mol.atoms) | (
        {"H"} if any(a.total_h for a in mol.atoms) else frozenset()
    )
    hetero = sum(1 for i in heavy if mol.atoms[i].element != "C")
    s_plus_o = sum(1 for i in heavy if mol.atoms[i].element in ("S", "O"))
    hbd = sum(
        1
        for i in heavy
        if mol.atoms[i].element in ("N", "O") and mol.atoms[i].total_h >= 1
    )
    hba = sum(1 for i in heavy if mol.atoms[i].element in ("N", "O"))

    rotatable = 0
    for bond in mol.bonds:
        if bond.order != 1 or bond.in_ring or bond.aromatic:
            continue
        if mol.heavy_degree(bond.a) >= 2 and mol.heavy_degree(bond.b) >= 2:
            rotatable += 1

    aromatic_rings = 0
    for ring in mol.rings:
        if all(mol.atoms[i].aromatic for i in ring):
            aromatic_rings += 1

    return CountSet(
        hac=len(heavy),
        heteroatoms=hetero,
        s_plus_o=s_plus_o,
        hbd=hbd,
        hba=hba,
        rotatable_bonds=rotatable,
        ring_count=len(mol.rings),
        aromatic_rings=aromatic_rings,
        formal_charge=sum(a.formal_charge for a in mol.atoms),
        element_set=elements,
    )
