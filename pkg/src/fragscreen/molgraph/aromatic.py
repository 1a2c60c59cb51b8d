"""Aromaticity perception over the kekulized graph.

Ring-by-ring Hueckel count on the SSSR: a ring is aromatic when every member
is pi-capable and the electron tally hits 4n+2.  Contributions: one electron
for an atom double-bonded within the ring system, two for an in-ring lone
pair donor (O, S, substituted/protonated N, carbanion), zero for exocyclic
carbonyl carbons and for cationic carbon / neutral boron.  Conjugation across
fused systems beyond this per-ring model (azulene-style perimeters) is
deliberately out of reach and such rings stay non-aromatic in their Kekule
form.
"""

from __future__ import annotations

from ..mol import Molecule
from .hydrogens import assign_implicit_hydrogens
from .rings import perceive_rings


def _pi_contribution(mol: Molecule, idx: int, ring: set[int]) -> int | None:
    """Electrons atom ``idx`` donates to the candidate ring; None = not capable."""
    atom = mol.atoms[idx]
    double_partners = [
        nbr for nbr, bond in mol.neighbors(idx) if bond.order == 2
    ]
    if any(bond.order == 3 for _, bond in mol.neighbors(idx)):
        return None
    if double_partners:
        if any(p in ring for p in double_partners):
            return 1
        if any(mol.atoms[p].in_ring for p in double_partners):
            # Fused-system double bond pointing into the neighbor ring.
            return 1
        # Exocyclic double bond (carbonyl-like): sp2 but donates nothing.
        return 0
    element = atom.element
    charge = atom.formal_charge
    if element in ("O", "S", "Se"):
        return 2
    if element in ("N", "P"):
        if atom.total_h >= 1 or mol.degree(idx) >= 3 or charge < 0:
            return 2
        return None
    if element == "C":
        if charge < 0:
            return 2
        if charge > 0:
            return 0
        return None
    if element == "B" and charge == 0:
        return 0
    return None


def perceive_aromaticity(mol: Molecule) -> Molecule:
    """Recompute aromatic flags from ring structure; returns the molecule.

    Flags are rebuilt from scratch, so Kekule and lowercase inputs converge
    to identical graphs.
    """
    if mol.rings is None:
        perceive_rings(mol)
    if not mol.hydrogens_assigned:
        assign_implicit_hydrogens(mol)

    for atom in mol.atoms:
        atom.aromatic = False
    for bond in mol.bonds:
        bond.aromatic = False

    if mol.kekulized_ok:
        for ring in mol.rings or []:
            members = set(ring)
            electrons = 0
            capable = True
            for idx in ring:
                contribution = _pi_contribution(mol, idx, members)
                if contribution is None:
                    capable = False
                    break
                electrons += contribution
            if capable and electrons >= 2 and (electrons - 2) % 4 == 0:
                for idx in ring:
                    mol.atoms[idx].aromatic = True
                for i, idx in enumerate(ring):
                    nxt = ring[(i + 1) % len(ring)]
                    bond = mol.bond_between(idx, nxt)
                    if bond is not None:
                        bond.aromatic = True

    mol.aromaticity_perceived = True
    return mol
