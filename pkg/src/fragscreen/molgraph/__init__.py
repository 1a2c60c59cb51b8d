"""Chemical semantics on top of the parse tree.

``prepare`` runs the full enrichment chain (rings, kekulization, implicit
hydrogens, aromaticity) so a parsed molecule is ready for sanitization and
descriptors.  The individual stages remain callable on their own and each
pulls in whatever prerequisite it is missing.
"""

from __future__ import annotations

from ..mol import Molecule
from .aromatic import perceive_aromaticity
from .hydrogens import assign_implicit_hydrogens, kekulize, sigma_consumed
from .rings import RingSet, bridge_bonds, perceive_rings
from .sanitize import SanitizeReport, sanitize, total_valence
from .scaffold import Scaffold, murcko_scaffold

__all__ = [
    "RingSet",
    "SanitizeReport",
    "Scaffold",
    "assign_implicit_hydrogens",
    "bridge_bonds",
    "hybridization",
    "kekulize",
    "murcko_scaffold",
    "perceive_aromaticity",
    "perceive_rings",
    "prepare",
    "sanitize",
    "sigma_consumed",
    "total_valence",
]


def prepare(mol: Molecule) -> Molecule:
    """Ring perception, kekulization, hydrogen fill, aromaticity; in order."""
    if mol.rings is None:
        perceive_rings(mol)
    if not mol.hydrogens_assigned:
        assign_implicit_hydrogens(mol)
    if not mol.aromaticity_perceived:
        perceive_aromaticity(mol)
    return mol


def hybridization(mol: Molecule, idx: int) -> str:
    """Orbital hybridization label: sp, sp2, sp3, sp3d, sp3d2 or other.

    Simple sigma/pi accounting; hydrogen atoms and exotic bonding report
    ``other``.
    """
    atom = mol.atoms[idx]
    if atom.element == "H":
        return "other"
    double = sum(1 for _, b in mol.neighbors(idx) if b.order == 2)
    triple = sum(1 for _, b in mol.neighbors(idx) if b.order == 3)
    sites = mol.degree(idx) + atom.total_h
    if triple or double >= 2:
        return "sp"
    if atom.aromatic or double == 1:
        return "sp2"
    if sites > 6:
        return "other"
    if sites == 6:
        return "sp3d2"
    if sites == 5:
        return "sp3d"
    return "sp3"
