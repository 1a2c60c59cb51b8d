"""fragscreen: screening and benchmarking toolkit for generated fragrance molecules.

Parses and sanitizes SMILES, computes physicochemical descriptors, scores
odor likeliness with a fixed logistic equation and three literature criteria,
explains predictions with exact linear SHAP, and evaluates generated molecule
sets with distribution-level benchmarks.
"""

from __future__ import annotations

from .mol import Atom, Bond, Molecule
from .molgraph import prepare, sanitize
from .smiles import SmilesError, canonicalize, parse_smiles, write_smiles

__version__ = "0.1.0"


def prepare_smiles(text: str):
    """Parse + prepare + sanitize in one step.

    Returns ``(molecule, report)``; the molecule is fully enriched whether or
    not the report is clean.
    """
    mol = prepare(parse_smiles(text))
    return mol, sanitize(mol)


def canonical_smiles(text: str) -> str:
    """Canonical SMILES of a SMILES string (parse errors propagate)."""
    mol = prepare(parse_smiles(text))
    return canonicalize(mol)


__all__ = [
    "Atom",
    "Bond",
    "Molecule",
    "SmilesError",
    "__version__",
    "canonical_smiles",
    "canonicalize",
    "parse_smiles",
    "prepare",
    "prepare_smiles",
    "write_smiles",
]
