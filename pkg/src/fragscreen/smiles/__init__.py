"""SMILES text layer: parse, write, canonicalize."""

from .canon import canonical_ranks, canonicalize
from .errors import SmilesError, StereoDiscardedWarning
from .parser import parse_smiles
from .writer import write_smiles

__all__ = [
    "SmilesError",
    "StereoDiscardedWarning",
    "canonical_ranks",
    "canonicalize",
    "parse_smiles",
    "write_smiles",
]
