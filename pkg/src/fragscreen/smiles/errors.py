"""Error and warning types for SMILES handling."""

from __future__ import annotations


class SmilesError(ValueError):
    """Raised when a SMILES string cannot be parsed.

    ``position`` is the 0-based column of the offending character.
    """

    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} (column {position})"
        super().__init__(message)


class StereoDiscardedWarning(UserWarning):
    """Stereochemistry tokens were present and dropped."""
