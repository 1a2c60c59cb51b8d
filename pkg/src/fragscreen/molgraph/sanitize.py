"""Chemical plausibility checks on a prepared molecular graph.

Five check categories, every failure reported (never just the first):

* ``invalid_valence``      - total valence above the charge-adjusted maximum
* ``too_many_hydrogens``   - explicit H count alone exceeds the maximum
* ``unrealistic_charge``   - |atom charge| > 2 or |net charge| > 1
* ``unperceivable_aromaticity`` - written-aromatic atoms that cannot be
  kekulized or that perception refuses to flag aromatic
* ``unstable_motif``       - O-O-O chains and halogen-halogen bonds

Thresholds are the documented stand-ins for the screened categories; atoms
outside the valence model (rare-gas or metal bracket atoms) are exempt from
valence checks.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..elements import HALOGENS, allowed_valences
from ..mol import Molecule
from .aromatic import perceive_aromaticity

MAX_ATOM_CHARGE = 2
MAX_NET_CHARGE = 1

Locus = tuple[str, int | None]


@dataclass
class SanitizeReport:
    failures: list[tuple[str, Locus, str]] = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return not self.failures

    def add(self, check_id: str, locus: Locus, message: str) -> None:
        self.failures.append((check_id, locus, message))

    def check_ids(self) -> set[str]:
        return {check_id for check_id, _, _ in self.failures}

    def __str__(self) -> str:
        if self.valid:
            return "valid"
        return "; ".join(f"{check}@{locus}: {msg}" for check, locus, msg in self.failures)


def total_valence(mol: Molecule, idx: int) -> int:
    atom = mol.atoms[idx]
    total = atom.total_h
    for _, bond in mol.neighbors(idx):
        total += max(bond.order, 1)
    return total


def sanitize(mol: Molecule) -> SanitizeReport:
    """Run all five checks; failures are data, not exceptions."""
    if not mol.aromaticity_perceived:
        perceive_aromaticity(mol)

    report = SanitizeReport()

    for idx, atom in enumerate(mol.atoms):
        allowed = allowed_valences(atom.element, atom.formal_charge)
        if allowed:
            max_allowed = max(allowed)
            valence = total_valence(mol, idx)
            if valence > max_allowed:
                report.add(
                    "invalid_valence",
                    ("atom", idx),
                    f"{atom.element} valence {valence} exceeds {max_allowed}",
                )
            if atom.explicit_h > max_allowed:
                report.add(
                    "too_many_hydrogens",
                    ("atom", idx),
                    f"{atom.explicit_h} explicit hydrogens on {atom.element}",
                )
        if abs(atom.formal_charge) > MAX_ATOM_CHARGE:
            report.add(
                "unrealistic_charge",
                ("atom", idx),
                f"formal charge {atom.formal_charge:+d}",
            )

    net = sum(a.formal_charge for a in mol.atoms)
    if abs(net) > MAX_NET_CHARGE:
        report.add("unrealistic_charge", ("molecule", None), f"net charge {net:+d}")

    flagged = set(mol.unkekulizable_atoms)
    for idx, atom in enumerate(mol.atoms):
        if atom.parsed_aromatic and (idx in flagged or not atom.aromatic):
            report.add(
                "unperceivable_aromaticity",
                ("atom", idx),
                "written as aromatic but not perceivable as aromatic",
            )

    for idx, atom in enumerate(mol.atoms):
        if atom.element == "O":
            o_neighbors = [
                nbr for nbr, _ in mol.neighbors(idx) if mol.atoms[nbr].element == "O"
            ]
            if len(o_neighbors) >= 2:
                report.add("unstable_motif", ("atom", idx), "O-O-O chain")
    for bidx, bond in enumerate(mol.bonds):
        if (
            mol.atoms[bond.a].element in HALOGENS
            and mol.atoms[bond.b].element in HALOGENS
        ):
            report.add("unstable_motif", ("bond", bidx), "halogen-halogen bond")

    return report
