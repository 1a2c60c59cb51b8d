"""Bemis-Murcko scaffold extraction.

Side chains are removed by iteratively deleting degree<=1 atoms until a fixed
point; what survives is exactly the ring systems plus the linkers between
them, with atom and bond types preserved.  Acyclic molecules collapse to the
empty scaffold.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..mol import Bond, Molecule


@dataclass
class Scaffold:
    molecule: Molecule

    @property
    def empty(self) -> bool:
        return self.molecule.n_atoms == 0


def murcko_scaffold(mol: Molecule) -> Scaffold:
    """Extract the ring-and-linker framework of a sanitized molecule."""
    keep = set(range(mol.n_atoms))
    while True:
        degrees = {i: 0 for i in keep}
        for bond in mol.bonds:
            if bond.a in keep and bond.b in keep:
                degrees[bond.a] += 1
                degrees[bond.b] += 1
        prunable = [i for i in keep if degrees[i] <= 1]
        if not prunable:
            break
        keep.difference_update(prunable)

    old_to_new = {old: new for new, old in enumerate(sorted(keep))}
    atoms = []
    for old in sorted(keep):
        atom = mol.atoms[old].copy()
        # Positions freed by pruned substituents refill with hydrogen when
        # the framework is re-prepared.
        atom.implicit_h = 0
        atoms.append(atom)
    bonds = [
        Bond(
            a=old_to_new[b.a],
            b=old_to_new[b.b],
            order=b.order,
            aromatic=b.aromatic,
            in_ring=b.in_ring,
        )
        for b in mol.bonds
        if b.a in keep and b.b in keep
    ]
    framework = Molecule(atoms=atoms, bonds=bonds)
    return Scaffold(molecule=framework)
