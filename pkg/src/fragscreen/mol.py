"""Molecular graph types: the universal currency of the toolkit.

A ``Molecule`` starts life as a raw parse product and is progressively
enriched (implicit hydrogens, ring flags, aromaticity) by
``fragscreen.molgraph.prepare``.  Once prepared it is treated as immutable;
every transforming operation returns a new object.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace


@dataclass
class Atom:
    element: str
    formal_charge: int = 0
    explicit_h: int = 0
    aromatic: bool = False
    isotope: int | None = None
    bracket: bool = False
    implicit_h: int = 0
    in_ring: bool = False
    # Aromaticity as written in the input; perception may overrule `aromatic`
    # and the sanitizer compares the two.
    parsed_aromatic: bool = False

    @property
    def total_h(self) -> int:
        return self.explicit_h + self.implicit_h

    def copy(self) -> "Atom":
        return replace(self)


@dataclass
class Bond:
    a: int
    b: int
    order: int = 1
    aromatic: bool = False
    in_ring: bool = False

    def other(self, idx: int) -> int:
        return self.b if idx == self.a else self.a

    def copy(self) -> "Bond":
        return replace(self)


@dataclass
class Molecule:
    atoms: list[Atom] = field(default_factory=list)
    bonds: list[Bond] = field(default_factory=list)
    rings: list[list[int]] | None = None
    hydrogens_assigned: bool = False
    aromaticity_perceived: bool = False
    kekulization_done: bool = False
    kekulized_ok: bool = True
    unkekulizable_atoms: list[int] = field(default_factory=list)

    def __post_init__(self) -> None:
        self._adjacency: list[list[tuple[int, Bond]]] | None = None

    @property
    def n_atoms(self) -> int:
        return len(self.atoms)

    @property
    def n_bonds(self) -> int:
        return len(self.bonds)

    def neighbors(self, idx: int) -> list[tuple[int, Bond]]:
        """(neighbor index, bond) pairs for one atom; adjacency is cached."""
        if self._adjacency is None:
            adj: list[list[tuple[int, Bond]]] = [[] for _ in self.atoms]
            for bond in self.bonds:
                adj[bond.a].append((bond.b, bond))
                adj[bond.b].append((bond.a, bond))
            self._adjacency = adj
        return self._adjacency[idx]

    def degree(self, idx: int) -> int:
        return len(self.neighbors(idx))

    def bond_between(self, a: int, b: int) -> Bond | None:
        for nbr, bond in self.neighbors(a):
            if nbr == b:
                return bond
        return None

    def invalidate_caches(self) -> None:
        self._adjacency = None

    def copy(self) -> "Molecule":
        return Molecule(
            atoms=[a.copy() for a in self.atoms],
            bonds=[b.copy() for b in self.bonds],
            rings=[list(r) for r in self.rings] if self.rings is not None else None,
            hydrogens_assigned=self.hydrogens_assigned,
            aromaticity_perceived=self.aromaticity_perceived,
            kekulization_done=self.kekulization_done,
            kekulized_ok=self.kekulized_ok,
            unkekulizable_atoms=list(self.unkekulizable_atoms),
        )

    def permuted(self, order: list[int]) -> "Molecule":
        """New molecule with atoms reordered so new index i holds old
        atom ``order[i]``.  Used by the permutation-invariance tests."""
        if sorted(order) != list(range(self.n_atoms)):
            raise ValueError("order must be a permutation of atom indices")
        old_to_new = {old: new for new, old in enumerate(order)}
        atoms = [self.atoms[old].copy() for old in order]
        bonds = [
            Bond(
                a=old_to_new[b.a],
                b=old_to_new[b.b],
                order=b.order,
                aromatic=b.aromatic,
                in_ring=b.in_ring,
            )
            for b in self.bonds
        ]
        rings = None
        if self.rings is not None:
            rings = [[old_to_new[i] for i in ring] for ring in self.rings]
        return Molecule(
            atoms=atoms,
            bonds=bonds,
            rings=rings,
            hydrogens_assigned=self.hydrogens_assigned,
            aromaticity_perceived=self.aromaticity_perceived,
            kekulization_done=self.kekulization_done,
            kekulized_ok=self.kekulized_ok,
            unkekulizable_atoms=[old_to_new[i] for i in self.unkekulizable_atoms],
        )

    def heavy_degree(self, idx: int) -> int:
        return sum(1 for nbr, _ in self.neighbors(idx) if self.atoms[nbr].element != "H")
