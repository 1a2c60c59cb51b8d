"""Circular substructure fingerprints (ECFP- and FCFP-style).

Neighborhoods are hashed iteratively out to the requested radius with 64-bit
FNV-1a over canonical environment tuples, then folded modulo the bit width.
ECFP seeds carry element-level invariants, FCFP seeds carry functional-class
flags (donor, acceptor, aromatic, halogen, basic, acidic).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..elements import HALOGENS, atomic_numbers
from ..kernels import fnv1a_ints
from ..mol import Molecule

DEFAULT_WIDTH = 2048
WORD_BITS = 64


@dataclass
class Fingerprint:
    width: int
    radius: int
    invariant_kind: str
    words: np.ndarray  # uint64, width // 64 entries

    def set_bit(self, bit: int) -> None:
        self.words[bit // WORD_BITS] |= np.uint64(1 << (bit % WORD_BITS))

    def get_bit(self, bit: int) -> bool:
        return bool(self.words[bit // WORD_BITS] >> np.uint64(bit % WORD_BITS) & np.uint64(1))

    def popcount(self) -> int:
        return int(np.bitwise_count(self.words).sum())

    def bits(self) -> list[int]:
        return [b for b in range(self.width) if self.get_bit(b)]

    @classmethod
    def empty(cls, width: int = DEFAULT_WIDTH, radius: int = 2, kind: str = "ecfp") -> "Fingerprint":
        if width % WORD_BITS:
            raise ValueError("width must be a multiple of 64")
        return cls(width, radius, kind, np.zeros(width // WORD_BITS, dtype=np.uint64))

    @classmethod
    def from_bits(cls, bits, width: int = DEFAULT_WIDTH, kind: str = "raw") -> "Fingerprint":
        fp = cls.empty(width=width, radius=0, kind=kind)
        for bit in bits:
            fp.set_bit(bit)
        return fp


def _is_donor(mol: Molecule, idx: int) -> bool:
    atom = mol.atoms[idx]
    return atom.element in ("N", "O") and atom.total_h >= 1


def _is_acceptor(mol: Molecule, idx: int) -> bool:
    return mol.atoms[idx].element in ("N", "O")


def _is_basic(mol: Molecule, idx: int) -> bool:
    atom = mol.atoms[idx]
    if atom.element != "N" or atom.aromatic:
        return False
    if any(b.order != 1 for _, b in mol.neighbors(idx)):
        return False
    # Amide-like nitrogens (neighbor carbonyl) are not basic.
    for nbr, _ in mol.neighbors(idx):
        if mol.atoms[nbr].element == "C" and any(
            b.order == 2 and mol.atoms[n].element in ("O", "S")
            for n, b in mol.neighbors(nbr)
        ):
            return False
    return True


def _is_acidic(mol: Molecule, idx: int) -> bool:
    atom = mol.atoms[idx]
    if atom.element not in ("O", "S"):
        return False
    if atom.total_h < 1 and atom.formal_charge >= 0:
        return False
    for nbr, bond in mol.neighbors(idx):
        if bond.order != 1:
            continue
        if any(
            b.order == 2 and mol.atoms[n].element in ("O", "S") and n != idx
            for n, b in mol.neighbors(nbr)
        ):
            return True
    return False


def _seed_invariants(mol: Molecule, kind: str) -> list[int]:
    numbers = atomic_numbers()
    seeds = []
    for idx, atom in enumerate(mol.atoms):
        if kind == "ecfp":
            seeds.append(
                fnv1a_ints(
                    [
                        numbers.get(atom.element, 0),
                        mol.heavy_degree(idx),
                        atom.formal_charge,
                        atom.total_h,
                        int(atom.in_ring),
                    ]
                )
            )
        else:
            seeds.append(
                fnv1a_ints(
                    [
                        int(_is_donor(mol, idx)),
                        int(_is_acceptor(mol, idx)),
                        int(atom.aromatic),
                        int(atom.element in HALOGENS),
                        int(_is_basic(mol, idx)),
                        int(_is_acidic(mol, idx)),
                    ]
                )
            )
    return seeds


def morgan_fingerprint(
    mol: Molecule,
    radius: int = 2,
    width: int = DEFAULT_WIDTH,
    invariant_kind: str = "ecfp",
) -> Fingerprint:
    """Hash every atom environment of radius 0..r into a bit vector."""
    if invariant_kind not in ("ecfp", "fcfp"):
        raise ValueError(f"unknown invariant kind {invariant_kind!r}")
    if not mol.hydrogens_assigned:
        raise ValueError("molecule must be prepared before fingerprinting")

    fp = Fingerprint.empty(width=width, radius=radius, kind=invariant_kind)
    codes = _seed_invariants(mol, invariant_kind)
    for code in codes:
        fp.set_bit(code % width)
    for r in range(1, radius + 1):
        new_codes = []
        for idx in range(mol.n_atoms):
            if mol.degree(idx) == 0:
                # Isolated atom: the environment stops growing at radius 0.
                new_codes.append(codes[idx])
                continue
            env = sorted(
                codes[nbr] * 8 + _fp_bond_code(bond)
                for nbr, bond in mol.neighbors(idx)
            )
            code = fnv1a_ints([r, codes[idx], *env])
            new_codes.append(code)
            fp.set_bit(code % width)
        codes = new_codes
    return fp


def _fp_bond_code(bond) -> int:
    if bond.aromatic or bond.order == 0:
        return 4
    return bond.order


def fcfp4_count(mol: Molecule, width: int = DEFAULT_WIDTH) -> int:
    """Popcount of the radius-2 (diameter 4) functional-class fingerprint."""
    return morgan_fingerprint(mol, radius=2, width=width, invariant_kind="fcfp").popcount()
