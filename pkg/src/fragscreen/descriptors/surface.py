"""Approximate van der Waals surface areas and the logP-binned VSA vector.

Each heavy atom exposes its Bondi sphere minus one spherical cap per bonded
neighbor; cap heights come from the sphere intersection geometry at covalent
bonding distance against a generic carbon (heavy neighbors) or hydrogen.
The per-atom areas then partition into 12 bins indexed by the atom's Crippen
logP contribution, so the bin vector always sums to the total surface area.
"""

from __future__ import annotations

import math
from bisect import bisect_left
from functools import lru_cache

from ..elements import covalent_radius, vdw_radius
from ..mol import Molecule
from .crippen import atom_contributions
from .tables import vsa_bin_boundaries

N_BINS = 12
_MIN_AREA = 1.0


@lru_cache(maxsize=None)
def _cap_area(element: str, neighbor: str) -> float:
    """Spherical cap cut from `element`'s vdW sphere by a bonded neighbor."""
    r = vdw_radius(element)
    r_n = vdw_radius(neighbor)
    d = covalent_radius(element) + covalent_radius(neighbor)
    if d >= r + r_n:
        return 0.0
    h = r - (d * d + r * r - r_n * r_n) / (2.0 * d)
    h = min(max(h, 0.0), r)
    return 2.0 * math.pi * r * h


def atom_surface_area(element: str, heavy_degree: int, h_count: int) -> float:
    """Exposed vdW area of one atom given its bonding pattern."""
    r = vdw_radius(element)
    sphere = 4.0 * math.pi * r * r
    area = sphere - heavy_degree * _cap_area(element, "C") - h_count * _cap_area(element, "H")
    return max(area, _MIN_AREA)


def molecule_surface_areas(mol: Molecule) -> list[float]:
    return [
        atom_surface_area(atom.element, mol.heavy_degree(idx), atom.total_h)
        for idx, atom in enumerate(mol.atoms)
    ]


def slogp_vsa(mol: Molecule) -> list[float]:
    """12-bin surface-area vector keyed by Crippen contribution.

    Bin 3 (index 2) covers contributions in (-0.2, 0] and is the
    ``slogp_vsa3`` descriptor.
    """
    boundaries = vsa_bin_boundaries()
    bins = [0.0] * N_BINS
    contribs = atom_contributions(mol)
    areas = molecule_surface_areas(mol)
    for contrib, area in zip(contribs, areas):
        bins[bisect_left(boundaries, contrib)] += area
    return bins


def slogp_vsa3(mol: Molecule) -> float:
    return slogp_vsa(mol)[2]
