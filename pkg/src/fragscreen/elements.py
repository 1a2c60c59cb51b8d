"""Element tables: symbols, masses, radii, and the organic-subset valence model.

All numeric constants are loaded from the versioned plain-text tables in
``fragscreen/data`` so they can be audited and swapped without touching code.
"""

from __future__ import annotations

from functools import lru_cache
from importlib import resources


ORGANIC_SUBSET = {"B", "C", "N", "O", "P", "S", "F", "Cl", "Br", "I"}
AROMATIC_SUBSET = {"b", "c", "n", "o", "p", "s"}
HALOGENS = {"F", "Cl", "Br", "I"}

# Allowed total valences per element (spec'd organic valence model).  The
# first entry is the default used when filling implicit hydrogens; later
# entries are the hypervalent states accepted by the sanitizer.
ALLOWED_VALENCES: dict[str, tuple[int, ...]] = {
    "C": (4,),
    "N": (3,),
    "O": (2,),
    "S": (2, 4, 6),
    "P": (3, 5),
    "B": (3,),
    "Si": (4,),
    "F": (1,),
    "Cl": (1,),
    "Br": (1,),
    "I": (1,),
    "H": (1,),
}


def _data_lines(name: str) -> list[str]:
    text = resources.files("fragscreen.data").joinpath(name).read_text()
    return [
        line.rstrip("\n")
        for line in text.splitlines()
        if line.strip() and not line.startswith("#")
    ]


@lru_cache(maxsize=1)
def masses() -> dict[str, float]:
    """Symbol -> standard atomic mass in Da."""
    table = {}
    for line in _data_lines("atomic_masses.tsv"):
        _, symbol, mass = line.split("\t")
        table[symbol] = float(mass)
    return table


@lru_cache(maxsize=1)
def atomic_numbers() -> dict[str, int]:
    """Symbol -> atomic number."""
    table = {}
    for line in _data_lines("atomic_masses.tsv"):
        number, symbol, _ = line.split("\t")
        table[symbol] = int(number)
    return table


@lru_cache(maxsize=1)
def radii() -> dict[str, tuple[float, float]]:
    """Symbol -> (van der Waals radius, covalent radius) in Angstrom."""
    table = {}
    for line in _data_lines("radii.tsv"):
        symbol, vdw, cov = line.split("\t")
        table[symbol] = (float(vdw), float(cov))
    return table


def vdw_radius(symbol: str) -> float:
    table = radii()
    return table.get(symbol, table["*"])[0]


def covalent_radius(symbol: str) -> float:
    table = radii()
    return table.get(symbol, table["*"])[1]


def is_known_element(symbol: str) -> bool:
    return symbol in masses()


def atomic_mass(symbol: str) -> float:
    try:
        return masses()[symbol]
    except KeyError:
        raise KeyError(f"unknown element {symbol!r}") from None


def allowed_valences(symbol: str, charge: int = 0) -> tuple[int, ...] | None:
    """Charge-adjusted allowed valences, or None when the element has no
    entry in the valence model (such atoms are exempt from valence checks).

    Cations gain one bonding slot per unit charge, anions lose one; this
    generalizes the N+ -> 4, O+ -> 3, O- -> 1 rules uniformly.
    """
    base = ALLOWED_VALENCES.get(symbol)
    if base is None:
        return None
    return tuple(max(v + charge, 0) for v in base)


def default_valence(symbol: str) -> int | None:
    base = ALLOWED_VALENCES.get(symbol)
    return base[0] if base else None
