"""Loaders for the embedded descriptor data tables."""

from __future__ import annotations

from functools import lru_cache
from importlib import resources


def _data_lines(name: str) -> list[str]:
    text = resources.files("fragscreen.data").joinpath(name).read_text()
    return [
        line.rstrip("\n")
        for line in text.splitlines()
        if line.strip() and not line.startswith("#")
    ]


@lru_cache(maxsize=1)
def crippen_contributions() -> dict[str, float]:
    """Atom type id -> logP contribution."""
    table = {}
    for line in _data_lines("crippen_logp.tsv"):
        type_id, value = line.split("\t")
        table[type_id] = float(value)
    return table


@lru_cache(maxsize=1)
def vsa_bin_boundaries() -> tuple[float, ...]:
    """The 11 boundaries of the 12 logP-contribution bins."""
    return tuple(float(line) for line in _data_lines("vsa_bins.tsv"))
