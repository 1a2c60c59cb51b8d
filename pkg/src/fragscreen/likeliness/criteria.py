"""The three literature odor-likeliness criteria.

Pure boolean predicates over precomputed descriptors:

* rule of three     - molecular weight in [30, 300] Da, fewer than 3 heteroatoms
* fragrance-like    - HAC <= 21, elements within {C,H,O,S}, S+O <= 3, HBD <= 1
* GDB-17 style      - HAC <= 17, elements within {C,H,O,N,S} plus halogens
"""

from __future__ import annotations

from ..descriptors.physchem import CountSet

_FL_ELEMENTS = frozenset({"C", "H", "O", "S"})
_GDB17_ELEMENTS = frozenset({"C", "H", "O", "N", "S", "F", "Cl", "Br", "I"})


def rule_of_three(counts: CountSet, mw: float) -> bool:
    return 30.0 <= mw <= 300.0 and counts.heteroatoms < 3


def fl_property(counts: CountSet) -> bool:
    return (
        counts.hac <= 21
        and counts.element_set <= _FL_ELEMENTS
        and counts.s_plus_o <= 3
        and counts.hbd <= 1
    )


def gdb17_criterion(counts: CountSet) -> bool:
    return counts.hac <= 17 and counts.element_set <= _GDB17_ELEMENTS
