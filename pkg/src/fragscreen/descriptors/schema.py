"""Named feature schemas and descriptor vectors.

A schema is an ordered list of implemented feature names; asking for a
feature the registry does not implement is a construction-time error, never
a silent zero.  The five-feature scoring schema and the default training
schema ship here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from ..mol import Molecule
from .crippen import crippen_logp
from .fingerprints import fcfp4_count
from .physchem import CountSet, basic_counts, fraction_sp2, molecular_weight
from .surface import slogp_vsa3


class SchemaError(ValueError):
    """Unknown or unimplemented feature name in a schema."""


@dataclass(frozen=True)
class FeatureVector:
    schema_id: str
    values: dict[str, float]

    def as_list(self, names: list[str] | tuple[str, ...]) -> list[float]:
        return [self.values[name] for name in names]


class _Context:
    """Per-molecule cache so composite features share sub-results."""

    def __init__(self, mol: Molecule):
        self.mol = mol
        self._counts: CountSet | None = None

    @property
    def counts(self) -> CountSet:
        if self._counts is None:
            self._counts = basic_counts(self.mol)
        return self._counts


_REGISTRY = {
    "logp": lambda ctx: crippen_logp(ctx.mol),
    "molecular_weight": lambda ctx: molecular_weight(ctx.mol),
    "slogp_vsa3": lambda ctx: slogp_vsa3(ctx.mol),
    "fraction_sp2": lambda ctx: fraction_sp2(ctx.mol),
    "fcfp4_count": lambda ctx: float(fcfp4_count(ctx.mol)),
    "hac": lambda ctx: float(ctx.counts.hac),
    "heteroatom_count": lambda ctx: float(ctx.counts.heteroatoms),
    "s_plus_o": lambda ctx: float(ctx.counts.s_plus_o),
    "hbd": lambda ctx: float(ctx.counts.hbd),
    "hba": lambda ctx: float(ctx.counts.hba),
    "rotatable_bonds": lambda ctx: float(ctx.counts.rotatable_bonds),
    "ring_count": lambda ctx: float(ctx.counts.ring_count),
    "aromatic_ring_count": lambda ctx: float(ctx.counts.aromatic_rings),
    "formal_charge": lambda ctx: float(ctx.counts.formal_charge),
}

EQ4_FEATURES: tuple[str, ...] = (
    "logp",
    "molecular_weight",
    "slogp_vsa3",
    "fraction_sp2",
    "fcfp4_count",
)

DEFAULT_SCHEMA: tuple[str, ...] = EQ4_FEATURES + (
    "hac",
    "heteroatom_count",
    "s_plus_o",
    "hbd",
    "hba",
    "rotatable_bonds",
    "ring_count",
    "aromatic_ring_count",
    "formal_charge",
)


def implemented_features() -> tuple[str, ...]:
    return tuple(_REGISTRY)


def validate_schema(names) -> tuple[str, ...]:
    names = tuple(names)
    unknown = [n for n in names if n not in _REGISTRY]
    if unknown:
        raise SchemaError(f"unimplemented feature(s): {', '.join(unknown)}")
    return names


def descriptor_vector(
    mol: Molecule, schema=DEFAULT_SCHEMA, schema_id: str = "default"
) -> FeatureVector:
    """Compute every schema feature; all values are finite by contract."""
    names = validate_schema(schema)
    ctx = _Context(mol)
    values = {}
    for name in names:
        value = float(_REGISTRY[name](ctx))
        if not math.isfinite(value):
            raise ValueError(f"feature {name} is not finite for this molecule")
        values[name] = value
    return FeatureVector(schema_id=schema_id, values=values)
