"""Physicochemical descriptors, fingerprints and feature schemas."""

from .crippen import CrippenTypeWarning, atom_contributions, classify_atom, crippen_logp
from .fingerprints import DEFAULT_WIDTH, Fingerprint, fcfp4_count, morgan_fingerprint
from .physchem import CountSet, basic_counts, fraction_sp2, molecular_weight
from .schema import (
    DEFAULT_SCHEMA,
    EQ4_FEATURES,
    FeatureVector,
    SchemaError,
    descriptor_vector,
    implemented_features,
    validate_schema,
)
from .surface import atom_surface_area, molecule_surface_areas, slogp_vsa, slogp_vsa3

__all__ = [
    "CountSet",
    "CrippenTypeWarning",
    "DEFAULT_SCHEMA",
    "DEFAULT_WIDTH",
    "EQ4_FEATURES",
    "FeatureVector",
    "Fingerprint",
    "SchemaError",
    "atom_contributions",
    "atom_surface_area",
    "basic_counts",
    "classify_atom",
    "crippen_logp",
    "descriptor_vector",
    "fcfp4_count",
    "fraction_sp2",
    "implemented_features",
    "molecular_weight",
    "molecule_surface_areas",
    "morgan_fingerprint",
    "slogp_vsa",
    "slogp_vsa3",
    "validate_schema",
]
