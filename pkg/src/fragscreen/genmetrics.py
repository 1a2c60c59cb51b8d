"""Benchmarks for generated molecule sets.

Validity, uniqueness, novelty, internal diversity, nearest-neighbor
similarity, scaffold-frequency cosine similarity, and two-sample
Kolmogorov-Smirnov statistics over the five scoring descriptors -- plus a
``benchmark`` composition producing one serializable report.

Similarity metrics run on radius-2, 2048-bit element-invariant fingerprints;
the pairwise kernels live in ``fragscreen.kernels``.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .descriptors import EQ4_FEATURES, descriptor_vector, morgan_fingerprint
from .descriptors.fingerprints import Fingerprint
from .mol import Molecule
from .molgraph import murcko_scaffold, prepare, sanitize
from .smiles import SmilesError, canonicalize, parse_smiles

REPORT_SCHEMA_VERSION = 1


def tanimoto(a: Fingerprint, b: Fingerprint) -> float:
    """|intersection| / |union| on bit sets; 1.0 when both are empty."""
    if a.width != b.width:
        raise ValueError(f"fingerprint width mismatch: {a.width} != {b.width}")
    return kernels.tanimoto_words(a.words, b.words)


def validity(smiles_list) -> tuple[float, list[str]]:
    """Fraction of inputs that parse and sanitize; survivors canonicalized."""
    smiles_list = list(smiles_list)
    if not smiles_list:
        raise ValueError("empty SMILES list")
    valid: list[str] = []
    for text in smiles_list:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            try:
                mol = prepare(parse_smiles(text))
            except SmilesError:
                continue
            if sanitize(mol).valid:
                valid.append(canonicalize(mol))
    return len(valid) / len(smiles_list), valid


def uniqueness(canonical_list) -> float:
    canonical_list = list(canonical_list)
    if not canonical_list:
        raise ValueError("empty list")
    return len(set(canonical_list)) / len(canonical_list)


def novelty(generated_canonical, training_canonical) -> float:
    generated = set(generated_canonical)
    if not generated:
        raise ValueError("empty generated set")
    training = set(training_canonical)
    return len(generated - training) / len(generated)


def _fingerprint_matrix(molecules: list[Molecule]) -> np.ndarray:
    rows = [morgan_fingerprint(m, radius=2).words for m in molecules]
    return np.vstack(rows) if rows else np.zeros((0, 2048 // 64), dtype=np.uint64)


def internal_diversity(molecules: list[Molecule]) -> float:
    """1 - mean pairwise Tanimoto over all unordered pairs."""
    if len(molecules) < 2:
        raise ValueError("need at least two molecules")
    return 1.0 - kernels.mean_pairwise_tanimoto(_fingerprint_matrix(molecules))


def snn(generated: list[Molecule], reference: list[Molecule]) -> float:
    """Mean over generated molecules of max Tanimoto to the reference set."""
    if not generated or not reference:
        raise ValueError("need non-empty molecule sets")
    return kernels.snn_mean(
        _fingerprint_matrix(generated), _fingerprint_matrix(reference)
    )


def scaffold_key(mol: Molecule) -> str:
    """Canonical SMILES of the Bemis-Murcko scaffold ('' when acyclic)."""
    framework = murcko_scaffold(mol).molecule
    if framework.n_atoms == 0:
        return ""
    prepare(framework)
    return canonicalize(framework)


def scaffold_similarity(generated: list[Molecule], reference: list[Molecule]) -> float:
    """Cosine similarity of scaffold frequency vectors."""
    if not generated or not reference:
        raise ValueError("need non-empty molecule sets")
    gen_counts: dict[str, int] = {}
    ref_counts: dict[str, int] = {}
    for mol in generated:
        key = scaffold_key(mol)
        gen_counts[key] = gen_counts.get(key, 0) + 1
    for mol in reference:
        key = scaffold_key(mol)
        ref_counts[key] = ref_counts.get(key, 0) + 1
    dot = sum(count * ref_counts.get(key, 0) for key, count in gen_counts.items())
    norm_g = math.sqrt(sum(c * c for c in gen_counts.values()))
    norm_r = math.sqrt(sum(c * c for c in ref_counts.values()))
    return dot / (norm_g * norm_r)


def ks_statistic(sample_a, sample_b) -> float:
    """Two-sample Kolmogorov-Smirnov D = sup |F_a - F_b|."""
    a = np.sort(np.asarray(sample_a, dtype=np.float64))
    b = np.sort(np.asarray(sample_b, dtype=np.float64))
    if a.size == 0 or b.size == 0:
        raise ValueError("empty sample")
    support = np.concatenate([a, b])
    f_a = np.searchsorted(a, support, side="right") / a.size
    f_b = np.searchsorted(b, support, side="right") / b.size
    return float(np.abs(f_a - f_b).max())


def ks_pvalue(d: float, n_a: int, n_b: int, terms: int = 100) -> float:
    """Asymptotic two-sided p-value (Kolmogorov series, truncated)."""
    if n_a <= 0 or n_b <= 0:
        raise ValueError("empty sample")
    n_eff = n_a * n_b / (n_a + n_b)
    lam = (math.sqrt(n_eff) + 0.12 + 0.11 / math.sqrt(n_eff)) * d
    if lam <= 0:
        return 1.0
    total = 0.0
    for j in range(1, terms + 1):
        total += (-1.0) ** (j - 1) * math.exp(-2.0 * j * j * lam * lam)
    return float(min(max(2.0 * total, 0.0), 1.0))


@dataclass
class BenchmarkReport:
    total: int
    valid: int
    unique: int
    novel: int
    validity: float
    uniqueness: float
    novelty: float
    diversity: float
    snn: float
    scaff: float
    ks_stats: dict[str, float] = field(default_factory=dict)
    ks_pvalues: dict[str, float] = field(default_factory=dict)
    # Raw descriptor samples (generated, reference) for histogram exports;
    # not part of the serialized report.
    feature_samples: dict[str, tuple[list[float], list[float]]] = field(
        default_factory=dict, repr=False
    )

    def as_dict(self) -> dict:
        return {
            "schema_version": REPORT_SCHEMA_VERSION,
            "counts": {
                "total": self.total,
                "valid": self.valid,
                "unique": self.unique,
                "novel": self.novel,
            },
            "metrics": {
                "validity": self.validity,
                "uniqueness": self.uniqueness,
                "novelty": self.novelty,
                "diversity": self.diversity,
                "snn": self.snn,
                "scaff": self.scaff,
            },
            "ks": {
                name: {"d": self.ks_stats[name], "p": self.ks_pvalues[name]}
                for name in sorted(self.ks_stats)
            },
        }


def _prepare_all(canonical: list[str]) -> list[Molecule]:
    return [prepare(parse_smiles(text)) for text in canonical]


def benchmark(
    generated_smiles,
    training_smiles,
    ks_features: tuple[str, ...] = EQ4_FEATURES,
) -> BenchmarkReport:
    """Full evaluation of a generated set against a training set.

    ``training_smiles`` must already be sanitized, canonical strings (the
    dataset loader guarantees that); ``generated_smiles`` is raw text.
    """
    generated_smiles = list(generated_smiles)
    ratio, valid_canonical = validity(generated_smiles)
    if not valid_canonical:
        raise ValueError("no valid molecules in the generated set")
    unique_ratio = uniqueness(valid_canonical)
    distinct = sorted(set(valid_canonical))
    training_set = set(training_smiles)
    novelty_ratio = novelty(distinct, training_set)

    generated_mols = _prepare_all(distinct)
    training_mols = _prepare_all(sorted(training_set))

    ks_stats: dict[str, float] = {}
    ks_pvalues: dict[str, float] = {}
    feature_samples: dict[str, tuple[list[float], list[float]]] = {}
    gen_features = [descriptor_vector(m, ks_features) for m in generated_mols]
    ref_features = [descriptor_vector(m, ks_features) for m in training_mols]
    for name in ks_features:
        sample_g = [fv.values[name] for fv in gen_features]
        sample_r = [fv.values[name] for fv in ref_features]
        d = ks_statistic(sample_g, sample_r)
        ks_stats[name] = d
        ks_pvalues[name] = ks_pvalue(d, len(sample_g), len(sample_r))
        feature_samples[name] = (sample_g, sample_r)

    return BenchmarkReport(
        total=len(generated_smiles),
        valid=len(valid_canonical),
        unique=len(distinct),
        novel=round(novelty_ratio * len(distinct)),
        validity=ratio,
        uniqueness=unique_ratio,
        novelty=novelty_ratio,
        diversity=internal_diversity(generated_mols) if len(generated_mols) > 1 else 0.0,
        snn=snn(generated_mols, training_mols),
        scaff=scaffold_similarity(generated_mols, training_mols),
        ks_stats=ks_stats,
        ks_pvalues=ks_pvalues,
        feature_samples=feature_samples,
    )
