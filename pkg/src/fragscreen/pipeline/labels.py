"""Nearest-neighbor odor label suggestion.

A deliberately simple stand-in for a trained label predictor: gather the
labels of the k most similar dataset molecules (Tanimoto on circular
fingerprints) and rank them by similarity-weighted frequency.  Ties break on
the label text so suggestions are reproducible.
"""

from __future__ import annotations

from .. import kernels
from ..descriptors import morgan_fingerprint
from ..mol import Molecule
from .dataset import Dataset


def suggest_labels(
    mol: Molecule, dataset: Dataset, k: int = 5
) -> list[tuple[str, float]]:
    """Ranked (label, weight) suggestions from the k nearest neighbors."""
    if len(dataset) == 0:
        raise ValueError("empty dataset")
    k = min(k, len(dataset))
    query = morgan_fingerprint(mol, radius=2).words
    sims = kernels.sims_one_vs_many(query, dataset.fingerprint_matrix())
    # Highest similarity first; index breaks ties deterministically.
    order = sorted(range(len(dataset)), key=lambda i: (-sims[i], i))[:k]
    weights: dict[str, float] = {}
    for idx in order:
        for label in dataset.entries[idx].labels:
            weights[label] = weights.get(label, 0.0) + float(sims[idx])
    return sorted(weights.items(), key=lambda kv: (-kv[1], kv[0]))
