"""Pure-Python / NumPy backend for the hot kernels.

Mirrors ``_ckernels`` bit for bit: the FNV mixing, the refinement order and
the similarity conventions must stay in lockstep so both backends produce
identical canonical SMILES and identical metric values.
"""

from __future__ import annotations

import numpy as np

_FNV_OFFSET = 0xCBF29CE484222325
_FNV_PRIME = 0x100000001B3
_MASK = 0xFFFFFFFFFFFFFFFF


def backend_name() -> str:
    return "python"


def fnv1a_ints(values) -> int:
    """FNV-1a (64-bit) over a sequence of integers, 8 LE bytes each."""
    h = _FNV_OFFSET
    for v in values:
        v &= _MASK
        for _ in range(8):
            h ^= v & 0xFF
            h = (h * _FNV_PRIME) & _MASK
            v >>= 8
    return h


def wl_refine(
    seeds: list[int],
    nbr_ptr: list[int],
    nbr_idx: list[int],
    nbr_bond: list[int],
) -> list[int]:
    """Iterative neighbor-rank refinement to a stable partition.

    ``seeds`` are initial dense ranks; CSR arrays give each atom's neighbor
    indices and bond codes.  Classes only ever split, so iteration stops when
    the class count is stable.
    """
    n = len(seeds)
    ranks = list(seeds)
    n_classes = len(set(ranks))
    for _ in range(n + 1):
        if n_classes == n:
            break
        keys = []
        for i in range(n):
            codes = sorted(
                ranks[nbr_idx[j]] * 8 + nbr_bond[j]
                for j in range(nbr_ptr[i], nbr_ptr[i + 1])
            )
            keys.append((ranks[i], fnv1a_ints(codes)))
        order = {key: rank for rank, key in enumerate(sorted(set(keys)))}
        ranks = [order[key] for key in keys]
        new_count = len(order)
        if new_count == n_classes:
            break
        n_classes = new_count
    return ranks


def _popcounts(mat: np.ndarray) -> np.ndarray:
    return np.bitwise_count(mat).sum(axis=-1, dtype=np.int64)


def tanimoto_words(a: np.ndarray, b: np.ndarray) -> float:
    inter = int(np.bitwise_count(a & b).sum())
    union = int(np.bitwise_count(a | b).sum())
    return 1.0 if union == 0 else inter / union


def sims_one_vs_many(query: np.ndarray, mat: np.ndarray) -> np.ndarray:
    inter = np.bitwise_count(mat & query).sum(axis=1, dtype=np.int64)
    union = np.bitwise_count(mat | query).sum(axis=1, dtype=np.int64)
    out = np.ones(len(mat), dtype=np.float64)
    nz = union > 0
    out[nz] = inter[nz] / union[nz]
    return out


def mean_pairwise_tanimoto(mat: np.ndarray) -> float:
    n = len(mat)
    if n < 2:
        raise ValueError("need at least two fingerprints")
    pops = _popcounts(mat)
    total = 0.0
    pairs = 0
    for i in range(n - 1):
        inter = np.bitwise_count(mat[i] & mat[i + 1 :]).sum(axis=1, dtype=np.int64)
        union = pops[i] + pops[i + 1 :] - inter
        sims = np.where(union == 0, 1.0, inter / np.maximum(union, 1))
        total += float(sims.sum())
        pairs += len(sims)
    return total / pairs


def snn_mean(gen: np.ndarray, ref: np.ndarray) -> float:
    if len(gen) == 0 or len(ref) == 0:
        raise ValueError("need non-empty fingerprint sets")
    ref_pops = _popcounts(ref)
    total = 0.0
    for row in gen:
        inter = np.bitwise_count(ref & row).sum(axis=1, dtype=np.int64)
        union = int(np.bitwise_count(row).sum()) + ref_pops - inter
        sims = np.where(union == 0, 1.0, inter / np.maximum(union, 1))
        total += float(sims.max())
    return total / len(gen)
