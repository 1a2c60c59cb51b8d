"""Design-matrix preprocessing: standardization, SMOTE, collinearity pruning.

The training workflow applies these in order: standardize, oversample the
minority class to parity, drop one of every feature pair correlated above
0.75, then iteratively drop the max-VIF feature while any VIF exceeds 5.
Every tie-break is deterministic and documented next to the rule.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass
class Scaler:
    means: np.ndarray
    stds: np.ndarray

    def transform(self, matrix: np.ndarray) -> np.ndarray:
        return (np.asarray(matrix, dtype=np.float64) - self.means) / self.stds

    def inverse(self, matrix: np.ndarray) -> np.ndarray:
        return np.asarray(matrix, dtype=np.float64) * self.stds + self.means


def standardize(matrix: np.ndarray) -> tuple[np.ndarray, Scaler]:
    """Column-wise z-scoring with population standard deviation."""
    x = np.asarray(matrix, dtype=np.float64)
    if x.ndim != 2 or x.shape[0] < 2:
        raise ValueError("need a 2-D matrix with at least two rows")
    means = x.mean(axis=0)
    stds = x.std(axis=0)
    constant = np.flatnonzero(stds < 1e-12)
    if constant.size:
        raise ValueError(f"constant column(s) at index {constant.tolist()}")
    scaler = Scaler(means=means, stds=stds)
    return scaler.transform(x), scaler


def smote(
    matrix: np.ndarray,
    labels: np.ndarray,
    k: int = 5,
    seed: int = 0,
) -> tuple[np.ndarray, np.ndarray]:
    """Synthetic minority oversampling to exact class parity.

    Every synthetic row lies on the segment between a minority row and one of
    its k nearest minority neighbors (Euclidean); deterministic under a seed.
    """
    x = np.asarray(matrix, dtype=np.float64)
    y = np.asarray(labels)
    classes, counts = np.unique(y, return_counts=True)
    if classes.size != 2:
        raise ValueError("need exactly two classes")
    minority = classes[np.argmin(counts)]
    majority = classes[np.argmax(counts)]
    n_min, n_maj = counts.min(), counts.max()
    if n_min == n_maj:
        return x.copy(), y.copy()
    if n_min <= k:
        raise ValueError(f"minority class of {n_min} is too small for k={k}")

    minority_rows = x[y == minority]
    deltas = minority_rows[:, None, :] - minority_rows[None, :, :]
    dist = np.sqrt((deltas**2).sum(axis=2))
    np.fill_diagonal(dist, np.inf)
    # Ties resolved by index thanks to stable argsort.
    neighbor_ids = np.argsort(dist, axis=1, kind="stable")[:, :k]

    rng = np.random.default_rng(seed)
    n_new = n_maj - n_min
    base_ids = rng.integers(0, n_min, size=n_new)
    pick_ids = rng.integers(0, k, size=n_new)
    gaps = rng.uniform(0.0, 1.0, size=n_new)
    synthetic = np.empty((n_new, x.shape[1]), dtype=np.float64)
    for row, (b, p, u) in enumerate(zip(base_ids, pick_ids, gaps)):
        origin = minority_rows[b]
        target = minority_rows[neighbor_ids[b, p]]
        synthetic[row] = origin + u * (target - origin)

    out_x = np.vstack([x, synthetic])
    out_y = np.concatenate([y, np.full(n_new, minority, dtype=y.dtype)])
    return out_x, out_y


def prune_correlated(
    matrix: np.ndarray, names: list[str], threshold: float = 0.75
) -> list[str]:
    """Drop features until no surviving pair has |Pearson r| > threshold.

    Of each offending pair the member with the larger mean absolute
    correlation to all other survivors is dropped (lexicographically later
    name on a tie), worst pair first.
    """
    x = np.asarray(matrix, dtype=np.float64)
    keep = list(range(x.shape[1]))
    while len(keep) > 1:
        sub = x[:, keep]
        corr = np.corrcoef(sub.T)
        np.fill_diagonal(corr, 0.0)
        abs_corr = np.abs(corr)
        worst = abs_corr.max()
        if worst <= threshold:
            break
        pairs = np.argwhere(np.isclose(abs_corr, worst))
        pairs = [(i, j) for i, j in pairs if i < j]
        i, j = min(pairs, key=lambda p: (names[keep[p[0]]], names[keep[p[1]]]))
        mean_i = abs_corr[i].sum() / (len(keep) - 1)
        mean_j = abs_corr[j].sum() / (len(keep) - 1)
        if mean_i > mean_j:
            drop = i
        elif mean_j > mean_i:
            drop = j
        else:
            drop = max(i, j, key=lambda p: names[keep[p]])
        keep.pop(drop)
    return [names[i] for i in keep]


def vif_values(matrix: np.ndarray) -> np.ndarray:
    """Variance inflation factor per column: 1/(1-R^2) against the rest.

    A singular regression (column expressible by the others) reports inf.
    """
    x = np.asarray(matrix, dtype=np.float64)
    n_cols = x.shape[1]
    if n_cols < 2:
        return np.ones(n_cols)
    out = np.empty(n_cols)
    for i in range(n_cols):
        target = x[:, i]
        others = np.delete(x, i, axis=1)
        design = np.column_stack([others, np.ones(len(target))])
        coef, *_ = np.linalg.lstsq(design, target, rcond=None)
        residual = target - design @ coef
        ss_res = float(residual @ residual)
        centered = target - target.mean()
        ss_tot = float(centered @ centered)
        if ss_tot < 1e-300:
            out[i] = np.inf
            continue
        r2 = 1.0 - ss_res / ss_tot
        out[i] = np.inf if r2 >= 1.0 - 1e-12 else 1.0 / (1.0 - r2)
    return out


def prune_vif(
    matrix: np.ndarray, names: list[str], threshold: float = 5.0
) -> list[str]:
    """Iteratively drop the max-VIF feature while any VIF exceeds threshold."""
    x = np.asarray(matrix, dtype=np.float64)
    keep = list(range(x.shape[1]))
    while len(keep) > 1:
        vifs = vif_values(x[:, keep])
        worst = vifs.max()
        if worst <= threshold:
            break
        offenders = [
            pos for pos in range(len(keep))
            if vifs[pos] == worst or (np.isinf(vifs[pos]) and np.isinf(worst))
        ]
        drop = max(offenders, key=lambda p: names[keep[p]])
        keep.pop(drop)
    return [names[i] for i in keep]
