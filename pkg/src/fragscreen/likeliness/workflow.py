"""End-to-end training protocol for the odor-likeliness model.

Order of operations: stratified 80/20 split, standardize on the training
split, SMOTE the training split to parity, drop correlated features
(|r| > 0.75), drop high-VIF features (> 5), fit, pick the top features by
mean |SHAP|, refit on those, evaluate on the held-out split.  Deterministic
under the seed.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .explain import select_top_shap
from .logistic import LogisticModel, train_logistic
from .metrics import MetricsReport, eval_metrics, roc_curve
from .preprocess import Scaler, prune_correlated, prune_vif, smote, standardize


@dataclass
class TrainResult:
    model: LogisticModel
    metrics: MetricsReport
    roc_points: list
    selected_features: list[str]
    kept_after_pruning: list[str]
    train_matrix_std: np.ndarray
    test_matrix_std: np.ndarray


def stratified_split(
    labels: np.ndarray, test_fraction: float = 0.2, seed: int = 0
) -> tuple[np.ndarray, np.ndarray]:
    """(train_idx, test_idx), class-stratified, shuffled under the seed."""
    y = np.asarray(labels)
    rng = np.random.default_rng(seed)
    train_parts, test_parts = [], []
    for cls in np.unique(y):
        members = np.flatnonzero(y == cls)
        rng.shuffle(members)
        n_test = max(1, int(round(test_fraction * len(members))))
        test_parts.append(members[:n_test])
        train_parts.append(members[n_test:])
    train_idx = np.sort(np.concatenate(train_parts))
    test_idx = np.sort(np.concatenate(test_parts))
    return train_idx, test_idx


def train_workflow(
    matrix: np.ndarray,
    names: list[str],
    labels: np.ndarray,
    seed: int = 0,
    smote_k: int = 5,
    corr_threshold: float = 0.75,
    vif_threshold: float = 5.0,
    top_n: int = 5,
    l2: float = 0.0,
) -> TrainResult:
    x = np.asarray(matrix, dtype=np.float64)
    y = np.asarray(labels)
    names = list(names)

    train_idx, test_idx = stratified_split(y, seed=seed)
    x_train_raw, y_train = x[train_idx], y[train_idx]
    x_test_raw, y_test = x[test_idx], y[test_idx]

    # Constant features carry no signal and would break standardization.
    varying = np.flatnonzero(x_train_raw.std(axis=0) >= 1e-12)
    if len(varying) < x.shape[1]:
        x = x[:, varying]
        x_train_raw = x_train_raw[:, varying]
        x_test_raw = x_test_raw[:, varying]
        names = [names[i] for i in varying]

    x_train_std, scaler = standardize(x_train_raw)
    x_train_std, y_train = smote(x_train_std, y_train, k=smote_k, seed=seed)

    kept = prune_correlated(x_train_std, names, threshold=corr_threshold)
    kept_cols = [names.index(n) for n in kept]
    kept = prune_vif(x_train_std[:, kept_cols], kept, threshold=vif_threshold)
    kept_cols = [names.index(n) for n in kept]

    sub_scaler = Scaler(
        means=scaler.means[kept_cols], stds=scaler.stds[kept_cols]
    )
    model_full = train_logistic(
        x_train_std[:, kept_cols], y_train, kept, sub_scaler, l2=l2
    )

    top = select_top_shap(model_full, x_train_std[:, kept_cols], n=min(top_n, len(kept)))
    top_cols = [names.index(n) for n in top]
    top_scaler = Scaler(means=scaler.means[top_cols], stds=scaler.stds[top_cols])
    model = train_logistic(
        x_train_std[:, top_cols], y_train, top, top_scaler, l2=l2
    )

    x_test_std = top_scaler.transform(x_test_raw[:, top_cols])
    probabilities = 1.0 / (1.0 + np.exp(-model.logit_standardized(x_test_std)))
    metrics = eval_metrics(probabilities, y_test)
    points = roc_curve(probabilities, y_test)

    return TrainResult(
        model=model,
        metrics=metrics,
        roc_points=points,
        selected_features=top,
        kept_after_pruning=kept,
        train_matrix_std=x_train_std[:, top_cols],
        test_matrix_std=x_test_std,
    )
