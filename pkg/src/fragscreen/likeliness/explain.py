"""Exact SHAP values for linear models on the logit scale.

For a linear model with independent features, the Shapley value of feature i
collapses to coef_i * (x_i - mean_i): each feature's contribution is the same
in every ordering, so the permutation average is exact, and local accuracy
(base + contributions == prediction) holds to machine precision.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .logistic import LogisticModel


@dataclass(frozen=True)
class ShapExplanation:
    base_value: float
    contributions: dict[str, float]
    prediction_logit: float

    def total(self) -> float:
        return self.base_value + sum(self.contributions.values())


def linear_shap(model: LogisticModel, x_std) -> ShapExplanation:
    """Explain one standardized input; contributions are in logit units."""
    x = np.asarray(x_std, dtype=np.float64)
    if x.shape != model.coefficients.shape:
        raise ValueError("input shape does not match the model")
    contributions = model.coefficients * (x - model.train_means)
    base = float(model.intercept + model.coefficients @ model.train_means)
    return ShapExplanation(
        base_value=base,
        contributions={
            name: float(v) for name, v in zip(model.feature_names, contributions)
        },
        prediction_logit=float(model.logit_standardized(x)),
    )


def mean_abs_shap(model: LogisticModel, x_std: np.ndarray) -> dict[str, float]:
    """Mean |SHAP| per feature over a standardized matrix."""
    x = np.asarray(x_std, dtype=np.float64)
    values = np.abs(model.coefficients * (x - model.train_means))
    return {
        name: float(v) for name, v in zip(model.feature_names, values.mean(axis=0))
    }


def select_top_shap(model: LogisticModel, x_std: np.ndarray, n: int = 5) -> list[str]:
    """Top-n features by mean |SHAP|; ties broken lexicographically."""
    if n > len(model.feature_names):
        raise ValueError(f"asked for {n} features, model has {len(model.feature_names)}")
    importance = mean_abs_shap(model, x_std)
    ranked = sorted(importance.items(), key=lambda kv: (-kv[1], kv[0]))
    return [name for name, _ in ranked[:n]]
