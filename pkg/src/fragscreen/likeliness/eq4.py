"""The fixed five-feature odor-likeliness equation.

Coefficients are the published logistic equation over standardized logP,
molecular weight, SlogP_VSA3, sp2 fraction and FCFP4 count.  The magnitudes
only make sense on z-scored inputs (a raw-Da weight term at -6.28 would
saturate the sigmoid for every molecule), so scoring requires a scaler and
refuses to run without one.
"""

from __future__ import annotations

import math

import numpy as np

from ..descriptors.schema import EQ4_FEATURES, FeatureVector
from .logistic import LogisticModel
from .preprocess import Scaler

EQ4_INTERCEPT = -3.6592
EQ4_COEFFICIENTS: dict[str, float] = {
    "logp": 7.0771,
    "molecular_weight": -6.2811,
    "slogp_vsa3": 1.1403,
    "fraction_sp2": 0.5869,
    "fcfp4_count": 1.9262,
}

DECISION_THRESHOLD = 0.5


def eq4_logit(x_standardized) -> float:
    """Logit of the equation on already-standardized five-feature input."""
    x = np.asarray(x_standardized, dtype=np.float64)
    if x.shape != (len(EQ4_FEATURES),):
        raise ValueError(f"expected {len(EQ4_FEATURES)} features, got {x.shape}")
    coefs = np.array([EQ4_COEFFICIENTS[name] for name in EQ4_FEATURES])
    return float(EQ4_INTERCEPT + x @ coefs)


def eq4_score(features, scaler: Scaler) -> tuple[float, float, bool]:
    """(logit, probability, odorous) for raw five-feature input.

    ``features`` may be a FeatureVector or an array ordered like
    EQ4_FEATURES; ``scaler`` must hold the five features' training statistics.
    """
    if scaler is None:
        raise ValueError("eq4_score requires a scaler; raw units are meaningless")
    if isinstance(features, FeatureVector):
        raw = np.array(features.as_list(EQ4_FEATURES))
    else:
        raw = np.asarray(features, dtype=np.float64)
    if raw.shape != (len(EQ4_FEATURES),):
        raise ValueError(f"expected {len(EQ4_FEATURES)} features, got {raw.shape}")
    logit = eq4_logit(scaler.transform(raw))
    probability = 1.0 / (1.0 + math.exp(-logit)) if logit > -700 else 0.0
    return logit, probability, probability >= DECISION_THRESHOLD


def eq4_model(scaler: Scaler, train_means=None) -> LogisticModel:
    """Package the fixed equation as a LogisticModel for SHAP and screening."""
    coefs = np.array([EQ4_COEFFICIENTS[name] for name in EQ4_FEATURES])
    return LogisticModel(
        intercept=EQ4_INTERCEPT,
        coefficients=coefs,
        feature_names=EQ4_FEATURES,
        scaler=scaler,
        train_means=train_means,
    )
