"""Odor-likeliness: criteria, training workflow, fixed equation, SHAP, metrics."""

from .criteria import fl_property, gdb17_criterion, rule_of_three
from .eq4 import (
    EQ4_COEFFICIENTS,
    EQ4_INTERCEPT,
    eq4_logit,
    eq4_model,
    eq4_score,
)
from .explain import ShapExplanation, linear_shap, mean_abs_shap, select_top_shap
from .logistic import (
    LogisticModel,
    load_model,
    save_model,
    sigmoid,
    train_logistic,
)
from .metrics import MetricsReport, eval_metrics, roc_auc, roc_curve
from .preprocess import (
    Scaler,
    prune_correlated,
    prune_vif,
    smote,
    standardize,
    vif_values,
)

__all__ = [
    "EQ4_COEFFICIENTS",
    "EQ4_INTERCEPT",
    "LogisticModel",
    "MetricsReport",
    "Scaler",
    "ShapExplanation",
    "eq4_logit",
    "eq4_model",
    "eq4_score",
    "eval_metrics",
    "fl_property",
    "gdb17_criterion",
    "linear_shap",
    "load_model",
    "mean_abs_shap",
    "prune_correlated",
    "prune_vif",
    "roc_auc",
    "roc_curve",
    "rule_of_three",
    "save_model",
    "select_top_shap",
    "sigmoid",
    "smote",
    "standardize",
    "train_logistic",
    "vif_values",
]
