"""Binary logistic regression trained by full-batch gradient descent.

The loss is mean binary cross-entropy (optional L2 on the coefficients);
steps use backtracking line search, so the loss is non-increasing by
construction, and convergence means the loss change dropped below ``tol``.
A model carries its feature names, the scaler it was standardized with, and
the training-matrix means needed for exact SHAP baselines.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .preprocess import Scaler


def sigmoid(z):
    z = np.asarray(z, dtype=np.float64)
    out = np.empty_like(z)
    pos = z >= 0
    out[pos] = 1.0 / (1.0 + np.exp(-z[pos]))
    ez = np.exp(z[~pos])
    out[~pos] = ez / (1.0 + ez)
    return out


@dataclass
class LogisticModel:
    intercept: float
    coefficients: np.ndarray
    feature_names: tuple[str, ...]
    scaler: Scaler
    train_means: np.ndarray = field(default=None)  # standardized-space means
    converged: bool = True
    n_iter: int = 0

    def __post_init__(self):
        self.coefficients = np.asarray(self.coefficients, dtype=np.float64)
        if self.train_means is None:
            self.train_means = np.zeros_like(self.coefficients)
        if not (
            len(self.coefficients) == len(self.feature_names) == len(self.scaler.means)
        ):
            raise ValueError("coefficients, names and scaler sizes must match")
        if not np.all(np.isfinite(self.coefficients)) or not np.isfinite(self.intercept):
            raise ValueError("model parameters must be finite")

    def logit_standardized(self, x_std: np.ndarray) -> np.ndarray:
        return self.intercept + np.asarray(x_std, dtype=np.float64) @ self.coefficients

    def logit(self, x_raw: np.ndarray) -> np.ndarray:
        return self.logit_standardized(self.scaler.transform(x_raw))

    def predict_proba(self, x_raw: np.ndarray) -> np.ndarray:
        return sigmoid(self.logit(x_raw))

    def decide(self, x_raw: np.ndarray, threshold: float = 0.5) -> np.ndarray:
        return (self.predict_proba(x_raw) >= threshold).astype(int)


def _loss_grad(theta, x1, y, l2):
    """Mean BCE and gradient; x1 carries the bias column last."""
    z = x1 @ theta
    # log(1 + e^z) - y*z, computed stably.
    loss = float(np.mean(np.logaddexp(0.0, z) - y * z))
    grad = x1.T @ (sigmoid(z) - y) / len(y)
    if l2:
        loss += 0.5 * l2 * float(theta[:-1] @ theta[:-1])
        grad = grad + l2 * np.concatenate([theta[:-1], [0.0]])
    return loss, grad


def train_logistic(
    x_std: np.ndarray,
    labels: np.ndarray,
    feature_names,
    scaler: Scaler,
    l2: float = 0.0,
    tol: float = 1e-6,
    max_iter: int = 10000,
) -> LogisticModel:
    """Fit on a standardized matrix; returns a model flagged if unconverged."""
    x = np.asarray(x_std, dtype=np.float64)
    y = np.asarray(labels, dtype=np.float64)
    if set(np.unique(y)) - {0.0, 1.0}:
        raise ValueError("labels must be 0/1")
    if len(set(y.tolist())) < 2:
        raise ValueError("both classes must be present")

    n, d = x.shape
    x1 = np.column_stack([x, np.ones(n)])
    theta = np.zeros(d + 1)
    loss, grad = _loss_grad(theta, x1, y, l2)
    step = 1.0
    converged = False
    iteration = 0
    for iteration in range(1, max_iter + 1):
        g2 = float(grad @ grad)
        if g2 < 1e-30:
            converged = True
            break
        step = min(step * 2.0, 1e8)
        while True:
            candidate = theta - step * grad
            new_loss, new_grad = _loss_grad(candidate, x1, y, l2)
            if new_loss <= loss - 1e-4 * step * g2:
                break
            step *= 0.5
            if step < 1e-18:
                break
        if step < 1e-18:
            converged = True  # no descent direction left at float precision
            break
        theta = candidate
        if abs(loss - new_loss) < tol:
            loss, grad = new_loss, new_grad
            converged = True
            break
        loss, grad = new_loss, new_grad

    return LogisticModel(
        intercept=float(theta[-1]),
        coefficients=theta[:-1].copy(),
        feature_names=tuple(feature_names),
        scaler=scaler,
        train_means=x.mean(axis=0),
        converged=converged,
        n_iter=iteration,
    )


MODEL_FORMAT_VERSION = 1


def save_model(model: LogisticModel, path) -> None:
    """Plain-text tabular persistence; floats via repr round-trip bit-exactly."""
    lines = [
        f"format_version\t{MODEL_FORMAT_VERSION}",
        f"intercept\t{model.intercept!r}",
        f"converged\t{int(model.converged)}",
    ]
    for i, name in enumerate(model.feature_names):
        lines.append(
            "feature\t{}\t{!r}\t{!r}\t{!r}\t{!r}".format(
                name,
                float(model.scaler.means[i]),
                float(model.scaler.stds[i]),
                float(model.coefficients[i]),
                float(model.train_means[i]),
            )
        )
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")


def load_model(path) -> LogisticModel:
    intercept = None
    converged = True
    names, means, stds, coefs, tmeans = [], [], [], [], []
    with open(path) as fh:
        for line in fh:
            parts = line.rstrip("\n").split("\t")
            if parts[0] == "format_version":
                if int(parts[1]) != MODEL_FORMAT_VERSION:
                    raise ValueError(f"unsupported model format {parts[1]}")
            elif parts[0] == "intercept":
                intercept = float(parts[1])
            elif parts[0] == "converged":
                converged = bool(int(parts[1]))
            elif parts[0] == "feature":
                names.append(parts[1])
                means.append(float(parts[2]))
                stds.append(float(parts[3]))
                coefs.append(float(parts[4]))
                tmeans.append(float(parts[5]))
    if intercept is None or not names:
        raise ValueError("malformed model file")
    return LogisticModel(
        intercept=intercept,
        coefficients=np.array(coefs),
        feature_names=tuple(names),
        scaler=Scaler(means=np.array(means), stds=np.array(stds)),
        train_means=np.array(tmeans),
        converged=converged,
    )
