#!/usr/bin/env python3
"""Regenerate the shipped scoring model (src/fragscreen/data/eq4_model.txt).

The equation's coefficients are fixed; what this computes is the
standardization statistics over the bundled reference dataset so the scorer
has a meaningful scale out of the box.
"""

from __future__ import annotations

import pathlib
import sys
import warnings

import numpy as np

ROOT = pathlib.Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "src"))

from fragscreen.descriptors import EQ4_FEATURES, descriptor_vector  # noqa: E402
from fragscreen.likeliness import eq4_model, save_model, standardize  # noqa: E402
from fragscreen.pipeline import load_dataset  # noqa: E402


def main() -> None:
    warnings.simplefilter("ignore")
    dataset = load_dataset(ROOT / "tests" / "data" / "example_dataset.csv")
    rows = []
    for entry in dataset.entries:
        fv = descriptor_vector(entry.molecule, EQ4_FEATURES)
        rows.append(fv.as_list(EQ4_FEATURES))
    x_std, scaler = standardize(np.array(rows))
    model = eq4_model(scaler, train_means=x_std.mean(axis=0))
    out = ROOT / "src" / "fragscreen" / "data" / "eq4_model.txt"
    save_model(model, out)
    print(f"wrote {out}")


if __name__ == "__main__":
    main()
