"""Report and figure-data emission.

JSON reports are schema-versioned and byte-deterministic (sorted keys, no
timestamps).  Figure data ships as plain CSV: ROC curve points, per-sample
SHAP value/contribution pairs, and per-descriptor histogram tables for the
distribution comparisons.  The only rendered figure is a small self-contained
ROC SVG.
"""

from __future__ import annotations

import csv
import json
import os

import numpy as np

from ..genmetrics import BenchmarkReport
from ..likeliness import LogisticModel, MetricsReport, linear_shap
from .screen import ScreenReport


def _write_json(payload: dict, path: str) -> None:
    with open(path, "w") as fh:
        json.dump(payload, fh, indent=2, sort_keys=True)
        fh.write("\n")


def emit_screen_report(report: ScreenReport, outdir: str) -> list[str]:
    os.makedirs(outdir, exist_ok=True)
    json_path = os.path.join(outdir, "screen_report.json")
    _write_json(report.as_dict(), json_path)

    csv_path = os.path.join(outdir, "screen_records.csv")
    fields = [
        "index", "input_smiles", "canonical", "sanitize_valid", "duplicate_of",
        "novel", "molecular_weight", "rule_of_three", "fl_property", "gdb17",
        "eq4_logit", "eq4_probability", "odorous", "suggested_labels",
        "pubchem_status",
    ]
    with open(csv_path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(fields)
        for record in report.records:
            row = record.as_dict()
            row["suggested_labels"] = "|".join(
                label for label, _ in record.suggested_labels
            )
            writer.writerow([row[f] for f in fields])
    return [json_path, csv_path]


def emit_benchmark_report(
    report: BenchmarkReport,
    outdir: str,
    histograms: dict[str, tuple[list[float], list[float]]] | None = None,
) -> list[str]:
    """Write benchmark.json plus optional per-descriptor histogram CSVs.

    ``histograms`` maps feature name -> (generated sample, reference sample).
    """
    os.makedirs(outdir, exist_ok=True)
    json_path = os.path.join(outdir, "benchmark.json")
    _write_json(report.as_dict(), json_path)
    written = [json_path]
    for name, (gen_sample, ref_sample) in (histograms or {}).items():
        path = os.path.join(outdir, f"ks_hist_{name}.csv")
        lo = min(min(gen_sample), min(ref_sample))
        hi = max(max(gen_sample), max(ref_sample))
        if hi <= lo:
            hi = lo + 1.0
        edges = np.linspace(lo, hi, 21)
        gen_hist, _ = np.histogram(gen_sample, bins=edges)
        ref_hist, _ = np.histogram(ref_sample, bins=edges)
        with open(path, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["bin_left", "bin_right", "generated", "reference"])
            for i in range(len(gen_hist)):
                writer.writerow(
                    [f"{edges[i]:.6g}", f"{edges[i + 1]:.6g}",
                     int(gen_hist[i]), int(ref_hist[i])]
                )
        written.append(path)
    return written


def emit_train_artifacts(
    model: LogisticModel,
    metrics: MetricsReport | None,
    roc_points: list[tuple[float, float, float]] | None,
    x_std: np.ndarray | None,
    outdir: str,
    svg: bool = True,
) -> list[str]:
    """Metrics JSON, ROC curve CSV (+SVG), SHAP summary CSV."""
    os.makedirs(outdir, exist_ok=True)
    written = []

    if metrics is not None:
        path = os.path.join(outdir, "metrics.json")
        _write_json(metrics.as_dict(), path)
        written.append(path)

    if roc_points:
        path = os.path.join(outdir, "roc_curve.csv")
        with open(path, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["fpr", "tpr", "threshold"])
            for fpr, tpr, threshold in roc_points:
                writer.writerow([repr(fpr), repr(tpr), repr(threshold)])
        written.append(path)
        if svg:
            svg_path = os.path.join(outdir, "roc.svg")
            _write_roc_svg(roc_points, svg_path)
            written.append(svg_path)

    if x_std is not None:
        path = os.path.join(outdir, "shap_summary.csv")
        with open(path, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["feature", "standardized_value", "contribution"])
            for row in np.asarray(x_std, dtype=np.float64):
                explanation = linear_shap(model, row)
                for name, value in zip(model.feature_names, row):
                    writer.writerow(
                        [name, repr(float(value)), repr(explanation.contributions[name])]
                    )
        written.append(path)
    return written


def _write_roc_svg(points, path: str, size: int = 320, margin: int = 40) -> None:
    span = size - 2 * margin

    def sx(v: float) -> float:
        return margin + v * span

    def sy(v: float) -> float:
        return size - margin - v * span

    polyline = " ".join(f"{sx(fpr):.2f},{sy(tpr):.2f}" for fpr, tpr, _ in points)
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}">',
        f'<rect width="{size}" height="{size}" fill="white"/>',
        f'<line x1="{sx(0):.2f}" y1="{sy(0):.2f}" x2="{sx(1):.2f}" y2="{sy(1):.2f}" '
        'stroke="#999" stroke-dasharray="4 4"/>',
        f'<polyline points="{polyline}" fill="none" stroke="#1f6fb2" stroke-width="2"/>',
        f'<rect x="{margin}" y="{margin}" width="{span}" height="{span}" '
        'fill="none" stroke="black"/>',
        f'<text x="{size / 2:.0f}" y="{size - 8}" text-anchor="middle" '
        'font-size="12">false positive rate</text>',
        f'<text x="12" y="{size / 2:.0f}" text-anchor="middle" font-size="12" '
        f'transform="rotate(-90 12 {size / 2:.0f})">true positive rate</text>',
        "</svg>",
    ]
    with open(path, "w") as fh:
        fh.write("\n".join(parts) + "\n")
