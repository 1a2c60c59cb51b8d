"""End-to-end orchestration: dataset, screen, lookups, reports, CLI."""

from .dataset import Dataset, DatasetConfig, DatasetEntry, load_dataset
from .labels import suggest_labels
from .pubchem import KNOWN, UNAVAILABLE, UNKNOWN, PubChemClient
from .report import emit_benchmark_report, emit_screen_report, emit_train_artifacts
from .screen import (
    ScreenOptions,
    ScreenRecord,
    ScreenReport,
    read_smiles_lines,
    screen,
)

__all__ = [
    "Dataset",
    "DatasetConfig",
    "DatasetEntry",
    "KNOWN",
    "PubChemClient",
    "ScreenOptions",
    "ScreenRecord",
    "ScreenReport",
    "UNAVAILABLE",
    "UNKNOWN",
    "emit_benchmark_report",
    "emit_screen_report",
    "emit_train_artifacts",
    "load_dataset",
    "read_smiles_lines",
    "screen",
    "suggest_labels",
]
