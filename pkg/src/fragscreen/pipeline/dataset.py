"""Dataset ingestion: curated odorant CSV to prepared molecules.

Column mapping is configuration, not convention: the loader takes the SMILES
column name and either a delimited-label column or a set of one-hot label
columns.  Rows that fail parsing or sanitization are dropped and counted;
duplicate canonical structures collapse to their first occurrence.
"""

from __future__ import annotations

import csv
import logging
import warnings
from dataclasses import dataclass, field

import numpy as np

from ..molgraph import prepare, sanitize
from ..mol import Molecule
from ..descriptors import morgan_fingerprint
from ..smiles import SmilesError, canonicalize, parse_smiles

log = logging.getLogger(__name__)

ODORLESS_MARKER = "odorless"


@dataclass
class DatasetConfig:
    smiles_column: str = "smiles"
    label_column: str | None = "labels"
    label_delimiter: str = ";"
    odorous_column: str | None = None
    one_hot_labels: bool = False


@dataclass
class DatasetEntry:
    canonical: str
    molecule: Molecule
    labels: frozenset[str]
    odorous: bool


@dataclass
class Dataset:
    entries: list[DatasetEntry]
    dropped: int = 0
    duplicates: int = 0
    _fp_matrix: np.ndarray | None = field(default=None, repr=False)

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def canonical_set(self) -> set[str]:
        return {e.canonical for e in self.entries}

    def label_vocabulary(self) -> list[str]:
        vocab: set[str] = set()
        for entry in self.entries:
            vocab |= entry.labels
        return sorted(vocab)

    def fingerprint_matrix(self) -> np.ndarray:
        if self._fp_matrix is None:
            rows = [
                morgan_fingerprint(e.molecule, radius=2).words for e in self.entries
            ]
            self._fp_matrix = (
                np.vstack(rows) if rows else np.zeros((0, 32), dtype=np.uint64)
            )
        return self._fp_matrix


def _labels_from_row(
    row: dict[str, str], config: DatasetConfig, columns: list[str]
) -> frozenset[str]:
    if config.one_hot_labels:
        reserved = {config.smiles_column, config.odorous_column}
        return frozenset(
            col for col in columns
            if col not in reserved and row.get(col, "").strip() in ("1", "true", "True")
        )
    if config.label_column and config.label_column in row:
        raw = row[config.label_column] or ""
        return frozenset(
            token.strip() for token in raw.split(config.label_delimiter)
            if token.strip() and token.strip().lower() != ODORLESS_MARKER
        )
    return frozenset()


def load_dataset(path, config: DatasetConfig | None = None) -> Dataset:
    """Read, parse, sanitize and deduplicate a dataset CSV."""
    config = config or DatasetConfig()
    entries: list[DatasetEntry] = []
    seen: set[str] = set()
    dropped = 0
    duplicates = 0

    with open(path, newline="") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None:
            raise ValueError(f"{path}: empty dataset file")
        if config.smiles_column not in reader.fieldnames:
            raise ValueError(
                f"{path}: missing SMILES column {config.smiles_column!r}"
            )
        columns = list(reader.fieldnames)
        for row in reader:
            text = (row.get(config.smiles_column) or "").strip()
            if not text:
                dropped += 1
                continue
            with warnings.catch_warnings():
                warnings.simplefilter("ignore")
                try:
                    mol = prepare(parse_smiles(text))
                except SmilesError:
                    dropped += 1
                    continue
                if not sanitize(mol).valid:
                    dropped += 1
                    continue
                canonical = canonicalize(mol)
            if canonical in seen:
                duplicates += 1
                continue
            seen.add(canonical)
            labels = _labels_from_row(row, config, columns)
            if config.odorous_column and config.odorous_column in row:
                odorous = (row[config.odorous_column] or "").strip() in ("1", "true", "True")
            else:
                odorous = bool(labels)
            entries.append(
                DatasetEntry(
                    canonical=canonical, molecule=mol, labels=labels, odorous=odorous
                )
            )

    if not entries:
        raise ValueError(f"{path}: no usable rows")
    if dropped:
        log.info("dropped %d unparseable/unsanitizable rows from %s", dropped, path)
    return Dataset(entries=entries, dropped=dropped, duplicates=duplicates)
