"""The screen stage: sanitize, canonicalize, dedupe, novelty, likeliness,
label suggestion, PubChem status.

Stage ordering is strict: a record that fails sanitization carries no
downstream fields, duplicates stop after canonicalization, and only
molecules classified odorous receive label suggestions.  Records are
independent, so they may be computed in parallel; the report is assembled in
input order either way, and PubChem status never gates the verdict.
"""

from __future__ import annotations

import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from ..descriptors import basic_counts, descriptor_vector, molecular_weight
from ..likeliness import (
    LogisticModel,
    fl_property,
    gdb17_criterion,
    rule_of_three,
    sigmoid,
)
from ..molgraph import prepare, sanitize
from ..smiles import SmilesError, canonicalize, parse_smiles
from .dataset import Dataset
from .labels import suggest_labels
from .pubchem import UNAVAILABLE, PubChemClient

SCREEN_SCHEMA_VERSION = 1


@dataclass
class ScreenOptions:
    threshold: float = 0.5
    k_labels: int = 5
    threads: int = 1
    seed: int = 0
    pubchem: PubChemClient | None = None


@dataclass
class ScreenRecord:
    index: int
    input_smiles: str
    parse_error: str | None = None
    sanitize_valid: bool | None = None
    sanitize_failures: list[str] = field(default_factory=list)
    canonical: str | None = None
    duplicate_of: int | None = None
    novel: bool | None = None
    molecular_weight: float | None = None
    rule_of_three: bool | None = None
    fl_property: bool | None = None
    gdb17: bool | None = None
    eq4_logit: float | None = None
    eq4_probability: float | None = None
    odorous: bool | None = None
    suggested_labels: list[tuple[str, float]] = field(default_factory=list)
    pubchem_status: str | None = None

    def as_dict(self) -> dict:
        return {
            "index": self.index,
            "input_smiles": self.input_smiles,
            "parse_error": self.parse_error,
            "sanitize_valid": self.sanitize_valid,
            "sanitize_failures": self.sanitize_failures,
            "canonical": self.canonical,
            "duplicate_of": self.duplicate_of,
            "novel": self.novel,
            "molecular_weight": self.molecular_weight,
            "rule_of_three": self.rule_of_three,
            "fl_property": self.fl_property,
            "gdb17": self.gdb17,
            "eq4_logit": self.eq4_logit,
            "eq4_probability": self.eq4_probability,
            "odorous": self.odorous,
            "suggested_labels": [[l, w] for l, w in self.suggested_labels],
            "pubchem_status": self.pubchem_status,
        }


@dataclass
class ScreenReport:
    records: list[ScreenRecord]
    aggregates: dict
    seed: int

    def as_dict(self) -> dict:
        return {
            "schema_version": SCREEN_SCHEMA_VERSION,
            "seed": self.seed,
            "aggregates": self.aggregates,
            "records": [r.as_dict() for r in self.records],
        }


def read_smiles_lines(path) -> list[str]:
    """One SMILES per line; '#' starts a comment line; blanks skipped."""
    out = []
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if line and not line.startswith("#"):
                out.append(line.split()[0])
    return out


def _evaluate(record: ScreenRecord, model: LogisticModel, dataset: Dataset,
              options: ScreenOptions, mol) -> None:
    counts = basic_counts(mol)
    mw = molecular_weight(mol)
    record.molecular_weight = mw
    record.rule_of_three = rule_of_three(counts, mw)
    record.fl_property = fl_property(counts)
    record.gdb17 = gdb17_criterion(counts)

    features = descriptor_vector(mol, model.feature_names, schema_id="model")
    raw = np.array(features.as_list(list(model.feature_names)))
    logit = float(model.logit(raw))
    record.eq4_logit = logit
    record.eq4_probability = float(sigmoid(logit))
    record.odorous = record.eq4_probability >= options.threshold

    if record.odorous:
        record.suggested_labels = suggest_labels(mol, dataset, k=options.k_labels)

    if options.pubchem is not None:
        record.pubchem_status = options.pubchem.lookup(record.canonical)
    else:
        record.pubchem_status = UNAVAILABLE


def screen(
    input_smiles: list[str],
    dataset: Dataset,
    model: LogisticModel,
    options: ScreenOptions | None = None,
) -> ScreenReport:
    options = options or ScreenOptions()
    records = [ScreenRecord(index=i, input_smiles=s) for i, s in enumerate(input_smiles)]

    # Serial stages: parse, sanitize, canonicalize, dedupe (order-dependent).
    molecules: dict[int, object] = {}
    first_seen: dict[str, int] = {}
    for record in records:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            try:
                mol = prepare(parse_smiles(record.input_smiles))
            except SmilesError as err:
                record.parse_error = str(err)
                record.sanitize_valid = False
                record.sanitize_failures = ["parse_error"]
                continue
            report = sanitize(mol)
            record.sanitize_valid = report.valid
            if not report.valid:
                record.sanitize_failures = [
                    f"{check}@{locus[0]}{'' if locus[1] is None else locus[1]}: {msg}"
                    for check, locus, msg in report.failures
                ]
                continue
            record.canonical = canonicalize(mol)
        if record.canonical in first_seen:
            record.duplicate_of = first_seen[record.canonical]
            continue
        first_seen[record.canonical] = record.index
        record.novel = record.canonical not in dataset.canonical_set
        molecules[record.index] = mol

    # Independent per-molecule stages; parallel when asked.
    active = [r for r in records if r.index in molecules]
    if options.threads > 1 and len(active) > 1:
        with ThreadPoolExecutor(max_workers=options.threads) as pool:
            list(
                pool.map(
                    lambda r: _evaluate(r, model, dataset, options, molecules[r.index]),
                    active,
                )
            )
    else:
        for record in active:
            _evaluate(record, model, dataset, options, molecules[record.index])

    return ScreenReport(
        records=records, aggregates=_aggregate(records), seed=options.seed
    )


def _aggregate(records: list[ScreenRecord]) -> dict:
    n_input = len(records)
    failed = [r for r in records if not r.sanitize_valid]
    unique = [r for r in records if r.canonical and r.duplicate_of is None]
    novel = [r for r in unique if r.novel]

    def pct(group, attr) -> float | None:
        if not group:
            return None
        return 100.0 * sum(1 for r in group if getattr(r, attr)) / len(group)

    def criteria_pct(group) -> dict:
        return {
            "rule_of_three": pct(group, "rule_of_three"),
            "fl_property": pct(group, "fl_property"),
            "gdb17": pct(group, "gdb17"),
            "logistic": pct(group, "odorous"),
        }

    return {
        "n_input": n_input,
        "n_sanitize_failed": len(failed),
        "n_valid": n_input - len(failed),
        "n_unique": len(unique),
        "n_novel": len(novel),
        "criteria_pct_of_unique": criteria_pct(unique),
        "criteria_pct_of_novel": criteria_pct(novel),
    }
