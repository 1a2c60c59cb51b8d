"""Command-line interface.

Every pipeline stage is independently invokable: parse, write, canonicalize,
sanitize, descriptors, criteria, train, score, shap, screen, benchmark,
pubchem.  Global flags (seed, threads, offline, cache-dir) may also come from
a key=value config file; explicit flags win.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import warnings

import numpy as np

from .. import __version__
from ..descriptors import (
    DEFAULT_SCHEMA,
    EQ4_FEATURES,
    descriptor_vector,
    basic_counts,
    molecular_weight,
)
from ..elements import atomic_numbers
from ..genmetrics import benchmark as run_benchmark
from ..genmetrics import validity
from ..likeliness import (
    eq4_model,
    eval_metrics,
    fl_property,
    gdb17_criterion,
    linear_shap,
    load_model,
    rule_of_three,
    save_model,
    sigmoid,
    standardize,
)
from ..likeliness.workflow import train_workflow
from ..mol import Atom, Bond, Molecule
from ..molgraph import hybridization, prepare, sanitize
from ..smiles import SmilesError, canonicalize, parse_smiles, write_smiles
from .config import load_config
from .dataset import DatasetConfig, load_dataset
from .pubchem import PubChemClient
from .report import emit_benchmark_report, emit_screen_report, emit_train_artifacts
from .screen import ScreenOptions, read_smiles_lines, screen


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--seed", type=int, default=None, help="random seed")
    parser.add_argument("--threads", type=int, default=None, help="worker threads")
    parser.add_argument("--offline", action="store_true", default=None,
                        help="never touch the network")
    parser.add_argument("--cache-dir", default=None, help="lookup cache directory")
    parser.add_argument("--config", default=None, help="key=value config file")


def _settings(args) -> dict:
    settings = {"seed": 0, "threads": 1, "offline": False, "cache_dir": None}
    if args.config:
        cfg = load_config(args.config)
        if "seed" in cfg:
            settings["seed"] = int(cfg["seed"])
        if "threads" in cfg:
            settings["threads"] = int(cfg["threads"])
        if "offline" in cfg:
            settings["offline"] = cfg["offline"].lower() in ("1", "true", "yes")
        if "cache_dir" in cfg:
            settings["cache_dir"] = cfg["cache_dir"]
    if args.seed is not None:
        settings["seed"] = args.seed
    if args.threads is not None:
        settings["threads"] = args.threads
    if args.offline:
        settings["offline"] = True
    if args.cache_dir is not None:
        settings["cache_dir"] = args.cache_dir
    return settings


def _dataset_config(args) -> DatasetConfig:
    return DatasetConfig(
        smiles_column=args.smiles_column,
        label_column=args.label_column,
        odorous_column=args.odorous_column,
        one_hot_labels=args.one_hot_labels,
    )


def _add_dataset_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--dataset", required=True, help="dataset CSV path")
    parser.add_argument("--smiles-column", default="smiles")
    parser.add_argument("--label-column", default="labels")
    parser.add_argument("--odorous-column", default=None)
    parser.add_argument("--one-hot-labels", action="store_true")


def _iter_input(args) -> list[str]:
    if args.smiles:
        return [args.smiles]
    return read_smiles_lines(args.input)


def _mol_to_json(mol: Molecule, text: str) -> dict:
    numbers = atomic_numbers()
    atoms = []
    for i, atom in enumerate(mol.atoms):
        atoms.append(
            {
                "element": atom.element,
                "atomic_number": numbers.get(atom.element, 0),
                "charge": atom.formal_charge,
                "hydrogens": atom.total_h,
                "degree": mol.heavy_degree(i),
                "valence": sum(max(b.order, 1) for _, b in mol.neighbors(i))
                + atom.total_h,
                "aromatic": atom.aromatic,
                "in_ring": atom.in_ring,
                "hybridization": hybridization(mol, i),
                "isotope": atom.isotope,
            }
        )
    bonds = [
        {
            "a": b.a,
            "b": b.b,
            "order": b.order,
            "aromatic": b.aromatic,
            "in_ring": b.in_ring,
        }
        for b in mol.bonds
    ]
    return {"smiles": text, "atoms": atoms, "bonds": bonds}


def _json_to_mol(payload: dict) -> Molecule:
    atoms = []
    for spec in payload["atoms"]:
        atoms.append(
            Atom(
                element=spec["element"],
                formal_charge=spec.get("charge", 0),
                explicit_h=spec.get("explicit_h", 0),
                bracket=bool(spec.get("bracket", spec.get("explicit_h", 0) > 0)),
                isotope=spec.get("isotope"),
            )
        )
    bonds = [
        Bond(
            a=spec["a"],
            b=spec["b"],
            order=spec.get("order", 1),
            aromatic=bool(spec.get("aromatic", False)),
        )
        for spec in payload["bonds"]
    ]
    for bond in bonds:
        if bond.aromatic:
            bond.order = 0
    mol = Molecule(atoms=atoms, bonds=bonds)
    for atom in mol.atoms:
        if bonds and atom.aromatic:
            atom.parsed_aromatic = True
    return mol


def cmd_parse(args) -> int:
    status = 0
    for text in _iter_input(args):
        try:
            with warnings.catch_warnings():
                warnings.simplefilter("ignore")
                mol = prepare(parse_smiles(text))
        except SmilesError as err:
            if args.json:
                print(json.dumps({"smiles": text, "error": str(err)}, sort_keys=True))
            else:
                print(f"ERROR\t{text}\t{err}")
            status = 1
            continue
        if args.json:
            print(json.dumps(_mol_to_json(mol, text), sort_keys=True))
        else:
            print(f"OK\t{text}\t{mol.n_atoms} atoms\t{mol.n_bonds} bonds")
    return status


def cmd_write(args) -> int:
    source = open(args.input) if args.input else sys.stdin
    status = 0
    try:
        for line in source:
            line = line.strip()
            if not line:
                continue
            payload = json.loads(line)
            try:
                mol = prepare(_json_to_mol(payload))
                print(write_smiles(mol))
            except (ValueError, KeyError, IndexError) as err:
                print(f"ERROR\t{err}")
                status = 1
    finally:
        if args.input:
            source.close()
    return status


def cmd_canonicalize(args) -> int:
    status = 0
    for text in _iter_input(args):
        try:
            with warnings.catch_warnings():
                warnings.simplefilter("ignore")
                print(canonicalize(prepare(parse_smiles(text))))
        except SmilesError as err:
            print(f"ERROR\t{text}\t{err}", file=sys.stderr)
            status = 1
    return status


def cmd_sanitize(args) -> int:
    status = 0
    for text in _iter_input(args):
        try:
            with warnings.catch_warnings():
                warnings.simplefilter("ignore")
                mol = prepare(parse_smiles(text))
        except SmilesError as err:
            print(f"{text}\tparse_error\t{err}")
            status = 1
            continue
        report = sanitize(mol)
        if report.valid:
            print(f"{text}\tvalid")
        else:
            print(f"{text}\tinvalid\t{report}")
            status = 1
    return status


def cmd_descriptors(args) -> int:
    schema = EQ4_FEATURES if args.schema == "eq4" else DEFAULT_SCHEMA
    writer = csv.writer(sys.stdout)
    writer.writerow(["smiles", *schema])
    for text in _iter_input(args):
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            mol = prepare(parse_smiles(text))
            fv = descriptor_vector(mol, schema)
        writer.writerow([text, *[repr(fv.values[name]) for name in schema]])
    return 0


def cmd_criteria(args) -> int:
    writer = csv.writer(sys.stdout)
    writer.writerow(["smiles", "rule_of_three", "fl_property", "gdb17"])
    for text in _iter_input(args):
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            mol = prepare(parse_smiles(text))
            counts = basic_counts(mol)
            mw = molecular_weight(mol)
        writer.writerow(
            [text, rule_of_three(counts, mw), fl_property(counts), gdb17_criterion(counts)]
        )
    return 0


def _dataset_features(dataset, schema) -> tuple[np.ndarray, np.ndarray]:
    rows = []
    labels = []
    for entry in dataset.entries:
        fv = descriptor_vector(entry.molecule, schema)
        rows.append([fv.values[name] for name in schema])
        labels.append(1 if entry.odorous else 0)
    return np.array(rows), np.array(labels)


def cmd_train(args, settings) -> int:
    dataset = load_dataset(args.dataset, _dataset_config(args))
    schema = EQ4_FEATURES if args.schema == "eq4" else DEFAULT_SCHEMA
    matrix, labels = _dataset_features(dataset, schema)

    if args.mode == "eq4-scaler":
        # Keep the published coefficients; fit only the standardization.
        eq4_matrix, _ = (matrix, labels) if schema == EQ4_FEATURES else _dataset_features(
            dataset, EQ4_FEATURES
        )
        x_std, scaler = standardize(eq4_matrix)
        model = eq4_model(scaler, train_means=x_std.mean(axis=0))
        save_model(model, args.out)
        print(f"wrote eq4 model with dataset scaler to {args.out}")
        if args.outdir:
            probs = sigmoid(model.logit_standardized(x_std))
            metrics = eval_metrics(probs, labels)
            from ..likeliness import roc_curve

            emit_train_artifacts(
                model, metrics, roc_curve(probs, labels), x_std, args.outdir
            )
            print(f"eq4-with-scaler on dataset: AUC {metrics.roc_auc:.4f}")
        return 0

    result = train_workflow(
        matrix,
        list(schema),
        labels,
        seed=settings["seed"],
        top_n=args.top_features,
        l2=args.l2,
    )
    save_model(result.model, args.out)
    print(f"wrote model to {args.out}")
    print(f"selected features: {', '.join(result.selected_features)}")
    print(
        "test metrics: AUC {m.roc_auc:.4f} recall {m.recall:.4f} precision "
        "{m.precision:.4f} accuracy {m.accuracy:.4f} F1 {m.f1:.4f}".format(
            m=result.metrics
        )
    )
    if args.outdir:
        emit_train_artifacts(
            result.model,
            result.metrics,
            result.roc_points,
            result.test_matrix_std,
            args.outdir,
        )
    return 0


def cmd_score(args) -> int:
    model = load_model(args.model)
    writer = csv.writer(sys.stdout)
    writer.writerow(["smiles", "logit", "probability", "odorous"])
    for text in _iter_input(args):
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            mol = prepare(parse_smiles(text))
            fv = descriptor_vector(mol, model.feature_names)
        raw = np.array(fv.as_list(list(model.feature_names)))
        logit = float(model.logit(raw))
        prob = float(sigmoid(logit))
        writer.writerow([text, repr(logit), repr(prob), prob >= 0.5])
    return 0


def cmd_shap(args) -> int:
    model = load_model(args.model)
    for text in _iter_input(args):
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            mol = prepare(parse_smiles(text))
            fv = descriptor_vector(mol, model.feature_names)
        x_std = model.scaler.transform(np.array(fv.as_list(list(model.feature_names))))
        explanation = linear_shap(model, x_std)
        print(
            json.dumps(
                {
                    "smiles": text,
                    "base_value": explanation.base_value,
                    "contributions": explanation.contributions,
                    "logit": explanation.prediction_logit,
                },
                sort_keys=True,
            )
        )
    return 0


def cmd_screen(args, settings) -> int:
    dataset = load_dataset(args.dataset, _dataset_config(args))
    model = load_model(args.model)
    client = PubChemClient(
        cache_dir=settings["cache_dir"], offline=settings["offline"]
    )
    options = ScreenOptions(
        threads=settings["threads"],
        seed=settings["seed"],
        k_labels=args.k_labels,
        pubchem=client,
    )
    report = screen(read_smiles_lines(args.input), dataset, model, options)
    written = emit_screen_report(report, args.outdir)
    agg = report.aggregates
    print(
        "screened {n} inputs: {v} valid, {u} unique, {no} novel".format(
            n=agg["n_input"], v=agg["n_valid"], u=agg["n_unique"], no=agg["n_novel"]
        )
    )
    for path in written:
        print(f"wrote {path}")
    return 0


def cmd_benchmark(args) -> int:
    if args.reference.endswith(".csv"):
        dataset = load_dataset(args.reference, _dataset_config(args))
        training = sorted(dataset.canonical_set)
    else:
        _, training = validity(read_smiles_lines(args.reference))
    generated = read_smiles_lines(args.generated)
    report = run_benchmark(generated, training)

    if args.outdir:
        emit_benchmark_report(report, args.outdir, histograms=report.feature_samples)
        print(f"wrote {args.outdir}/benchmark.json", file=sys.stderr)
    print(json.dumps(report.as_dict(), indent=2, sort_keys=True))
    return 0


def cmd_pubchem(args, settings) -> int:
    client = PubChemClient(
        cache_dir=settings["cache_dir"], offline=settings["offline"]
    )
    for text in _iter_input(args):
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            canonical = canonicalize(prepare(parse_smiles(text)))
        print(f"{text}\t{client.lookup(canonical)}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fragscreen",
        description="screening and benchmarking toolkit for generated fragrance molecules",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input(p):
        group = p.add_mutually_exclusive_group(required=True)
        group.add_argument("--input", help="SMILES file, one per line")
        group.add_argument("--smiles", help="single SMILES string")

    p = sub.add_parser("parse", help="parse SMILES into graphs")
    add_input(p)
    p.add_argument("--json", action="store_true", help="emit JSON graphs")
    _add_common(p)

    p = sub.add_parser("write", help="JSON graphs back to SMILES")
    p.add_argument("--input", help="JSON-lines file (default: stdin)")
    _add_common(p)

    p = sub.add_parser("canonicalize", help="canonical SMILES per input line")
    add_input(p)
    _add_common(p)

    p = sub.add_parser("sanitize", help="chemical plausibility checks")
    add_input(p)
    _add_common(p)

    p = sub.add_parser("descriptors", help="descriptor CSV per molecule")
    add_input(p)
    p.add_argument("--schema", choices=["eq4", "default"], default="eq4")
    _add_common(p)

    p = sub.add_parser("criteria", help="literature odor criteria per molecule")
    add_input(p)
    _add_common(p)

    p = sub.add_parser("train", help="train the likeliness model on a dataset")
    _add_dataset_flags(p)
    p.add_argument("--mode", choices=["full", "eq4-scaler"], default="full")
    p.add_argument("--schema", choices=["eq4", "default"], default="default")
    p.add_argument("--out", required=True, help="model file to write")
    p.add_argument("--outdir", default=None, help="metrics/figure-data directory")
    p.add_argument("--top-features", type=int, default=5)
    p.add_argument("--l2", type=float, default=0.0)
    _add_common(p)

    p = sub.add_parser("score", help="score molecules with a model file")
    add_input(p)
    p.add_argument("--model", required=True)
    _add_common(p)

    p = sub.add_parser("shap", help="per-molecule SHAP contributions")
    add_input(p)
    p.add_argument("--model", required=True)
    _add_common(p)

    p = sub.add_parser("screen", help="full screening pipeline")
    p.add_argument("--input", required=True, help="SMILES file to screen")
    _add_dataset_flags(p)
    p.add_argument("--model", required=True)
    p.add_argument("--outdir", required=True)
    p.add_argument("--k-labels", type=int, default=5)
    _add_common(p)

    p = sub.add_parser("benchmark", help="generation benchmark report")
    p.add_argument("--generated", required=True, help="generated SMILES file")
    p.add_argument("--reference", required=True, help="training CSV or SMILES file")
    p.add_argument("--outdir", default=None)
    p.add_argument("--smiles-column", default="smiles")
    p.add_argument("--label-column", default="labels")
    p.add_argument("--odorous-column", default=None)
    p.add_argument("--one-hot-labels", action="store_true")
    _add_common(p)

    p = sub.add_parser("pubchem", help="PubChem existence lookups")
    add_input(p)
    _add_common(p)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    settings = _settings(args)
    command = args.command
    if command == "parse":
        return cmd_parse(args)
    if command == "write":
        return cmd_write(args)
    if command == "canonicalize":
        return cmd_canonicalize(args)
    if command == "sanitize":
        return cmd_sanitize(args)
    if command == "descriptors":
        return cmd_descriptors(args)
    if command == "criteria":
        return cmd_criteria(args)
    if command == "train":
        return cmd_train(args, settings)
    if command == "score":
        return cmd_score(args)
    if command == "shap":
        return cmd_shap(args)
    if command == "screen":
        return cmd_screen(args, settings)
    if command == "benchmark":
        return cmd_benchmark(args)
    if command == "pubchem":
        return cmd_pubchem(args, settings)
    raise AssertionError(f"unhandled command {command}")


if __name__ == "__main__":
    raise SystemExit(main())
