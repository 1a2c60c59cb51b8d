"""Acceptance criteria, one test per criterion, each printing PASS on success.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
lines.  The two dataset-dependent criteria cannot run against the public
curated dataset in this offline environment; per their stated fallback they
are replaced by the property suite (criteria 2-5) plus a protocol run on the
bundled reference set, reported but not held to the published tolerances.
"""

import json
import math
import random
import subprocess
import sys
import time
import warnings
from pathlib import Path

import numpy as np
import pytest

from fragscreen.descriptors import EQ4_FEATURES, descriptor_vector, morgan_fingerprint
from fragscreen.genmetrics import (
    internal_diversity,
    ks_statistic,
    scaffold_similarity,
    snn,
    validity,
)
from fragscreen.likeliness import (
    Scaler,
    eq4_logit,
    linear_shap,
    roc_auc,
    smote,
    standardize,
    train_logistic,
)
from fragscreen.likeliness.logistic import LogisticModel, _loss_grad
from fragscreen.likeliness.workflow import train_workflow
from fragscreen.molgraph import prepare
from fragscreen.pipeline import load_dataset
from fragscreen.smiles import canonicalize, parse_smiles

from oracles import (
    auc_brute,
    central_difference_gradient,
    cosine_counts_brute,
    internal_diversity_brute,
    ks_brute,
    shapley_two_feature,
    snn_brute,
    tanimoto_sets,
)

ROOT = Path(__file__).parents[1]


def announce(name: str) -> None:
    print(f"\nACCEPTANCE {name}: PASS")


def prepared(smiles):
    return prepare(parse_smiles(smiles))


def test_canonicalization_invariance(corpus):
    """1,000 molecules x 100 random permutations, identical canonical SMILES,
    under 60 s."""
    assert len(corpus) == 1000
    rng = random.Random(12345)
    start = time.monotonic()
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        for smiles in corpus:
            mol = prepared(smiles)
            base = canonicalize(mol)
            order = list(range(mol.n_atoms))
            for _ in range(100):
                rng.shuffle(order)
                assert canonicalize(mol.permuted(order)) == base, smiles
    elapsed = time.monotonic() - start
    assert elapsed < 60.0, f"took {elapsed:.1f}s"
    announce(f"canonicalization-invariance ({elapsed:.1f}s for 100,000 canonicalizations)")


def test_oracle_equivalence(corpus):
    """diversity/snn/scaff/KS/AUC match brute force on <=10-element instances."""
    rng = random.Random(777)
    pool = corpus[:60]

    for _ in range(15):
        mols = [prepared(s) for s in rng.sample(pool, rng.randint(2, 10))]
        bit_sets = [set(morgan_fingerprint(m).bits()) for m in mols]
        assert internal_diversity(mols) == pytest.approx(
            internal_diversity_brute(bit_sets), abs=1e-12
        )

    for _ in range(15):
        gen = [prepared(s) for s in rng.sample(pool, rng.randint(1, 10))]
        ref = [prepared(s) for s in rng.sample(pool, rng.randint(1, 10))]
        gen_sets = [set(morgan_fingerprint(m).bits()) for m in gen]
        ref_sets = [set(morgan_fingerprint(m).bits()) for m in ref]
        assert snn(gen, ref) == pytest.approx(snn_brute(gen_sets, ref_sets), abs=1e-12)

    from fragscreen.genmetrics import scaffold_key

    for _ in range(10):
        gen = [prepared(s) for s in rng.sample(pool, rng.randint(1, 10))]
        ref = [prepared(s) for s in rng.sample(pool, rng.randint(1, 10))]
        gen_counts: dict[str, int] = {}
        ref_counts: dict[str, int] = {}
        for m in gen:
            gen_counts[scaffold_key(m)] = gen_counts.get(scaffold_key(m), 0) + 1
        for m in ref:
            ref_counts[scaffold_key(m)] = ref_counts.get(scaffold_key(m), 0) + 1
        assert scaffold_similarity(gen, ref) == pytest.approx(
            cosine_counts_brute(gen_counts, ref_counts), abs=1e-12
        )

    for _ in range(30):
        a = [rng.gauss(0, 1) for _ in range(rng.randint(1, 10))]
        b = [rng.gauss(0.3, 1.5) for _ in range(rng.randint(1, 10))]
        assert ks_statistic(a, b) == pytest.approx(ks_brute(a, b), abs=1e-9)

    for _ in range(30):
        n = rng.randint(4, 10)
        scores = [rng.choice([0.1, 0.3, 0.5, 0.7, 0.9]) for _ in range(n)]
        labels = [rng.randint(0, 1) for _ in range(n)]
        if len(set(labels)) < 2:
            continue
        assert roc_auc(scores, labels) == pytest.approx(
            auc_brute(scores, labels), abs=1e-9
        )

    announce("oracle-equivalence (diversity, snn, scaff, ks, auc)")


def test_eq4_fidelity():
    """Published coefficients reproduce hand-computed logits/probabilities to
    1e-9; decisions invariant under monotone logit transforms on 1e4 points."""
    cases = [
        (np.zeros(5), -3.6592, 0.025106535674198762),
        (np.array([1.0, 0, 0, 0, 0]), 3.4179, 0.9682592952590684),
        (np.array([0, 1.0, 0, 0, 0]), -9.9403, 4.819052217177414e-05),
    ]
    for x, expected_logit, expected_p in cases:
        logit = eq4_logit(x)
        assert logit == pytest.approx(expected_logit, abs=1e-9)
        assert 1.0 / (1.0 + math.exp(-logit)) == pytest.approx(expected_p, abs=1e-9)

    rng = np.random.default_rng(31337)
    transforms = [
        lambda z: 2.5 * z - 0.1,
        math.tanh,
        lambda z: z**3,
        lambda z: 1 - math.exp(-z),
    ]
    for _ in range(10_000):
        x = rng.normal(size=5)
        logit = eq4_logit(x)
        decision = logit >= 0.0
        f = transforms[int(rng.integers(0, len(transforms)))]
        assert (f(logit) >= f(0.0)) == decision

    announce("eq4-fidelity (3 hand cases at 1e-9; 10,000 monotone-transform points)")


def test_shap_local_accuracy():
    """base + contributions == logit within 1e-9 on 1,000 inputs; 2-feature
    contributions equal the 2-permutation Shapley enumeration."""
    rng = np.random.default_rng(2024)
    scaler = Scaler(means=np.zeros(4), stds=np.ones(4))
    model = LogisticModel(
        0.25,
        np.array([1.0, -2.5, 0.3, 4.0]),
        ("a", "b", "c", "d"),
        scaler,
        train_means=rng.normal(size=4),
    )
    for _ in range(1000):
        x = rng.normal(size=4)
        explanation = linear_shap(model, x)
        assert explanation.total() == pytest.approx(
            explanation.prediction_logit, abs=1e-9
        )

    scaler2 = Scaler(means=np.zeros(2), stds=np.ones(2))
    model2 = LogisticModel(
        0.5, np.array([3.0, -1.0]), ("a", "b"), scaler2,
        train_means=np.array([0.4, -0.6]),
    )
    for _ in range(200):
        x = rng.normal(size=2)
        ours = linear_shap(model2, x)
        oracle = shapley_two_feature(0.5, [3.0, -1.0], [0.4, -0.6], x)
        # Exact up to the oracle's own float rounding: the enumeration
        # computes v(S+i)-v(S) differences, the model the closed form.
        assert ours.contributions["a"] == pytest.approx(oracle[0], rel=1e-12, abs=1e-12)
        assert ours.contributions["b"] == pytest.approx(oracle[1], rel=1e-12, abs=1e-12)

    announce("shap-local-accuracy (1,000 points at 1e-9; exact 2-feature Shapley)")


def test_trainer_correctness():
    """Gradient check < 1e-5 relative; separable accuracy 1.0; SMOTE exactly
    balanced with synthetics on their generating segments."""
    rng = np.random.default_rng(99)
    x = rng.normal(size=(60, 3))
    y = (rng.uniform(size=60) < 0.5).astype(float)
    x1 = np.column_stack([x, np.ones(60)])
    theta = rng.normal(size=4)
    _, analytic = _loss_grad(theta, x1, y, 0.05)
    numeric = central_difference_gradient(
        lambda t: _loss_grad(t, x1, y, 0.05)[0], theta
    )
    rel = np.abs(analytic - numeric) / np.maximum(np.abs(numeric), 1e-12)
    assert rel.max() < 1e-5

    xs = np.array([[-2.0]] * 30 + [[2.0]] * 30)
    ys = np.array([0] * 30 + [1] * 30)
    x_std, scaler = standardize(xs)
    model = train_logistic(x_std, ys, ["x"], scaler)
    assert ((model.predict_proba(xs) >= 0.5).astype(int) == ys).all()

    x_im = rng.normal(size=(120, 4))
    y_im = np.array([0] * 100 + [1] * 20)
    x_balanced, y_balanced = smote(x_im, y_im, k=5, seed=4)
    assert (y_balanced == 0).sum() == (y_balanced == 1).sum() == 100
    minority = x_im[y_im == 1]
    deltas = minority[:, None, :] - minority[None, :, :]
    dist = np.sqrt((deltas**2).sum(axis=2))
    np.fill_diagonal(dist, np.inf)
    neighbor_ids = np.argsort(dist, axis=1, kind="stable")[:, :5]
    for row in x_balanced[len(x_im):]:
        on_segment = False
        for b in range(len(minority)):
            for p in neighbor_ids[b]:
                a, c = minority[b], minority[p]
                span = c - a
                denom = float(span @ span)
                if denom < 1e-12:
                    continue
                u = float((row - a) @ span) / denom
                if -1e-9 <= u <= 1 + 1e-9 and np.allclose(a + u * span, row, atol=1e-9):
                    on_segment = True
                    break
            if on_segment:
                break
        assert on_segment

    announce("trainer-correctness (gradient 1e-5; separable acc 1.0; SMOTE segments)")


def test_table4_protocol_on_bundled_data(dataset_path):
    """Dataset-dependent criterion: the public curated dataset cannot be
    fetched here, so per the stated fallback this runs the documented
    protocol on the bundled reference set and reports the scores; the
    property suite above is the binding check."""
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        dataset = load_dataset(dataset_path)
        from fragscreen.descriptors import DEFAULT_SCHEMA

        rows, labels = [], []
        for entry in dataset.entries:
            fv = descriptor_vector(entry.molecule, DEFAULT_SCHEMA)
            rows.append([fv.values[n] for n in DEFAULT_SCHEMA])
            labels.append(1 if entry.odorous else 0)
        result = train_workflow(
            np.array(rows), list(DEFAULT_SCHEMA), np.array(labels), seed=0
        )
    m = result.metrics
    assert 0.5 <= m.roc_auc <= 1.0
    announce(
        "table4-protocol [dataset-dependent criterion replaced by property "
        f"suite; bundled-set run: AUC {m.roc_auc:.3f}, F1 {m.f1:.3f}, "
        f"recall {m.recall:.3f}, precision {m.precision:.3f}]"
    )


def test_top5_shap_protocol_on_bundled_data(dataset_path):
    """Dataset-dependent criterion: with the curated dataset unavailable the
    top-5 set cannot be compared to the published one; this verifies the
    selection mechanics (ranking by mean |SHAP|, size 5, subset of inputs)
    on the bundled reference set."""
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        dataset = load_dataset(dataset_path)
        from fragscreen.descriptors import DEFAULT_SCHEMA

        rows, labels = [], []
        for entry in dataset.entries:
            fv = descriptor_vector(entry.molecule, DEFAULT_SCHEMA)
            rows.append([fv.values[n] for n in DEFAULT_SCHEMA])
            labels.append(1 if entry.odorous else 0)
        result = train_workflow(
            np.array(rows), list(DEFAULT_SCHEMA), np.array(labels), seed=0
        )
    assert len(result.selected_features) == 5
    assert set(result.selected_features) <= set(DEFAULT_SCHEMA)
    announce(
        "top5-shap-protocol [dataset-dependent criterion replaced; bundled-set "
        f"selection: {', '.join(sorted(result.selected_features))}]"
    )


def test_benchmark_sanity_cli(tmp_path, corpus):
    """generated == training => validity 1, novelty 0, SNN 1, KS 0, in a
    single CLI invocation under 10 s on 500 molecules."""
    molecules = corpus[:500]
    smi = tmp_path / "set500.smi"
    smi.write_text("\n".join(molecules) + "\n")

    start = time.monotonic()
    result = subprocess.run(
        [sys.executable, "-m", "fragscreen", "benchmark",
         "--generated", str(smi), "--reference", str(smi)],
        capture_output=True,
        text=True,
        cwd=str(ROOT),
        env={"PYTHONPATH": str(ROOT / "src"), "PATH": "/usr/bin:/bin"},
    )
    elapsed = time.monotonic() - start
    assert result.returncode == 0, result.stderr
    payload = json.loads(result.stdout)
    assert payload["metrics"]["validity"] == 1.0
    assert payload["metrics"]["novelty"] == 0.0
    assert payload["metrics"]["snn"] == pytest.approx(1.0, abs=1e-12)
    assert all(entry["d"] == 0.0 for entry in payload["ks"].values())
    assert elapsed < 10.0, f"took {elapsed:.1f}s"
    announce(f"benchmark-sanity ({elapsed:.1f}s CLI round trip on 500 molecules)")


def test_pipeline_determinism(tmp_path, dataset_path, generated_path):
    """Two screens with identical inputs and a warm cache: byte-identical
    JSON and zero network calls on the second run."""
    from importlib import resources

    from fragscreen.likeliness import load_model
    from fragscreen.pipeline import PubChemClient, ScreenOptions, screen
    from fragscreen.pipeline import emit_screen_report, read_smiles_lines

    lines = read_smiles_lines(generated_path)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        dataset = load_dataset(dataset_path)
        model = load_model(
            str(resources.files("fragscreen.data").joinpath("eq4_model.txt"))
        )

        calls = {"n": 0}

        def transport(url):
            calls["n"] += 1
            return 404, ""

        cache_dir = tmp_path / "cache"
        payloads = []
        for run in range(2):
            client = PubChemClient(
                cache_dir=str(cache_dir), transport=transport, sleep=lambda s: None
            )
            before = calls["n"]
            report = screen(
                lines, dataset, model,
                ScreenOptions(seed=11, pubchem=client),
            )
            outdir = tmp_path / f"run{run}"
            emit_screen_report(report, str(outdir))
            payloads.append((outdir / "screen_report.json").read_bytes())
            if run == 1:
                assert calls["n"] == before, "warm cache must not touch the network"

    assert payloads[0] == payloads[1], "reports must be byte-identical"
    announce("pipeline-determinism (byte-identical JSON; zero calls on warm cache)")
