"""Dataset loading, screening stages, PubChem client, labels, reports."""

import json
import warnings

import numpy as np
import pytest

from fragscreen.descriptors import morgan_fingerprint
from fragscreen.genmetrics import tanimoto
from fragscreen.likeliness import Scaler, eq4_model, load_model
from fragscreen.molgraph import prepare
from fragscreen.pipeline import (
    Dataset,
    DatasetConfig,
    DatasetEntry,
    PubChemClient,
    ScreenOptions,
    emit_screen_report,
    load_dataset,
    read_smiles_lines,
    screen,
    suggest_labels,
)
from fragscreen.pipeline.pubchem import KNOWN, UNAVAILABLE, UNKNOWN
from fragscreen.smiles import canonicalize, parse_smiles


def prepared(smiles):
    return prepare(parse_smiles(smiles))


def shipped_model():
    from importlib import resources

    return load_model(str(resources.files("fragscreen.data").joinpath("eq4_model.txt")))


class TestLoadDataset:
    def test_three_row_csv(self, tmp_path):
        path = tmp_path / "d.csv"
        path.write_text("smiles,labels\nCCO,fruity;sweet\nCCC,\nc1ccccc1,solvent\n")
        ds = load_dataset(path)
        assert len(ds) == 3
        assert ds.entries[0].labels == {"fruity", "sweet"}
        assert ds.entries[0].odorous
        assert not ds.entries[1].odorous

    def test_bad_rows_dropped_and_counted(self, tmp_path):
        path = tmp_path / "d.csv"
        path.write_text("smiles,labels\nnot_a_smiles,x\nCCO,y\nC1CC,z\n")
        ds = load_dataset(path)
        assert len(ds) == 1
        assert ds.dropped == 2

    def test_missing_smiles_column(self, tmp_path):
        path = tmp_path / "d.csv"
        path.write_text("structure,labels\nCCO,x\n")
        with pytest.raises(ValueError, match="missing SMILES column"):
            load_dataset(path)

    def test_empty_file(self, tmp_path):
        path = tmp_path / "d.csv"
        path.write_text("")
        with pytest.raises(ValueError):
            load_dataset(path)

    def test_duplicates_collapse_to_first(self, tmp_path):
        path = tmp_path / "d.csv"
        path.write_text("smiles,labels\nCCO,first\nOCC,second\n")
        ds = load_dataset(path)
        assert len(ds) == 1
        assert ds.duplicates == 1
        assert ds.entries[0].labels == {"first"}

    def test_one_hot_labels(self, tmp_path):
        path = tmp_path / "d.csv"
        path.write_text("smiles,fruity,minty\nCCO,1,0\nCCC,0,0\n")
        ds = load_dataset(path, DatasetConfig(one_hot_labels=True, label_column=None))
        assert ds.entries[0].labels == {"fruity"}
        assert ds.entries[1].labels == frozenset()

    def test_explicit_odorous_column(self, tmp_path):
        path = tmp_path / "d.csv"
        path.write_text("smiles,labels,odor\nCCO,,1\nCCC,fruity,0\n")
        ds = load_dataset(path, DatasetConfig(odorous_column="odor"))
        assert ds.entries[0].odorous
        assert not ds.entries[1].odorous

    def test_example_dataset(self, dataset_path):
        ds = load_dataset(dataset_path)
        assert len(ds) > 150
        assert ds.dropped == 0


class FakeTransport:
    """Scripted PubChem responses; counts calls."""

    def __init__(self, mapping=None, status=200, fail=False):
        self.mapping = mapping or {}
        self.status = status
        self.fail = fail
        self.calls = 0

    def __call__(self, url):
        self.calls += 1
        if self.fail:
            raise OSError("network down")
        import urllib.parse

        smiles = urllib.parse.unquote(url.split("/smiles/")[1].split("/")[0])
        if smiles in self.mapping:
            return 200, self.mapping[smiles]
        return 404, ""


class TestPubChem:
    def test_known_and_unknown(self, tmp_path):
        transport = FakeTransport({"CCO": "702\n"})
        client = PubChemClient(cache_dir=str(tmp_path), transport=transport, sleep=lambda s: None)
        assert client.lookup("CCO") == KNOWN
        assert client.lookup("CCCCCCCCCCCCCCCCCCCC") == UNKNOWN
        assert transport.calls == 2

    def test_offline_mode_no_calls(self, tmp_path):
        transport = FakeTransport()
        client = PubChemClient(
            cache_dir=str(tmp_path), offline=True, transport=transport
        )
        assert client.lookup("CCO") == UNAVAILABLE
        assert transport.calls == 0
        assert client.network_calls == 0

    def test_transport_error_degrades(self, tmp_path):
        client = PubChemClient(
            cache_dir=str(tmp_path), transport=FakeTransport(fail=True),
            sleep=lambda s: None,
        )
        with pytest.warns(UserWarning, match="lookup failed"):
            assert client.lookup("CCO") == UNAVAILABLE

    def test_http_error_degrades(self, tmp_path):
        client = PubChemClient(
            cache_dir=str(tmp_path), transport=FakeTransport(status=500),
            sleep=lambda s: None,
        )
        transport = FakeTransport(mapping={}, status=500)
        transport.mapping = {}
        client.transport = lambda url: (503, "")
        with pytest.warns(UserWarning, match="HTTP 503"):
            assert client.lookup("CCO") == UNAVAILABLE

    def test_warm_cache_zero_calls(self, tmp_path):
        transport = FakeTransport({"CCO": "702\n"})
        client = PubChemClient(cache_dir=str(tmp_path), transport=transport, sleep=lambda s: None)
        client.lookup("CCO")
        client.lookup("CCC")
        assert transport.calls == 2

        transport2 = FakeTransport({"CCO": "702\n"})
        client2 = PubChemClient(cache_dir=str(tmp_path), transport=transport2, sleep=lambda s: None)
        assert client2.lookup("CCO") == KNOWN
        assert client2.lookup("CCC") == UNKNOWN
        assert transport2.calls == 0
        assert client2.network_calls == 0

    def test_unavailable_not_cached(self, tmp_path):
        client = PubChemClient(
            cache_dir=str(tmp_path), transport=FakeTransport(fail=True),
            sleep=lambda s: None,
        )
        with pytest.warns(UserWarning):
            client.lookup("CCO")
        cache_file = tmp_path / "pubchem_cache.tsv"
        assert not cache_file.exists() or "CCO" not in cache_file.read_text()

    def test_rate_limited(self):
        sleeps = []
        clock = iter(float(i) * 0.01 for i in range(100))
        client = PubChemClient(
            transport=FakeTransport({"C": "1\n"}),
            sleep=sleeps.append,
            clock=lambda: next(clock),
        )
        client.lookup("C")
        client.lookup("CC")
        client.lookup("CCC")
        assert len(sleeps) == 2
        assert all(s > 0 for s in sleeps)

    def test_base_url_env_override(self, monkeypatch):
        monkeypatch.setenv("FRAGSCREEN_PUBCHEM_URL", "http://mirror.test/pug/")
        seen = []

        def transport(url):
            seen.append(url)
            return 404, ""

        client = PubChemClient(transport=transport, sleep=lambda s: None)
        client.lookup("CCO")
        assert seen[0].startswith("http://mirror.test/pug/compound")


class TestSuggestLabels:
    def _toy_dataset(self):
        rows = [
            ("CCO", {"fruity", "sweet"}),
            ("CCCO", {"fruity"}),
            ("c1ccccc1", {"aromatic"}),
            ("Cc1ccccc1", {"aromatic", "sweet"}),
            ("CCCCCC=O", {"green"}),
        ]
        entries = []
        for smiles, labels in rows:
            mol = prepared(smiles)
            entries.append(
                DatasetEntry(
                    canonical=canonicalize(mol),
                    molecule=mol,
                    labels=frozenset(labels),
                    odorous=True,
                )
            )
        return Dataset(entries=entries)

    def test_self_match_ranks_own_labels_first(self):
        ds = self._toy_dataset()
        ranked = suggest_labels(prepared("CCO"), ds, k=2)
        top_labels = {label for label, _ in ranked[:2]}
        assert top_labels == {"fruity", "sweet"}

    def test_k_one_returns_nearest_labels(self):
        ds = self._toy_dataset()
        ranked = suggest_labels(prepared("c1ccccc1"), ds, k=1)
        assert {label for label, _ in ranked} == {"aromatic"}

    def test_matches_exhaustive_weighted_tally(self):
        ds = self._toy_dataset()
        query = prepared("CCCCO")
        ranked = suggest_labels(query, ds, k=5)

        query_fp = morgan_fingerprint(query)
        sims = [
            (tanimoto(query_fp, morgan_fingerprint(e.molecule)), i)
            for i, e in enumerate(ds.entries)
        ]
        weights = {}
        for sim, i in sims:
            for label in ds.entries[i].labels:
                weights[label] = weights.get(label, 0.0) + sim
        expected = sorted(weights.items(), key=lambda kv: (-kv[1], kv[0]))
        assert [(l, pytest.approx(w, abs=1e-12)) for l, w in expected] == ranked

    def test_empty_dataset(self):
        with pytest.raises(ValueError):
            suggest_labels(prepared("C"), Dataset(entries=[]))


class TestScreen:
    def test_training_inputs_are_not_novel(self, dataset_path):
        ds = load_dataset(dataset_path)
        model = shipped_model()
        inputs = [e.canonical for e in ds.entries[:20]]
        report = screen(inputs, ds, model, ScreenOptions())
        flags = [r.novel for r in report.records if r.canonical]
        assert flags and not any(flags)

    def test_invalid_line_stops_early(self, dataset_path):
        ds = load_dataset(dataset_path)
        model = shipped_model()
        report = screen(["C1CC"], ds, model, ScreenOptions())
        record = report.records[0]
        assert record.sanitize_valid is False
        assert record.canonical is None
        assert record.eq4_probability is None
        assert record.suggested_labels == []

    def test_stage_ordering_invariants(self, dataset_path, generated_path):
        ds = load_dataset(dataset_path)
        model = shipped_model()
        report = screen(read_smiles_lines(generated_path), ds, model, ScreenOptions())
        for record in report.records:
            if not record.sanitize_valid:
                assert record.eq4_probability is None
            if record.duplicate_of is not None:
                assert record.eq4_probability is None
            if record.odorous is False:
                assert record.suggested_labels == []
            if record.suggested_labels:
                assert record.odorous

    def test_aggregates_match_recount(self, dataset_path, generated_path):
        ds = load_dataset(dataset_path)
        model = shipped_model()
        report = screen(read_smiles_lines(generated_path), ds, model, ScreenOptions())
        unique = [r for r in report.records if r.canonical and r.duplicate_of is None]
        novel = [r for r in unique if r.novel]
        agg = report.aggregates
        assert agg["n_unique"] == len(unique)
        assert agg["n_novel"] == len(novel)
        for group, name in ((unique, "criteria_pct_of_unique"), (novel, "criteria_pct_of_novel")):
            tally = 100.0 * sum(1 for r in group if r.odorous) / len(group)
            assert agg[name]["logistic"] == pytest.approx(tally)
            tally = 100.0 * sum(1 for r in group if r.rule_of_three) / len(group)
            assert agg[name]["rule_of_three"] == pytest.approx(tally)

    def test_duplicates_detected(self, dataset_path):
        ds = load_dataset(dataset_path)
        model = shipped_model()
        report = screen(["CCO", "OCC", "CCC"], ds, model, ScreenOptions())
        assert report.records[1].duplicate_of == 0
        assert report.records[2].duplicate_of is None

    def test_threads_do_not_change_result(self, dataset_path, generated_path):
        ds = load_dataset(dataset_path)
        model = shipped_model()
        lines = read_smiles_lines(generated_path)
        serial = screen(lines, ds, model, ScreenOptions(threads=1))
        parallel = screen(lines, ds, model, ScreenOptions(threads=4))
        assert json.dumps(serial.as_dict(), sort_keys=True) == json.dumps(
            parallel.as_dict(), sort_keys=True
        )

    def test_deterministic_repeat(self, dataset_path, generated_path):
        ds = load_dataset(dataset_path)
        model = shipped_model()
        lines = read_smiles_lines(generated_path)
        a = screen(lines, ds, model, ScreenOptions())
        b = screen(lines, ds, model, ScreenOptions())
        assert json.dumps(a.as_dict(), sort_keys=True) == json.dumps(
            b.as_dict(), sort_keys=True
        )


class TestEmitReport:
    def test_json_round_trip_and_csv_rows(self, tmp_path, dataset_path):
        ds = load_dataset(dataset_path)
        model = shipped_model()
        report = screen(["CCO", "CCCCCC=O", "C1CC"], ds, model, ScreenOptions())
        paths = emit_screen_report(report, str(tmp_path))
        with open(paths[0]) as fh:
            payload = json.load(fh)
        assert payload == report.as_dict()
        with open(paths[1]) as fh:
            rows = fh.read().strip().splitlines()
        assert len(rows) == 1 + len(report.records)
