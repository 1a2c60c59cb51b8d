"""CLI surface tests: every subcommand invokable on its own."""

import json

import pytest

from fragscreen.pipeline.cli import main


def run_cli(args, capsys):
    code = main(args)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestParseCommand:
    def test_single_smiles(self, capsys):
        code, out, _ = run_cli(["parse", "--smiles", "CCO"], capsys)
        assert code == 0
        assert "3 atoms" in out

    def test_json_graph(self, capsys):
        code, out, _ = run_cli(["parse", "--smiles", "c1ccccc1", "--json"], capsys)
        payload = json.loads(out)
        assert len(payload["atoms"]) == 6
        assert all(a["aromatic"] for a in payload["atoms"])
        assert all(a["hybridization"] == "sp2" for a in payload["atoms"])
        assert payload["atoms"][0]["atomic_number"] == 6

    def test_error_reported(self, capsys):
        code, out, _ = run_cli(["parse", "--smiles", "C1CC"], capsys)
        assert code == 1
        assert "ERROR" in out


class TestWriteCommand:
    def test_round_trip_via_json(self, capsys, tmp_path):
        code, out, _ = run_cli(["parse", "--smiles", "CC(=O)O", "--json"], capsys)
        graph_file = tmp_path / "graphs.jsonl"
        graph_file.write_text(out)
        code, out, _ = run_cli(["write", "--input", str(graph_file)], capsys)
        assert code == 0
        from fragscreen import canonical_smiles

        assert canonical_smiles(out.strip()) == canonical_smiles("CC(=O)O")


class TestCanonicalizeCommand:
    def test_equivalent_inputs_converge(self, capsys, tmp_path):
        smi = tmp_path / "in.smi"
        smi.write_text("CCO\nOCC\nC(O)C\n")
        code, out, _ = run_cli(["canonicalize", "--input", str(smi)], capsys)
        lines = out.strip().splitlines()
        assert code == 0
        assert len(set(lines)) == 1

    def test_error_to_stderr(self, capsys):
        code, out, err = run_cli(["canonicalize", "--smiles", "C1CC"], capsys)
        assert code == 1
        assert "ERROR" in err


class TestSanitizeCommand:
    def test_valid_and_invalid(self, capsys, tmp_path):
        smi = tmp_path / "in.smi"
        smi.write_text("CCO\nCC(C)(C)(C)C\n")
        code, out, _ = run_cli(["sanitize", "--input", str(smi)], capsys)
        assert code == 1
        lines = out.strip().splitlines()
        assert lines[0].endswith("valid")
        assert "invalid_valence" in lines[1]


class TestDescriptorsCommand:
    def test_eq4_schema_csv(self, capsys):
        code, out, _ = run_cli(["descriptors", "--smiles", "CCO"], capsys)
        header, row = out.strip().splitlines()
        assert header.split(",")[1:] == [
            "logp", "molecular_weight", "slogp_vsa3", "fraction_sp2", "fcfp4_count",
        ]
        assert float(row.split(",")[2]) == pytest.approx(46.069, abs=0.01)


class TestCriteriaCommand:
    def test_booleans(self, capsys):
        code, out, _ = run_cli(["criteria", "--smiles", "CCO"], capsys)
        row = out.strip().splitlines()[1].split(",")
        assert row[1:] == ["True", "True", "True"]


class TestTrainScoreShap:
    def test_full_training_and_scoring(self, capsys, tmp_path, dataset_path):
        model_path = tmp_path / "model.txt"
        outdir = tmp_path / "artifacts"
        code, out, _ = run_cli(
            ["train", "--dataset", str(dataset_path), "--out", str(model_path),
             "--outdir", str(outdir), "--seed", "7"],
            capsys,
        )
        assert code == 0
        assert model_path.exists()
        assert (outdir / "metrics.json").exists()
        assert (outdir / "roc_curve.csv").exists()
        assert (outdir / "roc.svg").exists()
        assert (outdir / "shap_summary.csv").exists()
        assert "AUC" in out

        code, out, _ = run_cli(
            ["score", "--model", str(model_path), "--smiles", "CCO"], capsys
        )
        assert code == 0
        assert out.splitlines()[0].startswith("smiles,logit")

        code, out, _ = run_cli(
            ["shap", "--model", str(model_path), "--smiles", "CCO"], capsys
        )
        payload = json.loads(out)
        assert payload["base_value"] + sum(
            payload["contributions"].values()
        ) == pytest.approx(payload["logit"], abs=1e-9)

    def test_eq4_scaler_mode(self, capsys, tmp_path, dataset_path):
        model_path = tmp_path / "eq4.txt"
        code, out, _ = run_cli(
            ["train", "--dataset", str(dataset_path), "--mode", "eq4-scaler",
             "--out", str(model_path)],
            capsys,
        )
        assert code == 0
        from fragscreen.likeliness import load_model

        model = load_model(model_path)
        assert model.intercept == -3.6592


class TestScreenCommand:
    def test_screen_end_to_end(self, capsys, tmp_path, dataset_path, generated_path):
        outdir = tmp_path / "screen"
        from importlib import resources

        model = str(resources.files("fragscreen.data").joinpath("eq4_model.txt"))
        code, out, _ = run_cli(
            ["screen", "--input", str(generated_path), "--dataset", str(dataset_path),
             "--model", model, "--outdir", str(outdir), "--offline",
             "--cache-dir", str(tmp_path / "cache")],
            capsys,
        )
        assert code == 0
        report = json.loads((outdir / "screen_report.json").read_text())
        assert report["aggregates"]["n_input"] == 100

    def test_byte_identical_reruns(self, capsys, tmp_path, dataset_path, generated_path):
        from importlib import resources

        model = str(resources.files("fragscreen.data").joinpath("eq4_model.txt"))
        outputs = []
        for name in ("a", "b"):
            outdir = tmp_path / name
            run_cli(
                ["screen", "--input", str(generated_path), "--dataset",
                 str(dataset_path), "--model", model, "--outdir", str(outdir),
                 "--offline", "--seed", "3"],
                capsys,
            )
            outputs.append((outdir / "screen_report.json").read_bytes())
        assert outputs[0] == outputs[1]


class TestBenchmarkCommand:
    def test_self_benchmark(self, capsys, tmp_path, dataset_path):
        import csv as csv_mod

        smi = tmp_path / "gen.smi"
        with open(dataset_path) as fh:
            rows = [r["smiles"] for r in csv_mod.DictReader(fh)][:30]
        smi.write_text("\n".join(rows) + "\n")
        outdir = tmp_path / "bench"
        code, out, _ = run_cli(
            ["benchmark", "--generated", str(smi), "--reference", str(dataset_path),
             "--outdir", str(outdir)],
            capsys,
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["metrics"]["validity"] == 1.0
        assert payload["metrics"]["novelty"] == 0.0
        assert (outdir / "benchmark.json").exists()
        assert (outdir / "ks_hist_logp.csv").exists()


class TestPubchemCommand:
    def test_offline(self, capsys):
        code, out, _ = run_cli(
            ["pubchem", "--smiles", "CCO", "--offline"], capsys
        )
        assert code == 0
        assert out.strip().endswith("unavailable")


class TestConfigFile:
    def test_config_supplies_defaults_flags_override(self, capsys, tmp_path):
        cfg = tmp_path / "cfg.ini"
        cfg.write_text("# settings\nseed = 9\noffline = true\n")
        from fragscreen.pipeline.cli import build_parser, _settings

        args = build_parser().parse_args(
            ["pubchem", "--smiles", "C", "--config", str(cfg)]
        )
        settings = _settings(args)
        assert settings["seed"] == 9
        assert settings["offline"] is True

        args = build_parser().parse_args(
            ["pubchem", "--smiles", "C", "--config", str(cfg), "--seed", "4"]
        )
        assert _settings(args)["seed"] == 4
