"""End-to-end tests of the command line."""
import json

import pandas as pd
import pytest

import netblend.main
from netblend.commands.common import OutputSet
from netblend.core.config import get_settings
from netblend.main import EXIT_OK, EXIT_UNEXPECTED, EXIT_USAGE, main
from netblend.models.documents import ModelDocument
from netblend.services.graph_io import load_graph


@pytest.fixture
def ws_target(tmp_path):
    path = tmp_path / "target.edges"
    assert main(["synth", "ws", "-n", "60", "-K", "4", "-p", "0.1", "--seed", "3", "-o", str(path)]) == EXIT_OK
    return path


def fit_args(target, output, seed="7"):
    return [
        "fit", str(target), "--pop", "6", "--gens", "3", "--eval-size", "40",
        "--seed", seed, "--threads", "1", "-o", str(output),
    ]


@pytest.mark.integration
class TestSynthCommand:
    def test_ws_file(self, ws_target):
        g = load_graph(ws_target)
        assert g.node_count == 60
        assert g.edge_count == 120

    def test_ba_and_er(self, tmp_path):
        assert main(["synth", "ba", "-n", "50", "-m", "2", "--seed", "1", "-o", str(tmp_path / "ba")]) == EXIT_OK
        assert main(["synth", "er", "-n", "50", "-p", "0.1", "--seed", "1", "-o", str(tmp_path / "er")]) == EXIT_OK
        assert load_graph(tmp_path / "ba").edge_count == 1 + 2 * 48

    def test_invalid_parameters(self, tmp_path, capsys):
        assert main(["synth", "ws", "-n", "10", "-K", "3", "-p", "0.1", "-o", str(tmp_path / "x")]) == EXIT_USAGE
        assert "error" in capsys.readouterr().err
        assert not (tmp_path / "x").exists()

    def test_missing_seed_is_printed(self, tmp_path, capsys):
        assert main(["synth", "er", "-n", "20", "-p", "0.2", "-o", str(tmp_path / "er")]) == EXIT_OK
        assert "using seed" in capsys.readouterr().err


@pytest.mark.integration
class TestFitCommand:
    def test_writes_model_and_history(self, ws_target, tmp_path):
        model = tmp_path / "model.json"
        assert main(fit_args(ws_target, model)) == EXIT_OK
        document = ModelDocument.load(model)
        assert document.provenance.seed == 7
        assert document.provenance.target_nodes == 60
        history = pd.read_csv(tmp_path / "model.history.csv")
        assert len(history) == 3
        assert history["best_fitness"].is_monotonic_decreasing

    def test_byte_identical_repeat(self, ws_target, tmp_path):
        first, second = tmp_path / "a.json", tmp_path / "b.json"
        assert main(fit_args(ws_target, first)) == EXIT_OK
        assert main(fit_args(ws_target, second)) == EXIT_OK
        assert first.read_bytes() == second.read_bytes()
        assert (tmp_path / "a.history.csv").read_bytes() == (tmp_path / "b.history.csv").read_bytes()

    def test_config_file_and_flag_precedence(self, ws_target, tmp_path):
        config = tmp_path / "run.json"
        config.write_text(json.dumps({"population_size": 4, "generations": 9, "eval_size": 30}))
        model = tmp_path / "model.json"
        args = ["fit", str(ws_target), "--config", str(config), "--gens", "2", "--seed", "1",
                "--threads", "1", "-o", str(model)]
        assert main(args) == EXIT_OK
        document = ModelDocument.load(model)
        assert document.provenance.generations == 2
        assert document.provenance.population_size == 4
        assert document.provenance.eval_size == 30

    def test_unknown_config_key(self, ws_target, tmp_path):
        config = tmp_path / "run.json"
        config.write_text(json.dumps({"populaton_size": 4}))
        model = tmp_path / "model.json"
        assert main(["fit", str(ws_target), "--config", str(config), "-o", str(model)]) == EXIT_USAGE
        assert not model.exists()

    def test_bad_weights(self, ws_target, tmp_path):
        args = fit_args(ws_target, tmp_path / "m.json") + ["--weights", "1,2,3"]
        assert main(args) == EXIT_USAGE

    def test_unreadable_target(self, tmp_path):
        assert main(fit_args(tmp_path / "missing.edges", tmp_path / "m.json")) == EXIT_USAGE


@pytest.mark.integration
class TestGenerateCommand:
    @pytest.fixture
    def model(self, ws_target, tmp_path):
        path = tmp_path / "model.json"
        assert main(fit_args(ws_target, path)) == EXIT_OK
        return path

    def test_any_size(self, model, tmp_path):
        for size in ("120", "25"):
            out = tmp_path / f"g{size}.edges"
            assert main(["generate", str(model), "-n", size, "--seed", "1", "-o", str(out)]) == EXIT_OK
            assert load_graph(out).node_count == int(size)

    def test_same_seed_same_file(self, model, tmp_path):
        a, b = tmp_path / "a.edges", tmp_path / "b.edges"
        main(["generate", str(model), "-n", "80", "--seed", "4", "-o", str(a)])
        main(["generate", str(model), "-n", "80", "--seed", "4", "-o", str(b)])
        assert a.read_text() == b.read_text()

    def test_too_small(self, model, tmp_path):
        out = tmp_path / "tiny.edges"
        assert main(["generate", str(model), "-n", "3", "--seed", "1", "-o", str(out)]) == EXIT_USAGE
        assert not out.exists()

    def test_report(self, model, ws_target, tmp_path):
        out = tmp_path / "report.csv"
        args = ["report", str(ws_target), str(model), "--replicates", "2", "--seed", "2", "-o", str(out)]
        assert main(args) == EXIT_OK
        frame = pd.read_csv(out)
        assert list(frame.columns) == ["metric", "mean_error", "std_error", "replicates"]
        assert len(frame) == 11


@pytest.mark.integration
class TestCompareCommand:
    def test_self_comparison(self, ws_target, tmp_path):
        report = tmp_path / "report.csv"
        histogram = tmp_path / "hist.csv"
        as_json = tmp_path / "report.json"
        args = ["compare", str(ws_target), str(ws_target), "--seed", "0", "-o", str(report),
                "--json", str(as_json), "--histogram", str(histogram)]
        assert main(args) == EXIT_OK
        frame = pd.read_csv(report)
        assert len(frame) == 11
        assert (frame["error"] == 0).all()
        assert list(pd.read_csv(histogram).columns) == ["degree", "count_target", "count_synth"]
        assert set(json.loads(as_json.read_text())) == set(frame["metric"])

    def test_triangle_vs_path(self, tmp_path, capsys):
        (tmp_path / "t").write_text("0 1\n1 2\n0 2\n")
        (tmp_path / "p").write_text("0 1\n1 2\n")
        assert main(["compare", str(tmp_path / "t"), str(tmp_path / "p"), "--seed", "0", "-o", "-"]) == EXIT_OK
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "metric,value_target,value_synth,error"
        assert "transitivity,1,0,1" in lines

    def test_json_and_histogram_written_next_to_report(self, ws_target, tmp_path):
        report = tmp_path / "run.csv"
        assert main(["compare", str(ws_target), str(ws_target), "--seed", "0", "-o", str(report)]) == EXIT_OK
        assert len(json.loads((tmp_path / "run.json").read_text())) == 11
        histogram = pd.read_csv(tmp_path / "run.histogram.csv")
        assert (histogram["count_target"] == histogram["count_synth"]).all()

    def test_default_outputs(self, ws_target, tmp_path, monkeypatch):
        monkeypatch.chdir(tmp_path)
        assert main(["compare", str(ws_target), str(ws_target), "--seed", "0"]) == EXIT_OK
        assert {"compare.csv", "compare.json", "compare.histogram.csv"} <= {p.name for p in tmp_path.iterdir()}

    def test_malformed_input(self, tmp_path, capsys):
        (tmp_path / "bad").write_text("0 1\n1 two\n")
        assert main(["compare", str(tmp_path / "bad"), str(tmp_path / "bad"), "--seed", "0"]) == EXIT_USAGE
        assert "line 2" in capsys.readouterr().err


@pytest.mark.integration
class TestSummarizeCommand:
    def test_json_on_stdout(self, tmp_path, capsys):
        (tmp_path / "t").write_text("0 1\n1 2\n0 2\n")
        assert main(["summarize", str(tmp_path / "t"), "--seed", "0"]) == EXIT_OK
        summary = json.loads(capsys.readouterr().out)
        assert summary["transitivity"] == 1.0
        assert summary["node_count"] == 3


@pytest.mark.unit
class TestOutputSet:
    def test_partial_outputs_removed(self, tmp_path):
        first = tmp_path / "first.txt"
        with pytest.raises(RuntimeError):
            with OutputSet() as outputs:
                outputs.write(str(first), "data")
                raise RuntimeError("boom")
        assert not first.exists()

    def test_no_command_prints_help(self, capsys):
        assert main([]) == EXIT_USAGE
        assert "usage" in capsys.readouterr().out


@pytest.mark.integration
class TestExitCodes:
    def test_unexpected_failure_exits_one(self, ws_target, tmp_path, mocker):
        mocker.patch("netblend.commands.fit.run_ga", side_effect=RuntimeError("boom"))
        model = tmp_path / "model.json"
        assert main(fit_args(ws_target, model)) == EXIT_UNEXPECTED
        assert not model.exists()

    def test_metrics_file_written(self, ws_target, tmp_path, monkeypatch):
        metrics_path = tmp_path / "run.prom"
        monkeypatch.setenv("NETBLEND_METRICS_FILE", str(metrics_path))
        get_settings.cache_clear()
        out = tmp_path / "g.edges"
        assert main(["synth", "ba", "-n", "30", "-m", "2", "--seed", "1", "-o", str(out)]) == EXIT_OK
        assert "netblend_fitness_evaluations_total" in metrics_path.read_text()

    def test_settings_summary_logged_at_startup(self, tmp_path, mocker):
        summary = mocker.spy(netblend.main, "get_config_summary")
        out = tmp_path / "g.edges"
        assert main(["synth", "er", "-n", "20", "-p", "0.2", "--seed", "1", "-o", str(out)]) == EXIT_OK
        assert summary.call_count == 1
