"""Tests for settings, error classification, run metrics and logging helpers."""
import pytest
from pydantic import ValidationError

from netblend.core.config import Settings, get_config_summary, get_settings
from netblend.utils.errors import (
    EdgeListParseError,
    ErrorCategory,
    GraphArgumentError,
    InfeasibleRangeError,
    NetblendError,
)
from netblend.utils.logging import LoggerMixin, get_run_id, processes_logger, set_run_id
from netblend.utils.metrics import (
    REGISTRY,
    MetricsCollector,
    export_metrics,
    time_block,
)


@pytest.mark.unit
class TestSettings:
    def test_environment_variables(self, monkeypatch):
        monkeypatch.setenv("NETBLEND_THREADS", "3")
        monkeypatch.setenv("NETBLEND_LOG_FORMAT", "JSON")
        settings = Settings()
        assert settings.threads == 3
        assert settings.log_format == "json"
        assert settings.environment == "testing"

    def test_invalid_log_level(self, monkeypatch):
        monkeypatch.setenv("NETBLEND_LOG_LEVEL", "chatty")
        with pytest.raises(ValidationError):
            Settings()

    def test_zero_threads(self, monkeypatch):
        monkeypatch.setenv("NETBLEND_THREADS", "0")
        with pytest.raises(ValidationError):
            Settings()

    def test_cached(self):
        assert get_settings() is get_settings()
        assert get_config_summary()["log_level"] == "WARNING"


@pytest.mark.unit
class TestErrors:
    def test_to_dict(self):
        error = InfeasibleRangeError("too small", {"desired_nodes": 3})
        payload = error.to_dict()
        assert payload["category"] == ErrorCategory.INFEASIBLE_ERROR.value
        assert payload["desired_nodes"] == 3
        assert payload["exception_type"] == "InfeasibleRangeError"

    def test_argument_errors_are_value_errors(self):
        assert issubclass(GraphArgumentError, ValueError)
        assert issubclass(GraphArgumentError, NetblendError)

    def test_parse_error_carries_line(self):
        error = EdgeListParseError("bad", 4)
        assert error.line_number == 4
        assert str(error) == "line 4: bad"


@pytest.mark.unit
class TestRunMetrics:
    def test_fitness_counter(self):
        before = REGISTRY.get_sample_value(
            "netblend_fitness_evaluations_total", {"outcome": "failed"}
        ) or 0.0
        MetricsCollector.record_fitness_evaluation(0.01, "failed")
        after = REGISTRY.get_sample_value("netblend_fitness_evaluations_total", {"outcome": "failed"})
        assert after == before + 1

    def test_synthesis_counts_processes(self):
        before = REGISTRY.get_sample_value("netblend_process_selections_total", {"process": "MA"}) or 0.0
        MetricsCollector.record_synthesis({"MA": 4, "PA": 0}, adm_commits=0)
        assert REGISTRY.get_sample_value("netblend_process_selections_total", {"process": "MA"}) == before + 4

    def test_time_block(self):
        with time_block() as timing:
            pass
        assert timing["duration"] >= 0.0

    def test_export(self, tmp_path):
        path = tmp_path / "metrics.prom"
        MetricsCollector.record_generation(0.5, 0.25)
        export_metrics(str(path))
        assert "netblend_best_fitness 0.25" in path.read_text()


@pytest.mark.unit
class TestLoggingHelpers:
    def test_run_id_round_trip(self):
        set_run_id("abc123")
        assert get_run_id() == "abc123"

    def test_logger_mixin(self):
        class Worker(LoggerMixin):
            pass

        worker = Worker()
        assert worker.logger is worker.logger

    def test_debug_events_stay_off_stdout(self, capsys):
        processes_logger.debug("synthesis_complete", nodes=4, edges=6)
        processes_logger.warning("degenerate_metric_input", metric="assortativity")
        assert capsys.readouterr().out == ""
