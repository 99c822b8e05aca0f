"""Structured logging configuration for the library and the CLI."""
import contextvars
import logging
import logging.config
import os
import sys
import uuid
from typing import Any, Dict, Optional

import structlog

from netblend import __version__

# Context variables for run tracking
run_id_var: contextvars.ContextVar[str] = contextvars.ContextVar("run_id")
command_var: contextvars.ContextVar[Optional[str]] = contextvars.ContextVar("command", default=None)


def setup_logging(level: Optional[str] = None, log_format: str = "auto") -> None:
    """Configure structlog on top of the standard library logging module.

    Logs always go to stderr so command output written to stdout stays clean.
    ``log_format`` is ``console``, ``json`` or ``auto`` (console on a TTY).
    """
    log_level = (level or os.getenv("NETBLEND_LOG_LEVEL", "INFO")).upper()
    if log_format == "auto":
        log_format = "console" if sys.stderr.isatty() else "json"

    shared_processors = [
        structlog.stdlib.add_logger_name,
        structlog.stdlib.add_log_level,
        structlog.stdlib.PositionalArgumentsFormatter(),
        structlog.processors.TimeStamper(fmt="iso"),
        structlog.processors.StackInfoRenderer(),
        structlog.processors.format_exc_info,
        structlog.processors.UnicodeDecoder(),
        add_run_context,
        add_service_context,
    ]

    structlog.configure(
        processors=[
            structlog.stdlib.filter_by_level,
            *shared_processors,
            structlog.stdlib.ProcessorFormatter.wrap_for_formatter,
        ],
        context_class=dict,
        logger_factory=structlog.stdlib.LoggerFactory(),
        wrapper_class=structlog.stdlib.BoundLogger,
        cache_logger_on_first_use=True,
    )

    logging_config: Dict[str, Any] = {
        "version": 1,
        "disable_existing_loggers": False,
        "formatters": {
            "json": {
                "()": structlog.stdlib.ProcessorFormatter,
                "processor": structlog.processors.JSONRenderer(),
                "foreign_pre_chain": shared_processors,
            },
            "console": {
                "()": structlog.stdlib.ProcessorFormatter,
                "processor": structlog.dev.ConsoleRenderer(colors=sys.stderr.isatty()),
                "foreign_pre_chain": shared_processors,
            },
        },
        "handlers": {
            "stderr": {
                "class": "logging.StreamHandler",
                "formatter": log_format,
                "stream": sys.stderr,
            },
        },
        "loggers": {
            "": {
                "handlers": ["stderr"],
                "level": log_level,
                "propagate": True,
            },
            # scipy is chatty at INFO
            "scipy": {"handlers": ["stderr"], "level": "WARNING", "propagate": False},
        },
    }

    logging.config.dictConfig(logging_config)


def add_run_context(logger: Any, method_name: str, event_dict: Dict[str, Any]) -> Dict[str, Any]:
    """Add the run id and active command to log records."""
    event_dict["run_id"] = get_run_id()
    command = command_var.get()
    if command:
        event_dict["command"] = command
    return event_dict


def add_service_context(logger: Any, method_name: str, event_dict: Dict[str, Any]) -> Dict[str, Any]:
    """Add service context information to log records."""
    event_dict["service"] = "netblend"
    event_dict["version"] = __version__
    event_dict["environment"] = os.getenv("NETBLEND_ENVIRONMENT", "development")
    return event_dict


def get_logger(name: str) -> structlog.stdlib.BoundLogger:
    """Get a structured logger instance."""
    return structlog.get_logger(name)


def set_run_id(run_id: str) -> None:
    """Set the run ID for the current context."""
    run_id_var.set(run_id)


def get_run_id() -> str:
    """Get or generate a run ID for the current context."""
    try:
        return run_id_var.get()
    except LookupError:
        run_id = uuid.uuid4().hex[:12]
        run_id_var.set(run_id)
        return run_id


def set_command_context(command: Optional[str]) -> None:
    """Record which CLI command is executing."""
    command_var.set(command)


class LoggerMixin:
    """Mixin to provide logger functionality to classes."""

    @property
    def logger(self) -> structlog.stdlib.BoundLogger:
        """Get logger for this class."""
        if not hasattr(self, "_logger"):
            self._logger = get_logger(f"{self.__class__.__module__}.{self.__class__.__name__}")
        return self._logger


# Component loggers
cli_logger = get_logger("netblend.cli")
evolve_logger = get_logger("netblend.evolve")
processes_logger = get_logger("netblend.processes")
metrics_logger = get_logger("netblend.metrics")
