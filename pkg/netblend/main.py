#!/usr/bin/env python3
"""Command-line entry point: ``netblend <command> [options]``."""
import argparse
import sys
import uuid
from typing import List, Optional

from pydantic import ValidationError

from netblend import __version__
from netblend.commands import compare, fit, generate, report, summarize, synth
from netblend.core.config import get_config_summary, get_settings
from netblend.utils.errors import NetblendError
from netblend.utils.logging import cli_logger as logger
from netblend.utils.logging import set_command_context, set_run_id, setup_logging
from netblend.utils.metrics import export_metrics

EXIT_OK = 0
EXIT_UNEXPECTED = 1
EXIT_USAGE = 2

COMMANDS = (fit, generate, compare, synth, report, summarize)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="netblend",
        description="Fit and sample mixtures of network-formation processes",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--log-level", help="Override NETBLEND_LOG_LEVEL")
    subparsers = parser.add_subparsers(dest="command", help="Available commands")
    for command in COMMANDS:
        command.add_parser(subparsers)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if not args.command:
        parser.print_help()
        return EXIT_USAGE

    settings = get_settings()
    setup_logging(args.log_level or settings.log_level, settings.log_format)
    set_run_id(uuid.uuid4().hex[:12])
    set_command_context(args.command)
    logger.debug("settings_loaded", **get_config_summary())

    try:
        status = args.handler(args)
    except (NetblendError, ValidationError) as exc:
        details = exc.to_dict() if isinstance(exc, NetblendError) else {"error": str(exc)}
        logger.error("command_failed", command=args.command, **details)
        message = exc.message if isinstance(exc, NetblendError) else str(exc)
        print(f"netblend {args.command}: error: {message}", file=sys.stderr)
        status = EXIT_USAGE
    except OSError as exc:
        logger.error("command_failed", command=args.command, error=str(exc))
        print(f"netblend {args.command}: error: {exc}", file=sys.stderr)
        status = EXIT_USAGE
    except Exception as exc:
        logger.exception("command_crashed", command=args.command)
        print(f"netblend {args.command}: unexpected error: {exc}", file=sys.stderr)
        status = EXIT_UNEXPECTED

    if settings.metrics_file:
        export_metrics(settings.metrics_file)
    return status


if __name__ == "__main__":
    sys.exit(main())
