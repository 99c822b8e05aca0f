"""Helpers shared by the CLI subcommands."""
import sys
from pathlib import Path
from types import TracebackType
from typing import List, Optional, Type

from netblend.services.evolve import draw_seed
from netblend.services.graph_io import atomic_write_text
from netblend.utils.logging import cli_logger as logger


def resolve_seed(seed: Optional[int]) -> int:
    """Return ``seed``, or draw one from entropy and print it for replay."""
    if seed is not None:
        return seed
    seed = draw_seed()
    print(f"netblend: no --seed given, using seed {seed}", file=sys.stderr)
    logger.info("seed_drawn", seed=seed)
    return seed


class OutputSet:
    """Files written by one command; all of them are removed if the command fails."""

    def __init__(self) -> None:
        self.written: List[Path] = []

    def write(self, path: Optional[str], text: str) -> None:
        """Write atomically to ``path``; ``None`` or ``-`` means stdout."""
        if path is None or path == "-":
            sys.stdout.write(text)
            return
        atomic_write_text(path, text)
        self.written.append(Path(path))
        logger.debug("output_written", path=path, size=len(text))

    def __enter__(self) -> "OutputSet":
        return self

    def __exit__(
        self,
        exc_type: Optional[Type[BaseException]],
        exc: Optional[BaseException],
        tb: Optional[TracebackType],
    ) -> None:
        if exc_type is None:
            return
        for path in self.written:
            path.unlink(missing_ok=True)
            logger.info("partial_output_removed", path=str(path))
