"""Edge-list reading and writing."""
import os
import re
import tempfile
from pathlib import Path
from typing import Dict, List, Optional, TextIO, Tuple, Union

from netblend.models.graph import Graph
from netblend.utils.errors import EdgeListParseError
from netblend.utils.logging import get_logger

logger = get_logger(__name__)

NODE_HEADER = re.compile(r"^#\s*nodes\s*=\s*(\d+)\s*$")

PathLike = Union[str, os.PathLike]


def read_edge_list(source: TextIO, compact: bool = False) -> Graph:
    """Parse whitespace-separated ``u v`` lines into a Graph.

    Lines starting with ``#`` are comments, except a ``# nodes=N`` header
    which fixes the node count so trailing isolates survive a round trip.
    Columns after the second are ignored. Duplicate and reversed edges
    collapse, self-loops are dropped.

    With ``compact`` the distinct ids are renumbered densely in ascending
    order and the original ids are kept in ``Graph.labels``.
    """
    declared_nodes: Optional[int] = None
    header_line = 0
    pairs: List[Tuple[int, int]] = []
    max_id = -1

    for line_number, raw in enumerate(source, start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            header = NODE_HEADER.match(line)
            if header:
                declared_nodes = int(header.group(1))
                header_line = line_number
            continue

        tokens = line.split()
        if len(tokens) < 2:
            raise EdgeListParseError(f"expected two node ids, got {line!r}", line_number)
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise EdgeListParseError(f"non-integer node id in {line!r}", line_number) from None
        if u < 0 or v < 0:
            raise EdgeListParseError(f"negative node id in {line!r}", line_number)
        pairs.append((u, v))
        max_id = max(max_id, u, v)

    if compact:
        distinct = sorted({x for pair in pairs for x in pair})
        index: Dict[int, int] = {label: i for i, label in enumerate(distinct)}
        graph = Graph(len(distinct))
        for u, v in pairs:
            graph.add_edge(index[u], index[v])
        graph.labels = distinct
    else:
        node_count = max_id + 1
        if declared_nodes is not None:
            if declared_nodes < node_count:
                raise EdgeListParseError(
                    f"header declares {declared_nodes} nodes but id {max_id} appears", header_line
                )
            node_count = declared_nodes
        graph = Graph(node_count)
        for u, v in pairs:
            graph.add_edge(u, v)

    skipped = len(pairs) - graph.edge_count
    if skipped:
        logger.debug("edge_list_collapsed", lines=len(pairs), edges=graph.edge_count)
    return graph


def write_edge_list(g: Graph) -> str:
    """Render ``g`` as a ``# nodes=N`` header followed by sorted ``u v`` lines.

    A graph read with compacted ids is written with its original ids and no
    header, so reading it back with ``compact`` gives the same graph.
    """
    if g.labels is not None:
        labels = g.labels
        pairs = sorted((labels[u], labels[v]) for u, v in g.edges())
        return "\n".join(f"{a} {b}" for a, b in pairs)
    lines = [f"{u} {v}" for u, v in g.edges()]
    return f"# nodes={g.node_count}\n" + "\n".join(lines)


def load_graph(path: PathLike, compact: bool = False) -> Graph:
    with open(path, encoding="utf-8") as handle:
        graph = read_edge_list(handle, compact=compact)
    logger.info("graph_loaded", path=str(path), nodes=graph.node_count, edges=graph.edge_count)
    return graph


def atomic_write_text(path: PathLike, text: str) -> None:
    """Write ``text`` to ``path`` via a temp file and rename."""
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp_name = tempfile.mkstemp(dir=target.parent, prefix=f".{target.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as handle:
            handle.write(text)
        os.replace(tmp_name, target)
    except BaseException:
        try:
            os.unlink(tmp_name)
        except FileNotFoundError:
            pass
        raise


def save_graph(g: Graph, path: PathLike) -> None:
    atomic_write_text(path, write_edge_list(g) + "\n")
    logger.info("graph_saved", path=str(path), nodes=g.node_count, edges=g.edge_count)
