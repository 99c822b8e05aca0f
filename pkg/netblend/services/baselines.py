"""Classical random-graph generators: Barabasi-Albert, Erdos-Renyi, Watts-Strogatz."""
import numpy as np

from netblend.models.baseline import BaselineModel, BaselineSpec
from netblend.models.graph import Graph
from netblend.services.processes import pa_step, rewire_edges
from netblend.utils.errors import GraphArgumentError
from netblend.utils.logging import get_logger

logger = get_logger(__name__)


def generate_ba(n: int, m: int, rng: np.random.Generator) -> Graph:
    """Preferential-attachment growth from a clique of ``m`` nodes."""
    if m < 1 or n <= m:
        raise GraphArgumentError(f"BA needs n > m >= 1, got n={n}, m={m}")
    g = Graph.complete(m)
    pa_step(g, n - m, m, rng)
    return g


def generate_er(n: int, p: float, rng: np.random.Generator) -> Graph:
    """G(n, p): every node pair linked independently with probability p."""
    if n < 1:
        raise GraphArgumentError(f"ER needs n >= 1, got {n}")
    if not 0.0 <= p <= 1.0:
        raise GraphArgumentError(f"ER link probability must lie in [0, 1], got {p}")
    rows, cols = np.triu_indices(n, k=1)
    keep = rng.random(rows.shape[0]) < p
    return Graph(n, zip(rows[keep].tolist(), cols[keep].tolist()))


def generate_ws(n: int, k: int, p: float, rng: np.random.Generator) -> Graph:
    """Ring lattice of degree ``k`` with each edge rewired with probability ``p``."""
    if k < 2 or k % 2 or k >= n:
        raise GraphArgumentError(f"WS needs an even k with 2 <= k < n, got n={n}, k={k}")
    if not 0.0 <= p <= 1.0:
        raise GraphArgumentError(f"WS rewiring probability must lie in [0, 1], got {p}")
    g = Graph.ring_lattice(n, k)
    rewire_edges(g, list(g.edges()), p, rng)
    return g


def generate(spec: BaselineSpec, rng: np.random.Generator) -> Graph:
    """Dispatch a validated BaselineSpec to its generator."""
    if spec.model is BaselineModel.BA:
        graph = generate_ba(spec.n, spec.m, rng)
    elif spec.model is BaselineModel.ER:
        graph = generate_er(spec.n, spec.p, rng)
    else:
        graph = generate_ws(spec.n, spec.k, spec.p, rng)
    logger.info(
        "baseline_generated",
        model=spec.model.value,
        nodes=graph.node_count,
        edges=graph.edge_count,
    )
    return graph
