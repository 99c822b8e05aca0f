"""Network-formation processes and the mixture synthesis loop."""
from dataclasses import dataclass, field
from typing import Dict, Sequence, Tuple

import numpy as np

from netblend.models.graph import Graph, add_ring_lattice
from netblend.models.mixture import NODE_ADDING_PROCESSES, MixtureConfig, ProcessKind
from netblend.services.metrics import assortativity_sums, pearson_from_sums
from netblend.utils.errors import ConfigError, GraphArgumentError
from netblend.utils.logging import processes_logger as logger

# Growth starts from a complete graph on this many nodes
SEED_CLIQUE_SIZE = 4
# ADM adds no nodes; after this many ADM steps in a row the next step must grow the graph
MAX_CONSECUTIVE_ADM = 3
# Sampling weight of degree-0 nodes under preferential attachment
ISOLATE_WEIGHT = 1.0

PROCESS_ORDER = (ProcessKind.PA, ProcessKind.TRA, ProcessKind.MA, ProcessKind.ADM)


def seed_graph() -> Graph:
    return Graph.complete(SEED_CLIQUE_SIZE)


def tra_step(g: Graph, n: int, k: int, p_rewiring: float, rng: np.random.Generator) -> None:
    """Append a ring lattice of ``n`` nodes and degree ``k``, then rewire it.

    Each lattice edge is rewired with probability ``p_rewiring``: its
    lower-indexed endpoint is replaced by a uniform node of the whole graph.
    Moves that would create a self-loop or a duplicate edge are skipped.
    """
    if g.node_count == 0:
        raise GraphArgumentError("TRA step needs a non-empty graph")
    if k >= n:
        raise GraphArgumentError(f"lattice degree {k} must be smaller than ring size {n}")
    ring = g.add_nodes(n)
    lattice = add_ring_lattice(g, ring, k)
    rewire_edges(g, lattice, p_rewiring, rng)


def rewire_edges(
    g: Graph, edges: Sequence[Tuple[int, int]], p_rewiring: float, rng: np.random.Generator
) -> int:
    """Move the lower-indexed endpoint of each edge to a uniform node with probability p.

    Returns the number of edges actually moved.
    """
    if p_rewiring <= 0.0 or not edges:
        return 0
    moved_count = 0
    draws = rng.random(len(edges))
    for (a, b), draw in zip(edges, draws):
        if draw >= p_rewiring:
            continue
        kept = max(a, b)
        moved = min(a, b)
        w = int(rng.integers(g.node_count))
        if w == kept or g.has_edge(w, kept):
            continue
        g.remove_edge(moved, kept)
        g.add_edge(w, kept)
        moved_count += 1
    return moved_count


def attachment_probabilities(degrees: np.ndarray) -> np.ndarray:
    """Preferential-attachment probabilities for one draw."""
    weights = np.where(degrees > 0, degrees, ISOLATE_WEIGHT).astype(float)
    return weights / weights.sum()


def pa_step(g: Graph, n: int, m: int, rng: np.random.Generator) -> None:
    """Add ``n`` nodes one by one, each linking to min(m, N) distinct nodes by degree."""
    if g.node_count == 0:
        raise GraphArgumentError("PA step needs a non-empty graph")
    degrees = list(g.degrees())
    for _ in range(n):
        existing = len(degrees)
        links = min(m, existing)
        probabilities = attachment_probabilities(np.asarray(degrees))
        targets = rng.choice(existing, size=links, replace=False, p=probabilities)
        (node,) = g.add_nodes(1)
        degrees.append(0)
        for t in targets:
            g.add_edge(node, int(t))
            degrees[int(t)] += 1
        degrees[node] = links


def ma_step(g: Graph, n: int, p_copying: float, rng: np.random.Generator) -> None:
    """Add ``n`` nodes that copy the neighbourhood of a random existing node.

    The newcomer links to each neighbour of x with probability ``p_copying``;
    when x has no neighbours, or no coin flip succeeds, it links to x itself.
    """
    if g.node_count == 0:
        raise GraphArgumentError("MA step needs a non-empty graph")
    for _ in range(n):
        x = int(rng.integers(g.node_count))
        neighbours = sorted(g.neighbors(x))
        (node,) = g.add_nodes(1)
        chosen = []
        if neighbours:
            flips = rng.random(len(neighbours))
            chosen = [v for v, flip in zip(neighbours, flips) if flip < p_copying]
        if not chosen:
            chosen = [x]
        for v in chosen:
            g.add_edge(node, v)


class AssortativityTracker:
    """Keeps the degree correlation of a graph current under single-edge toggles.

    The sufficient statistics are exact integers, so the tracked value always
    equals a from-scratch recomputation.
    """

    def __init__(self, g: Graph):
        self.graph = g
        self.edges, self.s1, self.sab, self.s2 = assortativity_sums(g)

    @property
    def value(self) -> float:
        return pearson_from_sums(self.edges, self.s1, self.sab, self.s2)[0]

    def _incident(self, u: int, v: int) -> Tuple[int, int, int, int]:
        count = s1 = sab = s2 = 0
        g = self.graph
        for x in (u, v):
            dx = g.degree(x)
            for w in g.neighbors(x):
                if x == v and w == u:
                    continue
                dw = g.degree(w)
                count += 1
                s1 += dx + dw
                sab += dx * dw
                s2 += dx * dx + dw * dw
        return count, s1, sab, s2

    def toggle(self, u: int, v: int) -> bool:
        """Add u-v if absent, otherwise remove it. Returns True if it was added."""
        before = self._incident(u, v)
        added = self.graph.add_edge(u, v)
        if not added:
            self.graph.remove_edge(u, v)
        after = self._incident(u, v)
        self.edges += after[0] - before[0]
        self.s1 += after[1] - before[1]
        self.sab += after[2] - before[2]
        self.s2 += after[3] - before[3]
        return added


def adm_step(g: Graph, n_adm: int, target_assortativity: float, rng: np.random.Generator) -> int:
    """Try ``n_adm`` random edge toggles, keeping those that move r toward the target.

    A toggle is committed only on strict improvement of |r - target|.
    Removals that would leave an endpoint with degree 0 are not attempted.
    Returns the number of committed toggles.
    """
    if g.node_count < 2 or g.edge_count < 1:
        raise GraphArgumentError("ADM step needs at least 2 nodes and 1 edge")
    tracker = AssortativityTracker(g)
    gap = abs(tracker.value - target_assortativity)
    committed = 0
    node_count = g.node_count
    for _ in range(n_adm):
        u = int(rng.integers(node_count))
        v = int(rng.integers(node_count - 1))
        if v >= u:
            v += 1
        if g.has_edge(u, v) and (g.degree(u) < 2 or g.degree(v) < 2):
            continue
        tracker.toggle(u, v)
        new_gap = abs(tracker.value - target_assortativity)
        if new_gap < gap:
            gap = new_gap
            committed += 1
        else:
            tracker.toggle(u, v)
    return committed


def _draw(kinds: Sequence[ProcessKind], weights: Sequence[float], rng: np.random.Generator) -> ProcessKind:
    total = float(sum(weights))
    point = rng.random() * total
    cumulative = 0.0
    for kind, weight in zip(kinds, weights):
        cumulative += weight
        if point < cumulative:
            return kind
    # point == total only through rounding; take the last positive weight
    return next(kind for kind, weight in zip(reversed(kinds), reversed(weights)) if weight > 0)


def select_process(cfg: MixtureConfig, rng: np.random.Generator) -> ProcessKind:
    """Draw a process with probability proportional to its configured weight."""
    weights = (cfg.p_pa, cfg.p_tra, cfg.p_ma, cfg.p_adm)
    if sum(weights) <= 0.0:
        raise ConfigError("all process probabilities are zero")
    return _draw(PROCESS_ORDER, weights, rng)


def _select_growth_process(cfg: MixtureConfig, rng: np.random.Generator) -> ProcessKind:
    weights = (cfg.p_pa, cfg.p_tra, cfg.p_ma)
    if sum(weights) <= 0.0:
        return ProcessKind.PA
    return _draw(NODE_ADDING_PROCESSES, weights, rng)


def _random_attachment(g: Graph, count: int, rng: np.random.Generator) -> None:
    for _ in range(count):
        target = int(rng.integers(g.node_count))
        (node,) = g.add_nodes(1)
        g.add_edge(node, target)


def _grow_tra(g: Graph, cfg: MixtureConfig, count: int, rng: np.random.Generator) -> None:
    if count > cfg.k:
        tra_step(g, count, cfg.k, cfg.p_rewiring, rng)
        return
    # Budget remainder smaller than the lattice: shrink k to the largest even value that fits
    k = count - 1 if (count - 1) % 2 == 0 else count - 2
    if k >= 2:
        tra_step(g, count, k, cfg.p_rewiring, rng)
    else:
        _random_attachment(g, count, rng)


@dataclass
class SynthesisTrace:
    """Bookkeeping of one synthesis run."""
    process_counts: Dict[str, int] = field(default_factory=lambda: {k.value: 0 for k in ProcessKind})
    adm_commits: int = 0
    steps: int = 0


def synthesize_traced(
    cfg: MixtureConfig, desired_nodes: int, rng: np.random.Generator
) -> Tuple[Graph, SynthesisTrace]:
    """Grow a graph of exactly ``desired_nodes`` nodes from the seed clique."""
    if desired_nodes < SEED_CLIQUE_SIZE:
        raise GraphArgumentError(
            f"desired_nodes must be at least {SEED_CLIQUE_SIZE}, got {desired_nodes}"
        )
    g = seed_graph()
    trace = SynthesisTrace()
    consecutive_adm = 0
    while g.node_count < desired_nodes:
        if consecutive_adm >= MAX_CONSECUTIVE_ADM:
            kind = _select_growth_process(cfg, rng)
        else:
            kind = select_process(cfg, rng)
        trace.process_counts[kind.value] += 1
        trace.steps += 1

        if kind is ProcessKind.ADM:
            consecutive_adm += 1
            trace.adm_commits += adm_step(g, cfg.n_adm, cfg.target_assortativity, rng)
            continue

        consecutive_adm = 0
        count = min(cfg.n, desired_nodes - g.node_count)
        if kind is ProcessKind.TRA:
            _grow_tra(g, cfg, count, rng)
        elif kind is ProcessKind.PA:
            pa_step(g, count, cfg.m, rng)
        else:
            ma_step(g, count, cfg.p_copying, rng)

    logger.debug(
        "synthesis_complete",
        nodes=g.node_count,
        edges=g.edge_count,
        steps=trace.steps,
        processes=dict(trace.process_counts),
        adm_commits=trace.adm_commits,
    )
    return g, trace


def synthesize(cfg: MixtureConfig, desired_nodes: int, rng: np.random.Generator) -> Graph:
    """Grow a graph of exactly ``desired_nodes`` nodes under ``cfg``."""
    graph, _ = synthesize_traced(cfg, desired_nodes, rng)
    return graph
