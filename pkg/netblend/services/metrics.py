"""Global topological measurements and per-node property sequences."""
from typing import Dict, List, Mapping, Sequence, Tuple, Union

import networkx as nx
import numpy as np

from netblend.models.graph import Graph
from netblend.models.summary import PropertyKind
from netblend.utils.errors import DegenerateGraphError, GraphArgumentError, NumericError
from netblend.utils.logging import metrics_logger as logger

PAGERANK_DAMPING = 0.85
EIGENVECTOR_TOLERANCE = 1e-8
EIGENVECTOR_MAX_ITER = 1000

Partition = Union[Mapping[int, int], Sequence[int]]


def average_clustering(g: Graph) -> float:
    """Mean local clustering; nodes of degree < 2 contribute 0."""
    if g.node_count == 0:
        logger.warning("degenerate_metric_input", metric="avg-clustering", degenerate=True)
        return 0.0
    return float(nx.average_clustering(g.to_networkx()))


def transitivity(g: Graph) -> float:
    """3 x triangles / connected triples, 0 without triples."""
    return float(nx.transitivity(g.to_networkx()))


def assortativity_sums(g: Graph) -> Tuple[int, int, int, int]:
    """Exact integer sufficient statistics of the edge degree correlation.

    Returns (E, sum k_u + k_v, sum k_u * k_v, sum k_u^2 + k_v^2) over edges.
    """
    if g.edge_count == 0:
        return 0, 0, 0, 0
    degrees = g.degrees()
    edges = g.edge_array()
    a = degrees[edges[:, 0]]
    b = degrees[edges[:, 1]]
    return (
        int(edges.shape[0]),
        int((a + b).sum()),
        int((a * b).sum()),
        int((a * a + b * b).sum()),
    )


def pearson_from_sums(edges: int, s1: int, sab: int, s2: int) -> Tuple[float, bool]:
    """Degree correlation from ``assortativity_sums``; (0.0, True) when undefined."""
    if edges == 0:
        return 0.0, True
    samples = 2 * edges
    # Both scaled by samples^2, exact in integers
    variance = s2 * samples - s1 * s1
    if variance == 0:
        return 0.0, True
    covariance = 2 * sab * samples - s1 * s1
    r = covariance / variance
    return float(min(1.0, max(-1.0, r))), False


def assortativity_checked(g: Graph) -> Tuple[float, bool]:
    """Degree assortativity plus a flag telling whether the degenerate rule applied."""
    return pearson_from_sums(*assortativity_sums(g))


def assortativity(g: Graph) -> float:
    """Pearson correlation of endpoint degrees over both edge orientations.

    Regular and edgeless graphs have no defined correlation and yield 0.0.
    """
    value, degenerate = assortativity_checked(g)
    if degenerate:
        logger.warning("degenerate_metric_input", metric="assortativity", degenerate=True)
    return value


def _community_labels(g: Graph, partition: Partition) -> List[int]:
    if isinstance(partition, Mapping):
        missing = [v for v in g.nodes() if v not in partition]
        if missing:
            raise GraphArgumentError(
                f"{len(missing)} node(s) have no community, first is {missing[0]}"
            )
        return [int(partition[v]) for v in g.nodes()]
    labels = list(partition)
    if len(labels) != g.node_count:
        raise GraphArgumentError(
            f"partition assigns {len(labels)} nodes but graph has {g.node_count}"
        )
    return [int(c) for c in labels]


def modularity_of(g: Graph, partition: Partition) -> float:
    """Newman modularity: sum over communities of e_cc - a_c^2."""
    labels = _community_labels(g, partition)
    if g.edge_count == 0:
        return 0.0
    m = g.edge_count
    intra: Dict[int, int] = {}
    degree_total: Dict[int, int] = {}
    for v in g.nodes():
        degree_total[labels[v]] = degree_total.get(labels[v], 0) + g.degree(v)
    for u, v in g.edges():
        if labels[u] == labels[v]:
            intra[labels[u]] = intra.get(labels[u], 0) + 1
    q = 0.0
    for community, total in degree_total.items():
        q += intra.get(community, 0) / m - (total / (2 * m)) ** 2
    return q


def best_partition_modularity(g: Graph, seed: int) -> Tuple[Dict[int, int], float]:
    """Louvain partition under ``seed`` and its modularity.

    Communities are numbered by their smallest member. Falls back to the
    single-community partition whenever that scores higher.
    """
    if g.node_count == 0:
        return {}, 0.0
    if g.edge_count == 0:
        return {v: v for v in g.nodes()}, 0.0

    communities = nx.community.louvain_communities(g.to_networkx(), seed=seed)
    ordered = sorted((sorted(c) for c in communities), key=lambda members: members[0])
    partition = {v: label for label, members in enumerate(ordered) for v in members}
    q = modularity_of(g, partition)
    if q < 0.0:
        return {v: 0 for v in g.nodes()}, 0.0
    return partition, q


def _eigenvector_values(graph: nx.Graph, node_count: int) -> List[float]:
    values = [0.0] * node_count
    largest = max(nx.connected_components(graph), key=len)
    component = graph.subgraph(largest)
    try:
        centrality = nx.eigenvector_centrality(
            component, max_iter=EIGENVECTOR_MAX_ITER, tol=EIGENVECTOR_TOLERANCE
        )
    except nx.PowerIterationFailedConvergence as exc:
        raise NumericError(
            f"eigenvector centrality did not converge in {EIGENVECTOR_MAX_ITER} iterations",
            {"component_size": len(largest)},
        ) from exc
    for v, value in centrality.items():
        values[v] = float(value)
    return values


def property_values(g: Graph, kind: PropertyKind) -> Sequence[float]:
    """One value per node, ordered by node id. Degrees stay integers."""
    kind = PropertyKind(kind)
    if kind is PropertyKind.DEGREE:
        return [int(d) for d in g.degrees()]
    if g.node_count == 0:
        raise DegenerateGraphError(f"{kind.value} requires a non-empty graph")

    graph = g.to_networkx()
    if kind is PropertyKind.LOCAL_CLUSTERING:
        values = nx.clustering(graph)
    elif kind is PropertyKind.CLOSENESS:
        values = nx.closeness_centrality(graph)
    elif kind is PropertyKind.BETWEENNESS:
        values = nx.betweenness_centrality(graph, normalized=True)
    elif kind is PropertyKind.PAGERANK:
        values = nx.pagerank(graph, alpha=PAGERANK_DAMPING)
    else:
        return _eigenvector_values(graph, g.node_count)
    return [float(values[v]) for v in g.nodes()]


def degree_histogram(g: Graph) -> List[int]:
    """Node counts indexed by degree."""
    if g.node_count == 0:
        return []
    return [int(c) for c in np.bincount(g.degrees())]
