"""Simple undirected graph over dense integer node ids."""
from typing import Iterable, Iterator, List, Optional, Set, Tuple

import networkx as nx
import numpy as np

from netblend.utils.errors import GraphArgumentError


class Graph:
    """Simple undirected graph: no self-loops, no parallel edges.

    Nodes are the contiguous ids ``0..N-1``. ``labels`` optionally maps each
    dense id back to the identifier it had in the file it was loaded from.
    """

    __slots__ = ("_adj", "_edge_count", "labels")

    def __init__(self, node_count: int = 0, edges: Iterable[Tuple[int, int]] = ()):
        if node_count < 0:
            raise GraphArgumentError(f"node_count must be non-negative, got {node_count}")
        self._adj: List[Set[int]] = [set() for _ in range(node_count)]
        self._edge_count = 0
        self.labels: Optional[List[int]] = None
        for u, v in edges:
            self.add_edge(u, v)

    @property
    def node_count(self) -> int:
        return len(self._adj)

    @property
    def edge_count(self) -> int:
        return self._edge_count

    def __len__(self) -> int:
        return len(self._adj)

    def __repr__(self) -> str:
        return f"Graph(nodes={self.node_count}, edges={self.edge_count})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.node_count == other.node_count and self._adj == other._adj

    def _check(self, v: int) -> None:
        if not 0 <= v < len(self._adj):
            raise GraphArgumentError(
                f"node id {v} out of range for graph with {len(self._adj)} nodes"
            )

    def add_nodes(self, count: int) -> range:
        """Append ``count`` isolated nodes and return their ids."""
        start = len(self._adj)
        self._adj.extend(set() for _ in range(count))
        return range(start, start + count)

    def add_edge(self, u: int, v: int) -> bool:
        """Add edge u-v; False for self-loops and existing edges."""
        self._check(u)
        self._check(v)
        if u == v or v in self._adj[u]:
            return False
        self._adj[u].add(v)
        self._adj[v].add(u)
        self._edge_count += 1
        return True

    def remove_edge(self, u: int, v: int) -> bool:
        """Remove edge u-v; False when it was absent."""
        self._check(u)
        self._check(v)
        if v not in self._adj[u]:
            return False
        self._adj[u].discard(v)
        self._adj[v].discard(u)
        self._edge_count -= 1
        return True

    def has_edge(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        return v in self._adj[u]

    def degree(self, v: int) -> int:
        self._check(v)
        return len(self._adj[v])

    def neighbors(self, v: int) -> Set[int]:
        """Read-only view of the neighbor set; do not mutate."""
        self._check(v)
        return self._adj[v]

    def degrees(self) -> np.ndarray:
        return np.fromiter((len(nbrs) for nbrs in self._adj), dtype=np.int64, count=len(self._adj))

    def nodes(self) -> range:
        return range(len(self._adj))

    def edges(self) -> Iterator[Tuple[int, int]]:
        """Edges as (u, v) with u < v, in lexicographic order."""
        for u, nbrs in enumerate(self._adj):
            for v in sorted(nbrs):
                if u < v:
                    yield u, v

    def edge_array(self) -> np.ndarray:
        """Edges as an (E, 2) integer array, u < v per row."""
        arr = np.fromiter(
            (x for edge in self.edges() for x in edge), dtype=np.int64, count=2 * self._edge_count
        )
        return arr.reshape(-1, 2)

    def copy(self) -> "Graph":
        clone = Graph()
        clone._adj = [set(nbrs) for nbrs in self._adj]
        clone._edge_count = self._edge_count
        clone.labels = list(self.labels) if self.labels is not None else None
        return clone

    def is_simple(self) -> bool:
        """Check symmetry, absence of self-loops and the degree-sum identity."""
        degree_sum = 0
        for u, nbrs in enumerate(self._adj):
            if u in nbrs:
                return False
            for v in nbrs:
                if u not in self._adj[v]:
                    return False
            degree_sum += len(nbrs)
        return degree_sum == 2 * self._edge_count

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(len(self._adj)))
        graph.add_edges_from(self.edges())
        return graph

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> "Graph":
        """Build a dense-id graph from any networkx graph, dropping self-loops."""
        index = {node: i for i, node in enumerate(graph.nodes())}
        result = cls(len(index))
        for u, v in graph.edges():
            if u != v:
                result.add_edge(index[u], index[v])
        return result

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls(n, ((u, v) for u in range(n) for v in range(u + 1, n)))

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls(n, ((i, i + 1) for i in range(n - 1)))

    @classmethod
    def star(cls, leaves: int) -> "Graph":
        """Hub 0 joined to ``leaves`` leaf nodes."""
        return cls(leaves + 1, ((0, i) for i in range(1, leaves + 1)))

    @classmethod
    def ring_lattice(cls, n: int, k: int) -> "Graph":
        """Each node linked to its k/2 nearest neighbours on either side."""
        graph = cls(n)
        add_ring_lattice(graph, range(n), k)
        return graph


def add_ring_lattice(graph: Graph, ring: range, k: int) -> List[Tuple[int, int]]:
    """Wire ``ring`` (consecutive ids) as a ring lattice of degree ``k``.

    Returns the lattice edges in creation order.
    """
    if k % 2 or k < 2:
        raise GraphArgumentError(f"lattice degree must be an even integer >= 2, got {k}")
    n = len(ring)
    if k >= n:
        raise GraphArgumentError(f"lattice degree {k} must be smaller than ring size {n}")
    created = []
    for offset in range(1, k // 2 + 1):
        for i in range(n):
            u, v = ring[i], ring[(i + offset) % n]
            if graph.add_edge(u, v):
                created.append((u, v))
    return created
