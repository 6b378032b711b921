"""Immutable simple-graph type, standard families, and basic queries.

Vertices are the integers ``0..order-1`` and every neighbor set is kept as a
bitmask in a single Python int, which keeps the exact solvers elsewhere in
this package allocation-free on their hot paths.  Orders up to 64 are
supported so that a neighbor mask always fits one machine word.

Graphs are frozen after construction and safe to share between worker
processes; every operation here returns a new value.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import GraphInputError, LoopEdgeError, OrderRangeError, VertexRangeError

MAX_ORDER = 64

FAMILIES = ("complete", "cycle", "path", "star", "empty", "fk")


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Finite simple undirected graph on ``order`` vertices.

    ``adj[v]`` is the neighbor set of ``v`` as a bitmask.  The adjacency
    relation is validated to be symmetric, irreflexive, and in range at
    construction time, so downstream code can rely on those invariants.
    """

    order: int
    adj: tuple[int, ...]

    def __post_init__(self):
        n = self.order
        if not isinstance(n, int) or not 1 <= n <= MAX_ORDER:
            raise OrderRangeError(f"order must be in [1, {MAX_ORDER}], got {n!r}")
        if len(self.adj) != n:
            raise GraphInputError(f"adjacency has {len(self.adj)} rows for order {n}")
        full = (1 << n) - 1
        for v, mask in enumerate(self.adj):
            if mask & ~full:
                raise VertexRangeError(f"neighbor of {v} outside [0, {n - 1}]")
            if (mask >> v) & 1:
                raise LoopEdgeError(f"loop at vertex {v}")
        for v, mask in enumerate(self.adj):
            for u in iter_bits(mask):
                if not (self.adj[u] >> v) & 1:
                    raise GraphInputError(f"asymmetric adjacency between {u} and {v}")

    # -- queries ---------------------------------------------------------

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> Iterator[int]:
        return iter_bits(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def edges(self) -> list[tuple[int, int]]:
        """All edges as pairs ``(u, v)`` with ``u < v``, in lexicographic order."""
        out = []
        for u in range(self.order):
            mask = self.adj[u] >> (u + 1)
            v = u + 1
            while mask:
                if mask & 1:
                    out.append((u, v))
                mask >>= 1
                v += 1
        return out

    @property
    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self.adj) // 2

    @property
    def full_mask(self) -> int:
        return (1 << self.order) - 1


def graph_from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph on ``n`` vertices from unordered pairs (duplicates collapse).

    Raises :class:`OrderRangeError`, :class:`LoopEdgeError`, or
    :class:`VertexRangeError` for the corresponding bad input.
    """
    if not isinstance(n, int) or not 1 <= n <= MAX_ORDER:
        raise OrderRangeError(f"order must be in [1, {MAX_ORDER}], got {n!r}")
    adj = [0] * n
    for u, v in edges:
        if u == v:
            raise LoopEdgeError(f"loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise VertexRangeError(f"edge ({u}, {v}) outside [0, {n - 1}]")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def complement(g: Graph) -> Graph:
    """Same vertices, edges exactly the non-edges of ``g``."""
    full = g.full_mask
    return Graph(g.order, tuple((full & ~m & ~(1 << v)) for v, m in enumerate(g.adj)))


def min_degree(g: Graph) -> int:
    """Minimum vertex degree; 0 whenever an isolated vertex exists."""
    return min(m.bit_count() for m in g.adj)


# -- standard families ----------------------------------------------------


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise GraphInputError(f"complete graph needs n >= 1, got {n}")
    return graph_from_edges(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def empty_graph(n: int) -> Graph:
    if n < 1:
        raise GraphInputError(f"empty graph needs n >= 1, got {n}")
    return Graph(n, (0,) * n)


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphInputError(f"cycle needs n >= 3, got {n}")
    return graph_from_edges(n, [(v, (v + 1) % n) for v in range(n)])


def path_graph(n: int) -> Graph:
    if n < 2:
        raise GraphInputError(f"path needs n >= 2, got {n}")
    return graph_from_edges(n, [(v, v + 1) for v in range(n - 1)])


def star_graph(n: int) -> Graph:
    """Star on ``n`` vertices: center 0 joined to each of 1..n-1."""
    if n < 2:
        raise GraphInputError(f"star needs n >= 2, got {n}")
    return graph_from_edges(n, [(0, v) for v in range(1, n)])


def fk_graph(k: int) -> Graph:
    """The k-vertex "fk" pattern graph.

    With 1-based vertex names, v_i and v_j (i < j) are adjacent exactly when
    i + j <= k + 1.  The family has floor(k^2/4) edges and nests upward: the
    identity map embeds fk_graph(k) into fk_graph(k + 1).  Internally the
    vertices are 0-based, so bits i < j are adjacent iff i + j <= k - 1.
    """
    if k < 2:
        raise GraphInputError(f"fk pattern needs k >= 2, got {k}")
    edges = [(i, j) for i in range(k) for j in range(i + 1, k) if i + j <= k - 1]
    return graph_from_edges(k, edges)


_GENERATORS = {
    "complete": complete_graph,
    "cycle": cycle_graph,
    "path": path_graph,
    "star": star_graph,
    "empty": empty_graph,
    "fk": fk_graph,
}


def generate(family: str, size: int) -> Graph:
    """Generate a member of a named family; ``size`` is n (or k for "fk")."""
    try:
        builder = _GENERATORS[family]
    except KeyError:
        raise GraphInputError(f"unknown family {family!r}; expected one of {FAMILIES}") from None
    return builder(size)
