"""Graphs as packed adjacency bit-rows, plus the generators used throughout.

A :class:`Graph` stores one Python ``int`` per vertex; bit ``u`` of row ``v``
is set iff ``{u, v}`` is an edge.  Vertex ids are always ``0..n-1``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .errors import InputError

__all__ = [
    "Graph",
    "Digraph",
    "OrderedGraph",
    "from_edge_list",
    "edgeless",
    "complete",
    "path",
    "cycle",
    "half_graph",
    "lozin_h",
    "lex_product",
    "join_apex",
    "induced_subgraph",
    "named_graph",
    "parse_edge_list",
    "format_edge_list",
    "mask_of",
    "members",
]


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def members(mask: int) -> list[int]:
    """Indices of the set bits of ``mask`` in increasing order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0 or len(self.adj) != self.n:
            raise InputError("adjacency must have exactly n rows")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full or (row >> v) & 1:
                raise InputError(f"row {v} has bits outside the vertex range or on the diagonal")
        for v, row in enumerate(self.adj):
            for u in members(row):
                if not (self.adj[u] >> v) & 1:
                    raise InputError(f"adjacency is not symmetric at ({u}, {v})")

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def neighbors(self, v: int) -> list[int]:
        return members(self.adj[v])

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in members(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def complement(self) -> Graph:
        full = self.vertex_mask
        return Graph(self.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(self.adj)))

    def relabel(self, new_id: Sequence[int]) -> Graph:
        """Return the graph in which old vertex ``v`` is called ``new_id[v]``."""
        if sorted(new_id) != list(range(self.n)):
            raise InputError("relabeling must be a permutation of 0..n-1")
        rows = [0] * self.n
        for v, row in enumerate(self.adj):
            rows[new_id[v]] = mask_of(new_id[u] for u in members(row))
        return Graph(self.n, tuple(rows))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class Digraph:
    """Directed graph; bit ``u`` of ``out[v]`` is set iff there is an arc ``v -> u``."""

    n: int
    out: tuple[int, ...]

    def has_arc(self, u: int, v: int) -> bool:
        return bool((self.out[u] >> v) & 1)

    def arcs(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in members(self.out[u])]

    def underlying(self) -> Graph:
        rows = list(self.out)
        for u in range(self.n):
            for v in members(self.out[u]):
                rows[v] |= 1 << u
        return Graph(self.n, tuple(rows))


@dataclass(frozen=True)
class OrderedGraph:
    """A graph together with a linear order; ``order[p]`` is the vertex at position ``p``."""

    graph: Graph
    order: tuple[int, ...] = field(default=())

    def __post_init__(self):
        if not self.order and self.graph.n:
            object.__setattr__(self, "order", tuple(range(self.graph.n)))
        else:
            object.__setattr__(self, "order", tuple(self.order))
        if sorted(self.order) != list(range(self.graph.n)):
            raise InputError("order must be a permutation of the vertex set")

    @cached_property
    def position(self) -> tuple[int, ...]:
        pos = [0] * self.graph.n
        for p, v in enumerate(self.order):
            pos[v] = p
        return tuple(pos)

    @cached_property
    def positional_graph(self) -> Graph:
        """The same graph with every vertex renamed to its position in the order."""
        return self.graph.relabel(self.position)

    @cached_property
    def width(self) -> int:
        from .width import order_width

        return order_width(self)


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    if n < 0:
        raise InputError("vertex count must be non-negative")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise InputError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise InputError(f"self-loop at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def edgeless(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def path(n: int) -> Graph:
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise InputError("a cycle needs at least 3 vertices")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def half_graph(k: int) -> Graph:
    """Half-graph of order ``k``: ``a_i = i-1``, ``b_j = k+j-1``, edge iff ``i <= j``."""
    if k < 1:
        raise InputError("half-graph order must be at least 1")
    return from_edge_list(2 * k, [(i, k + j) for i in range(k) for j in range(i, k)])


def lozin_h(n: int, m: int, tilde: bool = False) -> Graph:
    """Lozin's graph on ``[n] x [m]``; vertex ``v_{i,j}`` has id ``(i-1)*m + (j-1)``.

    ``v_{i,j}`` and ``v_{i+1,j'}`` are adjacent iff ``j' <= j``; with ``tilde``
    every row additionally becomes a clique.
    """
    if n < 1 or m < 1:
        raise InputError("both dimensions must be at least 1")
    vid = lambda i, j: i * m + j  # noqa: E731
    edges = [(vid(i, j), vid(i + 1, jj)) for i in range(n - 1) for j in range(m) for jj in range(j + 1)]
    if tilde:
        edges += [(vid(i, j), vid(i, jj)) for i in range(n) for j, jj in itertools.combinations(range(m), 2)]
    return from_edge_list(n * m, edges)


def lex_product(g: Graph, h: Graph) -> Graph:
    """Lexicographic product; vertex ``(u, v)`` gets id ``u*|H| + v``."""
    if g.n == 0 or h.n == 0:
        raise InputError("lexicographic product needs two nonempty factors")
    k = h.n
    block = (1 << k) - 1
    rows = []
    for u in range(g.n):
        outer = 0
        for x in members(g.adj[u]):
            outer |= block << (x * k)
        for v in range(k):
            rows.append(outer | (h.adj[v] << (u * k)))
    return Graph(g.n * k, tuple(rows))


def join_apex(g: Graph) -> Graph:
    """``G ⊗ K1``: add vertex ``n`` adjacent to every vertex of ``g``."""
    n = g.n
    rows = [row | (1 << n) for row in g.adj]
    rows.append((1 << n) - 1)
    return Graph(n + 1, tuple(rows))


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, list[int]]:
    """Subgraph induced by ``s``, reindexed by increasing original id.

    Returns the subgraph and the list mapping new ids to original ids.
    """
    keep = sorted(set(s))
    for v in keep:
        if not 0 <= v < g.n:
            raise InputError(f"vertex {v} not in graph")
    index = {v: i for i, v in enumerate(keep)}
    rows = tuple(mask_of(index[u] for u in members(g.adj[v]) if u in index) for v in keep)
    return Graph(len(keep), rows), keep


_NAMED = {
    "K1": lambda: complete(1),
    "K2": lambda: complete(2),
    "K3": lambda: complete(3),
    "P3": lambda: path(3),
    "P4": lambda: path(4),
    "C4": lambda: cycle(4),
    "C5": lambda: cycle(5),
}


def named_graph(name: str) -> Graph:
    """Small named graphs: ``K<n>``, ``P<n>``, ``C<n>``, ``E<n>`` (edgeless)."""
    if name in _NAMED:
        return _NAMED[name]()
    kind, digits = name[:1].upper(), name[1:]
    if not digits.isdigit():
        raise InputError(f"unknown graph name {name!r}")
    k = int(digits)
    builders = {"K": complete, "P": path, "C": cycle, "E": edgeless}
    if kind not in builders:
        raise InputError(f"unknown graph name {name!r}")
    return builders[kind](k)


def parse_edge_list(text: str) -> Graph:
    """Parse the ``n m`` / ``u v`` edge-list format; blank lines and ``#`` comments are skipped."""
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines:
        raise InputError("edge list is empty")
    try:
        header = [int(tok) for tok in lines[0].split()]
        body = [tuple(int(tok) for tok in line.split()) for line in lines[1:]]
    except ValueError as exc:
        raise InputError(f"non-integer token in edge list: {exc}") from None
    if len(header) != 2:
        raise InputError("header must be 'n m'")
    n, m = header
    if len(body) != m:
        raise InputError(f"header announces {m} edges but {len(body)} were given")
    for pair in body:
        if len(pair) != 2:
            raise InputError(f"edge line must hold two ids, got {pair}")
    return from_edge_list(n, body)


def format_edge_list(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"
