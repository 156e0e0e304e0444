"""Exact width parameters and small-graph oracles.

Everything here is brute force by design: these functions are the reference
values the structural constructions are checked against.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence

import numpy as np

from . import _kernels
from .errors import CapacityError, ContractError, InputError, InvariantError
from .gf2 import cut_rank_mask
from .graph import Graph, OrderedGraph, induced_subgraph, members

__all__ = [
    "order_width",
    "linear_rankwidth_exact",
    "RankDecompositionTree",
    "caterpillar",
    "edge_widths",
    "decomposition_width",
    "rankwidth_exact",
    "lex_product_decomposition",
    "clique_number",
    "chromatic_number",
    "Cotree",
    "is_cograph",
    "cotree_graph",
]

LRW_GUARD = 20
RW_GUARD = 7
OMEGA_GUARD = 64
CHI_GUARD = 18


def order_width(og: OrderedGraph) -> int:
    """Largest cut-rank over the proper prefixes of the order (0 for n <= 1)."""
    g = og.graph
    best = 0
    prefix = 0
    for v in og.order[:-1]:
        prefix |= 1 << v
        best = max(best, cut_rank_mask(g, prefix))
    return best


def linear_rankwidth_exact(g: Graph, guard: int = LRW_GUARD) -> tuple[int, tuple[int, ...]]:
    """Exact linear rankwidth by subset DP, with an optimal order.

    Among optimal orders the one extending the prefix by the smallest vertex id
    at every step is returned.
    """
    n = g.n
    if n > guard:
        raise CapacityError(f"linear rankwidth DP refuses n={n} > {guard} (raise --guard-n)", "guard-n", guard)
    if n <= 1:
        return 0, tuple(range(n))
    ranks = _kernels.cut_rank_table(list(g.adj), n)
    best = _kernels.prefix_width_table(ranks, n)
    full = (1 << n) - 1
    width = best[full]
    order = []
    placed = 0
    for _ in range(n):
        for v in range(n):
            if placed >> v & 1:
                continue
            rest = full ^ placed ^ (1 << v)
            # the remaining vertices, read backwards, must themselves form a prefix of width <= width
            if best[rest] <= width:
                order.append(v)
                placed |= 1 << v
                break
        else:  # pragma: no cover - the DP guarantees an extension exists
            raise InvariantError("no optimal extension found", witness=order)
    return width, tuple(order)


@dataclass(frozen=True)
class RankDecompositionTree:
    """A subcubic tree with a bijection from graph vertices to its leaves.

    ``leaf_of[v]`` is the tree node holding vertex ``v``.
    """

    n_nodes: int
    edges: tuple[tuple[int, int], ...]
    leaf_of: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple(tuple(e) for e in self.edges))
        object.__setattr__(self, "leaf_of", tuple(self.leaf_of))
        if self.n_nodes < 2:
            raise ContractError("a rank decomposition needs at least two nodes")
        if len(self.edges) != self.n_nodes - 1:
            raise ContractError("tree must have exactly n_nodes - 1 edges")
        deg = [0] * self.n_nodes
        for a, b in self.edges:
            if not (0 <= a < self.n_nodes and 0 <= b < self.n_nodes) or a == b:
                raise ContractError(f"bad tree edge ({a}, {b})")
            deg[a] += 1
            deg[b] += 1
        if any(d not in (1, 3) for d in deg):
            raise ContractError("every tree node must have degree 1 or 3")
        leaves = sorted(i for i, d in enumerate(deg) if d == 1)
        if sorted(self.leaf_of) != leaves:
            raise ContractError("leaf_of must be a bijection onto the leaves")
        seen = {0}
        stack = [0]
        while stack:
            x = stack.pop()
            for y in self.neighbors[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        if len(seen) != self.n_nodes:
            raise ContractError("tree is not connected")

    @cached_property
    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        nb: list[list[int]] = [[] for _ in range(self.n_nodes)]
        for a, b in self.edges:
            nb[a].append(b)
            nb[b].append(a)
        return tuple(tuple(x) for x in nb)

    @property
    def n_leaves(self) -> int:
        return len(self.leaf_of)

    def side_mask(self, edge: tuple[int, int]) -> int:
        """Vertex mask of the leaves on the ``edge[1]`` side after deleting ``edge``."""
        a, b = edge
        vertex_at = {node: v for v, node in enumerate(self.leaf_of)}
        mask = 0
        stack = [(b, a)]
        while stack:
            x, parent = stack.pop()
            if x in vertex_at:
                mask |= 1 << vertex_at[x]
            for y in self.neighbors[x]:
                if y != parent:
                    stack.append((y, x))
        return mask


def caterpillar(order: Sequence[int]) -> RankDecompositionTree:
    """The caterpillar whose spine cuts are exactly the prefixes of ``order``."""
    n = len(order)
    if n < 2:
        raise InputError("a rank decomposition needs at least two vertices")
    leaf_of = [0] * n
    for i, v in enumerate(order):
        leaf_of[v] = i
    if n == 2:
        return RankDecompositionTree(2, ((0, 1),), tuple(leaf_of))
    spine = [n + j for j in range(n - 2)]
    edges = [(spine[j], spine[j + 1]) for j in range(n - 3)]
    edges.append((0, spine[0]))
    for i in range(1, n - 1):
        edges.append((i, spine[i - 1]))
    edges.append((n - 1, spine[-1]))
    return RankDecompositionTree(2 * n - 2, tuple(edges), tuple(leaf_of))


def edge_widths(g: Graph, t: RankDecompositionTree) -> dict[tuple[int, int], int]:
    if t.n_leaves != g.n:
        raise ContractError(f"tree has {t.n_leaves} leaves but the graph has {g.n} vertices")
    return {e: cut_rank_mask(g, t.side_mask(e)) for e in t.edges}


def decomposition_width(g: Graph, t: RankDecompositionTree) -> int:
    return max(edge_widths(g, t).values())


def _labeled_trees(n: int) -> Iterator[list[tuple[int, int]]]:
    """All unrooted binary trees with leaves ``0..n-1`` (leaf ``v`` is node ``v``)."""

    def grow(edges: list[tuple[int, int]], k: int) -> Iterator[list[tuple[int, int]]]:
        if k == n:
            yield edges
            return
        w = n + k - 2
        for i, (a, b) in enumerate(edges):
            new = edges[:i] + [(a, w), (w, b), (w, k)] + edges[i + 1 :]
            yield from grow(new, k + 1)

    yield from grow([(0, 1)], 2)


def _partial_width(g: Graph, edges: list[tuple[int, int]], k: int, n: int) -> int:
    """Width of a partial tree holding leaves ``0..k-1`` measured in ``G[0..k-1]``."""
    nb: dict[int, list[int]] = {}
    for a, b in edges:
        nb.setdefault(a, []).append(b)
        nb.setdefault(b, []).append(a)
    sub_mask = (1 << k) - 1
    adj = [row & sub_mask for row in g.adj[:k]]
    width = 0
    for a, b in edges:
        mask = 0
        stack = [(b, a)]
        while stack:
            x, parent = stack.pop()
            if x < n:
                mask |= 1 << x
            for y in nb[x]:
                if y != parent:
                    stack.append((y, x))
        comp = sub_mask & ~mask
        if mask and comp:
            width = max(width, _kernels.rank_rows([adj[v] & comp for v in members(mask)]))
    return width


def rankwidth_exact(g: Graph, guard: int = RW_GUARD) -> tuple[int, RankDecompositionTree]:
    """Exact rankwidth by enumerating every leaf-labeled subcubic tree.

    Trees are grown by leaf insertion; a partial tree whose width on the
    induced subgraph already reaches the best value is pruned (cut-rank can only
    grow when vertices are added).  The first optimal tree in enumeration order
    is returned.
    """
    n = g.n
    if n < 2:
        raise InputError("rankwidth needs at least two vertices")
    if n > guard:
        raise CapacityError(f"rankwidth enumeration refuses n={n} > {guard}", "guard-rw", guard)
    best = [n + 1, None]

    def grow(edges: list[tuple[int, int]], k: int):
        w = _partial_width(g, edges, k, n)
        if w >= best[0]:
            return
        if k == n:
            best[0], best[1] = w, edges
            return
        node = n + k - 2
        for i, (a, b) in enumerate(edges):
            grow(edges[:i] + [(a, node), (node, b), (node, k)] + edges[i + 1 :], k + 1)

    grow([(0, 1)], 2)
    edges = best[1]
    return best[0], RankDecompositionTree(2 * n - 2, tuple(edges), tuple(range(n)))


def lex_product_decomposition(yg: RankDecompositionTree, yh: RankDecompositionTree) -> RankDecompositionTree:
    """Glue one copy of ``yh`` onto every G-leaf of ``yg``.

    ``yg`` decomposes ``G ⊗ K1`` (apex is vertex ``|G|``) and ``yh`` decomposes
    ``H ⊗ K1`` (apex ``|H|``).  The result decomposes ``(G • H) ⊗ K1`` with
    vertex ``(u, v)`` at id ``u*|H| + v`` and the apex at ``|G|*|H|``.  Each
    identified leaf pair would form a degree-2 node, which is suppressed.
    """
    ng = yg.n_leaves - 1
    nh = yh.n_leaves - 1
    if ng < 1 or nh < 1:
        raise InputError("both decompositions need at least one non-apex leaf")
    edges: list[tuple[int, int]] = []
    g_leaf_nodes = set(yg.leaf_of[:ng])
    beta = yh.leaf_of[nh]
    (beta_nb,) = yh.neighbors[beta]
    attach = {}
    for u in range(ng):
        (attach[yg.leaf_of[u]],) = yg.neighbors[yg.leaf_of[u]]
    node_id: dict[tuple[str, int, int], int] = {}

    def nid(key):
        if key not in node_id:
            node_id[key] = len(node_id)
        return node_id[key]

    for a, b in yg.edges:
        if a in g_leaf_nodes or b in g_leaf_nodes:
            continue
        edges.append((nid(("g", 0, a)), nid(("g", 0, b))))
    for u in range(ng):
        for a, b in yh.edges:
            if beta in (a, b):
                continue
            edges.append((nid(("h", u, a)), nid(("h", u, b))))
        edges.append((nid(("g", 0, attach[yg.leaf_of[u]])), nid(("h", u, beta_nb))))
    leaf_of = [0] * (ng * nh + 1)
    for u in range(ng):
        for v in range(nh):
            leaf_of[u * nh + v] = nid(("h", u, yh.leaf_of[v]))
    leaf_of[ng * nh] = nid(("g", 0, yg.leaf_of[ng]))
    return RankDecompositionTree(len(node_id), tuple(edges), tuple(leaf_of))


def clique_number(g: Graph, guard: int = OMEGA_GUARD) -> int:
    """Exact clique number by branch and bound over bitsets."""
    if g.n > guard:
        raise CapacityError(f"clique search refuses n={g.n} > {guard}", "guard-omega", guard)
    adj = g.adj
    best = 0

    def expand(size: int, cand: int):
        nonlocal best
        if not cand:
            best = max(best, size)
            return
        while cand:
            if size + cand.bit_count() <= best:
                return
            v = cand.bit_length() - 1
            expand(size + 1, cand & adj[v])
            cand &= ~(1 << v)

    expand(0, g.vertex_mask)
    return best


def chromatic_number(g: Graph, guard: int = CHI_GUARD) -> int:
    """Exact chromatic number by inclusion-exclusion over independent-set counts."""
    n = g.n
    if n > guard:
        raise CapacityError(f"chromatic number DP refuses n={n} > {guard}", "guard-chi", guard)
    if n == 0:
        return 0
    if g.m == 0:
        return 1
    size = 1 << n
    indep = np.zeros(size, dtype=np.int64)
    indep[0] = 1
    for b in range(n):
        lo = np.arange(1 << b, dtype=np.int64)
        closed = g.adj[b] | (1 << b)
        indep[(1 << b) : (2 << b)] = indep[lo] + indep[lo & ~closed]
    parity = np.zeros(size, dtype=np.int64)
    for b in range(n):
        parity ^= (np.arange(size, dtype=np.int64) >> b) & 1
    sign = np.where((n - parity) % 2 == 0, 1, -1)
    weights: Counter[int] = Counter()
    for value, s in zip(indep.tolist(), sign.tolist()):
        weights[value] += s
    terms = [(value, w) for value, w in weights.items() if w]
    for k in range(1, n + 1):
        if sum(w * value**k for value, w in terms) > 0:
            return k
    raise InvariantError("no proper coloring found")  # pragma: no cover


@dataclass(frozen=True)
class Cotree:
    """Union/join tree; leaves carry a vertex id."""

    kind: str
    vertex: int | None = None
    children: tuple[Cotree, ...] = ()

    @property
    def height(self) -> int:
        """Number of nodes on the longest root-to-leaf path."""
        if self.kind == "leaf":
            return 1
        return 1 + max(c.height for c in self.children)

    def leaves(self) -> list[int]:
        if self.kind == "leaf":
            return [self.vertex]
        return [v for c in self.children for v in c.leaves()]

    def to_dict(self):
        if self.kind == "leaf":
            return self.vertex
        return {self.kind: [c.to_dict() for c in self.children]}


def cotree_graph(t: Cotree, n: int) -> Graph:
    """The graph on ``0..n-1`` defined by ``t`` (vertices missing from ``t`` stay isolated)."""
    rows = [0] * n

    def walk(node: Cotree) -> int:
        if node.kind == "leaf":
            return 1 << node.vertex
        masks = [walk(c) for c in node.children]
        if node.kind == "join":
            total = 0
            for m in masks:
                total |= m
            for m in masks:
                for v in members(m):
                    rows[v] |= total & ~m
        return sum(masks)

    walk(t)
    return Graph(n, tuple(rows))


def _components(adj: Sequence[int], mask: int) -> list[int]:
    comps = []
    rest = mask
    while rest:
        low = rest & -rest
        seen = frontier = low
        while frontier:
            v = (frontier & -frontier).bit_length() - 1
            frontier &= frontier - 1
            new = adj[v] & mask & ~seen
            seen |= new
            frontier |= new
        comps.append(seen)
        rest &= ~seen
    return comps


class _NotCograph(Exception):
    def __init__(self, p4):
        self.p4 = p4


def _find_p4(adj: Sequence[int], mask: int) -> tuple[int, int, int, int]:
    for b in members(mask):
        for c in members(adj[b] & mask):
            left = adj[b] & mask & ~adj[c] & ~(1 << c)
            right = adj[c] & mask & ~adj[b] & ~(1 << b)
            for a in members(left):
                d = right & ~adj[a]
                if d:
                    return a, b, c, (d & -d).bit_length() - 1
    raise InvariantError("connected and co-connected graph without induced P4", witness=members(mask))


def is_cograph(g: Graph) -> tuple[bool, Cotree | tuple[int, int, int, int] | None]:
    """Recognize cographs by recursive union/join splitting.

    Returns ``(True, cotree)`` or ``(False, (a, b, c, d))`` where ``a-b-c-d`` is
    an induced P4.  The empty graph yields ``(True, None)``.
    """
    if g.n == 0:
        return True, None
    adj = g.adj
    co = g.complement().adj

    def build(mask: int) -> Cotree:
        if mask & (mask - 1) == 0:
            return Cotree("leaf", mask.bit_length() - 1)
        comps = _components(adj, mask)
        if len(comps) > 1:
            return Cotree("union", None, tuple(build(c) for c in comps))
        cocomps = _components(co, mask)
        if len(cocomps) > 1:
            return Cotree("join", None, tuple(build(c) for c in cocomps))
        raise _NotCograph(_find_p4(adj, mask))

    try:
        return True, build(g.vertex_mask)
    except _NotCograph as exc:
        return False, exc.p4


def induced_is_cograph(g: Graph, s) -> bool:
    sub, _ = induced_subgraph(g, s)
    return is_cograph(sub)[0]
