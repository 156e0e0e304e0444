"""Activity intervals as an interval graph, and centered colorings of it.

Position ``p`` owns the closed interval ``[p, tau(p)]``.  Intersections follow
that closed-interval reading: an interval ending at ``t`` meets one starting at
``t``.  For export the endpoints are renumbered to pairwise distinct integers
in an order-preserving way (lefts before rights at the same position).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from ._kernels import first_uncentered
from .activity import ActivityData
from .errors import CapacityError, ContractError, InputError, InvariantError
from .graph import Digraph, Graph, mask_of, members

__all__ = [
    "IntervalFamily",
    "CenteredColoring",
    "RootedForest",
    "build_interval_graph",
    "orient",
    "p_centered_coloring",
    "verify_centered",
    "cover_forest",
    "CENTERED_GUARD",
]

CENTERED_GUARD = 14


@dataclass(frozen=True)
class IntervalFamily:
    """Intervals indexed by position; ``order[p]`` is the vertex id owning interval ``p``."""

    left: tuple[int, ...]
    right: tuple[int, ...]
    order: tuple[int, ...]

    def __post_init__(self):
        if not len(self.left) == len(self.right) == len(self.order):
            raise InputError("interval family fields disagree in length")
        for lo, hi in zip(self.left, self.right):
            if lo > hi:
                raise InputError(f"interval [{lo}, {hi}] is reversed")

    @property
    def n(self) -> int:
        return len(self.left)

    def meets(self, a: int, b: int) -> bool:
        return self.left[a] <= self.right[b] and self.left[b] <= self.right[a]

    @cached_property
    def graph(self) -> Graph:
        rows = [0] * self.n
        for a in range(self.n):
            for b in range(a + 1, self.n):
                if self.meets(a, b):
                    rows[a] |= 1 << b
                    rows[b] |= 1 << a
        return Graph(self.n, tuple(rows))

    @cached_property
    def loads(self) -> tuple[int, ...]:
        """Number of intervals containing each integer point ``0..max right``."""
        top = max(self.right, default=-1)
        delta = [0] * (top + 2)
        for lo, hi in zip(self.left, self.right):
            delta[lo] += 1
            delta[hi + 1] -= 1
        out, run = [], 0
        for d in delta[:-1]:
            run += d
            out.append(run)
        return tuple(out)

    @property
    def max_load(self) -> int:
        return max(self.loads, default=0)

    @property
    def certificate(self) -> int:
        """Pathwidth bound witnessed by the interval model (largest clique minus one)."""
        return max(self.max_load - 1, 0)

    def normalized_endpoints(self) -> tuple[tuple[int, int], ...]:
        """Distinct endpoints ``0..2n-1`` with the same intersection pattern.

        At a shared position lefts come before rights, and among rights the
        interval that opened later closes first.
        """
        events = []
        for a in range(self.n):
            events.append((self.left[a], 0, -self.left[a], a))
            events.append((self.right[a], 1, -self.left[a], a))
        events.sort()
        lo, hi = [0] * self.n, [0] * self.n
        for rank, (_, kind, _, a) in enumerate(events):
            if kind == 0:
                lo[a] = rank
            else:
                hi[a] = rank
        return tuple(zip(lo, hi))

    def export(self) -> str:
        """One ``v left right`` line per interval, using the normalized endpoints."""
        ends = self.normalized_endpoints()
        return "".join(f"{self.order[a]} {lo} {hi}\n" for a, (lo, hi) in enumerate(ends))


def build_interval_graph(ad: ActivityData) -> IntervalFamily:
    fam = IntervalFamily(tuple(range(ad.n)), tuple(ad.tau), tuple(ad.og.order))
    for t, load in enumerate(fam.loads):
        if load > ad.r + 2:
            raise InvariantError(f"{load} activity intervals meet at position {t}", witness=t)
    return fam


def orient(f: IntervalFamily) -> Digraph:
    """Every edge points from the later left endpoint to the earlier one."""
    h = f.graph
    order = sorted(range(f.n), key=lambda a: f.left[a])
    rank = {a: i for i, a in enumerate(order)}
    return Digraph(f.n, tuple(mask_of(b for b in members(h.adj[a]) if rank[b] < rank[a]) for a in range(f.n)))


@dataclass(frozen=True)
class CenteredColoring:
    p: int
    colors: tuple[int, ...]

    @property
    def palette(self) -> int:
        return max(self.colors, default=0)


def p_centered_coloring(f: IntervalFamily, p: int) -> CenteredColoring:
    """First-fit avoiding the colors of the ``p``-th iterated closed out-neighborhood."""
    if p < 1:
        raise InputError("p must be at least 1")
    d = orient(f)
    colors = [0] * f.n
    for v in sorted(range(f.n), key=lambda a: f.left[a]):
        reach = 1 << v
        for _ in range(p):
            grown = reach
            for u in members(reach):
                grown |= d.out[u]
            if grown == reach:
                break
            reach = grown
        taken = {colors[u] for u in members(reach & ~(1 << v))}
        c = 1
        while c in taken:
            c += 1
        colors[v] = c
    return CenteredColoring(p, tuple(colors))


def verify_centered(g: Graph, colors: Sequence[int] | CenteredColoring, q: int, guard: int = CENTERED_GUARD) -> tuple[bool, list[int] | None]:
    """Check that every connected induced subgraph has a unique color or at least ``q`` colors."""
    if isinstance(colors, CenteredColoring):
        colors = colors.colors
    if len(colors) != g.n:
        raise InputError("one color per vertex is required")
    if g.n > guard:
        raise CapacityError(f"centeredness check enumerates subsets of {g.n} > {guard} vertices", "n", guard)
    bad = first_uncentered(list(g.adj), list(colors), q)
    return (True, None) if bad < 0 else (False, members(bad))


@dataclass(frozen=True)
class RootedForest:
    """``parent[v]`` is None for roots; only the vertices of the chosen colors appear."""

    parent: dict

    @cached_property
    def children(self) -> dict:
        out: dict = {v: [] for v in self.parent}
        for v, up in self.parent.items():
            if up is not None:
                out[up].append(v)
        for kids in out.values():
            kids.sort()
        return out

    @property
    def roots(self) -> list[int]:
        return sorted(v for v, up in self.parent.items() if up is None)

    def preorder(self) -> list[int]:
        out = []
        stack = list(reversed(self.roots))
        while stack:
            v = stack.pop()
            out.append(v)
            stack.extend(reversed(self.children[v]))
        return out

    def ancestors(self, v: int) -> list[int]:
        out = []
        while self.parent[v] is not None:
            v = self.parent[v]
            out.append(v)
        return out

    @property
    def height(self) -> int:
        return max((len(self.ancestors(v)) + 1 for v in self.parent), default=0)


def _components(adj: Sequence[int], mask: int) -> list[int]:
    comps = []
    while mask:
        seen = frontier = mask & -mask
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            new = adj[low.bit_length() - 1] & mask & ~seen
            seen |= new
            frontier |= new
        comps.append(seen)
        mask &= ~seen
    return comps


def cover_forest(f: IntervalFamily, c: CenteredColoring, colorset) -> RootedForest:
    """Forest on the vertices colored from ``colorset`` whose closure holds every edge among them.

    In each connected piece the earliest vertex (by left endpoint) must carry a
    color seen nowhere else in the piece; it becomes the root and the rest of
    the piece is handled recursively.
    """
    colorset = frozenset(colorset)
    if len(colorset) > c.p:
        raise ContractError(f"at most {c.p} colors may be selected, got {len(colorset)}")
    h = f.graph
    chosen = mask_of(a for a in range(f.n) if c.colors[a] in colorset)
    parent: dict = {}
    stack = [(chosen, None)]
    while stack:
        mask, up = stack.pop()
        for comp in _components(h.adj, mask):
            verts = members(comp)
            root = min(verts, key=lambda a: f.left[a])
            if sum(1 for a in verts if c.colors[a] == c.colors[root]) != 1:
                raise InvariantError("earliest vertex of a piece shares its color", witness=verts)
            parent[root] = up
            stack.append((comp & ~(1 << root), root))
    forest = RootedForest(parent)
    pre = forest.preorder()
    if [f.left[a] for a in pre] != sorted(f.left[a] for a in pre):
        raise InvariantError("forest pre-order differs from the interval order", witness=pre)
    for a in members(chosen):
        anc = set(forest.ancestors(a))
        for b in members(h.adj[a] & chosen):
            if b not in anc and a not in forest.ancestors(b):
                raise InvariantError("an edge escapes the forest closure", witness=(a, b))
    return forest
