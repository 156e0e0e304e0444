"""Activity intervals, active bases and the delegation tree of an ordered graph.

All data here lives in *position space*: vertex ``p`` means the vertex at
position ``p`` of the analyzed order, so ``u < v`` is the order relation.
Use :meth:`ActivityData.vertex` / :meth:`ActivityData.position` to convert.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import ContractError, InputError, InvariantError
from .gf2 import Eliminator, greedy_basis
from .graph import Graph, OrderedGraph

__all__ = [
    "ActivityData",
    "FTree",
    "analyze",
    "f_step",
    "build_f_tree",
    "xi",
    "reconstruct_adjacency",
    "meet",
]

Node = frozenset  # a member of Z: empty set, singleton or active set of positions


@dataclass(frozen=True, eq=False)
class ActivityData:
    og: OrderedGraph
    graph: Graph  # positional graph
    r: int
    tau: tuple[int, ...]
    bases: tuple[tuple[int, ...], ...]
    f0: tuple[frozenset[int], ...]

    @property
    def n(self) -> int:
        return self.graph.n

    def vertex(self, p: int) -> int:
        return self.og.order[p]

    def position(self, v: int) -> int:
        return self.og.position[v]

    def is_active(self, p: int) -> bool:
        return p < self.tau[p]

    @cached_property
    def active(self) -> tuple[bool, ...]:
        return tuple(p < t for p, t in enumerate(self.tau))

    def tau_of(self, m: Node) -> int:
        """``min tau`` over ``m``; the empty set gets ``n`` (beyond every position)."""
        return min((self.tau[x] for x in m), default=self.n)

    def interval(self, m: Node) -> tuple[int, int] | None:
        """``I_M = [max M, tau(M)]`` or None when empty."""
        if not m:
            return None
        lo, hi = max(m), self.tau_of(m)
        return (lo, hi) if lo <= hi else None

    def in_interval(self, w: int, m: Node) -> bool:
        iv = self.interval(m)
        return iv is not None and iv[0] <= w <= iv[1]

    def in_z(self, m: Node) -> bool:
        return len(m) <= 1 or max(m) < self.tau_of(m)

    def xor_neighborhood(self, m: Node) -> int:
        acc = 0
        for x in m:
            acc ^= self.graph.adj[x]
        return acc

    @cached_property
    def chains(self) -> tuple[tuple[Node, ...], ...]:
        """``chains[u] = ({u}, F({u}), F^2({u}), ..., ∅)``."""
        out = []
        for u in range(self.n):
            seq = [frozenset((u,))]
            while seq[-1]:
                seq.append(f_step(self, seq[-1]))
            out.append(tuple(seq))
        return tuple(out)

    def iterate(self, u: int, k: int) -> Node:
        """``F^k({u})``."""
        seq = self.chains[u]
        return seq[k] if k < len(seq) else frozenset()


def analyze(og: OrderedGraph, check: bool = True) -> ActivityData:
    """Left-to-right sweep computing active bases ``B_t``, ``tau`` and ``F0``.

    ``B_t`` is only searched among ``B_{t-1} ∪ {t}``: a vertex that left the
    greedy basis cannot return.  With ``check`` every ``B_t`` is recomputed from
    all vertices ``<= t`` and compared, so that threshold behaviour is asserted.
    """
    g = og.positional_graph
    n = g.n
    if n == 0:
        raise InputError("cannot analyze the empty graph")
    full = (1 << n) - 1
    tau: list[int | None] = [None] * n
    f0: list[frozenset[int]] = [frozenset()] * n
    bases: list[tuple[int, ...]] = []
    prev: list[int] = []
    for t in range(n):
        suffix = full & ~((1 << (t + 1)) - 1)
        elim = Eliminator()
        kept = []
        for w in prev + [t]:
            vec = g.adj[w] & suffix
            combo = elim.express(vec)
            if combo is None:
                elim.add(vec, w)
                kept.append(w)
            else:
                tau[w] = t
                f0[w] = frozenset(combo)
        if check:
            scan = list(range(t + 1))
            fresh = [scan[i] for i in greedy_basis([g.adj[w] & suffix for w in scan])]
            if fresh != kept:
                raise InvariantError(f"incremental basis differs from the greedy basis at position {t}", witness=(t, kept, fresh))
        bases.append(tuple(kept))
        prev = kept
    if any(x is None for x in tau):  # pragma: no cover - B_{n-1} is always empty
        raise InvariantError("some vertex never left the active basis")
    r = max(len(b) for b in bases)
    return ActivityData(og, g, r, tuple(tau), tuple(bases), tuple(f0))


def f_step(ad: ActivityData, m: Node) -> Node:
    """One delegation step: drop the unique ``tau``-minimal member and XOR in its ``F0``."""
    m = frozenset(m)
    if not m:
        return m
    if not ad.in_z(m):
        raise ContractError(f"{sorted(m)} is neither a singleton nor an active set")
    t = ad.tau_of(m)
    hits = [x for x in m if ad.tau[x] == t]
    if len(hits) != 1:
        raise InvariantError("several members share the minimal tau", witness=(sorted(m), hits))
    (v,) = hits
    return m ^ {v} ^ ad.f0[v]


@dataclass(frozen=True)
class FTree:
    nodes: tuple[Node, ...]
    parent: dict
    depth: dict  # nodes on the path to the root, root included (root has depth 1)

    @property
    def root(self) -> Node:
        return frozenset()

    @property
    def height(self) -> int:
        return max(self.depth.values())

    @cached_property
    def children(self) -> dict:
        out: dict = {m: [] for m in self.nodes}
        for m in self.nodes:
            if m:
                out[self.parent[m]].append(m)
        return out


def _node_key(m: Node):
    return (len(m), sorted(m))


def build_f_tree(ad: ActivityData) -> FTree:
    """Close all singletons under ``F``; every edge must strictly raise ``tau``."""
    parent = {}
    for u in range(ad.n):
        for m, up in zip(ad.chains[u], ad.chains[u][1:]):
            if m in parent:
                break
            if up:
                if not (max(up) <= max(m) <= ad.tau_of(m) < ad.tau_of(up)):
                    raise InvariantError("F does not raise tau along an edge", witness=(sorted(m), sorted(up)))
            parent[m] = up
    root = frozenset()
    depth = {root: 1}

    def d(m):
        if m not in depth:
            depth[m] = d(parent[m]) + 1
        return depth[m]

    for m in parent:
        d(m)
    nodes = tuple(sorted(depth, key=_node_key))
    return FTree(nodes, parent, depth)


def xi(ad: ActivityData, u: int, v: int) -> int:
    """Least ``k`` with ``v ∈ I_{F^k(u)}`` or ``F^k(u) = ∅``."""
    if u == v:
        raise InputError("xi needs two distinct vertices")
    for k, m in enumerate(ad.chains[u]):
        if not m:
            return k
        if u < v:
            if ad.tau_of(m) >= v:
                return k
        elif ad.in_interval(v, m):
            return k
    raise InvariantError("delegation chain did not reach the root")  # pragma: no cover


def reconstruct_adjacency(ad: ActivityData, u: int, v: int) -> bool:
    """Adjacency recovered from the delegation chain: ``v ∈ N_⊕(F^ξ(u,v)(u))`` for ``u < v``."""
    if u == v:
        raise InputError("adjacency of a vertex with itself is undefined")
    if u > v:
        u, v = v, u
    m = ad.iterate(u, xi(ad, u, v))
    return bool(ad.xor_neighborhood(m) >> v & 1)


def meet(ad: ActivityData, u: int, v: int) -> Node:
    """Greatest common ancestor of ``{u}`` and ``{v}`` in the F-tree."""
    on_path = set(ad.chains[v])
    for m in ad.chains[u]:
        if m in on_path:
            return m
    return frozenset()  # pragma: no cover


