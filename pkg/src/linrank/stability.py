"""Half-graph order, alternation chains and vertex-Ramsey lexicographic powers."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

from ._kernels import first_ramsey_refutation
from .activity import ActivityData, xi
from .encoding import ColoredOrder
from .errors import CapacityError, ContractError, InputError
from .graph import Graph, lex_product, mask_of, members

__all__ = [
    "ORDER_INDEX_GUARD",
    "LEX_POWER_GUARD",
    "RAMSEY_GUARD",
    "order_index",
    "half_graph_witness",
    "Context",
    "AlternationChain",
    "StabilityData",
    "zeta",
    "contexts",
    "max_alternation_chain",
    "n_c",
    "z_partition",
    "lex_power",
    "substitution",
    "induced_copies",
    "verify_vertex_ramsey",
]

ORDER_INDEX_GUARD = 16
LEX_POWER_GUARD = 4096
RAMSEY_GUARD = 1 << 24


def half_graph_witness(g: Graph, guard: int = ORDER_INDEX_GUARD, cap: int | None = None) -> tuple[list[int], list[int]]:
    """Tuples ``a, b`` of a largest semi-induced half-graph (``a_i ~ b_j`` iff ``i <= j``).

    The search grows the half-graph one pair at a time: a new ``a`` must miss
    every earlier ``b``, a new ``b`` must see every ``a`` so far.  Branches are
    cut when the surviving candidates cannot beat the best order found.
    """
    if g.n > guard and cap is None:
        raise CapacityError(f"half-graph search on {g.n} > {guard} vertices needs a cap", "n", guard)
    adj = g.adj
    full = g.vertex_mask
    non = [full & ~row & ~(1 << v) for v, row in enumerate(adj)]
    best: list = [[], []]
    limit = cap if cap is not None else g.n // 2

    def grow(a: list[int], b: list[int], cand_a: int, cand_b: int) -> bool:
        if len(a) > len(best[0]):
            best[0], best[1] = list(a), list(b)
            if len(a) >= limit:
                return True
        room = min(cand_a.bit_count(), cand_b.bit_count())
        if len(a) + room <= len(best[0]):
            return False
        order = sorted(members(cand_a), key=lambda v: -(adj[v] & cand_b).bit_count())
        for x in order:
            pool = cand_b & adj[x]
            for y in members(pool):
                used = (1 << x) | (1 << y)
                a.append(x)
                b.append(y)
                if grow(a, b, cand_a & non[y] & ~used, cand_b & adj[x] & ~used):
                    return True
                a.pop()
                b.pop()
        return False

    grow([], [], full, full)
    return best[0], best[1]


def order_index(g: Graph, guard: int = ORDER_INDEX_GUARD, cap: int | None = None) -> int:
    """Largest ``k`` such that ``g`` semi-induces a half-graph of order ``k`` (at most ``cap``)."""
    return len(half_graph_witness(g, guard, cap)[0])


def _component(seq: tuple, k: int) -> set:
    """``k``-th delegate color set; past the stored ones the delegate is empty."""
    return set(seq[k]) if k < len(seq) else set()


@dataclass(frozen=True)
class Context:
    """``(l1, Cl1, C1, l2, Cl2, C2)`` with class sequences and NC sets in canonical tuple form."""

    l1: int
    cl1: tuple
    c1: tuple
    l2: int
    cl2: tuple
    c2: tuple

    @property
    def disagrees(self) -> bool:
        first = len(set(self.c2) & _component(self.cl1, self.l1)) % 2
        second = len(set(self.c1) & _component(self.cl2, self.l2)) % 2
        return first != second


@dataclass(frozen=True)
class AlternationChain:
    """Pairs ``(u_1, v_1), (u_2, v_2), ...`` produced by alternately applying zeta."""

    context: Context
    pairs: tuple[tuple[int, int], ...]

    @property
    def length(self) -> int:
        """Pairs beyond the first: a chain of ``p + 1`` pairs has length ``p``."""
        return len(self.pairs) - 1

    @property
    def sequence(self) -> tuple[int, ...]:
        """``v_1, u_1, v_2, u_2, ...``, strictly decreasing in position."""
        return tuple(x for u, v in self.pairs for x in (v, u))


class StabilityData:
    """Tables shared by zeta, chains and Z-classes for one encoded ordered graph."""

    def __init__(self, ad: ActivityData, labels: ColoredOrder):
        if labels.n != ad.n or labels.r != ad.r:
            raise ContractError("labels were not produced from this activity data")
        self.ad = ad
        self.labels = labels

    @cached_property
    def xi(self) -> list[list[int]]:
        n = self.ad.n
        return [[xi(self.ad, u, v) if u != v else -1 for v in range(n)] for u in range(n)]

    @cached_property
    def class_keys(self) -> list[tuple]:
        return [lab.class_nc_key for lab in self.labels.labels]

    def context(self, u: int, v: int) -> Context:
        lu, lv = self.labels.labels[u], self.labels.labels[v]
        cu, cv = lu.class_nc_key, lv.class_nc_key
        return Context(self.xi[u][v], cu[0], cu[1], self.xi[v][u], cv[0], cv[1])

    def zeta(self, u: int, v: int) -> tuple[int, int] | None:
        if not 0 <= u < v < self.ad.n:
            raise InputError(f"zeta needs positions u < v, got ({u}, {v})")
        l1, l2 = self.xi[u][v], self.xi[v][u]
        target = self.ad.iterate(v, l2)
        key = self.class_keys[v]
        for w in range(u - 1, -1, -1):
            if (
                self.class_keys[w] == key
                and self.xi[u][w] == l1
                and self.xi[w][u] == l2
                and self.ad.iterate(w, l2) == target
            ):
                return (w, u)
        return None

    def chain_from(self, u: int, v: int) -> AlternationChain:
        pairs = [(u, v)]
        cur = (u, v)
        while True:
            step = self.zeta(*cur)  # (v_{i+1}, u_i)
            if step is None:
                break
            back = self.zeta(*step)  # (u_{i+1}, v_{i+1})
            if back is None:
                break
            pairs.append(back)
            cur = back
        return AlternationChain(self.context(u, v), tuple(pairs))

    def contexts(self) -> list[Context]:
        seen = {}
        for u in range(self.ad.n):
            for v in range(u + 1, self.ad.n):
                ctx = self.context(u, v)
                if ctx.disagrees and ctx not in seen:
                    seen[ctx] = None
        return list(seen)

    @cached_property
    def longest_by_context(self) -> dict[Context, AlternationChain]:
        """Longest chain per parity-disagreeing context, from one pass over all pairs."""
        out: dict[Context, AlternationChain] = {}
        for u in range(self.ad.n):
            for v in range(u + 1, self.ad.n):
                ctx = self.context(u, v)
                if not ctx.disagrees:
                    continue
                chain = self.chain_from(u, v)
                held = out.get(ctx)
                if held is None or chain.length > held.length:
                    out[ctx] = chain
        return out

    def chains(self, ctx: Context) -> list[AlternationChain]:
        out = []
        for u in range(self.ad.n):
            for v in range(u + 1, self.ad.n):
                if self.context(u, v) == ctx:
                    out.append(self.chain_from(u, v))
        return out

    def longest_chain(self, ctx: Context) -> AlternationChain | None:
        return max(self.chains(ctx), key=lambda c: (c.length, c.pairs), default=None)

    def n_c(self, u: int, colors) -> frozenset[int] | None:
        """The set of positions with colors ``colors`` whose intervals all cover ``u``."""
        lab = self.labels.labels[u]
        colors = frozenset(colors)
        if not colors <= lab.ic:
            return None
        gam = [lb.gamma for lb in self.labels.labels]
        found = []
        for a in colors:
            x = next(x for x in range(u, -1, -1) if gam[x] == a)
            found.append(x)
        return frozenset(found)


def zeta(ad: ActivityData, labels: ColoredOrder, u: int, v: int) -> tuple[int, int] | None:
    """``(v', u)`` for the largest ``v' < u`` sharing ``v``'s label, both xi values and delegate set."""
    return StabilityData(ad, labels).zeta(u, v)


def contexts(ad: ActivityData, labels: ColoredOrder) -> list[Context]:
    """Contexts of all pairs ``u < v`` whose two parity readings disagree."""
    return StabilityData(ad, labels).contexts()


def max_alternation_chain(ad: ActivityData, labels: ColoredOrder, context: Context, data: StabilityData | None = None) -> int:
    """Length of the longest zeta chain starting from a pair in ``context`` (0 if none)."""
    if not context.disagrees:
        raise ContractError("alternation chains are only tracked for parity-disagreeing contexts")
    data = data or StabilityData(ad, labels)
    best = data.longest_by_context.get(context)
    return 0 if best is None else best.length


def n_c(ad: ActivityData, labels: ColoredOrder, u: int, colors) -> frozenset[int] | None:
    """Positions covering ``u`` with the given colors; None when a color is not among ``IC(u)``."""
    return StabilityData(ad, labels).n_c(u, colors)


def z_partition(ad: ActivityData, labels: ColoredOrder, k: int, colors) -> list[list[int]]:
    """Refine the (Class, NC) classes by equal ``F^k`` and equal ``N_C``."""
    data = StabilityData(ad, labels)
    groups: dict = {}
    for u in range(ad.n):
        key = (data.class_keys[u], ad.iterate(u, k), data.n_c(u, colors))
        groups.setdefault(key, []).append(u)
    return sorted(groups.values())


def lex_power(f: Graph, m: int, guard: int = LEX_POWER_GUARD) -> Graph:
    """``f`` composed with itself ``m`` times; vertex ids follow :func:`lex_product`."""
    if m < 1:
        raise InputError("power must be at least 1")
    if f.n ** m > guard:
        raise CapacityError(f"lexicographic power has {f.n}^{m} > {guard} vertices", "vertices", guard)
    out = f
    for _ in range(m - 1):
        out = lex_product(out, f)
    return out


def substitution(g: Graph, v: int, h: Graph) -> Graph:
    """Replace ``v`` by a copy of ``h``; ``h``'s vertex 0 keeps id ``v``, vertex ``i > 0`` becomes ``n + i - 1``."""
    if not 0 <= v < g.n:
        raise InputError(f"vertex {v} not in graph")
    if h.n == 0:
        raise InputError("cannot substitute the empty graph")
    ids = [v] + [g.n + i - 1 for i in range(1, h.n)]
    total = g.n + h.n - 1
    rows = [row & ~(1 << v) for row in g.adj] + [0] * (h.n - 1)
    rows[v] = 0
    outside = g.adj[v]
    block = mask_of(ids)
    for u in members(outside):
        rows[u] |= block
    for i, x in enumerate(ids):
        rows[x] |= outside | mask_of(ids[j] for j in members(h.adj[i]))
    return Graph(total, tuple(rows))


def induced_copies(g: Graph, f: Graph) -> list[int]:
    """Vertex masks ``S`` of ``g`` with ``g[S]`` isomorphic to ``f``."""
    k = f.n
    f_edges = f.m
    f_sig = sorted(f.degree(v) for v in range(k))
    perms = list(itertools.permutations(range(k)))
    out = []
    for combo in itertools.combinations(range(g.n), k):
        s = mask_of(combo)
        degs = [(g.adj[x] & s).bit_count() for x in combo]
        if sum(degs) != 2 * f_edges or sorted(degs) != f_sig:
            continue
        for perm in perms:
            if all(
                ((g.adj[combo[perm[i]]] >> combo[perm[j]]) & 1) == ((f.adj[i] >> j) & 1)
                for i in range(k)
                for j in range(i + 1, k)
            ):
                out.append(s)
                break
    return out


def verify_vertex_ramsey(f: Graph, m: int, guard: int = RAMSEY_GUARD) -> tuple[bool, tuple[int, ...] | None]:
    """Does every ``m``-coloring of ``lex_power(f, m)`` contain a monochromatic induced ``f``?

    Colorings are counted in mixed radix with vertex 0 as the least
    significant digit; the first refuting coloring is returned.
    """
    if m < 1:
        raise InputError("number of colors must be at least 1")
    if f.n == 0:
        raise InputError("pattern graph must be nonempty")
    size = f.n ** m
    if m ** size > guard:
        raise CapacityError(f"{m}^{size} colorings exceed the enumeration guard {guard}", "colorings", guard)
    g = lex_power(f, m)
    copies = induced_copies(g, f)
    counter = first_ramsey_refutation(copies, g.n, m)
    if counter < 0:
        return True, None
    digits = []
    for _ in range(g.n):
        counter, d = divmod(counter, m)
        digits.append(d)
    return False, tuple(digits)
