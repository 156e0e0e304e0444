"""Strategies and brute-force oracles shared by the test modules."""

from __future__ import annotations

import itertools

from hypothesis import strategies as st

from linrank.graph import Graph, from_edge_list, members


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 8) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    bits = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return from_edge_list(n, [e for e, keep in zip(pairs, bits) if keep])


@st.composite
def ordered_graphs(draw, min_n: int = 1, max_n: int = 8):
    from linrank.graph import OrderedGraph

    g = draw(graphs(min_n, max_n))
    order = draw(st.permutations(list(range(g.n))))
    return OrderedGraph(g, tuple(order))


def brute_rank(rows: list[int]) -> int:
    """GF(2) rank as log2 of the number of distinct XOR combinations of the rows."""
    span = {0}
    for r in rows:
        span |= {x ^ r for x in span}
    return len(span).bit_length() - 1


def brute_cut_rank(g: Graph, s: set[int]) -> int:
    comp = [v for v in range(g.n) if v not in s]
    return brute_rank([sum(1 << i for i, u in enumerate(comp) if g.has_edge(v, u)) for v in sorted(s)])


def brute_order_width(g: Graph, order) -> int:
    return max((brute_cut_rank(g, set(order[: i + 1])) for i in range(len(order))), default=0)


def has_induced_p4(g: Graph) -> bool:
    for quad in itertools.permutations(range(g.n), 4):
        a, b, c, d = quad
        if a > d:
            continue
        if (
            g.has_edge(a, b)
            and g.has_edge(b, c)
            and g.has_edge(c, d)
            and not g.has_edge(a, c)
            and not g.has_edge(b, d)
            and not g.has_edge(a, d)
        ):
            return True
    return False


def connected(g: Graph, verts) -> bool:
    verts = set(verts)
    if not verts:
        return False
    start = min(verts)
    seen, stack = {start}, [start]
    while stack:
        v = stack.pop()
        for u in members(g.adj[v]):
            if u in verts and u not in seen:
                seen.add(u)
                stack.append(u)
    return seen == verts
