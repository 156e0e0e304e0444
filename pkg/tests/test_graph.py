from __future__ import annotations

import itertools

import pytest
from hypothesis import given

from linrank.errors import InputError
from linrank.graph import (
    Digraph,
    Graph,
    OrderedGraph,
    complete,
    cycle,
    edgeless,
    format_edge_list,
    from_edge_list,
    half_graph,
    induced_subgraph,
    join_apex,
    lex_product,
    lozin_h,
    named_graph,
    parse_edge_list,
    path,
)

from helpers import graphs


def test_from_edge_list_basics():
    k2 = from_edge_list(2, [(0, 1)])
    assert k2.edges() == [(0, 1)] and k2 == complete(2)
    assert from_edge_list(3, []) == edgeless(3)
    assert from_edge_list(4, [(0, 1), (1, 2), (2, 3)]) == path(4)
    assert from_edge_list(3, [(0, 1), (1, 0), (0, 1)]).m == 1


@pytest.mark.parametrize("edges", [[(0, 3)], [(-1, 0)], [(1, 1)]])
def test_from_edge_list_rejects(edges):
    with pytest.raises(InputError):
        from_edge_list(3, edges)


def test_graph_validates_rows():
    with pytest.raises(InputError):
        Graph(2, (0b10, 0))  # asymmetric
    with pytest.raises(InputError):
        Graph(1, (1,))  # loop
    with pytest.raises(InputError):
        Graph(2, (0,))


def test_half_graph_rule():
    assert half_graph(1).edges() == [(0, 1)]
    assert half_graph(3).m == 6
    h2 = half_graph(2)
    assert [h2.degree(v) for v in range(4)] == [2, 1, 1, 2]
    with pytest.raises(InputError):
        half_graph(0)


@pytest.mark.parametrize("k", range(1, 6))
def test_half_graph_restricts_to_smaller(k):
    g = half_graph(k)
    for j in range(1, k + 1):
        sub, _ = induced_subgraph(g, list(range(j)) + list(range(k, k + j)))
        assert sub == half_graph(j)


def test_lozin_examples():
    assert lozin_h(1, 3) == edgeless(3)
    assert lozin_h(2, 2).edges() == [(0, 2), (1, 2), (1, 3)]
    assert lozin_h(1, 3, tilde=True) == complete(3)
    with pytest.raises(InputError):
        lozin_h(0, 2)


def test_lex_product_examples():
    assert lex_product(complete(2), complete(2)) == complete(4)
    p3k2 = lex_product(path(3), complete(2))
    assert p3k2.n == 6 and p3k2.m == 2 * 4 + 3 * 1 == 11
    g = cycle(5)
    assert lex_product(g, complete(1)) == g
    with pytest.raises(InputError):
        lex_product(edgeless(0), g)


@given(graphs(max_n=4), graphs(max_n=3))
def test_lex_product_adjacency_and_edge_count(g, h):
    p = lex_product(g, h)
    assert p.m == g.m * h.n**2 + g.n * h.m
    for (u, v), (x, y) in itertools.combinations(itertools.product(range(g.n), range(h.n)), 2):
        expect = g.has_edge(u, x) or (u == x and h.has_edge(v, y))
        assert p.has_edge(u * h.n + v, x * h.n + y) == expect


def test_lex_product_associative():
    f = path(3)
    assert lex_product(lex_product(f, f), f) == lex_product(f, lex_product(f, f))


def test_join_apex():
    assert join_apex(complete(1)) == complete(2)
    star = join_apex(edgeless(3))
    assert star.degree(3) == 3 and star.m == 3
    p = join_apex(path(4))
    assert (p.n, p.m) == (5, 7)


def test_induced_subgraph():
    assert induced_subgraph(path(4), {0, 1})[0] == complete(2)
    sub, keep = induced_subgraph(complete(4), {3, 1, 2})
    assert sub == complete(3) and keep == [1, 2, 3]
    with pytest.raises(InputError):
        induced_subgraph(path(3), {5})


def test_named_graphs():
    assert named_graph("P4") == path(4)
    assert named_graph("K5") == complete(5)
    assert named_graph("E3") == edgeless(3)
    for bad in ("X3", "P", "Kx"):
        with pytest.raises(InputError):
            named_graph(bad)


@given(graphs(min_n=0, max_n=9))
def test_edge_list_roundtrip(g):
    assert parse_edge_list(format_edge_list(g)) == g


def test_parse_edge_list_comments_and_errors():
    text = "# a path\n3 2\n\n0 1  # first\n1 2\n"
    assert parse_edge_list(text) == path(3)
    for bad in ("", "3 2\n0 1\n", "3\n", "2 1\n0 x\n", "2 1\n0 1 1\n"):
        with pytest.raises(InputError):
            parse_edge_list(bad)


@given(graphs(max_n=8))
def test_complement_and_relabel(g):
    c = g.complement()
    assert c.complement() == g
    assert c.m + g.m == g.n * (g.n - 1) // 2
    perm = list(reversed(range(g.n)))
    r = g.relabel(perm)
    assert all(r.has_edge(perm[u], perm[v]) for u, v in g.edges())
    assert r.m == g.m


def test_ordered_graph_positions():
    og = OrderedGraph(path(3), (2, 0, 1))
    assert og.position == (1, 2, 0)
    assert og.positional_graph.edges() == [(0, 2), (1, 2)]
    assert OrderedGraph(path(3)).order == (0, 1, 2)
    with pytest.raises(InputError):
        OrderedGraph(path(3), (0, 0, 1))


def test_digraph_underlying():
    d = Digraph(3, (0, 0b001, 0b011))
    assert d.arcs() == [(1, 0), (2, 0), (2, 1)]
    assert d.underlying() == complete(3)
