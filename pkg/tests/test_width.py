from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings

from linrank.errors import CapacityError, ContractError, InputError
from linrank.graph import (
    OrderedGraph,
    complete,
    cycle,
    edgeless,
    half_graph,
    induced_subgraph,
    join_apex,
    lex_product,
    named_graph,
    path,
)
from linrank.width import (
    RankDecompositionTree,
    caterpillar,
    chromatic_number,
    clique_number,
    cotree_graph,
    decomposition_width,
    is_cograph,
    lex_product_decomposition,
    linear_rankwidth_exact,
    order_width,
    rankwidth_exact,
)

from helpers import brute_order_width, graphs, has_induced_p4


def all_orders_width(g):
    return min(brute_order_width(g, p) for p in itertools.permutations(range(g.n)))


def test_linear_rankwidth_examples():
    assert linear_rankwidth_exact(edgeless(5))[0] == 0
    assert linear_rankwidth_exact(complete(5))[0] == 1
    assert linear_rankwidth_exact(path(6))[0] == 1
    assert linear_rankwidth_exact(cycle(5))[0] == 2
    w, order = linear_rankwidth_exact(half_graph(3))
    assert w == 1 and order_width(OrderedGraph(half_graph(3), order)) == 1


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=6))
def test_linear_rankwidth_matches_all_orders(g):
    w, order = linear_rankwidth_exact(g)
    assert w == all_orders_width(g)
    assert order_width(OrderedGraph(g, order)) == w == brute_order_width(g, order)


def test_linear_rankwidth_guard():
    with pytest.raises(CapacityError):
        linear_rankwidth_exact(edgeless(21))
    assert linear_rankwidth_exact(edgeless(21), guard=21)[0] == 0


def test_optimal_order_tie_break_is_smallest_id():
    assert linear_rankwidth_exact(edgeless(4))[1] == (0, 1, 2, 3)


def test_caterpillar_matches_order_width():
    g = cycle(6)
    for order in [(0, 1, 2, 3, 4, 5), (0, 3, 1, 4, 2, 5)]:
        t = caterpillar(order)
        assert decomposition_width(g, t) == order_width(OrderedGraph(g, order))
    assert decomposition_width(edgeless(4), caterpillar((2, 0, 3, 1))) == 0


def test_rank_decomposition_tree_validation():
    with pytest.raises(ContractError):
        RankDecompositionTree(3, ((0, 1), (1, 2)), (0, 2))  # degree-2 node
    with pytest.raises(ContractError):
        RankDecompositionTree(2, ((0, 1),), (0, 0))
    with pytest.raises(InputError):
        caterpillar((0,))


def test_rankwidth_examples():
    assert rankwidth_exact(join_apex(path(4)))[0] == 2
    assert rankwidth_exact(cycle(5))[0] == 2
    assert rankwidth_exact(complete(4))[0] == 1
    assert rankwidth_exact(edgeless(4))[0] == 0
    with pytest.raises(CapacityError):
        rankwidth_exact(edgeless(8))


@settings(max_examples=40, deadline=None)
@given(graphs(min_n=2, max_n=6))
def test_rankwidth_is_achieved_and_at_most_linear(g):
    w, t = rankwidth_exact(g)
    assert decomposition_width(g, t) == w
    assert w <= linear_rankwidth_exact(g)[0]


def test_rankwidth_exhaustive_small_cross_check():
    # every subcubic tree on 5 leaves is a caterpillar, so rw = lrw at n = 5
    for g in [cycle(5), join_apex(path(4)), named_graph("P4"), half_graph(2)]:
        if g.n == 5:
            assert rankwidth_exact(g)[0] == linear_rankwidth_exact(g)[0]


def test_lex_product_decomposition_examples():
    k1 = complete(1)
    yk = rankwidth_exact(join_apex(k1))[1]
    glued = lex_product_decomposition(yk, yk)
    assert decomposition_width(join_apex(lex_product(k1, k1)), glued) == 1
    yp = rankwidth_exact(join_apex(path(4)))[1]
    yk2 = rankwidth_exact(join_apex(complete(2)))[1]
    prod = join_apex(lex_product(path(4), complete(2)))
    assert decomposition_width(prod, lex_product_decomposition(yp, yk2)) == 2


def test_glued_width_not_below_factors():
    yp = rankwidth_exact(join_apex(path(4)))[1]
    yc = rankwidth_exact(join_apex(cycle(5)))[1]
    prod = join_apex(lex_product(cycle(5), path(4)))
    glued = lex_product_decomposition(yc, yp)
    assert glued.n_leaves == prod.n
    # both factor apex graphs are induced subgraphs of the product apex graph
    sub, _ = induced_subgraph(prod, [0, 1, 2, 3, prod.n - 1])
    assert rankwidth_exact(sub)[0] <= decomposition_width(prod, glued)


def test_clique_and_chromatic_examples():
    assert (clique_number(complete(5)), chromatic_number(complete(5))) == (5, 5)
    assert (clique_number(cycle(5)), chromatic_number(cycle(5))) == (2, 3)
    assert (clique_number(half_graph(3)), chromatic_number(half_graph(3))) == (2, 2)
    assert chromatic_number(edgeless(3)) == 1 and chromatic_number(edgeless(0)) == 0
    with pytest.raises(CapacityError):
        chromatic_number(edgeless(19))


def brute_chromatic(g):
    for k in range(1, g.n + 1):
        for colors in itertools.product(range(k), repeat=g.n):
            if all(colors[u] != colors[v] for u, v in g.edges()):
                return k
    return 0


def brute_clique(g):
    return max(
        (len(s) for k in range(g.n + 1) for s in itertools.combinations(range(g.n), k)
         if all(g.has_edge(u, v) for u, v in itertools.combinations(s, 2))),
        default=0,
    )


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=7))
def test_clique_and_chromatic_match_brute_force(g):
    assert clique_number(g) == brute_clique(g)
    assert chromatic_number(g) == brute_chromatic(g)


def test_is_cograph_examples():
    ok, witness = is_cograph(path(4))
    assert not ok and sorted(witness) == [0, 1, 2, 3]
    assert is_cograph(complete(4))[0] and is_cograph(edgeless(4))[0]
    assert not is_cograph(join_apex(path(4)))[0]
    assert is_cograph(edgeless(0)) == (True, None)


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=9))
def test_is_cograph_agrees_with_p4_search(g):
    ok, witness = is_cograph(g)
    assert ok == (not has_induced_p4(g))
    if ok:
        assert cotree_graph(witness, g.n) == g
        assert sorted(witness.leaves()) == list(range(g.n))
    else:
        a, b, c, d = witness
        assert g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(c, d)
        assert not (g.has_edge(a, c) or g.has_edge(b, d) or g.has_edge(a, d))
