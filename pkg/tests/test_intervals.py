from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings

from linrank.activity import analyze
from linrank.errors import CapacityError, ContractError, InputError
from linrank.graph import Graph, OrderedGraph, complete, edgeless, path
from linrank.intervals import (
    CenteredColoring,
    IntervalFamily,
    build_interval_graph,
    cover_forest,
    orient,
    p_centered_coloring,
    verify_centered,
)

from helpers import connected, ordered_graphs


def _family(g, order=None):
    return build_interval_graph(analyze(OrderedGraph(g, order)))


def brute_centered(g: Graph, colors, q: int) -> bool:
    for size in range(1, g.n + 1):
        for s in itertools.combinations(range(g.n), size):
            if not connected(g, s):
                continue
            seen = [colors[v] for v in s]
            if len(set(seen)) < q and all(seen.count(c) != 1 for c in seen):
                return False
    return True


def test_edgeless_points():
    f = _family(edgeless(4))
    assert f.left == f.right == (0, 1, 2, 3)
    assert f.graph.m == 0 and f.certificate == 0
    assert orient(f).arcs() == []


def test_k2_family():
    f = _family(complete(2))
    assert f.left == (0, 1) and f.right == (1, 1)
    assert f.graph == complete(2) and f.certificate == 1
    assert orient(f).arcs() == [(1, 0)]
    assert sorted(p_centered_coloring(f, 1).colors) == [1, 2]


def test_family_validation():
    with pytest.raises(InputError):
        IntervalFamily((0,), (1, 2), (0,))
    with pytest.raises(InputError):
        IntervalFamily((2,), (1,), (0,))


def test_export_lines():
    f = _family(complete(2), (1, 0))
    assert f.export() == "1 0 3\n0 1 2\n"


@settings(max_examples=200, deadline=None)
@given(ordered_graphs(max_n=10))
def test_load_and_certificate(og):
    ad = analyze(og)
    f = build_interval_graph(ad)
    assert f.max_load <= ad.r + 2
    assert f.certificate <= ad.r + 1
    for t in range(ad.n):
        covering = [p for p in range(ad.n) if f.left[p] <= t <= f.right[p]]
        assert len([p for p in covering if not ad.is_active(p)]) <= 1
        assert len([p for p in covering if ad.is_active(p) and ad.tau[p] == t]) <= 1
        assert len(covering) == f.loads[t]


@settings(max_examples=150, deadline=None)
@given(ordered_graphs(max_n=10))
def test_normalized_endpoints_preserve_meets(og):
    f = build_interval_graph(analyze(og))
    ends = f.normalized_endpoints()
    flat = [e for pair in ends for e in pair]
    assert sorted(flat) == list(range(2 * f.n))
    for a, b in itertools.combinations(range(f.n), 2):
        (la, ra), (lb, rb) = ends[a], ends[b]
        assert f.meets(a, b) == (la <= rb and lb <= ra)


@settings(max_examples=150, deadline=None)
@given(ordered_graphs(max_n=10))
def test_orientation_out_sets_are_transitive_cliques(og):
    f = build_interval_graph(analyze(og))
    d = orient(f)
    h = f.graph
    assert d.underlying() == h
    for v in range(f.n):
        outs = [u for u in range(f.n) if d.has_arc(v, u)]
        assert all(f.left[u] < f.left[v] for u in outs)
        for a, b in itertools.combinations(outs, 2):
            assert h.has_edge(a, b)
            lo, hi = sorted((a, b), key=lambda x: f.left[x])
            assert d.has_arc(hi, lo) and not d.has_arc(lo, hi)


def test_coloring_examples():
    f = IntervalFamily((0,), (0,), (0,))
    assert p_centered_coloring(f, 3).colors == (1,)
    f = IntervalFamily((0, 2), (1, 3), (0, 1))
    for p in (1, 2, 5):
        assert p_centered_coloring(f, p).colors == (1, 1)
    with pytest.raises(InputError):
        p_centered_coloring(f, 0)


def test_verify_centered_examples():
    g = path(3)
    assert verify_centered(g, [1, 2, 1], 2) == (True, None)
    ok, witness = verify_centered(complete(2), [1, 1], 2)
    assert not ok and witness == [0, 1]
    with pytest.raises(InputError):
        verify_centered(g, [1, 2], 2)
    with pytest.raises(CapacityError):
        verify_centered(path(15), [1] * 15, 2)
    assert verify_centered(path(15), [1] * 15, 2, guard=15)[0] is False


@settings(max_examples=200, deadline=None)
@given(ordered_graphs(max_n=7))
def test_verify_centered_matches_brute_force(og):
    g = og.graph
    for q in (1, 2, 3):
        colors = [(v * 7 + q) % 3 + 1 for v in range(g.n)]
        ok, witness = verify_centered(g, colors, q)
        assert ok == brute_centered(g, colors, q)
        if witness is not None:
            assert connected(g, witness)
            seen = [colors[v] for v in witness]
            assert len(set(seen)) < q and all(seen.count(c) != 1 for c in seen)


@settings(max_examples=100, deadline=None)
@given(ordered_graphs(max_n=9))
def test_first_fit_is_centered_one_step_up(og):
    f = build_interval_graph(analyze(og))
    for p in (1, 2, 3):
        c = p_centered_coloring(f, p)
        assert verify_centered(f.graph, c, p + 1)[0]


@settings(max_examples=100, deadline=None)
@given(ordered_graphs(max_n=9))
def test_cover_forest_closure(og):
    f = build_interval_graph(analyze(og))
    h = f.graph
    for p in (1, 2, 3):
        c = p_centered_coloring(f, p)
        for k in range(1, p + 1):
            for cs in itertools.combinations(sorted(set(c.colors)), k):
                forest = cover_forest(f, c, cs)
                chosen = [a for a in range(f.n) if c.colors[a] in cs]
                assert sorted(forest.parent) == chosen
                pre = forest.preorder()
                assert [f.left[a] for a in pre] == sorted(f.left[a] for a in chosen)
                for a, b in itertools.combinations(chosen, 2):
                    if h.has_edge(a, b):
                        assert a in forest.ancestors(b) or b in forest.ancestors(a)
                assert forest.height <= k


def test_cover_forest_examples():
    f = _family(edgeless(3))
    c = p_centered_coloring(f, 2)
    forest = cover_forest(f, c, {1})
    assert forest.roots == [0, 1, 2] and forest.height == 1
    f = IntervalFamily((0, 1, 2, 3), (1, 2, 3, 3), (0, 1, 2, 3))  # a path of intervals
    assert f.graph == path(4)
    c = p_centered_coloring(f, 2)
    assert verify_centered(f.graph, c, 3)[0]
    forest = cover_forest(f, c, sorted(set(c.colors))[:2])
    assert forest.height <= 2
    with pytest.raises(ContractError):
        cover_forest(f, CenteredColoring(1, c.colors), {1, 2})
