from __future__ import annotations

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from linrank.errors import ContractError, InputError
from linrank.gf2 import BitMatrix, Eliminator, cut_rank, greedy_basis, rank, solve_in_span
from linrank.graph import cycle, half_graph

from helpers import brute_cut_rank, brute_rank, graphs

rows_strategy = st.lists(st.integers(0, (1 << 7) - 1), max_size=8)


def test_rank_examples():
    assert rank(BitMatrix((1, 2, 4, 8), 4)) == 4
    assert rank(BitMatrix((5, 5), 3)) == 1
    assert rank(BitMatrix.from_strings(["110", "011", "101"])) == 2
    assert rank(BitMatrix((), 0)) == 0


def test_bitmatrix_rejects_wide_rows():
    with pytest.raises(InputError):
        BitMatrix((8,), 3)


def test_from_strings_column_order():
    m = BitMatrix.from_strings(["100", "001"])
    assert m.rows == (1, 4) and m.ncols == 3


@given(rows_strategy)
def test_rank_matches_span_enumeration(rows):
    assert rank(BitMatrix(tuple(rows), 7)) == brute_rank(rows)


@given(rows_strategy)
def test_rank_equals_greedy_basis_size(rows):
    kept = greedy_basis(rows)
    assert len(kept) == rank(BitMatrix(tuple(rows), 7))
    assert kept == sorted(kept)
    assert all(rows[i] for i in kept)


def test_cut_rank_examples():
    assert cut_rank(cycle(5), set()) == 0
    assert cut_rank(cycle(5), set(range(5))) == 0
    assert cut_rank(cycle(4), {0, 1}) == 2
    assert cut_rank(half_graph(3), {0, 1, 2}) == 3
    with pytest.raises(InputError):
        cut_rank(cycle(4), {7})


@given(graphs(max_n=8), st.data())
def test_cut_rank_symmetric_and_brute(g, data):
    s = set(data.draw(st.lists(st.integers(0, g.n - 1), unique=True)))
    rest = set(range(g.n)) - s
    assert cut_rank(g, s) == cut_rank(g, rest) == brute_cut_rank(g, s)


def test_solve_in_span_examples():
    assert solve_in_span(BitMatrix.from_strings(["100", "010"]), 0b011) == {0, 1}
    assert solve_in_span(BitMatrix.from_strings(["100"]), 0b010) is None
    m = BitMatrix.from_strings(["110", "011"])
    assert solve_in_span(m, int("101"[::-1], 2)) == {0, 1}
    with pytest.raises(ContractError):
        solve_in_span(BitMatrix((3, 3), 2), 3)


@given(st.lists(st.integers(1, 63), max_size=6), st.integers(0, 63))
def test_solve_in_span_agrees_with_enumeration(rows, target):
    basis = [rows[i] for i in greedy_basis(rows)]
    found = solve_in_span(BitMatrix(tuple(basis), 6), target)
    combos = [
        set(sub)
        for k in range(len(basis) + 1)
        for sub in itertools.combinations(range(len(basis)), k)
        if _xor(basis[i] for i in sub) == target
    ]
    if combos:
        assert len(combos) == 1 and found == combos[0]
    else:
        assert found is None


def _xor(vals):
    acc = 0
    for v in vals:
        acc ^= v
    return acc


def test_greedy_basis_examples():
    assert greedy_basis([0b001, 0b011, 0b111]) == [0, 1, 2]
    assert greedy_basis([0b101, 0b101, 0b010]) == [0, 2]
    assert greedy_basis([0, 0]) == []


def test_eliminator_express_tracks_tags():
    e = Eliminator()
    assert e.add(0b110, 3) and e.add(0b011, 5)
    assert not e.add(0b101, 7)
    assert e.express(0b101) == [3, 5]
    assert e.express(0b001) is None
    assert len(e) == 2
