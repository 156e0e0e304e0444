"""Linear algebra over GF(2) on integer bit-vectors."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from ._kernels import rank_rows
from .errors import ContractError, InputError
from .graph import Graph, mask_of, members

__all__ = [
    "BitMatrix",
    "Eliminator",
    "rank",
    "cut_rank",
    "cut_rank_mask",
    "solve_in_span",
    "greedy_basis",
]


@dataclass(frozen=True)
class BitMatrix:
    rows: tuple[int, ...]
    ncols: int

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(self.rows))
        if self.ncols < 0:
            raise InputError("column count must be non-negative")
        for r in self.rows:
            if r < 0 or r >> self.ncols:
                raise InputError("row has bits beyond the column count")

    @classmethod
    def from_strings(cls, rows: Sequence[str]) -> BitMatrix:
        """Build from strings like ``"110"``; character ``j`` is column ``j``."""
        ncols = len(rows[0]) if rows else 0
        return cls(tuple(int(s[::-1], 2) if s else 0 for s in rows), ncols)


class Eliminator:
    """Incremental row echelon form that remembers how each pivot row was formed.

    Every stored pivot row carries a mask over the *tags* of the vectors that
    were added, so a reduced vector can be expressed in terms of the inputs.
    """

    __slots__ = ("_pivots",)

    def __init__(self):
        self._pivots: dict[int, tuple[int, int]] = {}

    def __len__(self) -> int:
        return len(self._pivots)

    def reduce(self, vec: int) -> tuple[int, int]:
        """Return ``(residual, combo)`` with ``vec == residual ^ XOR(rows in combo)``."""
        combo = 0
        while vec:
            entry = self._pivots.get(vec.bit_length() - 1)
            if entry is None:
                break
            vec ^= entry[0]
            combo ^= entry[1]
        return vec, combo

    def add(self, vec: int, tag: int) -> bool:
        """Insert ``vec`` under ``tag``; return False (and keep nothing) if it is dependent."""
        residual, combo = self.reduce(vec)
        if not residual:
            return False
        self._pivots[residual.bit_length() - 1] = (residual, combo ^ (1 << tag))
        return True

    def express(self, vec: int) -> list[int] | None:
        """Tags whose vectors XOR to ``vec``, or None if ``vec`` is outside the span."""
        residual, combo = self.reduce(vec)
        if residual:
            return None
        return members(combo)


def rank(m: BitMatrix) -> int:
    return rank_rows(m.rows)


def cut_rank_mask(g: Graph, mask: int) -> int:
    comp = g.vertex_mask & ~mask
    if not mask or not comp:
        return 0
    return rank_rows([g.adj[v] & comp for v in members(mask)])


def cut_rank(g: Graph, x: Iterable[int] | int) -> int:
    """Rank of the bipartite adjacency matrix between ``x`` and its complement."""
    mask = x if isinstance(x, int) else mask_of(x)
    if mask >> g.n:
        raise InputError("vertex set is not contained in the graph")
    return cut_rank_mask(g, mask)


def solve_in_span(basis_rows: BitMatrix, target: int) -> frozenset[int] | None:
    """Unique subset of row indices whose XOR is ``target``; None if outside the span.

    Raises ContractError if the rows are linearly dependent.
    """
    elim = Eliminator()
    for i, row in enumerate(basis_rows.rows):
        if not elim.add(row, i):
            raise ContractError(f"basis row {i} depends on earlier rows")
    found = elim.express(target)
    return None if found is None else frozenset(found)


def greedy_basis(vectors: Sequence[int]) -> list[int]:
    """Indices kept by a left-to-right scan that drops vectors in the span of kept ones."""
    elim = Eliminator()
    return [i for i, v in enumerate(vectors) if elim.add(v, i)]
