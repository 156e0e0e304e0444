"""Pure-Python kernels.  Same signatures and results as the compiled ``_core``."""

from __future__ import annotations

from typing import Sequence


def rank_rows(rows: Sequence[int]) -> int:
    """GF(2) rank of integer bit-rows of any width."""
    pivots: dict[int, int] = {}
    for x in rows:
        while x:
            top = x.bit_length() - 1
            p = pivots.get(top)
            if p is None:
                pivots[top] = x
                break
            x ^= p
    return len(pivots)


def cut_rank_table(adj: Sequence[int], n: int) -> bytearray:
    """``table[S]`` is the cut-rank of vertex mask ``S`` for every ``S < 2**n``."""
    size = 1 << n
    full = size - 1
    table = bytearray(size)
    for s in range(size):
        comp = full ^ s
        if comp < s:
            table[s] = table[comp]
            continue
        rows = []
        x = s
        while x:
            low = x & -x
            rows.append(adj[low.bit_length() - 1] & comp)
            x ^= low
        table[s] = rank_rows(rows)
    return table


def prefix_width_table(ranks: Sequence[int], n: int) -> bytearray:
    """``best[S]``: least possible max prefix cut-rank over orders of ``S`` placed first."""
    size = 1 << n
    best = bytearray(size)
    for s in range(1, size):
        lowest = 255
        x = s
        while x:
            low = x & -x
            b = best[s ^ low]
            if b < lowest:
                lowest = b
            x ^= low
        r = ranks[s]
        best[s] = r if r > lowest else lowest
    return best


def _connected(adj: Sequence[int], mask: int) -> bool:
    low = mask & -mask
    seen = low
    frontier = low
    while frontier:
        v = (frontier & -frontier).bit_length() - 1
        frontier &= frontier - 1
        new = adj[v] & mask & ~seen
        seen |= new
        frontier |= new
    return seen == mask


def first_uncentered(adj: Sequence[int], colors: Sequence[int], q: int) -> int:
    """Smallest connected vertex mask with fewer than ``q`` colors and no unique color, or -1."""
    n = len(adj)
    for mask in range(1, 1 << n):
        if not _connected(adj, mask):
            continue
        counts: dict[int, int] = {}
        x = mask
        while x:
            v = (x & -x).bit_length() - 1
            x &= x - 1
            counts[colors[v]] = counts.get(colors[v], 0) + 1
        if len(counts) >= q or 1 in counts.values():
            continue
        return mask
    return -1


def first_ramsey_refutation(copies: Sequence[int], nverts: int, m: int) -> int:
    """Smallest mixed-radix counter value whose coloring has no monochromatic copy, or -1.

    Digit ``i`` of the counter (base ``m``, least significant first) is the
    color of vertex ``i``.
    """
    full = (1 << nverts) - 1
    lows = [(c & -c).bit_length() - 1 for c in copies]
    digits = [0] * nverts
    classes = [0] * m
    classes[0] = full
    total = m**nverts
    for counter in range(total):
        hit = False
        for c, lo in zip(copies, lows):
            if c & ~classes[digits[lo]] == 0:
                hit = True
                break
        if not hit:
            return counter
        i = 0
        while i < nverts:
            old = digits[i]
            classes[old] &= ~(1 << i)
            new = old + 1
            if new == m:
                new = 0
            digits[i] = new
            classes[new] |= 1 << i
            if new:
                break
            i += 1
    return -1
