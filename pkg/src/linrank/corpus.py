"""Seeded random graphs and the fixed corpus used by the acceptance checks."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import InputError
from .graph import Graph, cycle, from_edge_list, half_graph, lozin_h, named_graph, path
from .stability import lex_power

__all__ = ["random_graph", "CorpusItem", "structured_families", "random_corpus", "acceptance_corpus"]


def random_graph(n: int, p: float, seed: int) -> Graph:
    """G(n, p) drawn from ``random.Random(seed)``; pairs are visited in lexicographic order."""
    if n < 0 or not 0.0 <= p <= 1.0:
        raise InputError("need n >= 0 and 0 <= p <= 1")
    rng = random.Random(seed)
    return from_edge_list(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


@dataclass(frozen=True)
class CorpusItem:
    name: str
    graph: Graph


def structured_families() -> list[CorpusItem]:
    items = [CorpusItem(f"halfgraph-{k}", half_graph(k)) for k in range(1, 6)]
    for n in range(1, 13):
        for m in range(1, 13):
            if n * m <= 12 and n >= 2:
                items.append(CorpusItem(f"lozin-{n}x{m}", lozin_h(n, m)))
                items.append(CorpusItem(f"lozin-tilde-{n}x{m}", lozin_h(n, m, tilde=True)))
    items += [CorpusItem(f"path-{n}", path(n)) for n in range(1, 11)]
    items += [CorpusItem(f"cycle-{n}", cycle(n)) for n in range(3, 11)]
    for name, m in [("K2", 2), ("K2", 3), ("K2", 4), ("P3", 2), ("K3", 2), ("C4", 2), ("P4", 2)]:
        items.append(CorpusItem(f"lexpower-{name}-{m}", lex_power(named_graph(name), m)))
    return items


def random_corpus(count: int = 500, max_n: int = 10, seed: int = 20240611) -> list[CorpusItem]:
    """``count`` graphs with ``n`` uniform in ``1..max_n`` and density uniform in [0, 1]."""
    rng = random.Random(seed)
    out = []
    for i in range(count):
        n = rng.randint(1, max_n)
        p = rng.random()
        s = rng.randrange(1 << 30)
        out.append(CorpusItem(f"random-{i}-n{n}", random_graph(n, p, s)))
    return out


def acceptance_corpus(count: int = 500) -> list[CorpusItem]:
    return random_corpus(count) + structured_families()
