"""Time the compiled kernels against their pure-Python twins.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""

from __future__ import annotations

import argparse
import timeit

from linrank._kernels import _pure
from linrank.activity import analyze
from linrank.corpus import random_graph
from linrank.graph import OrderedGraph, complete, named_graph
from linrank.intervals import build_interval_graph, p_centered_coloring
from linrank.stability import induced_copies, lex_power

try:
    from linrank._kernels import _core
except ImportError:
    _core = None


def cases():
    g14 = random_graph(14, 0.5, 3)
    adj14 = list(g14.adj)
    table = _pure.cut_rank_table(adj14, 14)
    fam = build_interval_graph(analyze(OrderedGraph(random_graph(13, 0.3, 5))))
    colors = list(p_centered_coloring(fam, 2).colors)
    p4 = named_graph("P4")
    host = lex_power(p4, 2)
    copies = induced_copies(host, p4)
    k3 = complete(3)
    copies_k3 = induced_copies(lex_power(k3, 2), k3)
    return [
        ("rank_rows 40x40", "rank_rows", ([(i * 2654435761) % (1 << 40) for i in range(40)],)),
        ("cut_rank_table n=14", "cut_rank_table", (adj14, 14)),
        ("prefix_width_table n=14", "prefix_width_table", (table, 14)),
        ("first_uncentered n=13 q=3", "first_uncentered", (list(fam.graph.adj), colors, 3)),
        ("ramsey P4^2, 2 colors", "first_ramsey_refutation", (copies, host.n, 2)),
        ("ramsey K3^2, 2 colors", "first_ramsey_refutation", (copies_k3, 9, 2)),
    ]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    print(f"{'kernel':32s} {'python s':>10s} {'cython s':>10s} {'speedup':>8s}")
    for label, name, call_args in cases():
        slow = min(timeit.repeat(lambda: getattr(_pure, name)(*call_args), number=1, repeat=args.repeat))
        if _core is None:
            print(f"{label:32s} {slow:10.4f} {'n/a':>10s} {'':>8s}")
            continue
        a, b = getattr(_pure, name)(*call_args), getattr(_core, name)(*call_args)
        if (bytes(a) if isinstance(a, bytearray) else a) != (bytes(b) if isinstance(b, bytearray) else b):
            raise SystemExit(f"{label}: backends disagree")
        fast = min(timeit.repeat(lambda: getattr(_core, name)(*call_args), number=1, repeat=args.repeat))
        print(f"{label:32s} {slow:10.4f} {fast:10.4f} {slow / max(fast, 1e-9):7.1f}x")


if __name__ == "__main__":
    main()
