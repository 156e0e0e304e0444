"""``linrank`` command line: generate graphs, certify the activity pipeline, run the oracles.

Exit codes: 0 success, 1 usage or input error, 2 a certificate failed,
3 a capacity guard was exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import __version__
from .activity import analyze, build_f_tree
from .cograph import chi_bound_report, partition
from .corpus import random_graph
from .encoding import ColoredOrder, alphabet_bounds, decode, encode
from .errors import CapacityError, InputError, InvariantError, LinrankError
from .graph import (
    Graph,
    OrderedGraph,
    complete,
    cycle,
    edgeless,
    format_edge_list,
    half_graph,
    lozin_h,
    named_graph,
    parse_edge_list,
    path,
)
from .intervals import CENTERED_GUARD, IntervalFamily, build_interval_graph, p_centered_coloring, verify_centered
from .stability import ORDER_INDEX_GUARD, RAMSEY_GUARD, half_graph_witness, lex_power, verify_vertex_ramsey
from .width import LRW_GUARD, linear_rankwidth_exact

SCHEMA = "linrank/1"

EXIT_OK, EXIT_USAGE, EXIT_CERT, EXIT_CAPACITY = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _to_file(payload, target: str | None):
    """Write ``payload`` to ``target`` if given (printing nothing), else hand it back for stdout."""
    if not target:
        return EXIT_OK, payload
    Path(target).write_text(_dump(payload) if isinstance(payload, dict) else payload)
    return EXIT_OK, None


def _dump(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def _read_order(path: str, n: int) -> tuple[int, ...]:
    try:
        order = tuple(int(tok) for tok in _read(path).split())
    except ValueError:
        raise InputError("order file must hold whitespace-separated vertex ids") from None
    if sorted(order) != list(range(n)):
        raise InputError(f"order file must list every vertex 0..{n - 1} exactly once")
    return order


def _ordered(g: Graph, args) -> tuple[OrderedGraph, str]:
    if args.order:
        return OrderedGraph(g, _read_order(args.order, g.n)), "supplied"
    if g.n == 0:
        return OrderedGraph(g, ()), "empty"
    _, order = linear_rankwidth_exact(g, guard=args.guard_n)
    return OrderedGraph(g, order), "optimal"


# --- gen -------------------------------------------------------------------

def _ints(params: list[str], count: int, family: str) -> list[int]:
    if len(params) != count:
        raise UsageError(f"{family} takes {count} integer parameter(s)")
    try:
        return [int(p) for p in params]
    except ValueError:
        raise UsageError(f"{family} parameters must be integers") from None


def _generate(family: str, params: list[str], seed: int) -> Graph:
    if family == "halfgraph":
        return half_graph(*_ints(params, 1, family))
    if family in ("lozin", "lozin-tilde"):
        n, m = _ints(params, 2, family)
        return lozin_h(n, m, tilde=family == "lozin-tilde")
    if family == "lexpower":
        if len(params) != 2:
            raise UsageError("lexpower takes a graph name and a power")
        return lex_power(named_graph(params[0]), _ints(params[1:], 1, family)[0])
    if family == "path":
        return path(*_ints(params, 1, family))
    if family == "cycle":
        return cycle(*_ints(params, 1, family))
    if family == "clique":
        return complete(*_ints(params, 1, family))
    if family == "empty":
        return edgeless(*_ints(params, 1, family))
    if family == "random":
        if len(params) != 2:
            raise UsageError("random takes n and an edge probability")
        try:
            n, p = int(params[0]), float(params[1])
        except ValueError:
            raise UsageError("random takes an integer n and a float probability") from None
        return random_graph(n, p, seed)
    raise UsageError(f"unknown family {family!r}")


def cmd_gen(args) -> tuple[int, object]:
    g = _generate(args.family, args.params, args.seed)
    text = format_edge_list(g)
    if not args.output:
        return EXIT_OK, text
    Path(args.output).write_text(text)
    if args.json:
        return EXIT_OK, {"schema": SCHEMA, "command": "gen", "n": g.n, "m": g.m}
    return EXIT_OK, f"{g.n} {g.m}\n"


# --- analyze ---------------------------------------------------------------

def _certify(g: Graph, og: OrderedGraph, source: str) -> dict:
    """Run every pipeline stage on ``og`` and record each check that was executed."""
    ad = analyze(og)
    r = ad.r
    checks: dict[str, bool] = {}
    tree = build_f_tree(ad)
    chain_lengths = [len(c) - 1 for c in ad.chains]  # steps from {u} to the empty set
    checks["f_tree_height"] = tree.height <= r + 2
    checks["f_iterate_vanishes"] = max(chain_lengths) <= r + 1
    basis_sizes = [len(b) for b in ad.bases]
    checks["basis_sizes"] = max(basis_sizes) <= r
    co = encode(ad)
    checks["text_roundtrip"] = ColoredOrder.from_text(co.to_text()) == co
    rebuilt = decode(co)
    mismatched = [
        [ad.vertex(u), ad.vertex(v)]
        for u in range(ad.n)
        for v in range(u + 1, ad.n)
        if rebuilt.has_edge(u, v) != ad.graph.has_edge(u, v)
    ]
    checks["reconstruction"] = not mismatched
    fam = build_interval_graph(ad)
    checks["interval_load"] = fam.max_load <= r + 2
    bounds = alphabet_bounds(r)
    checks["class_nc_count"] = co.class_nc_count() <= bounds.f
    checks["alphabet_size"] = co.alphabet_size() <= bounds.f_prime
    part = partition(ad, co)
    chi = chi_bound_report(g, part)
    checks["cograph_classes"] = True  # partition() runs the cograph oracle on every class or raises
    checks["cotree_height"] = chi["height_ok"]
    checks["class_count"] = chi["class_count_ok"]
    if chi["bound_holds"] is not None:
        checks["chi_bound"] = chi["bound_holds"]
    return {
        "order": {"source": source, "vertices": list(og.order)},
        "width": r,
        "tau": [ad.tau[ad.position(v)] for v in range(ad.n)],
        "f_tree": {"height": tree.height, "nodes": len(tree.nodes), "longest_chain": max(chain_lengths)},
        "basis_sizes": basis_sizes,
        "reconstruction": {"ok": not mismatched, "mismatched_pairs": mismatched},
        "intervals": {"max_load": fam.max_load, "certificate": fam.certificate},
        "alphabet": {
            "class_nc_count": co.class_nc_count(),
            "label_count": co.alphabet_size(),
            "f": bounds.f,
            "f_prime": bounds.f_prime,
            "bits_per_vertex": round(bounds.bits_per_vertex, 6),
        },
        "cographs": {
            "classes": [sorted(c.vertices) for c in part.classes],
            "heights": [c.height for c in part.classes],
            "chi_report": chi,
        },
        "checks": checks,
    }


def cmd_analyze(args) -> tuple[int, object]:
    g = parse_edge_list(_read(args.input))
    doc: dict = {"schema": SCHEMA, "command": "analyze", "input": {"n": g.n, "m": g.m}}
    if g.n == 0:
        doc.update({"width": 0, "checks": {}, "ok": True})
        return EXIT_OK, doc
    og, source = _ordered(g, args)
    try:
        doc.update(_certify(g, og, source))
    except InvariantError as exc:
        doc.update({"ok": False, "failure": str(exc), "witness": _jsonable(exc.witness)})
        return EXIT_CERT, doc
    doc["ok"] = all(doc["checks"].values())
    return (EXIT_OK if doc["ok"] else EXIT_CERT), doc


def _jsonable(x):
    if isinstance(x, (frozenset, set)):
        return sorted(_jsonable(y) for y in x)
    if isinstance(x, (list, tuple)):
        return [_jsonable(y) for y in x]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    return x


# --- centered ----------------------------------------------------------------

def _parse_intervals(text: str) -> IntervalFamily:
    rows = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            v, lo, hi = (int(tok) for tok in line.split())
        except ValueError:
            raise InputError(f"interval line must be 'v left right': {raw!r}") from None
        rows.append((lo, hi, v))
    rows.sort()
    if sorted(v for _, _, v in rows) != list(range(len(rows))):
        raise InputError("interval file must name every vertex 0..n-1 once")
    return IntervalFamily(tuple(r[0] for r in rows), tuple(r[1] for r in rows), tuple(r[2] for r in rows))


def cmd_centered(args) -> tuple[int, object]:
    if args.p < 1:
        raise UsageError("p must be at least 1")
    if args.intervals:
        fam = _parse_intervals(_read(args.input))
    else:
        g = parse_edge_list(_read(args.input))
        if g.n == 0:
            raise InputError("graph has no vertices")
        og, _ = _ordered(g, args)
        fam = build_interval_graph(analyze(og))
    coloring = p_centered_coloring(fam, args.p)
    ok, witness = verify_centered(fam.graph, coloring, args.p + 1, guard=args.guard_centered)
    colors = {fam.order[a]: c for a, c in enumerate(coloring.colors)}
    doc = {
        "schema": SCHEMA,
        "command": "centered",
        "p": args.p,
        "checked_at": args.p + 1,
        "n": fam.n,
        "palette": coloring.palette,
        "colors": [colors[v] for v in range(fam.n)],
        "centered": ok,
        "witness": None if witness is None else sorted(fam.order[a] for a in witness),
    }
    return (EXIT_OK if ok else EXIT_CERT), doc


# --- ramsey / orderindex ---------------------------------------------------------

def _pattern(spec: str) -> tuple[Graph, str]:
    if Path(spec).is_file():
        return parse_edge_list(_read(spec)), spec
    return named_graph(spec), spec


def cmd_ramsey(args) -> tuple[int, object]:
    f, name = _pattern(args.pattern)
    ok, witness = verify_vertex_ramsey(f, args.m, guard=args.guard_colorings)
    doc = {
        "schema": SCHEMA,
        "command": "ramsey",
        "pattern": name,
        "m": args.m,
        "host_vertices": f.n ** args.m,
        "ramsey": ok,
        "witness": None if witness is None else list(witness),
    }
    return (EXIT_OK if ok else EXIT_CERT), doc


def cmd_orderindex(args) -> tuple[int, object]:
    g = parse_edge_list(_read(args.input))
    a, b = half_graph_witness(g, guard=args.guard_n, cap=args.cap)
    return EXIT_OK, {"schema": SCHEMA, "command": "orderindex", "n": g.n, "order_index": len(a), "a": a, "b": b}


# --- encode / decode -------------------------------------------------------------

def cmd_encode(args) -> tuple[int, object]:
    g = parse_edge_list(_read(args.input))
    if g.n == 0:
        raise InputError("graph has no vertices")
    og, _ = _ordered(g, args)
    co = encode(og)
    payload = co.to_text()
    if args.json:
        payload = {"schema": SCHEMA, "command": "encode", "order": list(og.order), "encoding": payload}
    return _to_file(payload, args.output)


def cmd_decode(args) -> tuple[int, object]:
    co = ColoredOrder.from_text(_read(args.input))
    g = decode(co)
    payload = format_edge_list(g)
    if args.json:
        payload = {"schema": SCHEMA, "command": "decode", "n": g.n, "m": g.m, "edges": [list(e) for e in g.edges()]}
    return _to_file(payload, args.output)


# --- plumbing ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="linrank", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--timing", action="store_true", help="add wall-clock seconds to JSON output")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, order=True):
        p.add_argument("--json", action="store_true", help="machine-readable summary")
        if order:
            p.add_argument("--order", metavar="FILE", help="vertex order to use instead of an optimal one")
            p.add_argument("--guard-n", type=int, default=LRW_GUARD, metavar="K", help="largest n for the exact width search")

    p = sub.add_parser("gen", help="write a graph from a named family")
    p.add_argument("family")
    p.add_argument("params", nargs="*")
    p.add_argument("-o", "--output")
    p.add_argument("--seed", type=int, default=0)
    common(p, order=False)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("analyze", help="certify the activity pipeline on a graph")
    p.add_argument("input")
    common(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("centered", help="p-centered coloring of the activity interval graph")
    p.add_argument("input")
    p.add_argument("p", type=int)
    p.add_argument("--intervals", action="store_true", help="input holds 'v left right' lines")
    p.add_argument("--guard-centered", type=int, default=CENTERED_GUARD)
    common(p)
    p.set_defaults(func=cmd_centered)

    p = sub.add_parser("ramsey", help="vertex-Ramsey check on a lexicographic power")
    p.add_argument("pattern", help="graph name such as P4, or an edge-list file")
    p.add_argument("m", type=int)
    p.add_argument("--guard-colorings", type=int, default=RAMSEY_GUARD)
    common(p, order=False)
    p.set_defaults(func=cmd_ramsey)

    p = sub.add_parser("orderindex", help="largest semi-induced half-graph")
    p.add_argument("input")
    p.add_argument("--guard-n", type=int, default=ORDER_INDEX_GUARD)
    p.add_argument("--cap", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_orderindex)

    p = sub.add_parser("encode", help="write the colored-order encoding")
    p.add_argument("input")
    p.add_argument("-o", "--output")
    common(p)
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", help="rebuild a graph from its encoding")
    p.add_argument("input")
    p.add_argument("-o", "--output")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_decode)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"linrank: {exc}", file=sys.stderr)
        return EXIT_USAGE
    start = time.perf_counter()
    try:
        code, payload = args.func(args)
    except UsageError as exc:
        print(f"linrank: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapacityError as exc:
        code = EXIT_CAPACITY
        payload = {"schema": SCHEMA, "error": "capacity", "message": str(exc), "guard": exc.guard, "limit": exc.limit}
    except InvariantError as exc:
        code = EXIT_CERT
        payload = {"schema": SCHEMA, "error": "certificate", "message": str(exc), "witness": _jsonable(exc.witness)}
    except (LinrankError, ValueError) as exc:
        print(f"linrank: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if isinstance(payload, dict):
        if args.timing:
            payload["timing"] = {"seconds": round(time.perf_counter() - start, 6)}
        payload = _dump(payload)
    if payload:
        sys.stdout.write(payload)
    return code
