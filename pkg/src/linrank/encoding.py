"""Colored linear orders that encode a graph of bounded linear rankwidth.

Every position of an ordered graph receives a label built from the activity
coloring: its own color, the colors of its delegation chain, and two color
sets describing the activity intervals that cover it.  :func:`decode` rebuilds
the edge set from the labels and the order alone.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

from .activity import ActivityData, analyze
from .errors import InputError, InvariantError, MalformedEncodingError
from .graph import Digraph, Graph, OrderedGraph

__all__ = [
    "VertexLabel",
    "ColoredOrder",
    "AlphabetBounds",
    "gamma_coloring",
    "encode",
    "decode",
    "alphabet_bounds",
    "ModelNode",
    "ConnectionModel",
    "eval_connection_model",
    "eval_embedded_model",
    "model_from_labels",
]


def _fmt(colors) -> str:
    return ",".join(str(c) for c in sorted(colors))


def _parse_set(text: str) -> frozenset[int]:
    text = text.strip()
    if not text:
        return frozenset()
    try:
        return frozenset(int(tok) for tok in text.split(","))
    except ValueError:
        raise MalformedEncodingError(f"bad color set {text!r}") from None


@dataclass(frozen=True)
class VertexLabel:
    """``class_seq[k]`` is the color set of the ``k``-th delegate; ``class_seq[0] == {gamma}``."""

    gamma: int
    class_seq: tuple[frozenset[int], ...]
    nc: frozenset[int]
    ic: frozenset[int]

    def __post_init__(self):
        if not self.class_seq or self.class_seq[0] != frozenset((self.gamma,)):
            raise MalformedEncodingError("first class component must be the vertex's own color")
        if not self.nc <= self.ic:
            raise MalformedEncodingError(f"NC {sorted(self.nc)} is not inside IC {sorted(self.ic)}")
        if self.gamma not in self.ic:
            raise MalformedEncodingError("a vertex's own color must belong to IC")

    @property
    def key(self) -> tuple:
        """Canonical hashable form of the full (Class, NC, IC) triple."""
        return (tuple(tuple(sorted(c)) for c in self.class_seq), tuple(sorted(self.nc)), tuple(sorted(self.ic)))

    @property
    def class_nc_key(self) -> tuple:
        return self.key[:2]

    def to_line(self) -> str:
        classes = ";".join(_fmt(c) for c in self.class_seq[1:])
        return f"{self.gamma} | {classes} | {_fmt(self.nc)} | {_fmt(self.ic)}"


@dataclass(frozen=True)
class ColoredOrder:
    r: int
    labels: tuple[VertexLabel, ...]

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(self.labels))
        if self.r < 0:
            raise MalformedEncodingError("width must be non-negative")
        top = self.r + 2
        for p, lab in enumerate(self.labels):
            if len(lab.class_seq) != self.r + 1:
                raise MalformedEncodingError(f"position {p}: expected {self.r + 1} class components")
            used = set(lab.ic) | {lab.gamma}
            for comp in lab.class_seq:
                used |= comp
            if any(not 1 <= c <= top for c in used):
                raise MalformedEncodingError(f"position {p}: color outside 1..{top}")
            if any(top in comp for comp in lab.class_seq[1:]):
                raise MalformedEncodingError(f"position {p}: delegates must be active")

    @property
    def n(self) -> int:
        return len(self.labels)

    def alphabet_size(self) -> int:
        return len({lab.key for lab in self.labels})

    def class_nc_count(self) -> int:
        return len({lab.class_nc_key for lab in self.labels})

    def to_text(self) -> str:
        return "\n".join([f"{self.r} {self.n}"] + [lab.to_line() for lab in self.labels]) + "\n"

    @classmethod
    def from_text(cls, text: str) -> ColoredOrder:
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if not lines:
            raise MalformedEncodingError("empty encoding")
        try:
            r, n = (int(tok) for tok in lines[0].split())
        except ValueError:
            raise MalformedEncodingError("header must be 'r n'") from None
        if len(lines) - 1 != n:
            raise MalformedEncodingError(f"header announces {n} positions, found {len(lines) - 1}")
        labels = []
        for ln in lines[1:]:
            parts = ln.split("|")
            if len(parts) != 4:
                raise MalformedEncodingError(f"label line needs four fields: {ln!r}")
            try:
                gamma = int(parts[0])
            except ValueError:
                raise MalformedEncodingError(f"bad color {parts[0]!r}") from None
            comps = parts[1].split(";") if r else []
            if parts[1].strip() and not r:
                raise MalformedEncodingError("width 0 labels carry no delegate colors")
            if len(comps) != r:
                raise MalformedEncodingError(f"expected {r} delegate color sets in {ln!r}")
            seq = (frozenset((gamma,)),) + tuple(_parse_set(c) for c in comps)
            labels.append(VertexLabel(gamma, seq, _parse_set(parts[2]), _parse_set(parts[3])))
        return cls(r, tuple(labels))


def gamma_coloring(ad: ActivityData) -> tuple[int, ...]:
    """Interval coloring indexed by position; inactive positions get ``r + 2``."""
    r = ad.r
    colors = [r + 2] * ad.n
    live: list[int] = []  # active positions whose interval reaches the current one
    for v in range(ad.n):
        if not ad.is_active(v):
            continue
        live = [u for u in live if ad.tau[u] >= v]
        taken = {colors[u] for u in live}
        free = next((c for c in range(1, r + 2) if c not in taken), None)
        if free is None:
            raise InvariantError(f"more than {r + 1} active intervals meet position {v}", witness=(v, live))
        colors[v] = free
        live.append(v)
    return tuple(colors)


def encode(source: OrderedGraph | ActivityData) -> ColoredOrder:
    ad = source if isinstance(source, ActivityData) else analyze(source)
    gamma = gamma_coloring(ad)
    r, n, g = ad.r, ad.n, ad.graph
    ic: list[set[int]] = [set() for _ in range(n)]
    nc: list[set[int]] = [set() for _ in range(n)]
    for u in range(n):
        for v in range(u, ad.tau[u] + 1):
            ic[v].add(gamma[u])
            if g.has_edge(u, v):
                nc[v].add(gamma[u])
    labels = []
    for v in range(n):
        seq = tuple(frozenset(gamma[x] for x in ad.iterate(v, k)) for k in range(r + 1))
        labels.append(VertexLabel(gamma[v], seq, frozenset(nc[v]), frozenset(ic[v])))
    return ColoredOrder(r, tuple(labels))


def decode(co: ColoredOrder) -> Graph:
    n, r = co.n, co.r
    gam = [lab.gamma for lab in co.labels]
    # last[a][p]: greatest position <= p colored a, or -1
    last = {a: [-1] * n for a in set(gam)}
    for a, row in last.items():
        seen = -1
        for p in range(n):
            if gam[p] == a:
                seen = p
            row[p] = seen

    def latest(a: int, p: int) -> int:
        row = last.get(a)
        return -1 if row is None or p < 0 else row[p]

    rows = [0] * n
    for u in range(n):
        lab = co.labels[u]
        chain = [[u]]
        for k in range(1, r + 1):
            members = []
            for a in sorted(lab.class_seq[k]):
                x = latest(a, u - 1)
                if x < 0:
                    raise MalformedEncodingError(f"position {u}: no earlier position has color {a}")
                members.append(x)
            chain.append(members)
        for v in range(u + 1, n):
            target = co.labels[v]
            edge = False
            for k, xs in enumerate(chain):
                if not xs:
                    break
                if all(gam[x] in target.ic and latest(gam[x], v) == x for x in xs):
                    comp = lab.class_seq[k]
                    if not comp <= target.ic:  # pragma: no cover - implied by the membership test
                        raise MalformedEncodingError(f"pair ({u}, {v}): parity test uses colors outside IC")
                    edge = len(comp & target.nc) % 2 == 1
                    break
            if edge:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
    return Graph(n, tuple(rows))


@dataclass(frozen=True)
class AlphabetBounds:
    f: int
    f_prime: int
    g: int

    @property
    def bits_per_vertex(self) -> float:
        return math.log2(self.f_prime)


def alphabet_bounds(r: int) -> AlphabetBounds:
    if r < 0:
        raise InputError("width must be non-negative")
    f = 3 * math.factorial(r + 2) * 2 ** math.comb(r + 1, 2)
    f_prime = math.factorial(r + 2) * 2 ** math.comb(r, 2) * 3 ** (r + 2)
    g = math.factorial(r + 2) * 2 ** math.comb(r, 2) * 3 ** (r + 2)
    return AlphabetBounds(f, f_prime, g)


@dataclass(frozen=True)
class ModelNode:
    """Node of a connection model; a leaf has a ``vertex`` id and no children.

    ``relation`` holds label pairs ``(a, b)``; for the embedded variant it holds
    the pairs on which ``f`` is 1, read as (left leaf color, right leaf color).
    """

    children: tuple[ModelNode, ...] = ()
    relation: frozenset = field(default_factory=frozenset)
    label: object = None
    vertex: int | None = None

    @property
    def is_leaf(self) -> bool:
        return self.vertex is not None


@dataclass(frozen=True)
class ConnectionModel:
    root: ModelNode
    depth_bound: int
    directed: bool = False


def _leaf_paths(m: ConnectionModel):
    """Per leaf: its label and the root path as (internal node serial, child slot) steps."""
    leaves: dict[int, tuple[object, list[tuple[int, int]]]] = {}
    relations: list[frozenset] = []
    stack = [(m.root, [], 1)]
    while stack:
        node, trail, depth = stack.pop()
        if depth > m.depth_bound:
            raise InputError(f"model deeper than the declared bound {m.depth_bound}")
        if node.is_leaf:
            if node.children:
                raise InputError("a leaf cannot have children")
            if node.vertex in leaves:
                raise InputError(f"vertex {node.vertex} appears on two leaves")
            if node.label is None:
                raise InputError(f"leaf {node.vertex} is unlabeled")
            leaves[node.vertex] = (node.label, trail)
            continue
        if not node.children:
            raise InputError("an internal node needs at least one child")
        serial = len(relations)
        relations.append(frozenset(node.relation))
        for slot, child in enumerate(node.children):
            stack.append((child, trail + [(serial, slot)], depth + 1))
    n = len(leaves)
    if sorted(leaves) != list(range(n)):
        raise InputError("leaf vertex ids must be exactly 0..n-1")
    return n, leaves, relations


def _split(pa, pb) -> tuple[int, int, int]:
    """Serial of the deepest common node and the child slots taken below it."""
    i = 0
    while i < len(pa) and i < len(pb) and pa[i] == pb[i]:
        i += 1
    if i == len(pa) or i == len(pb):  # pragma: no cover - distinct leaves always split
        raise InputError("leaf paths do not diverge")
    return pa[i][0], pa[i][1], pb[i][1]


def eval_connection_model(m: ConnectionModel) -> Graph | Digraph:
    n, leaves, relations = _leaf_paths(m)
    if not m.directed:
        for rel in relations:
            if any((b, a) not in rel for a, b in rel):
                raise InputError("an undirected model needs symmetric relations")
    out = [0] * n
    for x in range(n):
        lx, px = leaves[x]
        for y in range(n):
            if x == y:
                continue
            ly, py = leaves[y]
            w, _, _ = _split(px, py)
            if (lx, ly) in relations[w]:
                out[x] |= 1 << y
    return Digraph(n, tuple(out)) if m.directed else Graph(n, tuple(out))


def eval_embedded_model(m: ConnectionModel) -> Graph:
    """Plane variant: ``x ~ y`` iff, with ``x`` left of ``y`` at their meeting node, ``(c(x), c(y))`` is in its set."""
    n, leaves, relations = _leaf_paths(m)
    rows = [0] * n
    for x in range(n):
        lx, px = leaves[x]
        for y in range(x + 1, n):
            ly, py = leaves[y]
            w, sx, sy = _split(px, py)
            pair = (lx, ly) if sx < sy else (ly, lx)
            if pair in relations[w]:
                rows[x] |= 1 << y
                rows[y] |= 1 << x
    return Graph(n, tuple(rows))


def model_from_labels(labels: Sequence[object], relation, depth_bound: int = 2, directed: bool = False) -> ConnectionModel:
    """Star model: one root above one leaf per label."""
    leaves = tuple(ModelNode(label=lab, vertex=i) for i, lab in enumerate(labels))
    return ConnectionModel(ModelNode(children=leaves, relation=frozenset(relation)), depth_bound, directed)

