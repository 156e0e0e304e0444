"""Partition of an ordered graph into cographs by (Class, NC) label.

Vertices with equal delegate colors and equal neighbor colors form one part.
Each part gets a cotree read off the delegation tree: the inner nodes are the
pairwise meets of the part's singletons, and every pair meeting at the same
node must agree on adjacency.
"""

from __future__ import annotations

from dataclasses import dataclass

from .activity import ActivityData, meet
from .encoding import ColoredOrder, alphabet_bounds
from .errors import CapacityError, ContractError, InvariantError
from .graph import Graph, induced_subgraph
from .width import CHI_GUARD, OMEGA_GUARD, Cotree, chromatic_number, clique_number, cotree_graph, is_cograph

__all__ = ["CographClass", "CographPartition", "partition", "chi_bound_report"]


@dataclass(frozen=True)
class CographClass:
    key: tuple
    positions: tuple[int, ...]
    vertices: tuple[int, ...]  # original ids, in the same order as ``positions``
    cotree: Cotree  # leaves are original vertex ids

    @property
    def height(self) -> int:
        return self.cotree.height


@dataclass(frozen=True)
class CographPartition:
    r: int
    n: int
    classes: tuple[CographClass, ...]

    @property
    def class_count(self) -> int:
        return len(self.classes)

    @property
    def max_height(self) -> int:
        return max((c.height for c in self.classes), default=0)

    def class_of(self) -> dict[int, int]:
        return {v: i for i, c in enumerate(self.classes) for v in c.vertices}


def _class_cotree(ad: ActivityData, xs: list[int]) -> Cotree:
    """Cotree of ``G[xs]`` (positions) built from meets in the delegation tree."""
    vid = ad.vertex
    if len(xs) == 1:
        return Cotree("leaf", vid(xs[0]))
    keep = {frozenset((x,)) for x in xs}
    meets = {}
    for i, x in enumerate(xs):
        for y in xs[i + 1 :]:
            w = meet(ad, x, y)
            meets[(x, y)] = w
            keep.add(w)
    # parent in the restricted tree = nearest proper ancestor that was kept
    parent = {}
    for x in xs:
        below = None
        for node in ad.chains[x]:
            if node in keep:
                if below is not None and below not in parent:
                    parent[below] = node
                below = node
    verdict: dict = {}
    for (x, y), w in meets.items():
        edge = ad.graph.has_edge(x, y)
        if w not in verdict:
            verdict[w] = (edge, (x, y))
        elif verdict[w][0] != edge:
            raise InvariantError(
                "pairs meeting at one delegation node disagree on adjacency",
                witness=(sorted(w), verdict[w][1], (x, y)),
            )
    children: dict = {}
    for node, up in parent.items():
        children.setdefault(up, []).append(node)
    member = set(xs)

    def build(node) -> Cotree:
        kids = sorted(children.get(node, ()), key=lambda m: (min(m) if m else -1, len(m)))
        subtrees = [build(k) for k in kids]
        if len(node) == 1 and next(iter(node)) in member:
            (x,) = node
            if not subtrees:
                return Cotree("leaf", vid(x))
            subtrees.insert(0, Cotree("leaf", vid(x)))
        if len(subtrees) < 2:  # pragma: no cover - meets of distinct leaves branch
            raise InvariantError("restricted delegation tree has a unary node", witness=sorted(node))
        kind = "join" if verdict[node][0] else "union"
        return Cotree(kind, None, tuple(subtrees))

    roots = [m for m in keep if m not in parent]
    if len(roots) != 1:  # pragma: no cover
        raise InvariantError("restricted delegation tree is not connected", witness=[sorted(m) for m in roots])
    return build(roots[0])


def partition(ad: ActivityData, labels: ColoredOrder, verify: bool = True) -> CographPartition:
    """Group positions by (Class, NC); with ``verify`` every part is checked by the cograph oracle."""
    if labels.n != ad.n or labels.r != ad.r:
        raise ContractError("labels were not produced from this activity data")
    groups: dict[tuple, list[int]] = {}
    for p, lab in enumerate(labels.labels):
        groups.setdefault(lab.class_nc_key, []).append(p)
    g = ad.og.graph
    classes = []
    for key, xs in sorted(groups.items(), key=lambda kv: kv[1][0]):
        tree = _class_cotree(ad, xs)
        if tree.height > ad.r + 2:
            raise InvariantError(f"cotree height {tree.height} exceeds r + 2", witness=key)
        vertices = tuple(ad.vertex(x) for x in xs)
        if verify:
            sub, keep = induced_subgraph(g, vertices)
            ok, _ = is_cograph(sub)
            if not ok:
                raise InvariantError("label class does not induce a cograph", witness=vertices)
            index = {v: i for i, v in enumerate(keep)}
            if cotree_graph(_relabel(tree, index), len(keep)) != sub:
                raise InvariantError("cotree does not reproduce the class subgraph", witness=vertices)
        classes.append(CographClass(key, tuple(xs), vertices, tree))
    return CographPartition(ad.r, ad.n, tuple(classes))


def _relabel(t: Cotree, index: dict[int, int]) -> Cotree:
    if t.kind == "leaf":
        return Cotree("leaf", index[t.vertex])
    return Cotree(t.kind, None, tuple(_relabel(c, index) for c in t.children))


def _guarded(fn, graph: Graph, guard: int):
    try:
        return fn(graph, guard=guard)
    except CapacityError:
        return None


def chi_bound_report(g: Graph, p: CographPartition, chi_guard: int = CHI_GUARD, omega_guard: int = OMEGA_GUARD) -> dict:
    """JSON-ready summary of ``chi <= f(r) * omega`` for this partition.

    Quantities beyond their guard are reported as ``None`` and the report is
    marked ``partial``.
    """
    bounds = alphabet_bounds(p.r)
    omega = _guarded(clique_number, g, omega_guard)
    chi = _guarded(chromatic_number, g, chi_guard)
    per_class = []
    for c in p.classes:
        sub, _ = induced_subgraph(g, c.vertices)
        co = _guarded(clique_number, sub, omega_guard)
        cc = _guarded(chromatic_number, sub, chi_guard)
        per_class.append(
            {
                "size": len(c.vertices),
                "height": c.height,
                "omega": co,
                "chi": cc,
                "perfect_check": None if co is None or cc is None else co == cc,
            }
        )
    bound = None if omega is None else bounds.f * omega
    return {
        "r": p.r,
        "class_count": p.class_count,
        "f_r": bounds.f,
        "class_count_ok": p.class_count <= bounds.f,
        "max_cotree_height": p.max_height,
        "height_ok": p.max_height <= p.r + 2,
        "omega": omega,
        "chi": chi,
        "bound": bound,
        "g_bound": None if omega is None else bounds.g * omega,
        "bound_holds": None if chi is None or bound is None else chi <= bound,
        "partition_coloring_bound": None if omega is None else p.class_count * omega,
        "classes": per_class,
        "partial": omega is None or chi is None or any(c["perfect_check"] is None for c in per_class),
    }
