"""Zip products, cut decomposition and crossing-critical graph tooling."""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Mapping

from . import canon
from .cuts import EdgeCut, check_cut, enumerate_min_cuts, find_coherent_bundles
from .graph import (
    BLUE,
    GREEN,
    RED,
    GraphError,
    MultiGraph,
    contract_set,
    delete_edge,
    delete_vertex,
    smooth,
)
from .planar import Exhausted, SolveResult, cr_at_most, crossing_number


@dataclass(frozen=True)
class ZipSpec:
    g1: MultiGraph
    v1: int
    g2: MultiGraph
    v2: int
    sigma: Mapping[int, int] | None = None

    def resolved_sigma(self) -> dict[int, int]:
        f1 = self.g1.incident(self.v1)
        f2 = self.g2.incident(self.v2)
        if len(f1) != len(f2):
            raise GraphError(f"zip vertices have different degrees ({len(f1)} and {len(f2)})")
        if self.sigma is None:
            return dict(zip(f1, f2))
        sigma = dict(self.sigma)
        if sorted(sigma) != sorted(f1) or sorted(sigma.values()) != sorted(f2):
            raise GraphError("sigma must be a bijection between the edges at v1 and at v2")
        return sigma


def zip_product(spec: ZipSpec) -> MultiGraph:
    """Glue ``G1 - v1`` and ``G2 - v2`` along the edges paired by sigma.

    Vertices and edges of ``G1`` keep their ids (colored green), ``G2`` is
    shifted past them (red), and each new blue edge reuses the id of its
    ``G1`` edge at ``v1``.
    """
    g1, g2, v1, v2 = spec.g1, spec.g2, spec.v1, spec.v2
    sigma = spec.resolved_sigma()
    voff = max(g1.next_vertex(), 0)
    eoff = max(g1.next_edge(), 0)
    vertices = set(g1.vertices - {v1})
    edges: dict[int, tuple[int, int]] = {}
    labels: dict[int, str] = {}
    for e, (a, b) in g1.edges.items():
        if v1 not in (a, b):
            edges[e] = (a, b)
            labels[e] = GREEN
    for x in g2.vertices - {v2}:
        vertices.add(x + voff)
    for e, (a, b) in g2.edges.items():
        if v2 not in (a, b):
            edges[e + eoff] = (a + voff, b + voff)
            labels[e + eoff] = RED
    for e1, e2 in sigma.items():
        u = g1.other(e1, v1)
        w = g2.other(e2, v2)
        edges[e1] = (u, w + voff)
        labels[e1] = BLUE
    return MultiGraph(frozenset(vertices), edges, labels)


def split_at_cut(g: MultiGraph, cut: EdgeCut) -> ZipSpec:
    """Inverse of ``zip_product``: ``G_i`` is ``G`` with the other side contracted."""
    check_cut(g, cut)
    side_a, side_b = cut.sides
    g1 = contract_set(g, side_b)
    g2 = contract_set(g, side_a)
    v1 = g.next_vertex()
    v2 = g.next_vertex()
    sigma = {e: e for e in sorted(cut.edges)}
    return ZipSpec(g1, v1, g2, v2, sigma)


# ---------------------------------------------------------------------------
# decomposition


@dataclass(frozen=True)
class Leaf:
    graph: MultiGraph
    result: SolveResult

    @property
    def lower(self) -> int:
        return self.result.lower

    @property
    def upper(self) -> int | None:
        return self.result.upper

    @property
    def exact(self) -> bool:
        return self.result.exact

    @property
    def value(self) -> int:
        return self.result.lower

    def splits(self) -> int:
        return 0

    def leaves(self) -> list[Leaf]:
        return [self]

    def to_json(self) -> dict:
        return {
            "graph_key": _key_text(self.graph),
            "graph": _graph_json(self.graph),
            "cut_edges": None,
            "exact": self.exact,
            "value": self.value,
            "upper": self.upper,
            "leaf_certificate": self.result.certificate.to_json() if self.result.certificate else None,
        }


@dataclass(frozen=True)
class Split:
    graph: MultiGraph
    cut: EdgeCut
    exact_split: bool
    children: tuple[DecompositionTree, DecompositionTree]

    @property
    def lower(self) -> int:
        return sum(c.lower for c in self.children)

    @property
    def upper(self) -> int | None:
        if not self.exact_split:
            return None
        ups = [c.upper for c in self.children]
        return None if None in ups else sum(ups)

    @property
    def exact(self) -> bool:
        return self.exact_split and all(c.exact for c in self.children)

    @property
    def value(self) -> int:
        return self.lower

    def splits(self) -> int:
        return 1 + sum(c.splits() for c in self.children)

    def leaves(self) -> list[Leaf]:
        return [leaf for c in self.children for leaf in c.leaves()]

    def to_json(self) -> dict:
        return {
            "graph_key": _key_text(self.graph),
            "graph": _graph_json(self.graph),
            "cut_edges": sorted(self.cut.edges),
            "exact": self.exact,
            "split_exact": self.exact_split,
            "value": self.value,
            "upper": self.upper,
            "children": [c.to_json() for c in self.children],
        }


DecompositionTree = Leaf | Split


def _key_text(g: MultiGraph) -> str | None:
    if g.n > canon.DEFAULT_CAP:
        return None
    return canon.canonical_key(g).decode()


def _graph_json(g: MultiGraph) -> dict:
    c = g.compact()
    return {"n": c.n, "edges": [list(p) for p in c.edges.values()]}


@dataclass
class Policy:
    """Knobs for ``cr_via_decomposition``; ``solver`` is passed to ``crossing_number``."""

    max_cut_size: int = 3
    allow_lower_bound: bool = False
    threads: int = 1
    solver: dict = field(default_factory=dict)


def choose_cut(g: MultiGraph, policy: Policy) -> tuple[EdgeCut, ZipSpec, bool] | None:
    """Most balanced nontrivial cut, ties by size then edge ids.

    Cuts of size 4 are only used when both zip vertices carry coherent
    bundles; the returned flag is False for such lower-bound splits.
    """
    if g.n < 4:
        return None
    cuts = enumerate_min_cuts(g, max_size=3, nontrivial_only=True)
    if cuts:
        best = min(cuts, key=lambda c: (c.imbalance, c.size, sorted(c.edges)))
        return best, split_at_cut(g, best), True
    if policy.allow_lower_bound and policy.max_cut_size >= 4:
        cuts = [c for c in enumerate_min_cuts(g, max_size=4, nontrivial_only=True) if c.size == 4]
        cuts.sort(key=lambda c: (c.imbalance, sorted(c.edges)))
        for c in cuts:
            spec = split_at_cut(g, c)
            if find_coherent_bundles(spec.g1, spec.v1) and find_coherent_bundles(spec.g2, spec.v2):
                return c, spec, False
    return None


def cr_via_decomposition(g: MultiGraph, policy: Policy | None = None) -> DecompositionTree:
    """Split along small minimal cuts, solve the factors, and sum.

    Splits of size at most 3 are exact; size-4 splits (only with
    ``allow_lower_bound``) make the aggregate a lower bound.
    """
    policy = policy or Policy()
    plan = _plan(g, policy)
    leaves: list[MultiGraph] = []
    _collect(plan, leaves)
    if policy.threads > 1 and len(leaves) > 1:
        with ThreadPoolExecutor(max_workers=policy.threads) as pool:
            results = list(pool.map(lambda h: crossing_number(h, **policy.solver), leaves))
    else:
        results = [crossing_number(h, **policy.solver) for h in leaves]
    it = iter(results)
    return _assemble(plan, it)


def _plan(g: MultiGraph, policy: Policy):
    comps = g.components()
    if len(comps) > 1:
        a = comps[0]
        cut = EdgeCut(frozenset(), (a, g.vertices - a))
        return ("split", g, cut, True, (_plan(g.subgraph(a), policy), _plan(g.subgraph(g.vertices - a), policy)))
    chosen = choose_cut(g, policy)
    if chosen is None:
        return ("leaf", g)
    cut, spec, exact = chosen
    return ("split", g, cut, exact, (_plan(spec.g1, policy), _plan(spec.g2, policy)))


def _collect(plan, out: list[MultiGraph]) -> None:
    if plan[0] == "leaf":
        out.append(plan[1])
    else:
        for child in plan[4]:
            _collect(child, out)


def _assemble(plan, results) -> DecompositionTree:
    if plan[0] == "leaf":
        return Leaf(plan[1], next(results))
    _, g, cut, exact, children = plan
    return Split(g, cut, exact, (_assemble(children[0], results), _assemble(children[1], results)))


def exact_cr(g: MultiGraph, **solver) -> int:
    """cr via exact (size <= 3) decomposition; raises ``Exhausted`` if a leaf is undecided."""
    tree = cr_via_decomposition(g, Policy(solver=solver))
    if not tree.exact:
        raise Exhausted(f"crossing number undetermined: [{tree.lower}, {tree.upper}]")
    return tree.value


# ---------------------------------------------------------------------------
# crossing-critical graphs


def is_crossing_critical(g: MultiGraph, **solver) -> bool:
    """True iff deleting any edge strictly lowers the crossing number.

    Raises ``Exhausted`` when a needed crossing number cannot be decided.
    """
    k = exact_cr(g, **solver)
    return all(cr_at_most(delete_edge(g, e), k - 1, **solver) for e in g.edges)


@dataclass(frozen=True)
class CriticalSubgraph:
    graph: MultiGraph
    value: int
    critical: bool
    removable_protected: tuple[int, ...]


def extract_critical_subgraph(g: MultiGraph, protected=(), **solver) -> CriticalSubgraph:
    """Greedily delete unprotected edges (ascending id) whose removal keeps cr.

    One pass suffices: an edge whose deletion lowers cr keeps doing so after
    further cr-preserving deletions. Protected edges that could still be
    removed without lowering cr are reported.
    """
    protected = set(protected)
    k = exact_cr(g, **solver)
    h = g
    for e in sorted(g.edges):
        if e in protected:
            continue
        trial = delete_edge(h, e)
        if not cr_at_most(trial, k - 1, **solver):
            h = trial
    removable = tuple(e for e in sorted(protected & set(h.edges)) if not cr_at_most(delete_edge(h, e), k - 1, **solver))
    return CriticalSubgraph(h, k, not removable, removable)


def zip_cover(
    g: MultiGraph,
    cover,
    seeds: Mapping[int, tuple[MultiGraph, int]],
    sigmas: Mapping[int, Mapping[int, int]] | None = None,
) -> MultiGraph:
    """Zip ``seeds[v] = (G_v, u_v)`` into ``g`` at every ``v`` of the vertex cover."""
    cover = set(cover)
    for e, (a, b) in g.edges.items():
        if a not in cover and b not in cover:
            raise GraphError(f"edge {e}=({a},{b}) is not covered")
    for v in cover:
        d = g.degree(v)
        if d not in (2, 3):
            raise GraphError(f"cover vertex {v} has degree {d}; zipping needs degree 2 or 3")
        if v not in seeds:
            raise GraphError(f"no seed graph for cover vertex {v}")
        gv, uv = seeds[v]
        if gv.degree(uv) != d:
            raise GraphError(f"seed for {v} has degree {gv.degree(uv)} at its zip vertex, expected {d}")
    h = g
    for v in sorted(cover):
        gv, uv = seeds[v]
        sigma = None if sigmas is None else sigmas.get(v)
        h = zip_product(ZipSpec(h, v, gv, uv, sigma))
    return h


def _tidy(g: MultiGraph) -> MultiGraph:
    """Drop vertices of degree <= 1 and suppress degree-2 vertices (cr unchanged)."""
    while True:
        deg = g.degrees()
        low = next((v for v in sorted(deg) if deg[v] <= 1), None)
        if low is not None:
            g = delete_vertex(g, low)
            continue
        two = next((v for v in sorted(deg) if deg[v] == 2), None)
        if two is not None:
            g = smooth(g, two)
            continue
        return g


def is_internally_4ec(g: MultiGraph) -> bool:
    """Connected, min degree >= 3, and every minimal cut of size <= 3 isolates a vertex."""
    if not g.is_connected() or g.n == 0:
        return False
    if min(g.degrees().values()) < 3:
        return False
    return not enumerate_min_cuts(g, max_size=3, nontrivial_only=True)


def decompose_internally_4ec(g: MultiGraph, check: bool = True, **solver) -> list[MultiGraph]:
    """Crossing-critical factors without nontrivial cuts of size <= 3, summing to cr(g)."""
    if not g.is_connected():
        raise GraphError("input must be connected")
    if g.n and min(g.degrees().values()) < 3:
        raise GraphError("input must have minimum degree at least 3")
    if check and not is_crossing_critical(g, **solver):
        raise GraphError("input is not crossing-critical")
    out: list[MultiGraph] = []
    work = [g]
    while work:
        h = work.pop(0)
        cuts = enumerate_min_cuts(h, max_size=3, nontrivial_only=True) if h.n >= 4 else []
        if not cuts:
            out.append(h)
            continue
        cut = min(cuts, key=lambda c: (c.imbalance, c.size, sorted(c.edges)))
        spec = split_at_cut(h, cut)
        for gi, vi in ((spec.g1, spec.v1), (spec.g2, spec.v2)):
            star = gi.incident(vi)
            j = extract_critical_subgraph(gi, protected=star, **solver)
            if not j.critical:
                j = extract_critical_subgraph(gi, **solver)
            work.append(_tidy(j.graph))
    return out


def all_sigmas(spec: ZipSpec) -> list[dict[int, int]]:
    f1 = spec.g1.incident(spec.v1)
    f2 = spec.g2.incident(spec.v2)
    return [dict(zip(f1, perm)) for perm in itertools.permutations(f2)]
