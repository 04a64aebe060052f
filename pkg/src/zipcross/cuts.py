"""Minimal edge cuts of bounded size, bundles and coherent bundle pairs."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable

import numpy as np
from scipy.optimize import Bounds, LinearConstraint, milp

from .flow import Network, max_flow
from .graph import GraphError, MultiGraph


@dataclass(frozen=True)
class EdgeCut:
    edges: frozenset[int]
    sides: tuple[frozenset[int], frozenset[int]]

    @property
    def size(self) -> int:
        return len(self.edges)

    @property
    def trivial(self) -> bool:
        return min(len(s) for s in self.sides) == 1

    @property
    def imbalance(self) -> int:
        return abs(len(self.sides[0]) - len(self.sides[1]))

    def to_json(self) -> dict:
        return {
            "edges": sorted(self.edges),
            "sides": [sorted(self.sides[0]), sorted(self.sides[1])],
        }


def check_cut(g: MultiGraph, cut: EdgeCut) -> None:
    """Raise ``GraphError`` unless ``cut`` is a minimal edge cut of ``g``."""
    a, b = cut.sides
    if not a or not b or a & b or (a | b) != g.vertices:
        raise GraphError("cut sides must partition the vertex set into two nonempty parts")
    between = {e for e, (x, y) in g.edges.items() if (x in a) != (y in a)}
    if between != set(cut.edges):
        raise GraphError("cut edges differ from the edges between the sides")
    for side in (a, b):
        if not g.subgraph(side).is_connected():
            raise GraphError("a cut side is disconnected, so the cut is not minimal")


def _bridges(vertices: Iterable[int], adj: dict[int, list[tuple[int, int]]], banned: set[int]) -> list[int]:
    """Bridge edge ids of the multigraph with ``banned`` edges removed."""
    index: dict[int, int] = {}
    low: dict[int, int] = {}
    out = []
    counter = 0
    for root in vertices:
        if root in index:
            continue
        index[root] = low[root] = counter
        counter += 1
        stack = [(root, -1, iter(adj[root]))]
        while stack:
            x, via, it = stack[-1]
            advanced = False
            for y, e in it:
                if e == via or e in banned:
                    continue
                if y in index:
                    low[x] = min(low[x], index[y])
                else:
                    index[y] = low[y] = counter
                    counter += 1
                    stack.append((y, e, iter(adj[y])))
                    advanced = True
                    break
            if not advanced:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    low[p] = min(low[p], low[x])
                    if low[x] > index[p]:
                        out.append(via)
    return out


def _as_cut(g: MultiGraph, f: frozenset[int], adj) -> EdgeCut | None:
    start = min(g.vertices)
    side = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for y, e in adj[x]:
            if e not in f and y not in side:
                side.add(y)
                stack.append(y)
    side_a = frozenset(side)
    side_b = g.vertices - side_a
    if not side_b:
        return None
    for e in f:
        x, y = g.edges[e]
        if (x in side_a) == (y in side_a):
            return None
    for e, (x, y) in g.edges.items():
        if e not in f and (x in side_a) != (y in side_a):
            return None
    # the far side must be connected as well
    probe = next(iter(side_b))
    seen = {probe}
    stack = [probe]
    while stack:
        x = stack.pop()
        for y, e in adj[x]:
            if e not in f and y not in seen:
                seen.add(y)
                stack.append(y)
    if seen != side_b:
        return None
    return EdgeCut(f, (side_a, side_b))


def enumerate_min_cuts(g: MultiGraph, max_size: int = 3, nontrivial_only: bool = False) -> list[EdgeCut]:
    """All minimal edge cuts with at most ``max_size`` edges (at most 4).

    A minimal cut ``F`` leaves ``G - (F - b)`` connected with ``b`` a bridge
    for every ``b`` in ``F``, so cuts of size ``k`` are found as bridges of
    ``G`` minus ``k - 1`` edges.
    """
    if max_size > 4:
        raise ValueError("max_size must be at most 4")
    if not g.is_connected():
        raise GraphError("cut enumeration needs a connected graph")
    if g.n < 2:
        return []
    adj = g.adjacency()
    order = sorted(g.vertices)
    found: dict[frozenset[int], EdgeCut] = {}
    ids = list(g.edges)
    for k in range(1, max_size + 1):
        for rest in itertools.combinations(ids, k - 1):
            banned = set(rest)
            for b in _bridges(order, adj, banned):
                f = frozenset(banned | {b})
                if len(f) != k or f in found:
                    continue
                cut = _as_cut(g, f, adj)
                if cut is not None:
                    found[f] = cut
    cuts = list(found.values())
    if nontrivial_only:
        cuts = [c for c in cuts if not c.trivial]
    cuts.sort(key=lambda c: (c.size, sorted(c.edges)))
    return cuts


# ---------------------------------------------------------------------------
# bundles


@dataclass(frozen=True)
class BundlePath:
    start: int
    edges: tuple[int, ...]


@dataclass(frozen=True)
class Bundle:
    center: int
    sink: int
    paths: tuple[BundlePath, ...]

    def edge_set(self) -> set[int]:
        return {e for p in self.paths for e in p.edges}

    def to_json(self) -> dict:
        return {
            "center": self.center,
            "sink": self.sink,
            "paths": [{"start": p.start, "edges": list(p.edges)} for p in self.paths],
        }


def check_bundle(g: MultiGraph, b: Bundle) -> None:
    """Raise ``GraphError`` unless ``b`` is a bundle of ``b.center`` in ``g``."""
    v = b.center
    if b.sink == v:
        raise GraphError("sink equals centre")
    used: set[int] = set()
    starts: dict[int, int] = {}
    for p in b.paths:
        starts[p.start] = starts.get(p.start, 0) + 1
        x = p.start
        visited = {x}
        for e in p.edges:
            if e in used:
                raise GraphError(f"edge {e} used twice")
            used.add(e)
            x = g.other(e, x)
            if x == v:
                raise GraphError("path passes through the centre")
            if x in visited:
                raise GraphError("path revisits a vertex")
            visited.add(x)
        if x != b.sink:
            raise GraphError("path does not end at the sink")
    if starts != g.neighbors(v):
        raise GraphError("path starts do not match the edge multiplicities at the centre")


def _bundle_network(g: MultiGraph, v: int) -> tuple[Network, dict[int, int]]:
    net = Network()
    for e, (a, b) in g.edges.items():
        if v not in (a, b):
            net.add_edge(a, b, 1, tag=e)
    nbrs = g.neighbors(v)
    for u, k in sorted(nbrs.items()):
        net.add_arc("src", u, k, tag=("start", u))
    return net, nbrs


def _paths_from_tags(tag_paths: list[list[object]]) -> list[BundlePath]:
    out = []
    for tags in tag_paths:
        head = tags[0]
        assert isinstance(head, tuple) and head[0] == "start"
        out.append(BundlePath(head[1], tuple(t for t in tags[1:] if not isinstance(t, tuple))))
    out.sort(key=lambda p: (p.start, p.edges))
    return out


def find_bundle(g: MultiGraph, v: int, w: int) -> Bundle | None:
    """A bundle of ``v`` with sink ``w``, via unit-capacity max flow in ``G - v``."""
    if w == v:
        raise GraphError("sink must differ from the centre")
    g._need_vertex(v)
    g._need_vertex(w)
    d = g.degree(v)
    net, _ = _bundle_network(g, v)
    if w not in net.out:
        return None if d else Bundle(v, w, ())
    res = max_flow(net, "src", w)
    if res.value != d:
        return None
    return Bundle(v, w, tuple(_paths_from_tags(res.paths)))


def _two_commodity(g: MultiGraph, v: int, w1: int, w2: int) -> tuple[list[BundlePath], list[BundlePath]] | None:
    """Exact integral two-commodity flow: commodity ``i`` routes ``mult(u)`` units from each neighbour to ``w_i``."""
    nbrs = g.neighbors(v)
    d = sum(nbrs.values())
    edges = [(e, a, b) for e, (a, b) in g.edges.items() if v not in (a, b)]
    nodes = sorted(g.vertices - {v})
    nidx = {x: i for i, x in enumerate(nodes)}
    m = len(edges)
    # variable layout: commodity c, edge j, direction s -> 4j + 2c + s
    nvar = 4 * m
    rows = []
    lo = []
    hi = []
    for j in range(m):
        row = np.zeros(nvar)
        row[4 * j : 4 * j + 4] = 1
        rows.append(row)
        lo.append(0)
        hi.append(1)
    for c, w in enumerate((w1, w2)):
        for x in nodes:
            row = np.zeros(nvar)
            for j, (_, a, b) in enumerate(edges):
                # s = 0 means a -> b
                if a == x:
                    row[4 * j + 2 * c + 0] += 1
                    row[4 * j + 2 * c + 1] -= 1
                if b == x:
                    row[4 * j + 2 * c + 1] += 1
                    row[4 * j + 2 * c + 0] -= 1
            supply = nbrs.get(x, 0) - (d if x == w else 0)
            rows.append(row)
            lo.append(supply)
            hi.append(supply)
    if not rows:
        return ([], []) if d == 0 else None
    res = milp(
        c=np.ones(nvar),
        constraints=LinearConstraint(np.array(rows), lo, hi),
        integrality=np.ones(nvar),
        bounds=Bounds(0, 1),
    )
    if res.status != 0 or res.x is None:
        return None
    x = np.round(res.x).astype(int)
    out = []
    for c, w in enumerate((w1, w2)):
        net = Network()
        for j, (e, a, b) in enumerate(edges):
            if x[4 * j + 2 * c]:
                net.add_arc(a, b, 1, tag=e)
            if x[4 * j + 2 * c + 1]:
                net.add_arc(b, a, 1, tag=e)
        for u, k in sorted(nbrs.items()):
            net.add_arc("src", u, k, tag=("start", u))
        flow = max_flow(net, "src", w)
        if flow.value != d:
            return None
        out.append(_paths_from_tags(flow.paths))
    return out[0], out[1]


def find_coherent_bundles(g: MultiGraph, v: int) -> tuple[Bundle, Bundle] | None:
    """Two edge-disjoint bundles of ``v`` with distinct sinks, or None.

    Sink pairs are screened by single-commodity flows (each bundle alone,
    and the pooled flow of ``2 d`` units into both sinks) before the exact
    integral two-commodity flow is solved.
    """
    g._need_vertex(v)
    d = g.degree(v)
    others = sorted(g.vertices - {v})
    alone = {w: find_bundle(g, v, w) is not None for w in others}
    net, nbrs = _bundle_network(g, v)
    for w1, w2 in itertools.combinations(others, 2):
        if not (alone[w1] and alone[w2]):
            continue
        pooled = Network(list(net.heads), list(net.tails), list(net.caps), list(net.tags),
                         {k: list(vs) for k, vs in net.out.items()})
        for i in range(len(pooled.caps)):
            tag = pooled.tags[i]
            if isinstance(tag, tuple) and i % 2 == 0:
                pooled.caps[i] *= 2
        pooled.add_arc(w1, "snk", d)
        pooled.add_arc(w2, "snk", d)
        if max_flow(pooled, "src", "snk", decompose=False).value != 2 * d:
            continue
        pair = _two_commodity(g, v, w1, w2)
        if pair is not None:
            return Bundle(v, w1, tuple(pair[0])), Bundle(v, w2, tuple(pair[1]))
    return None
