"""Immutable loopless multigraphs.

Vertices are ints, every edge carries a stable int id. Operations never
mutate; they return new graphs and keep the ids of surviving edges.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Mapping

GREEN = "green"
RED = "red"
BLUE = "blue"
COLORS = (GREEN, RED, BLUE)


class GraphError(ValueError):
    """Raised on malformed graph construction or a missing vertex/edge."""


@dataclass(frozen=True, eq=False)
class MultiGraph:
    vertices: frozenset[int]
    edges: Mapping[int, tuple[int, int]]
    labels: Mapping[int, str] = field(default_factory=dict)

    def __post_init__(self) -> None:
        # normalise: endpoints sorted, loops dropped, labels restricted to edges
        clean = {}
        for eid, (u, v) in self.edges.items():
            if u == v:
                continue
            if u not in self.vertices or v not in self.vertices:
                raise GraphError(f"edge {eid}=({u},{v}) has an endpoint outside the vertex set")
            clean[eid] = (u, v) if u < v else (v, u)
        object.__setattr__(self, "edges", dict(sorted(clean.items())))
        object.__setattr__(self, "vertices", frozenset(self.vertices))
        labels = {e: c for e, c in self.labels.items() if e in clean}
        for c in labels.values():
            if c not in COLORS:
                raise GraphError(f"unknown edge color {c!r}")
        object.__setattr__(self, "labels", labels)

    # -- basic queries -------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.edges)

    def endpoints(self, e: int) -> tuple[int, int]:
        try:
            return self.edges[e]
        except KeyError:
            raise GraphError(f"no edge with id {e}") from None

    def incident(self, v: int) -> list[int]:
        self._need_vertex(v)
        return [e for e, (a, b) in self.edges.items() if a == v or b == v]

    def degree(self, v: int) -> int:
        return len(self.incident(v))

    def degrees(self) -> dict[int, int]:
        deg = dict.fromkeys(self.vertices, 0)
        for a, b in self.edges.values():
            deg[a] += 1
            deg[b] += 1
        return deg

    def neighbors(self, v: int) -> dict[int, int]:
        """Neighbour -> number of parallel edges to ``v``."""
        out: dict[int, int] = defaultdict(int)
        for e in self.incident(v):
            out[self.other(e, v)] += 1
        return dict(out)

    def other(self, e: int, v: int) -> int:
        a, b = self.endpoints(e)
        if v == a:
            return b
        if v == b:
            return a
        raise GraphError(f"vertex {v} is not an endpoint of edge {e}")

    def adjacency(self) -> dict[int, list[tuple[int, int]]]:
        """Vertex -> list of (neighbour, edge id)."""
        adj: dict[int, list[tuple[int, int]]] = {v: [] for v in sorted(self.vertices)}
        for e, (a, b) in self.edges.items():
            adj[a].append((b, e))
            adj[b].append((a, e))
        return adj

    def multiplicity(self, u: int, v: int) -> int:
        key = (u, v) if u < v else (v, u)
        return sum(1 for p in self.edges.values() if p == key)

    def adjacent_edges(self, e: int, f: int) -> bool:
        return bool(set(self.endpoints(e)) & set(self.endpoints(f)))

    def next_vertex(self) -> int:
        return max(self.vertices, default=-1) + 1

    def next_edge(self) -> int:
        return max(self.edges, default=-1) + 1

    def is_simple(self) -> bool:
        return len(set(self.edges.values())) == len(self.edges)

    def components(self) -> list[frozenset[int]]:
        adj = self.adjacency()
        seen: set[int] = set()
        comps = []
        for s in sorted(self.vertices):
            if s in seen:
                continue
            comp = {s}
            stack = [s]
            while stack:
                x = stack.pop()
                for y, _ in adj[x]:
                    if y not in comp:
                        comp.add(y)
                        stack.append(y)
            seen |= comp
            comps.append(frozenset(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def edge_multiset(self) -> list[tuple[int, int]]:
        return sorted(self.edges.values())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MultiGraph):
            return NotImplemented
        return self.vertices == other.vertices and self.edge_multiset() == other.edge_multiset()

    def __hash__(self) -> int:
        return hash((self.vertices, tuple(self.edge_multiset())))

    def __repr__(self) -> str:
        return f"MultiGraph(n={self.n}, m={self.m}, edges={self.edge_multiset()})"

    def _need_vertex(self, v: int) -> None:
        if v not in self.vertices:
            raise GraphError(f"no vertex {v}")

    # -- structural edits ----------------------------------------------

    def with_labels(self, labels: Mapping[int, str]) -> MultiGraph:
        return MultiGraph(self.vertices, self.edges, {**self.labels, **labels})

    def subgraph(self, vertices: Iterable[int]) -> MultiGraph:
        keep = frozenset(vertices)
        edges = {e: p for e, p in self.edges.items() if p[0] in keep and p[1] in keep}
        return MultiGraph(keep, edges, self.labels)

    def edge_subgraph(self, edge_ids: Iterable[int]) -> MultiGraph:
        """Keep only the given edges (and all vertices)."""
        keep = set(edge_ids)
        return MultiGraph(self.vertices, {e: p for e, p in self.edges.items() if e in keep}, self.labels)

    def relabel(self, mapping: Mapping[int, int]) -> MultiGraph:
        """Rename vertices; ``mapping`` must be injective on the vertex set."""
        verts = frozenset(mapping[v] for v in self.vertices)
        if len(verts) != self.n:
            raise GraphError("vertex relabelling is not injective")
        edges = {e: (mapping[a], mapping[b]) for e, (a, b) in self.edges.items()}
        return MultiGraph(verts, edges, self.labels)

    def compact(self) -> MultiGraph:
        """Vertices renamed 0..n-1 and edges renumbered 0..m-1 in id order."""
        vmap = {v: i for i, v in enumerate(sorted(self.vertices))}
        edges = {}
        labels = {}
        for i, (e, (a, b)) in enumerate(self.edges.items()):
            edges[i] = (vmap[a], vmap[b])
            if e in self.labels:
                labels[i] = self.labels[e]
        return MultiGraph(frozenset(range(self.n)), edges, labels)


def make_graph(n_vertices: int, edge_pairs: Iterable[tuple[int, int]]) -> MultiGraph:
    """Graph on ``0..n_vertices-1`` with edge ids assigned in input order."""
    edges = {}
    for i, (u, v) in enumerate(edge_pairs):
        if not (0 <= u < n_vertices and 0 <= v < n_vertices):
            raise GraphError(f"edge pair ({u},{v}) has an endpoint out of range 0..{n_vertices - 1}")
        if u == v:
            raise GraphError(f"edge pair ({u},{v}) is a loop")
        edges[i] = (u, v)
    return MultiGraph(frozenset(range(n_vertices)), edges)


def contract_set(g: MultiGraph, s: Iterable[int]) -> MultiGraph:
    """Merge the vertex set ``s`` into one fresh vertex."""
    s = frozenset(s)
    if not s:
        raise GraphError("cannot contract an empty vertex set")
    missing = s - g.vertices
    if missing:
        raise GraphError(f"vertices {sorted(missing)} not in graph")
    x = g.next_vertex()
    verts = (g.vertices - s) | {x}
    edges = {}
    for e, (a, b) in g.edges.items():
        a2 = x if a in s else a
        b2 = x if b in s else b
        if a2 != b2:
            edges[e] = (a2, b2)
    return MultiGraph(verts, edges, g.labels)


def cross_identify(g: MultiGraph, e: int, f: int) -> MultiGraph:
    """Replace nonadjacent edges ``uv`` and ``wz`` by ``ux, xv, wx, xz``.

    The new edge ids are ``next_edge() + 0..3`` in that order, so replaying
    the same steps from the same graph is deterministic.
    """
    if e == f:
        raise GraphError(f"cannot cross edge {e} with itself")
    u, v = g.endpoints(e)
    w, z = g.endpoints(f)
    if {u, v} & {w, z}:
        raise GraphError(f"edges {e} and {f} are adjacent")
    x = g.next_vertex()
    k = g.next_edge()
    edges = {i: p for i, p in g.edges.items() if i != e and i != f}
    edges[k] = (u, x)
    edges[k + 1] = (x, v)
    edges[k + 2] = (w, x)
    edges[k + 3] = (x, z)
    labels = {i: c for i, c in g.labels.items() if i != e and i != f}
    for i, src in ((k, e), (k + 1, e), (k + 2, f), (k + 3, f)):
        if src in g.labels:
            labels[i] = g.labels[src]
    return MultiGraph(g.vertices | {x}, edges, labels)


def subdivide(g: MultiGraph, e: int) -> MultiGraph:
    u, v = g.endpoints(e)
    x = g.next_vertex()
    k = g.next_edge()
    edges = {i: p for i, p in g.edges.items() if i != e}
    edges[k] = (u, x)
    edges[k + 1] = (x, v)
    labels = dict(g.labels)
    if e in labels:
        labels[k] = labels[k + 1] = labels[e]
    return MultiGraph(g.vertices | {x}, edges, labels)


def delete_edge(g: MultiGraph, e: int) -> MultiGraph:
    g.endpoints(e)
    return MultiGraph(g.vertices, {i: p for i, p in g.edges.items() if i != e}, g.labels)


def delete_edges(g: MultiGraph, es: Iterable[int]) -> MultiGraph:
    drop = set(es)
    for e in drop:
        g.endpoints(e)
    return MultiGraph(g.vertices, {i: p for i, p in g.edges.items() if i not in drop}, g.labels)


def delete_vertex(g: MultiGraph, v: int) -> MultiGraph:
    g._need_vertex(v)
    return g.subgraph(g.vertices - {v})


def simplify(g: MultiGraph) -> MultiGraph:
    """Keep the lowest-id edge of every parallel class."""
    seen = set()
    edges = {}
    for e, p in g.edges.items():
        if p not in seen:
            seen.add(p)
            edges[e] = p
    return MultiGraph(g.vertices, edges, g.labels)


def smooth(g: MultiGraph, v: int) -> MultiGraph:
    """Suppress a degree-2 vertex, joining its two neighbours."""
    inc = g.incident(v)
    if len(inc) != 2:
        raise GraphError(f"vertex {v} has degree {len(inc)}, expected 2")
    a, b = (g.other(e, v) for e in inc)
    edges = {i: p for i, p in g.edges.items() if i not in inc}
    if a != b:
        edges[g.next_edge()] = (a, b)
    return MultiGraph(g.vertices - {v}, edges, g.labels)


def disjoint_union(g: MultiGraph, h: MultiGraph) -> tuple[MultiGraph, dict[int, int], dict[int, int]]:
    """Union with ``h`` shifted past ``g``; returns the vertex and edge maps for ``h``."""
    voff = g.next_vertex()
    eoff = g.next_edge()
    vmap = {v: v + voff for v in h.vertices}
    emap = {e: e + eoff for e in h.edges}
    edges = dict(g.edges)
    labels = dict(g.labels)
    for e, (a, b) in h.edges.items():
        edges[emap[e]] = (vmap[a], vmap[b])
        if e in h.labels:
            labels[emap[e]] = h.labels[e]
    return MultiGraph(g.vertices | frozenset(vmap.values()), edges, labels), vmap, emap


def join_independent(g: MultiGraph, i: int) -> MultiGraph:
    """``g`` joined with an independent set of ``i`` new vertices."""
    if i < 0:
        raise GraphError("join size must be nonnegative")
    x = g.next_vertex()
    k = g.next_edge()
    edges = dict(g.edges)
    for j in range(i):
        for v in sorted(g.vertices):
            edges[k] = (v, x + j)
            k += 1
    return MultiGraph(g.vertices | frozenset(range(x, x + i)), edges, g.labels)


def cartesian_product(a: MultiGraph, b: MultiGraph) -> MultiGraph:
    """``a □ b`` on vertices ``(u, v)`` numbered ``iu * |b| + iv``; parallel edges carried over."""
    av = sorted(a.vertices)
    bv = sorted(b.vertices)
    idx = {(u, v): i * len(bv) + j for i, u in enumerate(av) for j, v in enumerate(bv)}
    pairs = []
    for x, y in a.edge_multiset():
        for v in bv:
            pairs.append((idx[x, v], idx[y, v]))
    for x, y in b.edge_multiset():
        for u in av:
            pairs.append((idx[u, x], idx[u, y]))
    return make_graph(len(idx), pairs)


# -- small named graphs ------------------------------------------------


def complete_graph(n: int) -> MultiGraph:
    return make_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(p: int, q: int) -> MultiGraph:
    return make_graph(p + q, [(i, p + j) for i in range(p) for j in range(q)])


def cycle_graph(n: int) -> MultiGraph:
    if n == 2:
        return make_graph(2, [(0, 1), (0, 1)])
    return make_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> MultiGraph:
    return make_graph(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(leaves: int) -> MultiGraph:
    return make_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def petersen_graph() -> MultiGraph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return make_graph(10, outer + spokes + inner)


def prism_graph() -> MultiGraph:
    return cartesian_product(cycle_graph(3), path_graph(2))
