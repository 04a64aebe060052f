"""Independent reference implementations used only by the tests.

They share nothing with the code under test beyond the graph value type
and networkx's planarity routine: no Kuratowski pruning, no memo, no
lower bounds, no flows.
"""

from __future__ import annotations

import itertools

import networkx as nx

from zipcross.graph import MultiGraph, cross_identify


def nx_planar(g: MultiGraph) -> bool:
    h = nx.Graph()
    h.add_nodes_from(g.vertices)
    h.add_edges_from(g.edges.values())
    return nx.check_planarity(h)[0]


def nonadjacent_pairs(g: MultiGraph):
    for e, f in itertools.combinations(sorted(g.edges), 2):
        if not set(g.edges[e]) & set(g.edges[f]):
            yield e, f


def exhaustive_at_most(g: MultiGraph, k: int) -> bool:
    """Unpruned search: is there a sequence of <= k crossings ending planar?"""
    if nx_planar(g):
        return True
    if k == 0:
        return False
    return any(exhaustive_at_most(cross_identify(g, e, f), k - 1) for e, f in nonadjacent_pairs(g))


def exhaustive_cr(g: MultiGraph, max_depth: int = 3) -> int | None:
    for k in range(max_depth + 1):
        if exhaustive_at_most(g, k):
            return k
    return None


def brute_force_min_cuts(g: MultiGraph, max_size: int) -> set[frozenset[int]]:
    """All minimal cuts of size <= max_size by checking every edge subset."""
    out = set()
    ids = sorted(g.edges)
    for k in range(1, max_size + 1):
        for f in itertools.combinations(ids, k):
            fs = set(f)
            rest = MultiGraph(g.vertices, {e: p for e, p in g.edges.items() if e not in fs})
            comps = rest.components()
            if len(comps) != 2:
                continue
            a = comps[0]
            if all((g.edges[e][0] in a) != (g.edges[e][1] in a) for e in f):
                out.add(frozenset(f))
    return out


def _simple_paths(adj, start, sink, banned, forbidden_vertex):
    """Vertex-simple paths start -> sink as edge tuples, avoiding banned edges."""
    if start == sink:
        yield ()
        return
    stack = [(start, (), {start})]
    while stack:
        x, path, seen = stack.pop()
        for y, e in adj[x]:
            if e in banned or y == forbidden_vertex or y in seen:
                continue
            if y == sink:
                yield path + (e,)
            else:
                stack.append((y, path + (e,), seen | {y}))


def _route_all(adj, demands, banned, v):
    """Backtracking over path choices for a list of (start, sink) demands."""
    if not demands:
        return True
    (start, sink), rest = demands[0], demands[1:]
    for p in _simple_paths(adj, start, sink, banned, v):
        if _route_all(adj, rest, banned | set(p), v):
            return True
    return False


def exhaustive_bundle_exists(g: MultiGraph, v: int, w: int) -> bool:
    adj = g.adjacency()
    starts = [g.other(e, v) for e in g.incident(v)]
    if any(u == v for u in starts):
        return False
    return _route_all(adj, [(u, w) for u in sorted(starts)], frozenset(), v)


def exhaustive_coherent_exists(g: MultiGraph, v: int) -> bool:
    adj = g.adjacency()
    starts = sorted(g.other(e, v) for e in g.incident(v))
    others = sorted(g.vertices - {v})
    for w1, w2 in itertools.combinations(others, 2):
        if not (exhaustive_bundle_exists(g, v, w1) and exhaustive_bundle_exists(g, v, w2)):
            continue
        demands = [(u, w1) for u in starts] + [(u, w2) for u in starts]
        if _route_all(adj, demands, frozenset(), v):
            return True
    return False
