"""Seeded random instances for property tests and experiment scripts."""

from __future__ import annotations

import random

from .graph import MultiGraph, complete_bipartite, make_graph
from .zipping import ZipSpec, zip_product

DEFAULT_SEED = 20240


def random_connected(rng: random.Random, n: int, m: int, multi: bool = False) -> MultiGraph:
    """Random spanning tree plus extra random edges (simple unless ``multi``)."""
    n = max(n, 1)
    order = list(range(n))
    rng.shuffle(order)
    pairs = []
    for i in range(1, n):
        pairs.append((order[rng.randrange(i)], order[i]))
    have = {tuple(sorted(p)) for p in pairs}
    all_pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    tries = 0
    while len(pairs) < m and tries < 10 * m + 50:
        tries += 1
        a, b = rng.choice(all_pairs) if all_pairs else (0, 0)
        if a == b:
            break
        if not multi and (a, b) in have:
            continue
        have.add((a, b))
        pairs.append((a, b))
    return make_graph(n, pairs)


def random_with_degree_vertex(rng: random.Random, n: int, m: int, d: int, multi: bool = False) -> tuple[MultiGraph, int]:
    """Connected graph ``G - v`` on ``n - 1`` vertices plus a vertex ``v`` of degree ``d``."""
    base = random_connected(rng, n - 1, m, multi)
    v = n - 1
    nbrs = [rng.randrange(n - 1) for _ in range(d)]
    pairs = list(base.edges.values()) + [(u, v) for u in nbrs]
    return make_graph(n, pairs), v


def random_zip(rng: random.Random, d: int, max_n: int = 8, max_extra: int = 6, multi: bool = False) -> ZipSpec:
    """Two random factors with planted degree-``d`` vertices and a random sigma."""
    specs = []
    for _ in range(2):
        n = rng.randint(3, max_n)
        m = rng.randint(n - 2, n - 2 + max_extra)
        g, v = random_with_degree_vertex(rng, n, m, d, multi)
        specs.append((g, v))
    (g1, v1), (g2, v2) = specs
    f1 = g1.incident(v1)
    f2 = g2.incident(v2)
    rng.shuffle(f2)
    return ZipSpec(g1, v1, g2, v2, dict(zip(f1, f2)))


def k33_chain(t: int) -> MultiGraph:
    """``t`` copies of K3,3 zipped in a path at degree-3 vertices of the same side."""
    k33 = complete_bipartite(3, 3)
    g = k33
    nxt = 1
    for _ in range(t - 1):
        off = g.next_vertex()
        g = zip_product(ZipSpec(g, nxt, k33, 0))
        nxt = 1 + off
    return g
