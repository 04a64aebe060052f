"""Exact canonical form of small multigraphs.

Individualisation-refinement: equitable partition refinement, branch on the
first smallest non-singleton cell, keep the lexicographically smallest leaf
code. Automorphisms found as equal leaf codes prune sibling branches that
lie in the same orbit under the pointwise stabiliser of the current prefix.
"""

from __future__ import annotations

from typing import Mapping, Sequence

from .graph import GraphError, MultiGraph

DEFAULT_CAP = 16

CanonicalKey = bytes


class CanonCapError(GraphError):
    pass


def _refine(cells: list[list[int]], mult: list[dict[int, int]]) -> list[list[int]]:
    while True:
        where = {}
        for ci, cell in enumerate(cells):
            for v in cell:
                where[v] = ci
        out: list[list[int]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            sig = {}
            for v in cell:
                acc: dict[int, int] = {}
                for w, k in mult[v].items():
                    acc[where[w]] = acc.get(where[w], 0) + k
                sig[v] = tuple(sorted(acc.items()))
            groups: dict[tuple, list[int]] = {}
            for v in cell:
                groups.setdefault(sig[v], []).append(v)
            if len(groups) > 1:
                changed = True
            for s in sorted(groups):
                out.append(groups[s])
        cells = out
        if not changed:
            return cells


def _orbit_rep(v: int, autos: list[list[int]], fixed: Sequence[int]) -> int:
    """Smallest vertex in the orbit of ``v`` under automorphisms fixing ``fixed``."""
    gens = [a for a in autos if all(a[x] == x for x in fixed)]
    if not gens:
        return v
    orbit = {v}
    stack = [v]
    while stack:
        x = stack.pop()
        for a in gens:
            y = a[x]
            if y not in orbit:
                orbit.add(y)
                stack.append(y)
    return min(orbit)


def canonical_form(
    g: MultiGraph, colors: Mapping[int, int] | None = None, cap: int = DEFAULT_CAP
) -> tuple[CanonicalKey, list[int]]:
    """Return ``(key, order)`` where ``order[i]`` is the vertex placed at position ``i``.

    ``colors`` optionally fixes a vertex colouring that isomorphisms must preserve.
    """
    if g.n > cap:
        raise CanonCapError(
            f"graph has {g.n} vertices, above the canonicalisation cap of {cap}; "
            "run without memoisation"
        )
    verts = sorted(g.vertices)
    idx = {v: i for i, v in enumerate(verts)}
    n = len(verts)
    mult: list[dict[int, int]] = [dict() for _ in range(n)]
    for a, b in g.edges.values():
        i, j = idx[a], idx[b]
        mult[i][j] = mult[i].get(j, 0) + 1
        mult[j][i] = mult[j].get(i, 0) + 1
    col = [0] * n
    if colors:
        for v, c in colors.items():
            col[idx[v]] = c
    init: dict[int, list[int]] = {}
    for i in range(n):
        init.setdefault(col[i], []).append(i)
    cells = _refine([init[c] for c in sorted(init)], mult)

    best: list = [None, None]  # code, order
    first: list = [None, None]
    autos: list[list[int]] = []

    def code_of(order: list[int]) -> tuple:
        pos = {v: p for p, v in enumerate(order)}
        rows = []
        for p, v in enumerate(order):
            rows.append(tuple(sorted((pos[w], k) for w, k in mult[v].items() if pos[w] > p)))
        return tuple(rows)

    def record_auto(order_a: list[int], order_b: list[int]) -> None:
        perm = [0] * n
        for a, b in zip(order_a, order_b):
            perm[a] = b
        if any(perm[i] != i for i in range(n)):
            autos.append(perm)

    def search(cells: list[list[int]], prefix: list[int]) -> None:
        target = None
        for cell in cells:
            if len(cell) > 1 and (target is None or len(cell) < len(target)):
                target = cell
        if target is None:
            order = [c[0] for c in cells]
            code = code_of(order)
            if first[0] is None:
                first[0], first[1] = code, order
            elif code == first[0]:
                record_auto(first[1], order)
            if best[0] is None or code < best[0]:
                best[0], best[1] = code, order
            elif code == best[0]:
                record_auto(best[1], order)
            return
        tried: set[int] = set()
        for v in sorted(target):
            rep = _orbit_rep(v, autos, prefix)
            if rep in tried:
                continue
            tried.add(rep)
            split = []
            for cell in cells:
                if cell is target:
                    split.append([v])
                    split.append([w for w in cell if w != v])
                else:
                    split.append(cell)
            search(_refine(split, mult), prefix + [v])

    if n == 0:
        return b"0|", []
    search(cells, [])
    code, order = best
    colseq = tuple(col[i] for i in order)
    key = repr((n, colseq, code)).encode()
    return key, [verts[i] for i in order]


def canonical_key(g: MultiGraph, cap: int = DEFAULT_CAP) -> CanonicalKey:
    return canonical_form(g, cap=cap)[0]


def isomorphic(g: MultiGraph, h: MultiGraph, cap: int = DEFAULT_CAP) -> bool:
    return g.n == h.n and g.m == h.m and canonical_key(g, cap) == canonical_key(h, cap)
