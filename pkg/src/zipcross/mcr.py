"""Minor crossing number over cubic-tree expansions.

Values are minima over the class of graphs obtained by replacing every
vertex of degree ``d >= 4`` by a cubic tree with ``d`` leaf slots. They are
provably the true minor crossing number when ``G`` has maximum degree 3 or
when the value meets the planarity floor (0 for planar ``G``, otherwise 1,
since any graph with a nonplanar minor is nonplanar); ``provably_exact``
records which case applies.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import prod
from typing import Iterator

from . import canon
from .graph import GraphError, MultiGraph, join_independent
from .planar import crossing_number, planar
from .zipping import ZipSpec, zip_product


@dataclass(frozen=True)
class Expansion:
    host: MultiGraph
    witness: dict[int, int]  # host vertex -> vertex of G

    def contract(self) -> MultiGraph:
        """Contract every preimage tree back to its vertex."""
        edges = {}
        for e, (a, b) in self.host.edges.items():
            x, y = self.witness[a], self.witness[b]
            if x != y:
                edges[e] = (x, y)
        return MultiGraph(frozenset(self.witness.values()), edges)


def cubic_trees(leaves: list[int]) -> list[list[tuple[object, object]]]:
    """All cubic trees whose leaves are the given labels, as edge lists.

    Internal nodes are ``("c", i)``; there are ``(2d - 5)!!`` trees for
    ``d >= 3`` leaves.
    """
    d = len(leaves)
    if d < 3:
        raise ValueError("cubic trees need at least three leaves")
    start = [(("c", 0), leaves[0]), (("c", 0), leaves[1]), (("c", 0), leaves[2])]
    trees = [start]
    for k in range(3, d):
        nxt = []
        c = ("c", k - 2)
        for t in trees:
            for i, (a, b) in enumerate(t):
                rest = t[:i] + t[i + 1 :]
                nxt.append(rest + [(a, c), (c, b), (c, leaves[k])])
        trees = nxt
    return trees


def _double_factorial(n: int) -> int:
    return prod(range(n, 0, -2)) if n > 0 else 1


def count_raw_expansions(g: MultiGraph) -> int:
    return prod(_double_factorial(2 * d - 5) for d in g.degrees().values() if d >= 4)


def _local_options(g: MultiGraph, v: int, expanded: set[int], reduce: bool) -> list[list]:
    inc = g.incident(v)
    trees = cubic_trees(inc)
    if not reduce:
        return trees
    # parallel edges to an unexpanded neighbour are interchangeable
    cls: dict[int, int] = {}
    for e in inc:
        u = g.other(e, v)
        cls[e] = -1 - u if u not in expanded else e
    ranks = {c: i + 1 for i, c in enumerate(sorted(set(cls.values())))}
    seen = set()
    out = []
    for t in trees:
        names: dict[object, int] = {}
        for a, b in t:
            for x in (a, b):
                names.setdefault(x, len(names))
        local = MultiGraph(frozenset(names.values()), {i: (names[a], names[b]) for i, (a, b) in enumerate(t)})
        colors = {names[x]: (ranks[cls[x]] if not isinstance(x, tuple) else 0) for x in names}
        key = canon.canonical_form(local, colors=colors, cap=64)[0]
        if key not in seen:
            seen.add(key)
            out.append(t)
    return out


def expansions(g: MultiGraph, degree_cap: int = 6, reduce: bool = True) -> Iterator[Expansion]:
    """Cubic-tree expansions of ``g``; vertices of degree <= 3 are kept.

    With ``reduce`` the local trees are deduplicated up to swapping parallel
    edges to an unexpanded neighbour, and whole hosts up to isomorphism
    when they are small enough to canonicalise.
    """
    deg = g.degrees()
    if deg and max(deg.values()) > degree_cap:
        raise GraphError(f"maximum degree {max(deg.values())} exceeds the cap {degree_cap}")
    big = sorted(v for v, d in deg.items() if d >= 4)
    expanded = set(big)
    options = [_local_options(g, v, expanded, reduce) for v in big]
    seen: set[bytes] = set()
    for choice in itertools.product(*options):
        nxt = g.next_vertex()
        witness = {v: v for v in g.vertices if v not in expanded}
        slot: dict[tuple[int, int], int] = {}
        extra: list[tuple[int, int]] = []
        for v, tree in zip(big, choice):
            names: dict[object, int] = {}
            for a, b in tree:
                for x in (a, b):
                    if isinstance(x, tuple) and x not in names:
                        names[x] = nxt
                        witness[nxt] = v
                        nxt += 1
            for a, b in tree:
                if isinstance(a, tuple) and isinstance(b, tuple):
                    extra.append((names[a], names[b]))
                else:
                    node, leaf = (a, b) if isinstance(a, tuple) else (b, a)
                    slot[v, leaf] = names[node]
        edges = {}
        for e, (a, b) in g.edges.items():
            edges[e] = (slot.get((a, e), a), slot.get((b, e), b))
        k = g.next_edge()
        for i, p in enumerate(extra):
            edges[k + i] = p
        host = MultiGraph(frozenset(witness), edges)
        if reduce and host.n <= canon.DEFAULT_CAP:
            key = canon.canonical_key(host)
            if key in seen:
                continue
            seen.add(key)
        yield Expansion(host, witness)


@dataclass(frozen=True)
class McrResult:
    lower: int
    upper: int | None
    expansion: Expansion | None
    floor: int
    provably_exact: bool
    examined: int

    @property
    def exact(self) -> bool:
        """Exact within the cubic-expansion class."""
        return self.upper is not None and self.lower == self.upper

    @property
    def value(self) -> int | None:
        return self.lower if self.exact else None

    @property
    def certified_lower(self) -> int:
        """A lower bound valid for the true minor crossing number."""
        return self.lower if self.exact and self.provably_exact else self.floor

    def to_json(self) -> dict:
        return {
            "value": self.value,
            "lower": self.lower,
            "upper": self.upper,
            "exact_in_class": self.exact,
            "provably_exact": self.provably_exact,
            "examined": self.examined,
        }


def minor_crossing_number(g: MultiGraph, degree_cap: int = 6, **solver) -> McrResult:
    """Minimum crossing number over the expansions of ``g``, with a realising expansion."""
    floor = 0 if planar(g) else 1
    cubic = max(g.degrees().values(), default=0) <= 3
    best: int | None = None
    best_exp = None
    lowest = None  # smallest lower bound among undecided expansions
    examined = 0
    for exp in expansions(g, degree_cap):
        examined += 1
        budget = None if best is None else best - 1
        res = crossing_number(exp.host, budget=budget, **solver)
        if res.status == "exact":
            best, best_exp = res.lower, exp
            if best <= floor:
                break
        elif res.status == "unknown":
            lowest = res.lower if lowest is None else min(lowest, res.lower)
    if best is None:
        lower = max(floor, lowest or 0)
        return McrResult(lower, None, None, floor, False, examined)
    lower = best if lowest is None else max(floor, min(best, lowest))
    provably = cubic or best == floor
    return McrResult(lower, best, best_exp, floor, provably and lower == best, examined)


@dataclass(frozen=True)
class ZipCheck:
    zipped: McrResult
    first: McrResult
    second: McrResult
    degree: int
    lower_bound: str  # "pass" | "fail" | "unknown"
    equality: str | None  # only checked for degree <= 3

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "mcr_zip": self.zipped.to_json(),
            "mcr_g1": self.first.to_json(),
            "mcr_g2": self.second.to_json(),
            "lower_bound": self.lower_bound,
            "equality": self.equality,
        }


def mcr_zip_check(spec: ZipSpec, degree_cap: int = 6, **solver) -> ZipCheck:
    """Check ``mcr(zip) >= mcr(G1) + mcr(G2)``, with equality at degree <= 3."""
    d = spec.g1.degree(spec.v1)
    z = minor_crossing_number(zip_product(spec), degree_cap, **solver)
    a = minor_crossing_number(spec.g1, degree_cap, **solver)
    b = minor_crossing_number(spec.g2, degree_cap, **solver)
    if z.exact and a.exact and b.exact:
        ge = "pass" if z.lower >= a.lower + b.lower else "fail"
        eq = None if d > 3 else ("pass" if z.lower == a.lower + b.lower else "fail")
    else:
        ge = "unknown"
        eq = None if d > 3 else "unknown"
    return ZipCheck(z, a, b, d, ge, eq)


def _is_tree(t: MultiGraph) -> bool:
    return t.n >= 1 and t.m == t.n - 1 and t.is_connected()


def tree_product_bound(tree: MultiGraph, g: MultiGraph, degree_cap: int = 6, **solver) -> int:
    """Sum over tree vertices of mcr of ``g`` joined with ``deg_T(v)`` independent vertices.

    Terms that are not provably exact fall back to the planarity floor, so
    the result stays a valid lower bound for ``mcr(T □ G)``.
    """
    if not _is_tree(tree):
        raise GraphError("first argument must be a tree")
    cache: dict[int, int] = {}
    total = 0
    for v, d in sorted(tree.degrees().items()):
        if d not in cache:
            res = minor_crossing_number(join_independent(g, d), degree_cap, **solver)
            cache[d] = res.certified_lower
        total += cache[d]
    return total
