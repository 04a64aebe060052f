"""Planarity testing and exact crossing numbers.

The exact solver decides ``cr(G) <= k`` by recursion on the crossing
identification ``G -> G^(e,f)``: for nonplanar ``G``,
``cr(G) = 1 + min cr(G^(e,f))`` over nonadjacent pairs, and some optimal
drawing crosses a pair with both edges inside any fixed Kuratowski
subdivision (the sub-drawing of that subdivision must itself have a
crossing, and optimal drawings never cross adjacent edges). Only such
pairs are branched on.
"""

from __future__ import annotations

import itertools
import json
import threading
import time
from collections import OrderedDict
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence

import networkx as nx

from . import canon
from .graph import MultiGraph, cross_identify, make_graph

# ---------------------------------------------------------------------------
# planarity


@dataclass(frozen=True)
class PlanarityResult:
    planar: bool
    embedding: nx.PlanarEmbedding | None = None
    witness: MultiGraph | None = None

    def __bool__(self) -> bool:
        return self.planar


def _nx_simple(edges) -> nx.Graph:
    h = nx.Graph()
    h.add_edges_from(edges)
    return h


def _planar_pairs(pairs) -> bool:
    return nx.check_planarity(_nx_simple(pairs))[0]


def planar(g: MultiGraph) -> bool:
    """Boolean planarity verdict; parallel edges are ignored."""
    if g.m < 9:
        return True
    return _planar_pairs(set(g.edges.values()))


def kuratowski_edges(g: MultiGraph) -> list[int] | None:
    """Edge ids of a Kuratowski subdivision in ``g``, or None when planar.

    Edges are dropped greedily in shrinking blocks while the rest stays
    nonplanar; what survives is edge-minimal nonplanar, hence a
    subdivision of K5 or K3,3.
    """
    first: dict[tuple[int, int], int] = {}
    for e, p in g.edges.items():
        first.setdefault(p, e)
    keep = list(first.items())
    if len(keep) < 9 or _planar_pairs(p for p, _ in keep):
        return None
    need: list[tuple[tuple[int, int], int]] = []
    todo = keep
    block = max(1, len(todo) // 2)
    while todo:
        block = min(block, len(todo))
        trial = todo[block:]
        if not _planar_pairs(p for p, _ in need + trial):
            todo = trial
            block = max(block, 1)
        elif block > 1:
            block //= 2
        else:
            need.append(todo[0])
            todo = todo[1:]
            block = max(1, len(todo) // 4)
    return sorted(e for _, e in need)


def is_planar(g: MultiGraph) -> PlanarityResult:
    """Planarity verdict with an embedding (planar) or a Kuratowski witness."""
    simple = _nx_simple(set(g.edges.values()))
    simple.add_nodes_from(g.vertices)
    ok, emb = nx.check_planarity(simple)
    if ok:
        return PlanarityResult(True, embedding=emb)
    witness = kuratowski_edges(g)
    assert witness is not None
    return PlanarityResult(False, witness=g.edge_subgraph(witness))


def kuratowski_type(witness: MultiGraph) -> str:
    """'K5' or 'K3,3' for a Kuratowski subdivision."""
    deg = [d for d in witness.degrees().values() if d > 2]
    if len(deg) == 5 and all(d == 4 for d in deg):
        return "K5"
    if len(deg) == 6 and all(d == 3 for d in deg):
        return "K3,3"
    raise ValueError("not a Kuratowski subdivision")


# ---------------------------------------------------------------------------
# lower bounds


def _girth(adj: dict[int, set[int]]) -> float:
    best = float("inf")
    for s in adj:
        dist = {s: 0}
        parent = {s: None}
        queue = [s]
        for x in queue:
            if 2 * dist[x] + 1 >= best:
                break
            for y in adj[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif parent[x] != y:
                    best = min(best, dist[x] + dist[y] + 1)
    return best


def euler_lower_bound(g: MultiGraph) -> int:
    """``m - max planar edges`` per component of the simplification.

    A planar simple graph of girth ``>= t`` on ``n >= 3`` vertices has at
    most ``max(n - 1, t(n - 2)/(t - 2))`` edges; ``t = 3`` gives the classical
    ``m - 3n + 6`` and ``t = 4`` the triangle-free ``m - 2n + 4``.
    """
    pairs = set(g.edges.values())
    adj: dict[int, set[int]] = {v: set() for v in g.vertices}
    for a, b in pairs:
        adj[a].add(b)
        adj[b].add(a)
    total = 0
    seen: set[int] = set()
    for s in adj:
        if s in seen:
            continue
        comp = {s}
        stack = [s]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in comp:
                    comp.add(y)
                    stack.append(y)
        seen |= comp
        n = len(comp)
        if n < 3:
            continue
        m = sum(len(adj[v]) for v in comp) // 2
        girth = _girth({v: adj[v] for v in comp})
        if girth == float("inf"):
            continue
        cap = max(n - 1, (girth * (n - 2)) // (girth - 2))
        total += max(0, m - cap)
    return total


def kuratowski_packing_bound(g: MultiGraph) -> int:
    """Number of greedily found edge-disjoint Kuratowski subdivisions."""
    count = 0
    h = g
    while True:
        w = kuratowski_edges(h)
        if w is None:
            return count
        count += 1
        drop = set(w)
        h = MultiGraph(h.vertices, {e: p for e, p in h.edges.items() if e not in drop})


def lower_bound(g: MultiGraph) -> int:
    return max(euler_lower_bound(g), kuratowski_packing_bound(g))


def convex_upper_bound(g: MultiGraph) -> int:
    """Crossings of a convex-position drawing: at most one per nonadjacent pair."""
    deg = g.degrees()
    m = g.m
    adjacent = sum(d * (d - 1) // 2 for d in deg.values())
    return m * (m - 1) // 2 - adjacent


# ---------------------------------------------------------------------------
# certificates

EdgeRef = "int | tuple[int, int]"


@dataclass(frozen=True)
class CrossingCertificate:
    """A planarisation trace: each step names two edges of the current graph.

    Edge references are either an edge id of ``base`` or ``(step, j)`` for
    the ``j``-th edge (``ux, xv, wx, xz``) created by an earlier step.
    """

    base: MultiGraph
    trace: tuple[tuple[object, object], ...] = ()

    @property
    def value(self) -> int:
        return len(self.trace)

    def replay(self) -> MultiGraph:
        g = self.base
        live: dict[object, int] = {e: e for e in g.edges}
        for step, (a, b) in enumerate(self.trace):
            try:
                e, f = live[a], live[b]
            except (KeyError, TypeError):
                raise KeyError(f"step {step}: reference {a!r} or {b!r} does not name a current edge") from None
            k = g.next_edge()
            g = cross_identify(g, e, f)
            del live[a], live[b]
            for j in range(4):
                live[step, j] = k + j
        return g

    def to_json(self) -> dict:
        base = self.base
        vidx = {v: i for i, v in enumerate(sorted(base.vertices))}
        eidx = {e: i for i, e in enumerate(base.edges)}

        def ref(r):
            return list(r) if isinstance(r, tuple) else eidx[r]

        return {
            "base_n": base.n,
            "base_edges": [[vidx[a], vidx[b]] for a, b in base.edges.values()],
            "trace": [[ref(a), ref(b)] for a, b in self.trace],
            "value": self.value,
        }

    @classmethod
    def from_json(cls, doc: dict) -> CrossingCertificate:
        base = make_graph(doc["base_n"], [tuple(p) for p in doc["base_edges"]])

        def ref(r):
            return tuple(r) if isinstance(r, list) else int(r)

        trace = tuple((ref(a), ref(b)) for a, b in doc["trace"])
        return cls(base, trace)

    def dumps(self) -> str:
        return json.dumps(self.to_json())


def _refs_from_ids(base: MultiGraph, steps: Sequence[tuple[int, int]]) -> tuple:
    """Convert a trace of raw edge ids (as produced while searching) to references."""
    g = base
    name = {e: e for e in base.edges}
    out = []
    for s, (e, f) in enumerate(steps):
        out.append((name[e], name[f]))
        k = g.next_edge()
        g = cross_identify(g, e, f)
        del name[e], name[f]
        for j in range(4):
            name[k + j] = (s, j)
    return tuple(out)


def verify_certificate(g: MultiGraph, cert: CrossingCertificate) -> tuple[bool, str]:
    """Replay ``cert`` from ``g``; true iff every step is legal and the end is planar."""
    if cert.base != g:
        return False, "certificate base graph differs from the input graph"
    try:
        final = cert.replay()
    except (KeyError, ValueError) as exc:
        return False, f"illegal step: {exc}"
    if not planar(final):
        return False, "replayed graph is not planar"
    return True, "ok"


# ---------------------------------------------------------------------------
# exact solver


class Memo:
    """Canonical key -> proven lower bound on cr; entries only ever increase."""

    def __init__(self, maxsize: int = 200_000, cap: int = canon.DEFAULT_CAP):
        self.maxsize = maxsize
        self.cap = cap
        self._lb: OrderedDict[bytes, int] = OrderedDict()
        self._exact: dict[bytes, int] = {}
        self._lock = threading.Lock()

    def lb(self, key: bytes) -> int:
        with self._lock:
            return self._lb.get(key, 0)

    def raise_lb(self, key: bytes, value: int) -> None:
        with self._lock:
            if self._lb.get(key, 0) < value:
                self._lb[key] = value
            self._lb.move_to_end(key)
            while len(self._lb) > self.maxsize:
                self._lb.popitem(last=False)

    def exact(self, key: bytes) -> int | None:
        with self._lock:
            return self._exact.get(key)

    def set_exact(self, key: bytes, value: int) -> None:
        with self._lock:
            self._exact[key] = value

    def __len__(self) -> int:
        return len(self._lb)


_DEFAULT_MEMO = Memo()


class Exhausted(Exception):
    pass


@dataclass
class SolveStats:
    nodes: int = 0
    planarity_tests: int = 0
    memo_hits: int = 0
    wall_time: float = 0.0


@dataclass(frozen=True)
class SolveResult:
    """Outcome of ``crossing_number``.

    ``status`` is ``"exact"``, ``"exceeds_budget"`` (cr > budget) or
    ``"unknown"`` (resource cap hit; ``lower <= cr <= upper``).
    """

    status: str
    lower: int
    upper: int | None
    certificate: CrossingCertificate | None = None
    stats: SolveStats = field(default_factory=SolveStats)

    @property
    def exact(self) -> bool:
        return self.status == "exact"

    @property
    def value(self) -> int | None:
        return self.lower if self.status == "exact" else None

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "value": self.value,
            "lower": self.lower,
            "upper": self.upper,
            "certificate": self.certificate.to_json() if self.certificate else None,
            "stats": {
                "nodes": self.stats.nodes,
                "planarity_tests": self.stats.planarity_tests,
                "memo_hits": self.stats.memo_hits,
                "wall_time": round(self.stats.wall_time, 6),
            },
        }


class _Search:
    def __init__(self, memo: Memo | None, node_limit: int | None, deadline: float | None):
        self.memo = memo
        self.node_limit = node_limit
        self.deadline = deadline
        self.stats = SolveStats()
        self._lock = threading.Lock()

    def _tick(self) -> None:
        with self._lock:
            self.stats.nodes += 1
            nodes = self.stats.nodes
        if self.node_limit is not None and nodes > self.node_limit:
            raise Exhausted("node limit")
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise Exhausted("time limit")

    def _planar(self, g: MultiGraph) -> bool:
        self.stats.planarity_tests += 1
        return planar(g)

    def _key(self, g: MultiGraph) -> bytes | None:
        if self.memo is None or g.n > self.memo.cap:
            return None
        return canon.canonical_key(g, cap=self.memo.cap)

    def branches(self, g: MultiGraph) -> list[tuple[int, int]]:
        witness = kuratowski_edges(g) or []
        out = []
        for e, f in itertools.combinations(witness, 2):
            if not g.adjacent_edges(e, f):
                out.append((e, f))
        return out

    def decide(self, g: MultiGraph, k: int, threads: int = 1) -> list[tuple[int, int]] | None:
        """A trace of at most ``k`` steps ending planar, or None if ``cr(g) > k``."""
        self._tick()
        if self._planar(g):
            return []
        if k <= 0:
            return None
        if euler_lower_bound(g) > k:
            return None
        key = self._key(g)
        if key is not None and self.memo.lb(key) > k:
            self.stats.memo_hits += 1
            return None
        if k >= 2 and kuratowski_packing_bound(g) > k:
            if key is not None:
                self.memo.raise_lb(key, k + 1)
            return None
        pairs = self.branches(g)
        if threads > 1 and len(pairs) > 1:
            found = self._decide_parallel(g, pairs, k, threads)
        else:
            found = None
            for e, f in pairs:
                sub = self.decide(cross_identify(g, e, f), k - 1)
                if sub is not None:
                    found = [(e, f)] + sub
                    break
        if found is None and key is not None:
            self.memo.raise_lb(key, k + 1)
        return found

    def _decide_parallel(self, g, pairs, k, threads):
        # first success in pair order wins, independent of scheduling
        def run(pair):
            e, f = pair
            return self.decide(cross_identify(g, e, f), k - 1)

        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(run, pairs))
        for (e, f), sub in zip(pairs, results):
            if sub is not None:
                return [(e, f)] + sub
        return None


def _greedy_upper(g: MultiGraph, limit: int, seconds: float = 2.0) -> list[tuple[int, int]] | None:
    """Heuristic planarisation; returns a trace, or None after ``limit`` steps or ``seconds``."""
    steps = []
    stop = time.monotonic() + seconds
    while len(steps) <= limit and time.monotonic() < stop:
        w = kuratowski_edges(g)
        if w is None:
            return steps
        pair = next(((e, f) for e, f in itertools.combinations(w, 2) if not g.adjacent_edges(e, f)), None)
        if pair is None:
            return None
        steps.append(pair)
        g = cross_identify(g, *pair)
    return None


def crossing_number(
    g: MultiGraph,
    budget: int | None = None,
    memo: Memo | None | bool = True,
    node_limit: int | None = None,
    time_limit: float | None = None,
    threads: int = 1,
) -> SolveResult:
    """Exact planar crossing number with a replayable certificate.

    ``memo=True`` uses a process-wide table, ``False``/``None`` disables it.
    Disconnected graphs are solved per component and summed.
    """
    start = time.monotonic()
    if memo is True:
        memo = _DEFAULT_MEMO
    elif memo is False:
        memo = None
    deadline = start + time_limit if time_limit is not None else None
    search = _Search(memo, node_limit, deadline)

    comps = [c for c in g.components() if len(c) > 1]
    lowers = []
    uppers: list[int | None] = []
    traces: list[tuple] = []
    status = "exact"
    spent = 0
    for comp in comps:
        sub = g.subgraph(comp)
        lo = lower_bound(sub)
        key = search._key(sub)
        if key is not None:
            lo = max(lo, memo.lb(key))
        hi = None
        steps = None
        try:
            k = lo
            while True:
                if budget is not None and spent + k > budget:
                    status = "exceeds_budget"
                    break
                found = search.decide(sub, k, threads=threads)
                if found is not None:
                    steps = found
                    hi = k
                    break
                k += 1
                lo = k
        except Exhausted:
            status = "unknown"
            greedy = _greedy_upper(sub, convex_upper_bound(sub))
            if greedy is not None:
                hi = len(greedy)
                steps = greedy
            else:
                hi = convex_upper_bound(sub)
        lowers.append(lo)
        uppers.append(hi)
        if status == "exact" and steps is not None:
            if key is not None:
                memo.set_exact(key, len(steps))
            traces.append(_refs_from_ids(sub, steps))
            spent += len(steps)
        if status != "exact":
            break

    search.stats.wall_time = time.monotonic() - start
    if status == "exact":
        trace: list = []
        for part in traces:
            offset = len(trace)
            trace.extend(tuple(_shift(r, offset) for r in step) for step in part)
        cert = CrossingCertificate(g, tuple(trace))
        return SolveResult("exact", spent, spent, cert, search.stats)
    lower = sum(lowers)
    if status == "exceeds_budget":
        return SolveResult("exceeds_budget", max(lower, budget + 1), None, None, search.stats)
    # unknown: remaining components only bounded
    upper = None
    if all(u is not None for u in uppers):
        rest = [convex_upper_bound(g.subgraph(c)) for c in comps[len(uppers):]]
        upper = sum(uppers) + sum(rest)
    return SolveResult("unknown", lower, upper, None, search.stats)


def _shift(ref, offset: int):
    return (ref[0] + offset, ref[1]) if isinstance(ref, tuple) else ref


def cr_value(g: MultiGraph, **kw) -> int:
    """Exact value or raise ``Exhausted``."""
    res = crossing_number(g, **kw)
    if not res.exact:
        raise Exhausted(f"crossing number undetermined: [{res.lower}, {res.upper}]")
    return res.lower


def cr_at_most(g: MultiGraph, k: int, **kw) -> bool:
    """Decision query ``cr(g) <= k``; raises ``Exhausted`` when undecided."""
    if k < 0:
        return False
    res = crossing_number(g, budget=k, **kw)
    if res.status == "unknown":
        raise Exhausted(f"cr <= {k} undecided: [{res.lower}, {res.upper}]")
    return res.status == "exact"
