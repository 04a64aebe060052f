"""Integral max flow (Edmonds-Karp) with unit path decomposition."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Hashable

Node = Hashable


@dataclass
class Network:
    """Directed arcs with integer capacities; undirected edges are two arcs.

    Each arc carries a ``tag`` so that paths can be reported in terms of
    the caller's objects (e.g. multigraph edge ids).
    """

    heads: list[Node] = field(default_factory=list)
    tails: list[Node] = field(default_factory=list)
    caps: list[int] = field(default_factory=list)
    tags: list[object] = field(default_factory=list)
    out: dict[Node, list[int]] = field(default_factory=dict)

    def _arc(self, u: Node, v: Node, cap: int, tag: object) -> int:
        i = len(self.heads)
        self.tails.append(u)
        self.heads.append(v)
        self.caps.append(cap)
        self.tags.append(tag)
        self.out.setdefault(u, []).append(i)
        self.out.setdefault(v, [])
        return i

    def add_arc(self, u: Node, v: Node, cap: int, tag: object = None) -> int:
        """Directed arc ``u -> v``; a zero-capacity reverse arc is paired at index ``i ^ 1``."""
        i = self._arc(u, v, cap, tag)
        self._arc(v, u, 0, tag)
        return i

    def add_edge(self, u: Node, v: Node, cap: int = 1, tag: object = None) -> int:
        """Undirected edge usable in either direction, total capacity ``cap``."""
        i = self._arc(u, v, cap, tag)
        self._arc(v, u, cap, tag)
        return i


@dataclass
class FlowResult:
    value: int
    flow: list[int]
    paths: list[list[object]]

    def arc_flow(self, i: int) -> int:
        return self.flow[i]


def max_flow(net: Network, s: Node, t: Node, decompose: bool = True) -> FlowResult:
    """Maximum ``s``-``t`` flow; ``paths`` lists one tag sequence per unit of flow.

    Paths are cycle-free; flow circulating on cycles is dropped from the
    decomposition (it never contributes to the value).
    """
    n_arcs = len(net.heads)
    residual = list(net.caps)
    value = 0
    if s == t:
        return FlowResult(0, [0] * n_arcs, [])
    while True:
        pred: dict[Node, int] = {s: -1}
        queue = deque([s])
        while queue and t not in pred:
            x = queue.popleft()
            for i in net.out.get(x, ()):
                y = net.heads[i]
                if residual[i] > 0 and y not in pred:
                    pred[y] = i
                    queue.append(y)
        if t not in pred:
            break
        push = None
        y = t
        while y != s:
            i = pred[y]
            push = residual[i] if push is None else min(push, residual[i])
            y = net.tails[i]
        y = t
        while y != s:
            i = pred[y]
            residual[i] -= push
            residual[i ^ 1] += push
            y = net.tails[i]
        value += push
    # net flow per arc pair: positive on the direction actually used
    flow = [0] * n_arcs
    for i in range(0, n_arcs, 2):
        used = net.caps[i] - residual[i]
        if used > 0:
            flow[i] = used
        elif used < 0:
            flow[i + 1] = -used
    paths = _decompose(net, flow, s, t, value) if decompose else []
    return FlowResult(value, flow, paths)


def _decompose(net: Network, flow: list[int], s: Node, t: Node, value: int) -> list[list[object]]:
    left = list(flow)
    paths = []
    for _ in range(value):
        walk_arcs: list[int] = []
        pos = {s: 0}
        x = s
        while x != t:
            i = next(i for i in net.out[x] if left[i] > 0)
            left[i] -= 1
            y = net.heads[i]
            if y in pos:
                # cut the cycle out of the walk
                cut = pos[y]
                for j in walk_arcs[cut:]:
                    del pos[net.heads[j]]
                walk_arcs = walk_arcs[:cut]
                pos[y] = cut
                x = y
                continue
            walk_arcs.append(i)
            pos[y] = len(walk_arcs)
            x = y
        paths.append([net.tags[i] for i in walk_arcs])
    return paths
