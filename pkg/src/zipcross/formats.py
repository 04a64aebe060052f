"""Graph ingestion: edge-list text, graph6, and a few named graphs."""

from __future__ import annotations

import re
import sys
from dataclasses import dataclass
from pathlib import Path

import networkx as nx

from .graph import (
    GraphError,
    MultiGraph,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    make_graph,
    path_graph,
    petersen_graph,
    prism_graph,
    star_graph,
)


class InputError(ValueError):
    pass


@dataclass(frozen=True)
class GraphDocument:
    format: str  # "edge-list" | "graph6" | "name"
    payload: str
    graph: MultiGraph


def parse_edge_list(text: str) -> MultiGraph:
    """``n m`` header then ``m`` lines ``u v`` (0-based); ``#`` lines are comments."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise InputError("empty edge list")
    try:
        n, m = (int(x) for x in lines[0].split())
    except ValueError:
        raise InputError(f"bad header line {lines[0]!r}, expected 'n m'") from None
    body = lines[1:]
    if len(body) != m:
        raise InputError(f"header announces {m} edges but {len(body)} edge lines follow")
    pairs = []
    for ln in body:
        parts = ln.split()
        if len(parts) != 2:
            raise InputError(f"bad edge line {ln!r}")
        try:
            pairs.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise InputError(f"bad edge line {ln!r}") from None
    try:
        return make_graph(n, pairs)
    except GraphError as exc:
        raise InputError(str(exc)) from None


def format_edge_list(g: MultiGraph, comment: str | None = None) -> str:
    c = g.compact()
    out = []
    if comment:
        out.extend(f"# {ln}" for ln in comment.splitlines())
    out.append(f"{c.n} {c.m}")
    out.extend(f"{a} {b}" for a, b in c.edges.values())
    return "\n".join(out) + "\n"


def parse_graph6(text: str) -> MultiGraph:
    data = text.strip()
    if data.startswith(">>graph6<<"):
        data = data[len(">>graph6<<") :]
    try:
        h = nx.from_graph6_bytes(data.encode("ascii"))
    except (ValueError, IndexError, nx.NetworkXError, UnicodeEncodeError) as exc:
        raise InputError(f"bad graph6 string: {exc}") from None
    nodes = sorted(h.nodes())
    idx = {v: i for i, v in enumerate(nodes)}
    return make_graph(len(nodes), sorted((idx[a], idx[b]) if idx[a] < idx[b] else (idx[b], idx[a]) for a, b in h.edges()))


_NAMED = [
    (re.compile(r"K(\d+),(\d+)$"), lambda m: complete_bipartite(int(m[1]), int(m[2]))),
    (re.compile(r"K(\d+)$"), lambda m: complete_graph(int(m[1]))),
    (re.compile(r"C(\d+)$"), lambda m: cycle_graph(int(m[1]))),
    (re.compile(r"P(\d+)$"), lambda m: path_graph(int(m[1]))),
    (re.compile(r"S(\d+)$"), lambda m: star_graph(int(m[1]))),
    (re.compile(r"petersen$", re.I), lambda m: petersen_graph()),
    (re.compile(r"prism$", re.I), lambda m: prism_graph()),
]


def named_graph(name: str) -> MultiGraph | None:
    """``K5``, ``K3,3``, ``C4``, ``P3`` (path on 3 vertices), ``S4``, ``petersen``, ``prism``."""
    for pat, build in _NAMED:
        m = pat.match(name.strip())
        if m:
            return build(m)
    return None


def _looks_like_graph6(text: str) -> bool:
    body = text.strip()
    if body.startswith(">>graph6<<"):
        return True
    return len(body.split()) == 1 and all(63 <= ord(ch) <= 126 for ch in body)


def load_document(source: str, fmt: str | None = None, stdin_text: str | None = None) -> GraphDocument:
    """Resolve a file path, ``-`` (stdin) or a graph name into a graph."""
    if source == "-":
        text = stdin_text if stdin_text is not None else sys.stdin.read()
    else:
        path = Path(source)
        if path.is_file():
            text = path.read_text()
            if fmt is None and path.suffix == ".g6":
                fmt = "graph6"
        else:
            g = named_graph(source)
            if g is None:
                raise InputError(f"{source!r} is neither a readable file nor a known graph name")
            return GraphDocument("name", source, g)
    if fmt is None:
        fmt = "graph6" if _looks_like_graph6(text) else "edge-list"
    if fmt == "graph6":
        return GraphDocument("graph6", text, parse_graph6(text))
    return GraphDocument("edge-list", text, parse_edge_list(text))


def load_graph(source: str, fmt: str | None = None) -> MultiGraph:
    return load_document(source, fmt).graph
