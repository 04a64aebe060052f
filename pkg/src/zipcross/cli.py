"""Command-line entry point.

Exit codes: 0 ok, 1 negative verdict, 2 input error, 3 resource limit.
Default solver caps come from ``ZIPCROSS_TIME_LIMIT`` (seconds) and
``ZIPCROSS_NODE_LIMIT``; the ``--time-limit``/``--node-limit`` flags win.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import planar
from .cuts import enumerate_min_cuts, find_bundle, find_coherent_bundles
from .formats import InputError, format_edge_list, load_graph
from .graph import GraphError
from .mcr import minor_crossing_number, tree_product_bound
from .planar import Exhausted, crossing_number
from .zipping import Policy, ZipSpec, cr_via_decomposition, extract_critical_subgraph, is_crossing_critical, zip_product

EXIT_OK, EXIT_NEGATIVE, EXIT_INPUT, EXIT_RESOURCE = 0, 1, 2, 3

ENV_TIME = "ZIPCROSS_TIME_LIMIT"
ENV_NODES = "ZIPCROSS_NODE_LIMIT"


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


def _solver_opts(args) -> dict:
    opts: dict = {}
    t = args.time_limit if args.time_limit is not None else os.environ.get(ENV_TIME)
    n = args.node_limit if args.node_limit is not None else os.environ.get(ENV_NODES)
    if t is not None:
        opts["time_limit"] = float(t)
    if n is not None:
        opts["node_limit"] = int(n)
    if getattr(args, "no_memo", False):
        opts["memo"] = False
    return opts


def cmd_cr(args) -> int:
    g = load_graph(args.input, args.format)
    res = crossing_number(g, budget=args.budget, threads=args.threads, **_solver_opts(args))
    if args.certificate and res.certificate is not None:
        with open(args.certificate, "w") as fh:
            json.dump(res.certificate.to_json(), fh)
    if res.status == "exact":
        _emit(args, res.to_json(), str(res.value))
        return EXIT_OK
    if res.status == "exceeds_budget":
        _emit(args, res.to_json(), "exceeds budget")
        return EXIT_NEGATIVE
    _emit(args, res.to_json(), f"unknown [{res.lower}, {res.upper}]")
    return EXIT_RESOURCE


def cmd_verify(args) -> int:
    g = load_graph(args.input, args.format)
    with open(args.certificate) as fh:
        cert = planar.CrossingCertificate.from_json(json.load(fh))
    ok, why = planar.verify_certificate(g, cert)
    _emit(args, {"valid": ok, "value": cert.value, "message": why}, f"{'valid' if ok else 'invalid'}: {why}")
    return EXIT_OK if ok else EXIT_NEGATIVE


def _tree_text(node, depth: int = 0) -> list[str]:
    pad = "  " * depth
    if hasattr(node, "children"):
        kind = "exact" if node.exact_split else "lower-bound"
        lines = [f"{pad}split |F|={node.cut.size} edges={sorted(node.cut.edges)} ({kind}) value={node.value}"]
        for c in node.children:
            lines.extend(_tree_text(c, depth + 1))
        return lines
    status = "" if node.exact else f" [{node.lower}, {node.upper}]"
    return [f"{pad}leaf n={node.graph.n} m={node.graph.m} cr={node.value}{status}"]


def cmd_decompose(args) -> int:
    g = load_graph(args.input, args.format)
    policy = Policy(
        max_cut_size=args.max_cut_size,
        allow_lower_bound=args.allow_lb,
        threads=args.threads,
        solver=_solver_opts(args),
    )
    tree = cr_via_decomposition(g, policy)
    lower_only = not all(getattr(n, "exact_split", True) for n in _nodes(tree))
    undecided = any(not leaf.exact for leaf in tree.leaves())
    payload = {"value": tree.value, "exact": tree.exact, "splits": tree.splits(), "tree": tree.to_json()}
    if tree.exact:
        head = f"{tree.value} exact"
    elif lower_only and not undecided:
        head = f">= {tree.value} lower-bound"
    else:
        head = f"unknown [{tree.lower}, {tree.upper}]"
    _emit(args, payload, "\n".join([head, f"splits: {tree.splits()}"] + _tree_text(tree)))
    return EXIT_RESOURCE if undecided else EXIT_OK


def _nodes(tree):
    yield tree
    for c in getattr(tree, "children", ()):
        yield from _nodes(c)


def cmd_zip(args) -> int:
    g1 = load_graph(args.input1, args.format)
    g2 = load_graph(args.input2, args.format)
    try:
        v1, v2 = (int(x) for x in args.at.split(","))
    except ValueError:
        raise InputError("--at expects 'v1,v2'") from None
    f1 = g1.incident(v1)
    f2 = g2.incident(v2)
    sigma = None
    if args.sigma:
        perm = [int(x) for x in args.sigma.split(",")]
        if sorted(perm) != list(range(len(f2))) or len(perm) != len(f1):
            raise InputError(f"--sigma must be a permutation of 0..{len(f2) - 1}")
        sigma = {f1[i]: f2[perm[i]] for i in range(len(f1))}
    g = zip_product(ZipSpec(g1, v1, g2, v2, sigma))
    c = g.compact()
    _emit(args, {"n": c.n, "edges": [list(p) for p in c.edges.values()]}, format_edge_list(g).rstrip("\n"))
    return EXIT_OK


def cmd_cuts(args) -> int:
    g = load_graph(args.input, args.format)
    cuts = enumerate_min_cuts(g, max_size=args.max_size, nontrivial_only=args.nontrivial)
    lines = [f"{len(cuts)} cuts"]
    lines += [f"|F|={c.size} edges={sorted(c.edges)} sides={sorted(c.sides[0])}|{sorted(c.sides[1])}" for c in cuts]
    _emit(args, {"cuts": [c.to_json() for c in cuts]}, "\n".join(lines))
    return EXIT_OK


def cmd_bundles(args) -> int:
    g = load_graph(args.input, args.format)
    v = args.vertex
    bundles = [b for w in sorted(g.vertices - {v}) if (b := find_bundle(g, v, w)) is not None]
    pair = find_coherent_bundles(g, v) if args.coherent else None
    lines = [f"{len(bundles)} bundles at {v}"]
    for b in bundles:
        paths = "; ".join(f"{p.start}:{list(p.edges)}" for p in b.paths)
        lines.append(f"sink {b.sink}: {paths}")
    if args.coherent:
        lines.append("coherent pair: " + ("none" if pair is None else f"sinks {pair[0].sink}, {pair[1].sink}"))
    payload = {
        "bundles": [b.to_json() for b in bundles],
        "coherent": None if pair is None else [b.to_json() for b in pair],
    }
    _emit(args, payload, "\n".join(lines))
    if args.coherent:
        return EXIT_OK if pair is not None else EXIT_NEGATIVE
    return EXIT_OK if bundles else EXIT_NEGATIVE


def cmd_critical(args) -> int:
    g = load_graph(args.input, args.format)
    opts = _solver_opts(args)
    if args.extract:
        res = extract_critical_subgraph(g, **opts)
        _emit(
            args,
            {"critical": res.critical, "value": res.value, "edges": sorted(res.graph.edges)},
            format_edge_list(res.graph, comment=f"cr = {res.value}").rstrip("\n"),
        )
        return EXIT_OK if res.critical else EXIT_NEGATIVE
    verdict = is_crossing_critical(g, **opts)
    _emit(args, {"critical": verdict}, "critical" if verdict else "not critical")
    return EXIT_OK if verdict else EXIT_NEGATIVE


def cmd_mcr(args) -> int:
    g = load_graph(args.input, args.format)
    res = minor_crossing_number(g, args.degree_cap, **_solver_opts(args))
    if res.exact:
        note = "" if res.provably_exact else " (cubic-expansion class)"
        _emit(args, res.to_json(), f"{res.value}{note}")
        return EXIT_OK
    _emit(args, res.to_json(), f"unknown [{res.lower}, {res.upper}]")
    return EXIT_RESOURCE


def cmd_product_bound(args) -> int:
    t = load_graph(args.tree, args.format)
    g = load_graph(args.graph, args.format)
    bound = tree_product_bound(t, g, args.degree_cap, **_solver_opts(args))
    _emit(args, {"bound": bound}, str(bound))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="zipcross", description="Exact crossing numbers via small-cut decomposition.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, graph_args=("input",)):
        for name in graph_args:
            sp.add_argument(name, help="edge-list or graph6 file, '-' for stdin, or a name like K5, K3,3, P3")
        sp.add_argument("--format", choices=["edge-list", "graph6"], default=None)
        sp.add_argument("--json", action="store_true")
        sp.add_argument("--time-limit", type=float, default=None)
        sp.add_argument("--node-limit", type=int, default=None)
        sp.add_argument("--threads", type=int, default=1)
        sp.add_argument("--no-memo", action="store_true")

    sp = sub.add_parser("cr", help="exact crossing number")
    common(sp)
    sp.add_argument("--budget", type=int, default=None)
    sp.add_argument("--certificate", metavar="PATH")
    sp.set_defaults(func=cmd_cr)

    sp = sub.add_parser("verify", help="replay a crossing certificate")
    common(sp)
    sp.add_argument("certificate")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("decompose", help="crossing number via minimal-cut decomposition")
    common(sp)
    sp.add_argument("--max-cut-size", type=int, choices=[3, 4], default=3)
    sp.add_argument("--allow-lb", action="store_true")
    sp.set_defaults(func=cmd_decompose)

    sp = sub.add_parser("zip", help="zip product of two graphs")
    common(sp, ("input1", "input2"))
    sp.add_argument("--at", required=True, metavar="V1,V2")
    sp.add_argument("--sigma", metavar="LIST", help="permutation: i-th edge at v1 -> sigma[i]-th edge at v2")
    sp.set_defaults(func=cmd_zip)

    sp = sub.add_parser("cuts", help="minimal edge cuts")
    common(sp)
    sp.add_argument("--max-size", type=int, default=3, choices=[1, 2, 3, 4])
    sp.add_argument("--nontrivial", action="store_true")
    sp.set_defaults(func=cmd_cuts)

    sp = sub.add_parser("bundles", help="bundles at a vertex")
    common(sp)
    sp.add_argument("--vertex", type=int, required=True)
    sp.add_argument("--coherent", action="store_true", help="also search for a coherent pair")
    sp.set_defaults(func=cmd_bundles)

    sp = sub.add_parser("critical", help="crossing-criticality test")
    common(sp)
    sp.add_argument("--extract", action="store_true", help="greedily extract a critical subgraph")
    sp.set_defaults(func=cmd_critical)

    sp = sub.add_parser("mcr", help="minor crossing number")
    common(sp)
    sp.add_argument("--degree-cap", type=int, default=6)
    sp.set_defaults(func=cmd_mcr)

    sp = sub.add_parser("product-bound", help="lower bound on mcr of a tree product")
    common(sp, ())
    sp.add_argument("--tree", required=True)
    sp.add_argument("--graph", required=True)
    sp.add_argument("--degree-cap", type=int, default=6)
    sp.set_defaults(func=cmd_product_bound)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, GraphError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except Exhausted as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
