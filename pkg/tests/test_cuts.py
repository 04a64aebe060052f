import random

import pytest

from oracles import brute_force_min_cuts, exhaustive_bundle_exists, exhaustive_coherent_exists
from zipcross.cuts import (
    EdgeCut,
    check_bundle,
    check_cut,
    enumerate_min_cuts,
    find_bundle,
    find_coherent_bundles,
)
from zipcross.flow import Network, max_flow
from zipcross.generators import random_connected
from zipcross.graph import (
    GraphError,
    complete_bipartite,
    complete_graph,
    make_graph,
    prism_graph,
    star_graph,
)
from zipcross.zipping import split_at_cut


def apex_over_doubled_k4():
    k4 = [(a, b) for a in range(4) for b in range(a + 1, 4)]
    return make_graph(5, k4 + k4 + [(4, i) for i in range(4)])


def test_flow_single_arc():
    net = Network()
    net.add_arc("s", "t", 1)
    assert max_flow(net, "s", "t").value == 1


def test_flow_two_parallel_paths():
    net = Network()
    for mid in ("a", "b"):
        net.add_arc("s", mid, 1, tag=("s", mid))
        net.add_arc(mid, "t", 1, tag=(mid, "t"))
    res = max_flow(net, "s", "t")
    assert res.value == 2
    assert sorted(res.paths) == [[("s", "a"), ("a", "t")], [("s", "b"), ("b", "t")]]


def test_flow_k4_adjacent_terminals():
    net = Network()
    for e, (a, b) in complete_graph(4).edges.items():
        net.add_edge(a, b, 1, tag=e)
    res = max_flow(net, 0, 1)
    assert res.value == 3
    used = [e for p in res.paths for e in p]
    assert len(used) == len(set(used))


def test_bridge_cut():
    g = make_graph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (2, 3)])
    cuts = enumerate_min_cuts(g, 1)
    assert len(cuts) == 1
    assert cuts[0].edges == {6}
    assert sorted(len(s) for s in cuts[0].sides) == [3, 3]


def test_prism_cuts():
    g = prism_graph()
    nontrivial = enumerate_min_cuts(g, 3, nontrivial_only=True)
    assert len(nontrivial) == 1 and nontrivial[0].size == 3
    assert all(len(s) == 3 for s in nontrivial[0].sides)
    everything = enumerate_min_cuts(g, 3)
    assert len(everything) == 7
    assert {c.edges for c in everything} == brute_force_min_cuts(g, 3)


def test_k4_has_only_trivial_small_cuts():
    assert enumerate_min_cuts(complete_graph(4), 3, nontrivial_only=True) == []
    assert brute_force_min_cuts(complete_graph(4), 3) == {c.edges for c in enumerate_min_cuts(complete_graph(4), 3)}


def test_disconnected_input_rejected():
    with pytest.raises(GraphError):
        enumerate_min_cuts(make_graph(4, [(0, 1), (2, 3)]), 3)


def test_check_cut_rejects_nonminimal():
    g = make_graph(4, [(0, 1), (1, 2), (2, 3)])
    bad = EdgeCut(frozenset({0, 2}), (frozenset({0, 3}), frozenset({1, 2})))
    with pytest.raises(GraphError):
        check_cut(g, bad)


def test_cuts_agree_with_brute_force_on_corpus():
    rng = random.Random(42)
    for _ in range(60):
        n = rng.randint(3, 8)
        g = random_connected(rng, n, rng.randint(n - 1, n + 7), multi=rng.random() < 0.3)
        for size in (3, 4) if g.m <= 14 else (3,):
            found = enumerate_min_cuts(g, size)
            assert {c.edges for c in found} == brute_force_min_cuts(g, size)
            assert len(found) == len({c.edges for c in found})
            for c in found:
                check_cut(g, c)


def test_small_cuts_have_bundles_on_both_sides():
    rng = random.Random(43)
    for _ in range(40):
        n = rng.randint(4, 8)
        g = random_connected(rng, n, rng.randint(n, n + 6), multi=True)
        for c in enumerate_min_cuts(g, 3, nontrivial_only=True):
            spec = split_at_cut(g, c)
            for gi, vi in ((spec.g1, spec.v1), (spec.g2, spec.v2)):
                assert any(find_bundle(gi, vi, w) is not None for w in gi.vertices - {vi})


def test_k4_bundle_with_neighbor_sink():
    g = complete_graph(4)
    b = find_bundle(g, 0, 1)
    check_bundle(g, b)
    assert [(p.start, len(p.edges)) for p in b.paths] == [(1, 0), (2, 1), (3, 1)]


def test_star_has_no_bundle():
    assert find_bundle(star_graph(3), 0, 1) is None


def test_k33_opposite_sink():
    g = complete_bipartite(3, 3)
    b = find_bundle(g, 0, 1)
    assert b is not None
    check_bundle(g, b)
    assert exhaustive_bundle_exists(g, 0, 1)


def test_coherent_absent_in_k5():
    for v in range(5):
        assert find_coherent_bundles(complete_graph(5), v) is None
    assert not exhaustive_coherent_exists(complete_graph(5), 0)


def test_coherent_present_over_doubled_k4():
    g = apex_over_doubled_k4()
    pair = find_coherent_bundles(g, 4)
    assert pair is not None
    a, b = pair
    check_bundle(g, a)
    check_bundle(g, b)
    assert a.sink != b.sink
    assert not a.edge_set() & b.edge_set()


def test_coherent_absent_at_cut_vertex():
    g = make_graph(5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)])
    assert find_coherent_bundles(g, 0) is None
    assert all(find_bundle(g, 0, w) is None for w in range(1, 5))


def test_flow_bundles_match_exhaustive_enumeration():
    rng = random.Random(2024)
    for _ in range(60):
        n = rng.randint(3, 7)
        g = random_connected(rng, n, rng.randint(n - 1, 12), multi=rng.random() < 0.5)
        v = rng.randrange(n)
        for w in sorted(g.vertices - {v}):
            b = find_bundle(g, v, w)
            assert (b is not None) == exhaustive_bundle_exists(g, v, w)
            if b is not None:
                check_bundle(g, b)
        pair = find_coherent_bundles(g, v)
        assert (pair is not None) == exhaustive_coherent_exists(g, v)
