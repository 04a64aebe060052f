import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zipcross.canon import CanonCapError, canonical_form, canonical_key
from zipcross.generators import random_connected
from zipcross.graph import complete_graph, cycle_graph, make_graph, petersen_graph


def permuted(g, rng):
    verts = sorted(g.vertices)
    image = verts[:]
    rng.shuffle(image)
    return g.relabel(dict(zip(verts, image)))


def test_k4_labelings_agree():
    a = complete_graph(4)
    b = make_graph(4, [(3, 2), (1, 0), (2, 0), (3, 1), (0, 3), (2, 1)])
    assert canonical_key(a) == canonical_key(b)


def test_k4_vs_c4_differ():
    assert canonical_key(complete_graph(4)) != canonical_key(cycle_graph(4))


def test_multiplicity_matters():
    assert canonical_key(make_graph(2, [(0, 1), (0, 1)])) != canonical_key(make_graph(2, [(0, 1)]))


def test_cap_enforced():
    with pytest.raises(CanonCapError, match="memoisation"):
        canonical_key(make_graph(17, []))


def test_edgeless_at_cap_is_fast():
    assert canonical_key(make_graph(16, [])) == canonical_key(make_graph(16, []))


def test_random_permutations_up_to_8_vertices():
    rng = random.Random(7)
    for _ in range(100):
        n = rng.randint(1, 8)
        g = random_connected(rng, n, rng.randint(n - 1, 2 * n + 2), multi=True)
        assert canonical_key(permuted(g, rng)) == canonical_key(g)


def test_atlas_graphs_get_distinct_keys():
    # the atlas lists every graph on <= 7 vertices once up to isomorphism
    keys = set()
    atlas = nx.graph_atlas_g()
    for h in atlas:
        idx = {v: i for i, v in enumerate(h.nodes())}
        g = make_graph(len(idx), [(idx[a], idx[b]) for a, b in h.edges()])
        keys.add(canonical_key(g))
    assert len(keys) == len(atlas)


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_key_equality_matches_nx_isomorphism(seed):
    rng = random.Random(seed)
    n = rng.randint(2, 6)
    g = random_connected(rng, n, rng.randint(n - 1, 9), multi=True)
    h = random_connected(rng, n, g.m, multi=True)
    gx = nx.MultiGraph(list(g.edges.values()))
    hx = nx.MultiGraph(list(h.edges.values()))
    assert (canonical_key(g) == canonical_key(h)) == nx.is_isomorphic(gx, hx)


def test_order_is_a_relabelling_to_the_canonical_graph():
    rng = random.Random(3)
    g = petersen_graph()
    h = permuted(g, rng)
    key_g, order_g = canonical_form(g)
    key_h, order_h = canonical_form(h)
    assert key_g == key_h
    ga = g.relabel({v: i for i, v in enumerate(order_g)})
    ha = h.relabel({v: i for i, v in enumerate(order_h)})
    assert ga == ha


def test_colors_separate_otherwise_isomorphic_graphs():
    g = make_graph(3, [(0, 1), (1, 2)])
    end = canonical_form(g, colors={0: 1})[0]
    mid = canonical_form(g, colors={1: 1})[0]
    assert end != mid
    assert end == canonical_form(g, colors={2: 1})[0]
