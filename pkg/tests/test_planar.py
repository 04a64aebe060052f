import json
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import exhaustive_at_most, exhaustive_cr, nonadjacent_pairs, nx_planar
from zipcross.generators import random_connected
from zipcross.graph import (
    complete_bipartite,
    complete_graph,
    cross_identify,
    delete_edge,
    make_graph,
    petersen_graph,
    subdivide,
)
from zipcross.planar import (
    CrossingCertificate,
    Memo,
    crossing_number,
    euler_lower_bound,
    is_planar,
    kuratowski_edges,
    kuratowski_packing_bound,
    kuratowski_type,
    verify_certificate,
)

# frozen from tests/oracles.exhaustive_cr (unpruned search over all nonadjacent pairs)
ORACLE_VALUES = {"K4": 0, "K5": 1, "K3,3": 1, "K6": 3, "Petersen": 2}

GRAPHS = {
    "K4": complete_graph(4),
    "K5": complete_graph(5),
    "K3,3": complete_bipartite(3, 3),
    "K6": complete_graph(6),
    "Petersen": petersen_graph(),
}


def test_is_planar_k4_with_embedding():
    res = is_planar(complete_graph(4))
    assert res.planar and res.embedding is not None


def test_is_planar_k5_witness_is_k5():
    res = is_planar(complete_graph(5))
    assert not res.planar
    assert res.witness.m == 10 and kuratowski_type(res.witness) == "K5"


def test_doubled_k33_is_nonplanar():
    k33 = complete_bipartite(3, 3)
    doubled = make_graph(6, list(k33.edges.values()) * 2)
    res = is_planar(doubled)
    assert not res.planar
    assert kuratowski_type(res.witness) == "K3,3"


def test_petersen_witness_is_minimal_nonplanar():
    g = petersen_graph()
    w = kuratowski_edges(g)
    sub = g.edge_subgraph(w)
    assert not nx_planar(sub)
    assert all(nx_planar(delete_edge(sub, e)) for e in w)
    assert kuratowski_type(sub) == "K3,3"


@pytest.mark.parametrize(
    "g, bound",
    [(complete_graph(5), 1), (complete_graph(6), 3), (complete_bipartite(3, 3), 1), (petersen_graph(), 2)],
)
def test_euler_lower_bound_examples(g, bound):
    assert euler_lower_bound(g) == bound


def test_euler_bound_zero_on_planar():
    assert euler_lower_bound(complete_graph(4)) == 0
    assert euler_lower_bound(make_graph(2, [(0, 1)] * 5)) == 0


@pytest.mark.parametrize("name", ["K5", "K3,3", "Petersen"])
def test_oracle_reproduces_frozen_values(name):
    assert exhaustive_cr(GRAPHS[name], 3) == ORACLE_VALUES[name]


@pytest.mark.parametrize("name", list(GRAPHS))
def test_solver_values(name):
    g = GRAPHS[name]
    res = crossing_number(g, memo=False)
    assert res.exact and res.value == ORACLE_VALUES[name]
    assert verify_certificate(g, res.certificate)[0]
    assert res.certificate.value == res.value


def test_certificates():
    k4, k5 = complete_graph(4), complete_graph(5)
    assert verify_certificate(k4, CrossingCertificate(k4, ()))[0]
    assert not verify_certificate(k5, CrossingCertificate(k5, ()))[0]
    good = [(e, f) for e, f in nonadjacent_pairs(k5) if verify_certificate(k5, CrossingCertificate(k5, ((e, f),)))[0]]
    assert good


def test_malformed_certificates_fail_with_diagnostic():
    k5 = complete_graph(5)
    ok, why = verify_certificate(k5, CrossingCertificate(k5, ((0, 1),)))
    assert not ok and "adjacent" in why
    ok, why = verify_certificate(k5, CrossingCertificate(k5, ((0, 99),)))
    assert not ok and "illegal" in why
    # a consumed edge may not be referenced again
    ok, why = verify_certificate(k5, CrossingCertificate(k5, ((0, 7), (0, (0, 2)))))
    assert not ok


def test_certificate_json_round_trip():
    g = petersen_graph()
    cert = crossing_number(g).certificate
    doc = json.loads(cert.dumps())
    assert set(doc) == {"base_n", "base_edges", "trace", "value"}
    back = CrossingCertificate.from_json(doc)
    assert back.trace == cert.trace
    assert verify_certificate(g, back)[0]


def test_certificate_addresses_created_edges():
    g = complete_graph(6)
    cert = crossing_number(g).certificate
    refs = [r for step in cert.trace for r in step]
    assert cert.value == 3
    assert verify_certificate(g, cert)[0]
    assert all(isinstance(r, int) or (isinstance(r, tuple) and r[0] < len(cert.trace)) for r in refs)


def test_budget_decision_mode():
    k5 = complete_graph(5)
    res = crossing_number(k5, budget=0)
    assert res.status == "exceeds_budget" and res.value is None and res.lower >= 1
    assert crossing_number(k5, budget=1).value == 1


def test_resource_cap_reports_interval():
    res = crossing_number(complete_graph(7), node_limit=50, memo=False)
    assert res.status == "unknown" and res.value is None
    assert res.lower <= 9 <= res.upper


def test_disconnected_sum():
    g = make_graph(10, [(a, b) for a in range(5) for b in range(a + 1, 5)] + [(a + 5, b + 5) for a in range(5) for b in range(a + 1, 5)])
    res = crossing_number(g)
    assert res.value == 2
    assert verify_certificate(g, res.certificate)[0]


def test_packing_bound_counts_disjoint_subdivisions():
    two = make_graph(12, [(a, b) for a in range(3) for b in range(3, 6)] + [(a + 6, b + 6) for a in range(3) for b in range(3, 6)] + [(0, 6)])
    assert kuratowski_packing_bound(two) == 2


def test_threads_do_not_change_answers():
    for g in (complete_graph(6), petersen_graph()):
        a = crossing_number(g, memo=Memo(), threads=1)
        b = crossing_number(g, memo=Memo(), threads=4)
        assert a.value == b.value
        assert a.certificate.trace == b.certificate.trace


def test_edge_order_independence():
    rng = random.Random(5)
    g = petersen_graph()
    pairs = list(g.edges.values())
    for _ in range(3):
        rng.shuffle(pairs)
        assert crossing_number(make_graph(10, pairs), memo=False).value == 2


def _random_graphs(seed, count, max_n=8, max_m=13):
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(5, max_n)
        yield random_connected(rng, n, rng.randint(n + 2, max_m))


def test_cross_identify_drops_cr_by_at_most_one():
    for g in _random_graphs(11, 25):
        cr = crossing_number(g).value
        kids = [crossing_number(cross_identify(g, e, f)).value for e, f in nonadjacent_pairs(g)]
        assert all(k >= cr - 1 for k in kids)
        if cr > 0:
            assert min(kids) == cr - 1


def test_monotone_under_deletion_and_subdivision():
    for g in _random_graphs(12, 20):
        cr = crossing_number(g).value
        assert euler_lower_bound(g) <= cr
        for e in list(g.edges)[:4]:
            assert crossing_number(delete_edge(g, e)).value <= cr
            assert crossing_number(subdivide(g, e)).value == cr


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_solver_matches_exhaustive_search(seed):
    rng = random.Random(seed)
    n = rng.randint(5, 7)
    g = random_connected(rng, n, rng.randint(n + 3, 12))
    res = crossing_number(g, memo=False)
    assert verify_certificate(g, res.certificate)[0]
    assert exhaustive_at_most(g, res.value)
    if res.value:
        assert not exhaustive_at_most(g, res.value - 1)
