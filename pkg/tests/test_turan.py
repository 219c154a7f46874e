import random
from itertools import combinations
from math import comb

import pytest

from f33turan.constructions import count_b, make_bipartite_B, make_complete, make_F33
from f33turan.hypergraph import ThreeGraph, triple_rank
from f33turan.patterns import contains_F33
from f33turan.turan import (
    TuranCertificate,
    audit_certificate,
    canonical_key,
    enumerate_copies,
    enumerate_extremal,
    exact_turan,
    greedy_hitting_set,
    is_isomorphic,
    packing_lower_bound,
)


class TestCatalog:
    def test_n6(self):
        cat = enumerate_copies(6)
        assert len(cat) == 20
        assert len(set(cat.copies)) == 20

    def test_n7(self):
        assert len(enumerate_copies(7)) == 140

    def test_n5(self):
        assert len(enumerate_copies(5)) == 0

    def test_copy_shape(self):
        for c in enumerate_copies(7).copies:
            assert c.bit_count() == 10
            g = ThreeGraph(7, c)
            assert len({v for e in g.edges for v in e}) == 6
            assert contains_F33(g) is not None

    def test_contains_the_labelled_pattern(self):
        assert make_F33().bits in enumerate_copies(6).copies


@pytest.mark.parametrize("n,want", [(1, 0), (2, 0), (3, 1), (4, 4), (5, 10), (6, 18), (7, 30)])
def test_exact_values(n, want):
    cert = exact_turan(n)
    assert cert.optimum == want
    assert cert.proven_exhaustive
    assert cert.matches_theorem
    assert cert.optimum >= make_bipartite_B(n).num_edges
    assert audit_certificate(cert)


def test_node_limit_marks_incomplete():
    cert = exact_turan(8, node_limit=5)
    assert not cert.proven_exhaustive
    # the incumbent is still a valid F33-free graph
    assert contains_F33(cert.witness) is None


class TestExtremal:
    def test_n6_unique_b6(self):
        ex = enumerate_extremal(6)
        assert len(ex) == 1
        assert is_isomorphic(ex[0], make_bipartite_B(6))

    def test_n5_k5(self):
        ex = enumerate_extremal(5)
        assert len(ex) == 1 and ex[0] == make_complete(5)

    def test_n4_k4(self):
        ex = enumerate_extremal(4)
        assert len(ex) == 1 and ex[0] == make_complete(4)

    def test_limit(self):
        with pytest.raises(ValueError):
            enumerate_extremal(8)


class TestAudit:
    def test_good(self):
        assert audit_certificate(exact_turan(6)).ok

    def test_tampered(self):
        cert = exact_turan(6)
        missing = next(t for t in combinations(range(6), 3) if not cert.witness.has_edge(*t))
        bad_w = cert.witness.with_edges([missing])
        bad = TuranCertificate(6, bad_w.num_edges, bad_w, True, 1)
        res = audit_certificate(bad)
        assert not res and res.reason == "witness-contains-f33"

    def test_n5(self):
        k5 = make_complete(5)
        assert audit_certificate(TuranCertificate(5, 10, k5, True, 1))

    def test_count_mismatch(self):
        b6 = make_bipartite_B(6)
        assert audit_certificate(TuranCertificate(6, 19, b6, True, 1)).reason == "edge-count-mismatch"

    def test_below_lower_bound(self):
        g = make_bipartite_B(6).without_edges([(0, 1, 3)])
        assert audit_certificate(TuranCertificate(6, 17, g, True, 1)).reason == "below-lower-bound"


@pytest.mark.parametrize("n", [6, 7])
def test_hitting_set_duality(n):
    rng = random.Random(n)
    cat = enumerate_copies(n)
    full = (1 << comb(n, 3)) - 1
    for _ in range(200):
        k = rng.randint(0, comb(n, 3) - count_b(n) + 3)
        h = 0
        for r in rng.sample(range(comb(n, 3)), k):
            h |= 1 << r
        assert cat.hit_by(h) == (contains_F33(ThreeGraph(n, full & ~h)) is None)


@pytest.mark.parametrize("n", [6, 7])
def test_packing_bound_is_a_lower_bound(n):
    cat = enumerate_copies(n)
    optimum = comb(n, 3) - exact_turan(n).optimum
    assert packing_lower_bound(cat.copies) <= optimum
    assert greedy_hitting_set(cat.copies).bit_count() >= optimum


def test_canonical_key_invariant():
    g = make_bipartite_B(6)
    assert canonical_key(g) == canonical_key(g.relabel([5, 3, 1, 0, 2, 4]))
    assert canonical_key(g) != canonical_key(make_complete(6).without_edges([(0, 1, 2), (3, 4, 5)]).without_edges([(0, 1, 3)]))


def test_certificate_json():
    data = exact_turan(6).to_json()
    assert data["optimum"] == 18 and data["b_n"] == 18 and data["matches_theorem"]
    assert len(data["witness"]) == 18
