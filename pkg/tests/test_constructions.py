from fractions import Fraction
from itertools import combinations
from math import comb

import pytest

from oracles import bipartite_edges
from f33turan.constructions import (
    BipartitionSpec,
    check_identities,
    count_b,
    count_m,
    fourpart_sizes,
    m1_edge_count,
    m2_edge_count,
    m3_edge_count,
    make_bipartite_B,
    make_complete,
    make_F33,
    make_M1,
    make_M2,
    make_M3_fourpart,
)
from f33turan.hypergraph import density
from f33turan.link import build_link, find_isomorphism, max_triple_sum, weighted_incidence
from f33turan.patterns import contains_F33


class TestF33:
    def test_size(self):
        g = make_F33()
        assert (g.n, g.num_edges) == (6, 10)

    def test_degrees(self):
        g = make_F33()
        assert g.degrees[0] == 4
        assert g.degrees[3] == 6

    def test_no_edge_inside_xyz(self):
        assert not make_F33().has_edge(3, 4, 5)


def test_bipartition_spec():
    for n in range(30):
        s = BipartitionSpec(n)
        assert s.size_a + s.size_b == n
        assert abs(s.size_a - s.size_b) <= 1
        assert list(s.part_a) == list(range(n // 2))


class TestBipartite:
    @pytest.mark.parametrize("n,edges", [(6, 18), (5, 9), (3, 1)])
    def test_edge_counts(self, n, edges):
        assert make_bipartite_B(n).num_edges == edges

    def test_matches_definition(self):
        for n in range(0, 13):
            assert set(make_bipartite_B(n).edges) == bipartite_edges(n)

    def test_count_formula(self):
        for n in range(0, 201):
            assert make_bipartite_B(n).num_edges == count_b(n)

    def test_no_triple_inside_parts(self):
        for n in range(3, 61):
            g = make_bipartite_B(n)
            a = n // 2
            assert not any(w < a for _, _, w in g.edges)
            assert not any(u >= a for u, _, _ in g.edges)


class TestCounts:
    @pytest.mark.parametrize("n,b", [(5, 9), (6, 18), (7, 30)])
    def test_count_b(self, n, b):
        assert count_b(n) == b

    @pytest.mark.parametrize("n,m", [(3, 10), (1, 0), (4, 20), (12, 204)])
    def test_count_m(self, n, m):
        assert count_m(n) == m

    def test_wide_integers(self):
        assert count_b(10**6) == comb(10**6, 3) - 2 * comb(5 * 10**5, 3)
        assert count_m(10**6) == 3 * 10**12 // 2 - 10**6


def test_complete():
    assert make_complete(5).num_edges == 10
    assert make_complete(2).num_edges == 0
    assert make_complete(6).num_edges == 20


class TestMultigraphConstructions:
    def test_m1_examples(self):
        assert make_M1(6).total == 48 == count_m(6)
        assert make_M1(5).total == 32 == count_m(5)
        assert make_M1(1).total == 0

    def test_m2_examples(self):
        assert make_M2(6).total == 48
        assert make_M2(5).total == 32
        assert make_M2(2).total == 4

    def test_m2_matching_prefix(self):
        m = make_M2(5)
        heavy = sorted(p for p, w in m.weights.items() if w == 4)
        assert heavy == [(0, 1), (2, 3)]

    def test_m3_four_singletons(self):
        m = make_M3_fourpart(4)
        assert m.w(0, 1) == 4 and m.w(2, 3) == 4
        assert sorted(m.weights.values()) == [3, 3, 3, 3, 4, 4]
        assert m.total == 20 == count_m(4)

    def test_m3_sizes_favor_w_first(self):
        assert fourpart_sizes(7) == (2, 2, 2, 1)
        assert fourpart_sizes(5) == (2, 1, 1, 1)

    def test_m3_n8_triple_cap(self):
        assert max_triple_sum(make_M3_fourpart(8))[0] == 10

    def test_equal_to_m_up_to_200(self):
        for n in range(0, 201):
            assert make_M1(n).total == make_M2(n).total == count_m(n)

    def test_structural_counts_agree_with_objects(self):
        for n in range(0, 80):
            assert m1_edge_count(n) == make_M1(n).total
            assert m2_edge_count(n) == make_M2(n).total
            assert m3_edge_count(n) == make_M3_fourpart(n).total

    @pytest.mark.parametrize("maker", [make_M1, make_M2, make_M3_fourpart])
    def test_lemma_hypotheses(self, maker):
        for n in range(3, 41):
            m = maker(n)
            assert all(0 <= w <= 4 for w in m.weights.values())
            assert max_triple_sum(m)[0] <= 10

    def test_m3_totals(self):
        # observed: with remainders placed W, X, Y, Z in order the total is m(n) for every n
        assert all(make_M3_fourpart(n).total == count_m(n) for n in range(0, 121))
        assert all(m3_edge_count(n) == count_m(n) for n in range(0, 10001))


class TestLinkOfBipartite:
    @pytest.mark.parametrize("n", range(8, 17))
    def test_link_is_m1(self, n):
        a = n // 2
        link = build_link(make_bipartite_B(n), {0, 1, a, a + 1}).multigraph()
        assert find_isomorphism(link, make_M1(n - 4)) is not None

    def test_weighted_incidence(self):
        assert weighted_incidence(make_M1(6), {0}) == 16
        assert weighted_incidence(make_M2(4), {0, 1}) == 16


class TestIdentities:
    def test_pass_to_100(self):
        rep = check_identities(100)
        assert rep.passed, rep.failures
        assert rep.checked["b_difference"] == 97

    def test_m_difference_at_6(self):
        assert count_m(6) - count_m(5) == 16 == 3 * 5 + 1

    def test_density_at_6(self):
        assert density(make_bipartite_B(6)) == Fraction(9, 10) >= Fraction(3, 4)

    def test_rejects_small(self):
        with pytest.raises(ValueError):
            check_identities(4)

    def test_detects_a_broken_identity(self, monkeypatch):
        import f33turan.constructions as c

        monkeypatch.setattr(c, "count_m", lambda n: 0 if n == 7 else count_m(n))
        rep = c.check_identities(20)
        assert not rep.passed
        assert rep.failures["b_difference"]["n"] == 11
        assert rep.failures["m_difference"]["n"] == 7


@pytest.mark.parametrize("n", range(1, 21))
def test_bipartite_is_f33_free(n):
    assert contains_F33(make_bipartite_B(n)) is None
