import random
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from conftest import random_graph, three_graphs
from f33turan.constructions import make_bipartite_B, make_complete, make_M1, make_M2, make_M3_fourpart
from f33turan.hypergraph import HypergraphError, ThreeGraph
from f33turan.link import (
    ColoredMultigraph,
    Multigraph,
    build_link,
    find_common_color_triangle,
    find_isomorphism,
    format_multigraph,
    high_multiplicity_graph,
    max_triple_sum,
    parse_multigraph,
    weighted_incidence,
)
from f33turan.patterns import contains_F33


class TestMultigraph:
    def test_cap_enforced(self):
        with pytest.raises(HypergraphError):
            Multigraph(3, {(0, 1): 5})

    def test_zero_weights_dropped(self):
        m = Multigraph(3, {(1, 0): 2, (1, 2): 0})
        assert m.weights == {(0, 1): 2}
        assert m.total == 2

    def test_text_format(self):
        m = Multigraph(4, {(2, 3): 1, (0, 1): 4})
        assert format_multigraph(m) == "4\n0 1 4\n2 3 1\n"
        assert parse_multigraph(format_multigraph(m)) == m

    def test_text_format_rejects_unsorted(self):
        with pytest.raises(HypergraphError):
            parse_multigraph("4\n2 3 1\n0 1 4\n")


class TestBuildLink:
    @pytest.mark.parametrize("n", [8, 9, 12])
    def test_bipartite_link_is_m1(self, n):
        a = n // 2
        link = build_link(make_bipartite_B(n), {0, a, 1, a + 1}).multigraph()
        assert find_isomorphism(link, make_M1(n - 4)) is not None

    def test_empty_host(self):
        c = build_link(ThreeGraph(7), {0, 1, 2, 3})
        assert c.multigraph().total == 0

    def test_k6_four_set(self):
        c = build_link(make_complete(6), {0, 2, 3, 5})
        assert c.n == 2
        assert c.colors_of(0, 1) == {0, 2, 3, 5}
        assert c.multigraph().w(0, 1) == 4

    def test_needs_apex(self):
        with pytest.raises(HypergraphError):
            build_link(make_complete(5), set())

    def test_json_roundtrip(self):
        c = build_link(make_bipartite_B(9), {0, 1, 5, 6})
        data = c.to_json()
        assert [(p["u"], p["v"]) for p in data["pairs"]] == sorted((p["u"], p["v"]) for p in data["pairs"])
        assert ColoredMultigraph.from_json(data) == c


class TestWeightedIncidence:
    def test_m1_degree(self):
        assert weighted_incidence(make_M1(6), {3}) == 16

    def test_empty_set(self):
        assert weighted_incidence(make_M2(5), set()) == 0

    def test_m2_pair(self):
        assert weighted_incidence(make_M2(4), {0, 1}) == 16


class TestMaxTripleSum:
    def test_m1_8(self):
        assert max_triple_sum(make_M1(8))[0] == 10

    def test_zero(self):
        assert max_triple_sum(Multigraph(5)) == (0, (0, 1, 2))

    def test_m3_8(self):
        assert max_triple_sum(make_M3_fourpart(8))[0] == 10

    def test_small(self):
        with pytest.raises(HypergraphError):
            max_triple_sum(Multigraph(2))


class TestCommonColorTriangle:
    def test_free_host_has_none(self):
        g = make_bipartite_B(10)
        link = build_link(g, {0, 1, 5, 6})
        assert find_common_color_triangle(link, 3) is None

    def test_complete_host(self):
        tri, cols = find_common_color_triangle(build_link(make_complete(7), {0, 1, 2, 3}), 3)
        assert tri == (0, 1, 2)
        assert len(cols) == 3

    def test_empty(self):
        assert find_common_color_triangle(ColoredMultigraph(4, (9,)), 1) is None

    def test_planted_violation_gives_f33(self):
        # B(10) plus the three xyz-pairs with a common color set from the K4
        g = make_bipartite_B(10)
        k4 = (0, 1, 5, 6)
        rest = [v for v in range(10) if v not in k4]
        x, y, z = rest[0], rest[1], rest[2]  # all in part A, so inside-part pairs
        extra = [(a, p, q) for a in (0, 1, 5) for p, q in combinations((x, y, z), 2)]
        g2 = g.with_edges(extra)
        link = build_link(g2, k4)
        tri = find_common_color_triangle(link, 3)
        assert tri is not None
        assert contains_F33(g2) is not None


def test_high_multiplicity():
    # K4 {0,1,3,4} in B(6); the remaining pair {2,5} carries all four colors
    c = build_link(make_bipartite_B(6), {0, 1, 3, 4})
    j = high_multiplicity_graph(c, 3)
    assert j.pairs == {(0, 1)}
    assert j.clique_number() == 2
    assert len(high_multiplicity_graph(c, 0)) == 1
    assert len(high_multiplicity_graph(c, 5)) == 0


def test_high_multiplicity_threshold_zero_is_complete():
    c = build_link(make_bipartite_B(9), {0, 1, 5, 6})
    assert len(high_multiplicity_graph(c, 0)) == 10


class TestIsomorphism:
    def test_relabel(self):
        m = make_M3_fourpart(9)
        perm = [4, 8, 0, 2, 7, 1, 3, 6, 5]
        p = find_isomorphism(m, m.relabel(perm))
        assert p is not None
        assert m.relabel(p) == m.relabel(perm)

    def test_m1_m2_differ(self):
        assert find_isomorphism(make_M1(6), make_M2(6)) is None


@settings(max_examples=100, deadline=None)
@given(three_graphs(min_n=1, max_n=9), st.data())
def test_link_total_counts_edges_meeting_s_once(g, data):
    s = data.draw(st.sets(st.integers(0, g.n - 1), min_size=1, max_size=min(g.n, 8)))
    once = sum(1 for e in g.edges if len(s.intersection(e)) == 1)
    assert build_link(g, s).multigraph().total == once


def test_free_host_k4_links_obey_triple_cap():
    rng = random.Random(3)
    checked = 0
    for _ in range(60):
        n = rng.randint(6, 12)
        g = ThreeGraph(n, make_bipartite_B(n).bits & random_graph(rng, n, 0.8).bits)
        for s in combinations(range(n), 4):
            if all(g.has_edge(*t) for t in combinations(s, 3)):
                c = build_link(g, s)
                assert find_common_color_triangle(c, 3) is None
                if c.n >= 3:
                    assert max_triple_sum(c.multigraph())[0] <= 10
                checked += 1
    assert checked > 50
