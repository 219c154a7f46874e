"""Exact Turán computations for the 3-graph F33 and the link-multigraph lemma."""

from .constructions import (
    check_identities,
    count_b,
    count_m,
    make_bipartite_B,
    make_complete,
    make_F33,
    make_M1,
    make_M2,
    make_M3_fourpart,
)
from .hypergraph import (
    PairGraph,
    ThreeGraph,
    delete_vertices,
    density,
    incident_count,
    parse_edge_list,
    format_edge_list,
    restrict_pairs,
    vertex_link,
)
from .lemma import LemmaSearchConfig, max_feasible_edges, sample_feasible, verify_feasible
from .link import ColoredMultigraph, Multigraph, build_link, max_triple_sum
from .patterns import contains_F33, contains_pattern, find_t_triple
from .turan import audit_certificate, enumerate_copies, enumerate_extremal, exact_turan

__all__ = [name for name in dir() if not name.startswith("_")]
