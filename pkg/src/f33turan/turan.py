"""Exact ex(n, F33) at small n.

Every labelled F33 copy inside K^3_n is listed as a 10-edge bitmask. A
3-graph on n vertices is F33-free exactly when its set of missing triples
meets every copy, so ex(n) = C(n,3) - (minimum hitting set). The hitting set
is found by branch-and-bound.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, permutations
from math import comb

from .constructions import count_b, make_complete
from .hypergraph import ThreeGraph, iter_bits, triple_rank
from .patterns import contains_F33


@dataclass(frozen=True)
class CopyCatalog:
    n: int
    copies: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.copies)

    def hit_by(self, deleted: int) -> bool:
        return all(c & deleted for c in self.copies)


def enumerate_copies(n: int) -> CopyCatalog:
    seen: set[int] = set()
    copies: list[int] = []
    for six in combinations(range(n), 6):
        for xyz in combinations(six, 3):
            abc = tuple(v for v in six if v not in xyz)
            mask = 1 << triple_rank(*abc)
            for a in abc:
                for y, z in combinations(xyz, 2):
                    mask |= 1 << triple_rank(a, y, z)
            if mask not in seen:
                seen.add(mask)
                copies.append(mask)
    return CopyCatalog(n, tuple(copies))


def packing_lower_bound(copies, deleted: int = 0, kept: int = 0) -> int:
    """Greedy count of unhit copies with pairwise disjoint deletable edges.

    Each such copy needs its own deletion, so the count is a lower bound on
    the deletions still required.
    """
    pending = sorted(
        ((c & ~kept).bit_count(), c & ~kept) for c in copies if not c & deleted
    )
    used = 0
    count = 0
    for _, free in pending:
        if not free & used:
            used |= free
            count += 1
    return count


def greedy_hitting_set(copies) -> int:
    deleted = 0
    unhit = [c for c in copies]
    while unhit:
        score: dict[int, int] = {}
        for c in unhit:
            for r in iter_bits(c):
                score[r] = score.get(r, 0) + 1
        r = min(score, key=lambda t: (-score[t], t))
        deleted |= 1 << r
        unhit = [c for c in unhit if not c >> r & 1]
    return deleted


class _HittingSearch:
    def __init__(self, copies, node_limit: int | None, enumerate_size: int | None = None):
        self.copies = copies
        self.node_limit = node_limit
        self.nodes = 0
        self.truncated = False
        self.enumerate_size = enumerate_size
        self.solutions: list[int] = []
        if enumerate_size is None:
            self.best = greedy_hitting_set(copies)
            self.best_size = self.best.bit_count()
        else:
            self.best, self.best_size = None, enumerate_size

    def run(self, deleted: int = 0, kept: int = 0, size: int = 0) -> None:
        if self.truncated:
            return
        self.nodes += 1
        if self.node_limit is not None and self.nodes > self.node_limit:
            self.truncated = True
            return
        unhit = [c for c in self.copies if not c & deleted]
        if not unhit:
            if self.enumerate_size is None:
                if size < self.best_size:
                    self.best, self.best_size = deleted, size
            elif size == self.enumerate_size:
                self.solutions.append(deleted)
            return
        lb = size + packing_lower_bound(unhit, 0, kept)
        if lb > self.best_size or (self.enumerate_size is None and lb >= self.best_size):
            return
        # fail-first: fewest deletable edges, ties to the smallest mask
        target = min(unhit, key=lambda c: ((c & ~kept).bit_count(), c))
        free = target & ~kept
        if not free:
            return
        for r in iter_bits(free):
            bit = 1 << r
            self.run(deleted | bit, kept, size + 1)
            kept |= bit
            if self.truncated:
                return


@dataclass(frozen=True)
class TuranCertificate:
    n: int
    optimum: int
    witness: ThreeGraph
    proven_exhaustive: bool
    nodes_explored: int

    @property
    def theorem_value(self) -> int:
        return 10 if self.n == 5 else count_b(self.n)

    @property
    def matches_theorem(self) -> bool:
        return self.optimum == self.theorem_value

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "optimum": self.optimum,
            "b_n": count_b(self.n),
            "matches_theorem": self.matches_theorem,
            "witness": [list(e) for e in self.witness.edges],
            "proven_exhaustive": self.proven_exhaustive,
            "nodes_explored": self.nodes_explored,
        }


class SolverAuditError(RuntimeError):
    pass


def exact_turan(n: int, node_limit: int | None = None) -> TuranCertificate:
    if n < 1:
        raise ValueError("n must be at least 1")
    catalog = enumerate_copies(n)
    search = _HittingSearch(catalog.copies, node_limit)
    search.run()
    full = make_complete(n)
    witness = ThreeGraph(n, full.bits & ~search.best)
    if contains_F33(witness) is not None:
        raise SolverAuditError(f"solver witness at n={n} contains F33")
    return TuranCertificate(n, witness.num_edges, witness, not search.truncated, search.nodes)


def _triple_maps(n: int):
    ranks = {t: triple_rank(*t) for t in combinations(range(n), 3)}
    for sigma in permutations(range(n)):
        yield {r: triple_rank(sigma[u], sigma[v], sigma[w]) for (u, v, w), r in ranks.items()}


def canonical_key(g: ThreeGraph) -> tuple[int, ...]:
    """Isomorphism invariant by brute force over all n! relabelings."""
    return _canonical_of_mask(g.n, g.bits, list(_triple_maps(g.n)))


def _canonical_of_mask(n: int, mask: int, maps) -> tuple[int, ...]:
    ranks = list(iter_bits(mask))
    return min(tuple(sorted(m[r] for r in ranks)) for m in maps)


def enumerate_extremal(n: int) -> list[ThreeGraph]:
    """All F33-free 3-graphs on n vertices with ex(n) edges, one per
    isomorphism class, sorted by canonical key."""
    if n > 7:
        raise ValueError("extremal enumeration is limited to n <= 7")
    cert = exact_turan(n)
    catalog = enumerate_copies(n)
    need = comb(n, 3) - cert.optimum
    search = _HittingSearch(catalog.copies, None, enumerate_size=need)
    search.run()
    maps = list(_triple_maps(n))
    classes: dict[tuple[int, ...], int] = {}
    for deleted in search.solutions:
        key = _canonical_of_mask(n, deleted, maps)
        classes.setdefault(key, deleted)
    full = (1 << comb(n, 3)) - 1
    return [ThreeGraph(n, full & ~classes[k]) for k in sorted(classes)]


def is_isomorphic(g: ThreeGraph, h: ThreeGraph) -> bool:
    if g.n != h.n or g.num_edges != h.num_edges or sorted(g.degrees) != sorted(h.degrees):
        return False
    return canonical_key(g) == canonical_key(h)


@dataclass
class AuditResult:
    ok: bool
    reason: str = "ok"
    details: dict = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.ok


def audit_certificate(c: TuranCertificate) -> AuditResult:
    """Re-check a certificate without trusting the solver."""
    if c.witness.n != c.n:
        return AuditResult(False, "witness-size-mismatch")
    if c.witness.num_edges != c.optimum:
        return AuditResult(False, "edge-count-mismatch", {"edges": c.witness.num_edges})
    w = contains_F33(c.witness)
    if w is not None:
        return AuditResult(False, "witness-contains-f33", {"copy": list(w.image)})
    floor = 10 if c.n == 5 else count_b(c.n)
    if c.optimum < floor:
        return AuditResult(False, "below-lower-bound", {"lower_bound": floor})
    return AuditResult(True)
