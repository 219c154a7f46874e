"""3-uniform hypergraphs on vertices 0..n-1.

Edges live in a dense universe: the triple u < v < w has colex rank
C(w,3) + C(v,2) + u, and a graph is an integer bitmask over ranks. Colex
ranks do not depend on n, so a graph on n vertices is also a valid bitmask
for any larger vertex count.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import combinations
from math import comb
from typing import Iterable, Iterator

Triple = tuple[int, int, int]
Pair = tuple[int, int]


class HypergraphError(ValueError):
    """Malformed graph input or an out-of-range vertex."""


class UndefinedDensityError(HypergraphError):
    pass


def triple_rank(u: int, v: int, w: int) -> int:
    if not u < v < w:
        u, v, w = sorted((u, v, w))
    return comb(w, 3) + comb(v, 2) + u


def pair_rank(u: int, v: int) -> int:
    if u > v:
        u, v = v, u
    return comb(v, 2) + u


def triple_unrank(r: int) -> Triple:
    w = 2
    while comb(w + 1, 3) <= r:
        w += 1
    r -= comb(w, 3)
    v = 1
    while comb(v + 1, 2) <= r:
        v += 1
    return (r - comb(v, 2), v, w)


@lru_cache(maxsize=32)
def colex_triples(n: int) -> tuple[Triple, ...]:
    """All triples on n vertices, indexed by colex rank."""
    return tuple((u, v, w) for w in range(n) for v in range(w) for u in range(v))


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _check_vertices(n: int, vertices: Iterable[int]) -> frozenset[int]:
    s = frozenset(vertices)
    for v in s:
        if not 0 <= v < n:
            raise HypergraphError(f"vertex {v} out of range for n={n}")
    return s


@dataclass(frozen=True)
class ThreeGraph:
    n: int
    bits: int = 0

    def __post_init__(self):
        if self.n < 0:
            raise HypergraphError("vertex count must be nonnegative")
        if self.bits < 0 or self.bits.bit_length() > comb(self.n, 3):
            raise HypergraphError("edge mask references triples outside the vertex range")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Iterable[int]]) -> ThreeGraph:
        bits = 0
        for e in edges:
            t = tuple(e)
            if len(t) != 3 or len(set(t)) != 3:
                raise HypergraphError(f"not a triple of distinct vertices: {t}")
            _check_vertices(n, t)
            bits |= 1 << triple_rank(*t)
        return cls(n, bits)

    @cached_property
    def edges(self) -> tuple[Triple, ...]:
        """Edges in ascending lexicographic order."""
        table = colex_triples(self.n)
        flags = bin(self.bits)[:1:-1]
        return tuple(sorted(table[i] for i, f in enumerate(flags) if f == "1"))

    @property
    def num_edges(self) -> int:
        return self.bits.bit_count()

    def __len__(self) -> int:
        return self.num_edges

    def has_edge(self, u: int, v: int, w: int) -> bool:
        if len({u, v, w}) != 3:
            return False
        return bool(self.bits >> triple_rank(u, v, w) & 1)

    @cached_property
    def codegree_rows(self) -> tuple[tuple[int, ...], ...]:
        """rows[a][x] is a vertex bitmask of all y with axy an edge."""
        rows = [[0] * self.n for _ in range(self.n)]
        for u, v, w in self.edges:
            rows[u][v] |= 1 << w
            rows[u][w] |= 1 << v
            rows[v][u] |= 1 << w
            rows[v][w] |= 1 << u
            rows[w][u] |= 1 << v
            rows[w][v] |= 1 << u
        return tuple(tuple(r) for r in rows)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        deg = [0] * self.n
        for e in self.edges:
            for v in e:
                deg[v] += 1
        return tuple(deg)

    def with_edges(self, edges: Iterable[Iterable[int]]) -> ThreeGraph:
        return ThreeGraph(self.n, self.bits | ThreeGraph.from_edges(self.n, edges).bits)

    def without_edges(self, edges: Iterable[Iterable[int]]) -> ThreeGraph:
        return ThreeGraph(self.n, self.bits & ~ThreeGraph.from_edges(self.n, edges).bits)

    def relabel(self, perm: Iterable[int]) -> ThreeGraph:
        """Image under the vertex map v -> perm[v]."""
        p = tuple(perm)
        return ThreeGraph.from_edges(self.n, ((p[u], p[v], p[w]) for u, v, w in self.edges))

    def is_subgraph_of(self, other: ThreeGraph) -> bool:
        return self.n <= other.n and self.bits & ~other.bits == 0


@dataclass(frozen=True)
class PairGraph:
    n: int
    pairs: frozenset[Pair] = field(default_factory=frozenset)

    def __post_init__(self):
        for u, v in self.pairs:
            if not 0 <= u < v < self.n:
                raise HypergraphError(f"non-canonical or out-of-range pair {(u, v)}")

    @classmethod
    def complete(cls, n: int) -> PairGraph:
        return cls(n, frozenset(combinations(range(n), 2)))

    def __len__(self) -> int:
        return len(self.pairs)

    def sorted_pairs(self) -> list[Pair]:
        return sorted(self.pairs)

    def adjacency(self) -> list[int]:
        rows = [0] * self.n
        for u, v in self.pairs:
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return rows

    def clique_number(self) -> int:
        rows = self.adjacency()
        best = 1 if self.n else 0

        def extend(size: int, cand: int) -> None:
            nonlocal best
            if size > best:
                best = size
            if size + cand.bit_count() <= best:
                return
            while cand:
                v = cand.bit_length() - 1
                cand &= ~(1 << v)
                extend(size + 1, cand & rows[v])
                if size + cand.bit_count() <= best:
                    return

        extend(0, (1 << self.n) - 1)
        return best


def density(g: ThreeGraph) -> Fraction:
    if g.n < 3:
        raise UndefinedDensityError(f"density undefined for n={g.n} < 3")
    return Fraction(g.num_edges, comb(g.n, 3))


def _relabel_map(n: int, removed: frozenset[int]) -> dict[int, int]:
    return {v: i for i, v in enumerate(v for v in range(n) if v not in removed)}


def delete_vertices(g: ThreeGraph, s: Iterable[int]) -> ThreeGraph:
    removed = _check_vertices(g.n, s)
    if not removed:
        return g
    new = _relabel_map(g.n, removed)
    kept = (
        (new[u], new[v], new[w])
        for u, v, w in g.edges
        if u not in removed and v not in removed and w not in removed
    )
    return ThreeGraph.from_edges(g.n - len(removed), kept)


def induced(g: ThreeGraph, keep: Iterable[int]) -> ThreeGraph:
    k = _check_vertices(g.n, keep)
    return delete_vertices(g, set(range(g.n)) - k)


def incident_count(g: ThreeGraph, s: Iterable[int]) -> int:
    hit = _check_vertices(g.n, s)
    return sum(1 for e in g.edges if hit.intersection(e))


def vertex_link(g: ThreeGraph, a: int) -> PairGraph:
    _check_vertices(g.n, (a,))
    pairs = set()
    for e in g.edges:
        if a in e:
            x, y = (v for v in e if v != a)
            pairs.add((x, y))
    return PairGraph(g.n, frozenset(pairs))


def restrict_pairs(p: PairGraph, x: Iterable[int]) -> PairGraph:
    keep = _check_vertices(p.n, x)
    new = {v: i for i, v in enumerate(sorted(keep))}
    pairs = frozenset((new[u], new[v]) for u, v in p.pairs if u in keep and v in keep)
    return PairGraph(len(keep), pairs)


# edge-list text format: "n m" header, then m lines "u v w", ascending


def format_edge_list(g: ThreeGraph) -> str:
    lines = [f"{g.n} {g.num_edges}"]
    lines.extend(f"{u} {v} {w}" for u, v, w in g.edges)
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> ThreeGraph:
    if "\r" in text:
        raise HypergraphError("edge list must use LF line endings")
    lines = [ln for ln in text.split("\n") if ln.strip()]
    if not lines:
        raise HypergraphError("empty edge list")
    try:
        header = [int(t) for t in lines[0].split()]
    except ValueError as exc:
        raise HypergraphError(f"bad header: {lines[0]!r}") from exc
    if len(header) != 2:
        raise HypergraphError(f"header must be 'n m', got {lines[0]!r}")
    n, m = header
    if len(lines) - 1 != m:
        raise HypergraphError(f"header declares {m} edges, found {len(lines) - 1}")
    bits = 0
    for ln in lines[1:]:
        try:
            t = tuple(int(tok) for tok in ln.split())
        except ValueError as exc:
            raise HypergraphError(f"bad edge line: {ln!r}") from exc
        if len(t) != 3:
            raise HypergraphError(f"edge line needs 3 vertices: {ln!r}")
        u, v, w = t
        if not 0 <= u < v < w < n:
            raise HypergraphError(f"non-canonical or out-of-range triple: {ln!r}")
        r = triple_rank(u, v, w)
        if bits >> r & 1:
            raise HypergraphError(f"duplicate triple: {ln!r}")
        bits |= 1 << r
    return ThreeGraph(n, bits)
