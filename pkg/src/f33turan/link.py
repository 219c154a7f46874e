"""Link multigraphs and the structural checks run on them."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Mapping

from .hypergraph import HypergraphError, Pair, PairGraph, ThreeGraph, Triple, _check_vertices

DEFAULT_CAP = 4
MAX_APEXES = 8


def _canon(u: int, v: int) -> Pair:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True, eq=True)
class Multigraph:
    """Integer pair multiplicities on vertices 0..n-1; zero weights are not stored."""

    n: int
    weights: Mapping[Pair, int] = field(default_factory=dict)
    cap: int = DEFAULT_CAP

    def __post_init__(self):
        clean = {}
        for (u, v), w in self.weights.items():
            if u == v or not (0 <= u < self.n and 0 <= v < self.n):
                raise HypergraphError(f"bad pair {(u, v)} for n={self.n}")
            if not 0 <= w <= self.cap:
                raise HypergraphError(f"weight {w} on {(u, v)} outside [0, {self.cap}]")
            if w:
                clean[_canon(u, v)] = w
        object.__setattr__(self, "weights", clean)

    @classmethod
    def from_function(cls, n: int, weight, cap: int = DEFAULT_CAP) -> Multigraph:
        return cls(n, {(u, v): weight(u, v) for u, v in combinations(range(n), 2)}, cap)

    def w(self, u: int, v: int) -> int:
        return self.weights.get(_canon(u, v), 0)

    @property
    def total(self) -> int:
        """e(M): the sum of all multiplicities."""
        return sum(self.weights.values())

    def matrix(self) -> list[list[int]]:
        mat = [[0] * self.n for _ in range(self.n)]
        for (u, v), w in self.weights.items():
            mat[u][v] = mat[v][u] = w
        return mat

    def weighted_degree(self, x: int) -> int:
        return sum(w for p, w in self.weights.items() if x in p)

    def relabel(self, perm: Iterable[int]) -> Multigraph:
        p = tuple(perm)
        return Multigraph(self.n, {_canon(p[u], p[v]): w for (u, v), w in self.weights.items()}, self.cap)

    def delete_vertices(self, s: Iterable[int]) -> Multigraph:
        gone = _check_vertices(self.n, s)
        new = {v: i for i, v in enumerate(v for v in range(self.n) if v not in gone)}
        kept = {(new[u], new[v]): w for (u, v), w in self.weights.items() if u in new and v in new}
        return Multigraph(self.n - len(gone), kept, self.cap)


@dataclass(frozen=True)
class ColoredMultigraph:
    """Each pair of X carries the set of apexes a with axy an edge of the host."""

    n: int
    apexes: tuple[int, ...]
    colors: Mapping[Pair, frozenset[int]] = field(default_factory=dict)

    def __post_init__(self):
        if len(self.apexes) > MAX_APEXES:
            raise HypergraphError(f"at most {MAX_APEXES} apexes supported")
        allowed = set(self.apexes)
        for (u, v), cs in self.colors.items():
            if not 0 <= u < v < self.n:
                raise HypergraphError(f"bad pair {(u, v)}")
            if not cs <= allowed:
                raise HypergraphError(f"colors {sorted(cs)} not among apexes")

    def colors_of(self, u: int, v: int) -> frozenset[int]:
        return self.colors.get(_canon(u, v), frozenset())

    def multigraph(self) -> Multigraph:
        return Multigraph(self.n, {p: len(c) for p, c in self.colors.items()}, cap=max(len(self.apexes), 0))

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "apexes": list(self.apexes),
            "pairs": [
                {"u": u, "v": v, "colors": sorted(cs)}
                for (u, v), cs in sorted(self.colors.items())
                if cs
            ],
        }

    @classmethod
    def from_json(cls, data: dict | str) -> ColoredMultigraph:
        if isinstance(data, str):
            data = json.loads(data)
        colors = {_canon(p["u"], p["v"]): frozenset(p["colors"]) for p in data["pairs"]}
        return cls(data["n"], tuple(data["apexes"]), colors)


def build_link(g: ThreeGraph, s: Iterable[int]) -> ColoredMultigraph:
    apexes = tuple(sorted(_check_vertices(g.n, s)))
    if not apexes:
        raise HypergraphError("link needs at least one apex vertex")
    apex_set = set(apexes)
    rest = [v for v in range(g.n) if v not in apex_set]
    new = {v: i for i, v in enumerate(rest)}
    colors: dict[Pair, set[int]] = {}
    for e in g.edges:
        inside = [v for v in e if v in apex_set]
        if len(inside) != 1:
            continue
        x, y = (new[v] for v in e if v not in apex_set)
        colors.setdefault(_canon(x, y), set()).add(inside[0])
    return ColoredMultigraph(len(rest), apexes, {p: frozenset(c) for p, c in colors.items()})


def weighted_incidence(m: Multigraph, s: Iterable[int]) -> int:
    hit = _check_vertices(m.n, s)
    return sum(w for (u, v), w in m.weights.items() if u in hit or v in hit)


def max_triple_sum(m: Multigraph) -> tuple[int, Triple]:
    if m.n < 3:
        raise HypergraphError(f"no triples on {m.n} vertices")
    mat = m.matrix()
    best, arg = -1, (0, 1, 2)
    for x, y, z in combinations(range(m.n), 3):
        t = mat[x][y] + mat[x][z] + mat[y][z]
        if t > best:
            best, arg = t, (x, y, z)
    return best, arg


def find_common_color_triangle(c: ColoredMultigraph, k: int) -> tuple[Triple, frozenset[int]] | None:
    """A triangle whose three pairs share k common colors, or None."""
    if k < 1:
        raise ValueError("k must be at least 1")
    support = {p: cs for p, cs in c.colors.items() if len(cs) >= k}
    later: dict[int, set[int]] = {}
    for u, v in support:
        later.setdefault(u, set()).add(v)
    for (x, y), cxy in sorted(support.items()):
        for z in sorted(later.get(x, set()) & later.get(y, set())):
            common = cxy & support[(x, z)] & support[(y, z)]
            if len(common) >= k:
                return (x, y, z), frozenset(sorted(common)[:k])
    return None


def high_multiplicity_graph(c: ColoredMultigraph, threshold: int) -> PairGraph:
    if threshold < 0:
        raise ValueError("threshold must be nonnegative")
    return PairGraph(
        c.n,
        frozenset(p for p in combinations(range(c.n), 2) if len(c.colors_of(*p)) >= threshold),
    )


def _weight_profile(mat: list[list[int]], v: int) -> tuple[int, ...]:
    return tuple(sorted((mat[v][u] for u in range(len(mat)) if u != v), reverse=True))


def find_isomorphism(a: Multigraph, b: Multigraph) -> tuple[int, ...] | None:
    """A vertex map p with b.w(p[u], p[v]) == a.w(u, v) for all pairs.

    Plain backtracking, candidates filtered by the sorted incident-weight
    profile. Meant for n up to about 16.
    """
    if a.n != b.n or a.total != b.total:
        return None
    n = a.n
    ma, mb = a.matrix(), b.matrix()
    pa = [_weight_profile(ma, v) for v in range(n)]
    pb = [_weight_profile(mb, v) for v in range(n)]
    if sorted(pa) != sorted(pb):
        return None
    # most constrained first: rarest profile
    order = sorted(range(n), key=lambda v: (pb.count(pa[v]), v))
    image = [-1] * n
    used = [False] * n

    def place(i: int) -> bool:
        if i == n:
            return True
        v = order[i]
        for t in range(n):
            if used[t] or pb[t] != pa[v]:
                continue
            if any(ma[v][order[j]] != mb[t][image[order[j]]] for j in range(i)):
                continue
            image[v], used[t] = t, True
            if place(i + 1):
                return True
            image[v], used[t] = -1, False
        return False

    return tuple(image) if place(0) else None


# multigraph text format: first line n, then "u v w" per nonzero pair


def format_multigraph(m: Multigraph) -> str:
    lines = [str(m.n)]
    lines.extend(f"{u} {v} {w}" for (u, v), w in sorted(m.weights.items()))
    return "\n".join(lines) + "\n"


def parse_multigraph(text: str, cap: int = DEFAULT_CAP) -> Multigraph:
    lines = [ln for ln in text.split("\n") if ln.strip()]
    if not lines:
        raise HypergraphError("empty multigraph file")
    n = int(lines[0])
    weights: dict[Pair, int] = {}
    prev = None
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 3:
            raise HypergraphError(f"bad multigraph line {ln!r}")
        u, v, w = (int(t) for t in parts)
        if not u < v or (prev is not None and (u, v) <= prev) or w <= 0:
            raise HypergraphError(f"non-canonical multigraph line {ln!r}")
        prev = (u, v)
        weights[(u, v)] = w
    return Multigraph(n, weights, cap)
