"""Named 3-graphs and multigraphs, the closed-form counts b(n) and m(n), and
the counting identities that tie them together."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb

from .hypergraph import ThreeGraph, density
from .link import Multigraph

# a, b, c = 0, 1, 2 and x, y, z = 3, 4, 5
F33_ABC = (0, 1, 2)
F33_XYZ = (3, 4, 5)


@dataclass(frozen=True)
class BipartitionSpec:
    n: int

    @property
    def size_a(self) -> int:
        return self.n // 2

    @property
    def size_b(self) -> int:
        return self.n - self.n // 2

    @property
    def part_a(self) -> range:
        return range(self.size_a)

    @property
    def part_b(self) -> range:
        return range(self.size_a, self.n)

    def side(self, v: int) -> int:
        return 0 if v < self.size_a else 1


def make_F33() -> ThreeGraph:
    edges = [F33_ABC]
    edges += [(i, j, k) for i in F33_ABC for j, k in combinations(F33_XYZ, 2)]
    return ThreeGraph.from_edges(6, edges)


def make_complete(n: int) -> ThreeGraph:
    return ThreeGraph(n, (1 << comb(n, 3)) - 1)


def make_bipartite_B(n: int) -> ThreeGraph:
    a = BipartitionSpec(n).size_a
    # colex rank order is (w, v, u) lexicographic; for u < v < w the triple
    # crosses iff u is in part A and w in part B, so each (w, v) run of u
    # values is a block of ones followed by zeros
    chunks = []
    for w in range(n):
        for v in range(w):
            ones = min(v, a) if w >= a else 0
            chunks.append("1" * ones + "0" * (v - ones))
    bitstring = "".join(chunks)
    return ThreeGraph(n, int(bitstring[::-1], 2) if bitstring else 0)


def count_b(n: int) -> int:
    return comb(n, 3) - comb(n // 2, 3) - comb(n - n // 2, 3)


def count_m(n: int) -> int:
    if n % 2 == 0:
        return 3 * n * n // 2 - n
    return (3 * n * n - 1) // 2 - n


def make_M1(n: int) -> Multigraph:
    spec = BipartitionSpec(n)
    return Multigraph.from_function(n, lambda u, v: 4 if spec.side(u) != spec.side(v) else 2)


def make_M2(n: int) -> Multigraph:
    # prefix matching {0,1}, {2,3}, ...; for odd n the last vertex is unmatched
    return Multigraph.from_function(n, lambda u, v: 4 if u // 2 == v // 2 else 3)


def fourpart_sizes(n: int) -> tuple[int, int, int, int]:
    q, r = divmod(n, 4)
    return tuple(q + (1 if i < r else 0) for i in range(4))


def make_M3_fourpart(n: int) -> Multigraph:
    sizes = fourpart_sizes(n)
    part = []
    for p, s in enumerate(sizes):
        part += [p] * s
    # W=0, X=1, Y=2, Z=3; heavy pairs are W-X and Y-Z
    heavy = {frozenset((0, 1)), frozenset((2, 3))}

    def weight(u: int, v: int) -> int:
        pu, pv = part[u], part[v]
        if pu == pv:
            return 2
        return 4 if frozenset((pu, pv)) in heavy else 3

    return Multigraph.from_function(n, weight)


# Structural edge counts for sizes where building the multigraph is too costly.
def m1_edge_count(n: int) -> int:
    a, b = n // 2, n - n // 2
    return 4 * a * b + 2 * (comb(a, 2) + comb(b, 2))


def m2_edge_count(n: int) -> int:
    return 3 * comb(n, 2) + n // 2


def m3_edge_count(n: int) -> int:
    w, x, y, z = fourpart_sizes(n)
    within = 2 * sum(comb(s, 2) for s in (w, x, y, z))
    return within + 4 * (w * x + y * z) + 3 * (w * y + w * z + x * y + x * z)


@dataclass
class IdentityReport:
    n_max: int
    checked: dict[str, int] = field(default_factory=dict)
    failures: dict[str, dict] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, family: str, n: int, **detail) -> None:
        self.failures.setdefault(family, {"n": n, **detail})

    def to_json(self) -> dict:
        return {
            "n_max": self.n_max,
            "passed": self.passed,
            "checked": dict(sorted(self.checked.items())),
            "first_failures": dict(sorted(self.failures.items())),
        }


def check_identities(n_max: int, construct_limit: int = 60) -> IdentityReport:
    """Check the four identity families for every n up to n_max.

    For n <= construct_limit the multigraphs and B(n) are built and summed;
    beyond it the structural part-size counts stand in for the objects.
    """
    if n_max < 5:
        raise ValueError("n_max must be at least 5")
    rep = IdentityReport(n_max)
    for fam in ("b_difference", "m_difference", "m1_m2_equality", "b_density"):
        rep.checked[fam] = 0

    m = [count_m(n) for n in range(n_max + 1)]
    b = [count_b(n) for n in range(n_max + 1)]

    for n in range(4, n_max + 1):
        rep.checked["b_difference"] += 1
        rhs = m[n - 4] + 5 * (n - 4) + 4
        if b[n] - b[n - 4] != rhs:
            rep.fail("b_difference", n, lhs=b[n] - b[n - 4], rhs=rhs)

    for n in range(1, n_max + 1):
        rep.checked["m_difference"] += 1
        want = 3 * (n - 1) + 1 if n % 2 == 0 else 3 * (n - 1)
        if m[n] - m[n - 1] != want:
            rep.fail("m_difference", n, got=m[n] - m[n - 1], want=want)

    for n in range(n_max + 1):
        rep.checked["m1_m2_equality"] += 1
        if n <= construct_limit:
            e1, e2 = make_M1(n).total, make_M2(n).total
        else:
            e1, e2 = m1_edge_count(n), m2_edge_count(n)
        if not e1 == e2 == m[n]:
            rep.fail("m1_m2_equality", n, m1=e1, m2=e2, m=m[n])

    three_quarters = Fraction(3, 4)
    prev = None
    for n in range(3, n_max + 1):
        rep.checked["b_density"] += 1
        if n <= construct_limit:
            d = density(make_bipartite_B(n))
        else:
            d = Fraction(b[n], comb(n, 3))
        if d < three_quarters:
            rep.fail("b_density", n, density=str(d), reason="below 3/4")
        if n >= 4 and d > prev:
            rep.fail("b_density", n, density=str(d), previous=str(prev), reason="increased")
        prev = d
    return rep
