"""Containment of small fixed patterns (F33, complete K^3_t) in a host 3-graph,
plus t-connected pairs and t-triples."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .constructions import make_complete, make_F33
from .hypergraph import ThreeGraph, Triple


@dataclass(frozen=True)
class Pattern:
    """A small 3-graph to search for.

    ``orbits`` lists vertex classes whose members may be permuted freely
    without changing the pattern (the full symmetric group on each class must
    lie in the automorphism group). Members of a class are forced onto
    increasing host vertices.
    """

    graph: ThreeGraph
    orbits: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        if self.graph.n > 8:
            raise ValueError("patterns are limited to 8 vertices")
        seen = [v for cls in self.orbits for v in cls]
        if len(seen) != len(set(seen)) or not set(seen) <= set(range(self.graph.n)):
            raise ValueError("orbit classes must be disjoint sets of pattern vertices")
        if self.orbits and set(seen) != set(range(self.graph.n)):
            raise ValueError("orbit classes must partition the pattern vertices")


def f33_pattern() -> Pattern:
    return Pattern(make_F33(), ((0, 1, 2), (3, 4, 5)))


def complete_pattern(t: int) -> Pattern:
    return Pattern(make_complete(t), (tuple(range(t)),))


@dataclass(frozen=True)
class Witness:
    """image[i] is the host vertex that pattern vertex i maps to."""

    image: tuple[int, ...]

    def to_json(self) -> list[int]:
        return list(self.image)


def verify_witness(host: ThreeGraph, pattern: ThreeGraph, w: Witness) -> bool:
    img = w.image
    if len(img) != pattern.n or len(set(img)) != len(img):
        return False
    if any(not 0 <= v < host.n for v in img):
        return False
    return all(host.has_edge(img[u], img[v], img[x]) for u, v, x in pattern.edges)


def _f33_scan(g: ThreeGraph, edges: Sequence[Triple]) -> Witness | None:
    rows = g.codegree_rows
    n = g.n
    for a, b, c in edges:
        ra, rb, rc = rows[a], rows[b], rows[c]
        outside = ~((1 << a) | (1 << b) | (1 << c))
        common = [0] * n
        for x in range(n):
            common[x] = ra[x] & rb[x] & rc[x] & outside
        for x in range(n):
            later = common[x] >> (x + 1) << (x + 1)
            while later:
                low = later & -later
                later ^= low
                y = low.bit_length() - 1
                third = common[x] & common[y] >> (y + 1) << (y + 1)
                if third:
                    z = (third & -third).bit_length() - 1
                    return Witness((a, b, c, x, y, z))
    return None


def contains_F33(g: ThreeGraph, workers: int = 1) -> Witness | None:
    """Witness (a, b, c, x, y, z) of an F33 copy in g, or None.

    For each edge abc the common link G(a) & G(b) & G(c) off abc is a simple
    graph; an F33 through abc is exactly a triangle xyz in it. The witness is
    the lexicographically first one (edges in ascending order, then x < y < z),
    whatever the worker count.
    """
    edges = g.edges
    if workers <= 1 or len(edges) < 64:
        return _f33_scan(g, edges)
    size = -(-len(edges) // workers)
    chunks = [edges[i : i + size] for i in range(0, len(edges), size)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(_f33_scan, [g] * len(chunks), chunks))
    return next((r for r in results if r is not None), None)


def _search_order(p: ThreeGraph) -> list[int]:
    deg = p.degrees
    order: list[int] = []
    left = set(range(p.n))
    while left:
        placed = set(order)

        def key(v):
            links = sum(1 for e in p.edges if v in e and len(placed.intersection(e)) == 2)
            return (-links, -deg[v], v)

        v = min(left, key=key)
        order.append(v)
        left.remove(v)
    return order


def contains_pattern(g: ThreeGraph, pattern: Pattern) -> Witness | None:
    """Generic backtracking search for a (non-induced) copy of the pattern."""
    p = pattern.graph
    if p.n > g.n:
        return None
    if p.num_edges == 0:
        return Witness(tuple(range(p.n)))
    order = _search_order(p)
    pos = {v: i for i, v in enumerate(order)}
    # edges to check once order[i] is placed: those whose last-placed vertex is it
    closing: list[list[Triple]] = [[] for _ in order]
    for e in p.edges:
        closing[max(pos[v] for v in e)].append(e)
    # symmetry breaking: within a class, images increase along the search order
    prev_in_class: dict[int, int] = {}
    for cls in pattern.orbits:
        members = sorted(cls, key=pos.__getitem__)
        for before, after in zip(members, members[1:]):
            prev_in_class[after] = before
    pdeg, hdeg = p.degrees, g.degrees
    image = [-1] * p.n
    used = [False] * g.n

    def place(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        low = image[prev_in_class[v]] + 1 if v in prev_in_class else 0
        for h in range(low, g.n):
            if used[h] or hdeg[h] < pdeg[v]:
                continue
            image[v] = h
            if all(g.has_edge(image[a], image[b], image[c]) for a, b, c in closing[i]):
                used[h] = True
                if place(i + 1):
                    return True
                used[h] = False
        image[v] = -1
        return False

    return Witness(tuple(image)) if place(0) else None


def find_dense_four_set(g: ThreeGraph) -> tuple[int, int, int, int] | None:
    """A 4-set spanning all four of its triples, or None if g has no K^3_4."""
    rows = g.codegree_rows
    for a, b, c in g.edges:
        d = rows[a][b] & rows[a][c] & rows[b][c]
        if d:
            return tuple(sorted((a, b, c, (d & -d).bit_length() - 1)))
    return None


def is_t_connected(g: ThreeGraph, x: int, y: int) -> tuple[int, int, int] | None:
    """Some {a, b, c} off {x, y} with every (pair of abc) + (one of x, y) an edge."""
    if x == y:
        raise ValueError("x and y must differ")
    others = [v for v in range(g.n) if v not in (x, y)]
    for abc in combinations(others, 3):
        if all(g.has_edge(u, v, t) for u, v in combinations(abc, 2) for t in (x, y)):
            return abc
    return None


def find_t_triple(g: ThreeGraph):
    """An edge xyz whose three pairs are all t-connected, with the three witnesses.

    Returns ((x, y, z), {(x, y): abc, (x, z): abc, (y, z): abc}) or None.
    """
    cache: dict[tuple[int, int], tuple[int, int, int] | None] = {}

    def connected(u, v):
        if (u, v) not in cache:
            cache[(u, v)] = is_t_connected(g, u, v)
        return cache[(u, v)]

    for e in g.edges:
        found = {}
        for u, v in combinations(e, 2):
            w = connected(u, v)
            if w is None:
                break
            found[(u, v)] = w
        else:
            return e, found
    return None
