"""Exhaustive maximisation of e(M) over multigraphs with a per-pair cap and a
per-triple cap, by branch-and-bound, plus a sampler of feasible multigraphs."""

from __future__ import annotations

import multiprocessing as mp
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Iterator

from .link import Multigraph


@dataclass(frozen=True)
class LemmaSearchConfig:
    n: int
    pair_cap: int = 4
    triple_cap: int = 10
    symmetry_reduction: bool = True
    node_limit: int | None = None

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be at least 1")
        if self.pair_cap < 0 or self.triple_cap < 0:
            raise ValueError("caps must be nonnegative")


@dataclass(frozen=True)
class LemmaCertificate:
    config: LemmaSearchConfig
    optimum: int
    maximizer: Multigraph
    nodes_explored: int
    proven_exhaustive: bool

    def to_json(self) -> dict:
        return {
            "n": self.config.n,
            "pair_cap": self.config.pair_cap,
            "triple_cap": self.config.triple_cap,
            "symmetry_reduction": self.config.symmetry_reduction,
            "optimum": self.optimum,
            "maximizer": [[u, v, w] for (u, v), w in sorted(self.maximizer.weights.items())],
            "nodes_explored": self.nodes_explored,
            "proven_exhaustive": self.proven_exhaustive,
        }


def verify_feasible(m: Multigraph, cfg: LemmaSearchConfig) -> bool:
    """Direct scan of every pair and every triple; shares nothing with the search."""
    if m.n != cfg.n:
        return False
    mat = m.matrix()
    for u, v in combinations(range(m.n), 2):
        if not 0 <= mat[u][v] <= cfg.pair_cap:
            return False
    for x, y, z in combinations(range(m.n), 3):
        if mat[x][y] + mat[x][z] + mat[y][z] > cfg.triple_cap:
            return False
    return True


class _Search:
    def __init__(self, cfg: LemmaSearchConfig, shared_best=None):
        self.cfg = cfg
        n = cfg.n
        self.pairs = list(combinations(range(n), 2))
        self.index = {p: i for i, p in enumerate(self.pairs)}
        idx = self.index
        # for each pair: (other1, other2) pair indices of every triangle through it
        self.tri_of = [
            [(idx[tuple(sorted((u, z)))], idx[tuple(sorted((v, z)))]) for z in range(n) if z not in (u, v)]
            for u, v in self.pairs
        ]
        self.triples = [(idx[(x, y)], idx[(x, z)], idx[(y, z)]) for x, y, z in combinations(range(n), 3)]
        # row k is complete once pair (k, n-1) is assigned
        self.row_end = {idx[(k, n - 1)]: k for k in range(n - 1)}
        self.stabilisers = {}
        if cfg.symmetry_reduction and n >= 3:
            for pos, k in self.row_end.items():
                self.stabilisers[pos] = self._prefix_maps(k, pos + 1)
        m = len(self.pairs)
        self.w = [0] * m
        self.ub = [cfg.pair_cap] * m
        self.best = -1
        self.best_w: list[int] = [0] * m
        self.nodes = 0
        self.truncated = False
        self.shared_best = shared_best
        self.first_choices: tuple[int, ...] | None = None

    def _prefix_maps(self, k: int, length: int) -> list[list[int]]:
        """Source indices for the first `length` pair slots under every vertex
        permutation fixing {0..k} and {k+1..n-1} setwise (identity excluded)."""
        n = self.cfg.n
        maps = []
        for head in permutations(range(k + 1)):
            for tail in permutations(range(k + 1, n)):
                sigma = head + tail
                if sigma == tuple(range(n)):
                    continue
                maps.append([self.index[tuple(sorted((sigma[u], sigma[v])))] for u, v in self.pairs[:length]])
        return maps

    def _is_canonical_prefix(self, pos: int) -> bool:
        w = self.w
        for src in self.stabilisers[pos]:
            for slot, s in enumerate(src):
                a, b = w[s], w[slot]
                if a != b:
                    if a > b:
                        return False
                    break
        return True

    def _bound(self, k: int, current: int) -> int:
        ub = self.ub
        simple = current + sum(ub[k:])
        n = self.cfg.n
        if n < 3:
            return simple
        val = self.w[:k] + ub[k:]
        cap = self.cfg.triple_cap
        tri = sum(min(cap, val[a] + val[b] + val[c]) for a, b, c in self.triples)
        # each pair sits in n-2 triples
        return min(simple, tri // (n - 2))

    def _incumbent(self) -> int:
        if self.shared_best is not None:
            return max(self.best, self.shared_best.value)
        return self.best

    def run(self, k: int = 0, current: int = 0) -> None:
        if self.truncated:
            return
        self.nodes += 1
        limit = self.cfg.node_limit
        if limit is not None and self.nodes > limit:
            self.truncated = True
            return
        if k == len(self.pairs):
            if current > self.best:
                self.best = current
                self.best_w = list(self.w)
                if self.shared_best is not None:
                    with self.shared_best.get_lock():
                        if current > self.shared_best.value:
                            self.shared_best.value = current
            return
        if self._bound(k, current) <= self._incumbent():
            return
        cap = self.cfg.triple_cap
        w, ub = self.w, self.ub
        values = range(ub[k], -1, -1)
        if k == 0 and self.first_choices is not None:
            values = [v for v in self.first_choices if v <= ub[0]]
        for val in values:
            w[k] = val
            if k in self.stabilisers and not self._is_canonical_prefix(k):
                continue
            undo = []
            ok = True
            for a, b in self.tri_of[k]:
                # tighten the later pair of a triangle whose other two are set
                if a < k and b > k:
                    last, other = b, a
                elif b < k and a > k:
                    last, other = a, b
                else:
                    continue
                room = cap - val - w[other]
                if room < ub[last]:
                    if room < 0:
                        ok = False
                        break
                    undo.append((last, ub[last]))
                    ub[last] = room
            if ok:
                self.run(k + 1, current + val)
            for q, old in reversed(undo):
                ub[q] = old
            if self.truncated:
                break
        w[k] = 0

    def certificate(self) -> LemmaCertificate:
        mg = Multigraph(self.cfg.n, dict(zip(self.pairs, self.best_w)), cap=max(self.cfg.pair_cap, 0))
        return LemmaCertificate(self.cfg, self.best, mg, self.nodes, not self.truncated)


_worker_best = None


def _init_worker(shared):
    global _worker_best
    _worker_best = shared


def _run_branch(cfg: LemmaSearchConfig, first: int):
    s = _Search(cfg, _worker_best)
    s.first_choices = (first,)
    s.run()
    return s.best, s.best_w, s.nodes, s.truncated


def max_feasible_edges(cfg: LemmaSearchConfig, workers: int = 1) -> LemmaCertificate:
    """Exact maximum of e(M) subject to the pair and triple caps.

    Pairs are branched in lexicographic order with weights tried from high to
    low. With symmetry reduction, a partial assignment is dropped whenever a
    completed row block is not lexicographically maximal under vertex
    permutations that keep the completed rows' vertex set fixed.

    With ``workers > 1`` the weight of the first pair is split across processes
    that share the incumbent value; the optimum is the same as a serial run.
    """
    n_pairs = cfg.n * (cfg.n - 1) // 2
    if workers <= 1 or n_pairs < 2:
        s = _Search(cfg)
        s.run()
        return s.certificate()
    shared = mp.Value("i", -1)
    with ProcessPoolExecutor(max_workers=workers, initializer=_init_worker, initargs=(shared,)) as pool:
        results = list(pool.map(_run_branch, [cfg] * (cfg.pair_cap + 1), range(cfg.pair_cap, -1, -1)))
    best, best_w, _, _ = max(results, key=lambda r: r[0])
    nodes = sum(r[2] for r in results)
    truncated = any(r[3] for r in results)
    pairs = list(combinations(range(cfg.n), 2))
    mg = Multigraph(cfg.n, dict(zip(pairs, best_w)), cap=cfg.pair_cap)
    return LemmaCertificate(cfg, best, mg, nodes, not truncated)


def sample_feasible(n: int, trials: int, seed: int, pair_cap: int = 4, triple_cap: int = 10) -> Iterator[Multigraph]:
    """Seeded random feasible multigraphs.

    Pairs are visited in a random order; each takes the largest weight the
    already-set pairs allow with probability 0.7, otherwise a uniform weight
    in range. Feasibility holds by construction.
    """
    if trials < 1:
        raise ValueError("trials must be at least 1")
    rng = random.Random(seed)
    pairs = list(combinations(range(n), 2))
    for _ in range(trials):
        mat = [[0] * n for _ in range(n)]
        order = pairs[:]
        rng.shuffle(order)
        for u, v in order:
            room = pair_cap
            for z in range(n):
                if z != u and z != v:
                    room = min(room, triple_cap - mat[u][z] - mat[v][z])
            room = max(room, 0)
            val = room if rng.random() < 0.7 else rng.randint(0, room)
            mat[u][v] = mat[v][u] = val
        yield Multigraph(n, {(u, v): mat[u][v] for u, v in pairs}, cap=pair_cap)
