"""Exhaustive maximum of e(M) under the pair cap 4 / triple cap 10, against m(n).

    python scripts/lemma_table.py --max-n 7
"""

import argparse
import time

from f33turan.constructions import count_m
from f33turan.lemma import LemmaSearchConfig, max_feasible_edges, verify_feasible


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=7)
    ap.add_argument("--no-symmetry-up-to", type=int, default=6, help="also run without symmetry reduction up to this n")
    args = ap.parse_args()
    print(f"{'n':>3} {'m(n)':>5} {'opt':>5} {'sym nodes':>10} {'sec':>7} {'raw nodes':>10} {'sec':>7}")
    for n in range(1, args.max_n + 1):
        t0 = time.perf_counter()
        sym = max_feasible_edges(LemmaSearchConfig(n))
        t1 = time.perf_counter()
        assert sym.proven_exhaustive and verify_feasible(sym.maximizer, sym.config)
        raw_nodes, raw_t = "-", "-"
        if n <= args.no_symmetry_up_to:
            raw = max_feasible_edges(LemmaSearchConfig(n, symmetry_reduction=False))
            assert raw.optimum == sym.optimum
            raw_nodes, raw_t = raw.nodes_explored, f"{time.perf_counter() - t1:.2f}"
        print(f"{n:>3} {count_m(n):>5} {sym.optimum:>5} {sym.nodes_explored:>10} {t1 - t0:>7.2f} {raw_nodes:>10} {raw_t:>7}")


if __name__ == "__main__":
    main()
