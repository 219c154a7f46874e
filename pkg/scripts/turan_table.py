"""Exact ex(n, F33) for a range of n, side by side with b(n).

    python scripts/turan_table.py --max-n 8
    python scripts/turan_table.py --max-n 9 --node-limit 3000000   # n=9 takes a few minutes
    python scripts/turan_table.py --max-n 7 --enumerate
"""

import argparse
import time

from f33turan.constructions import count_b, make_bipartite_B
from f33turan.turan import audit_certificate, enumerate_copies, enumerate_extremal, exact_turan, is_isomorphic


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=8)
    ap.add_argument("--node-limit", type=int)
    ap.add_argument("--enumerate", action="store_true", help="count extremal classes (n <= 7)")
    args = ap.parse_args()

    print(f"{'n':>3} {'copies':>7} {'ex(n)':>6} {'b(n)':>6} {'match':>6} {'proven':>7} {'nodes':>9} {'sec':>8}  extremal")
    for n in range(1, args.max_n + 1):
        t0 = time.perf_counter()
        cert = exact_turan(n, node_limit=args.node_limit)
        dt = time.perf_counter() - t0
        extra = ""
        if args.enumerate and n <= 7:
            classes = enumerate_extremal(n)
            extra = f"{len(classes)} class(es)"
            if len(classes) == 1 and n >= 6:
                extra += ", B(n)" if is_isomorphic(classes[0], make_bipartite_B(n)) else ", not B(n)"
        assert audit_certificate(cert) or not cert.proven_exhaustive
        print(
            f"{n:>3} {len(enumerate_copies(n)):>7} {cert.optimum:>6} {count_b(n):>6} "
            f"{str(cert.matches_theorem):>6} {str(cert.proven_exhaustive):>7} {cert.nodes_explored:>9} {dt:>8.2f}  {extra}"
        )


if __name__ == "__main__":
    main()
