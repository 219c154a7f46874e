"""Links of K4s in random F33-free hosts (edge subsets of B(n)).

Reports the worst triple sum seen and the distribution of the clique number
of the multiplicity>=3 graph J, which must stay below the 4-colour triangle
Ramsey number in any F33-free host.

    python scripts/link_law.py --hosts 1000 --seed 2024
"""

import argparse
import random
from collections import Counter

from f33turan.constructions import make_bipartite_B
from f33turan.hypergraph import ThreeGraph
from f33turan.link import build_link, find_common_color_triangle, high_multiplicity_graph, max_triple_sum


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--hosts", type=int, default=1000)
    ap.add_argument("--seed", type=int, required=True)
    ap.add_argument("--max-n", type=int, default=14)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    worst = 0
    cliques = Counter()
    links = common = 0
    for _ in range(args.hosts):
        n = rng.randint(6, args.max_n)
        b = make_bipartite_B(n)
        p = rng.uniform(0.3, 1.0)
        bits = sum(1 << r for r in range(b.bits.bit_length()) if b.bits >> r & 1 and rng.random() < p)
        g = ThreeGraph(n, bits)
        rows = g.codegree_rows
        for a, bb, c in g.edges:
            d = rows[a][bb] & rows[a][c] & rows[bb][c]
            d = d >> (c + 1) << (c + 1)
            while d:
                low = d & -d
                d ^= low
                link = build_link(g, (a, bb, c, low.bit_length() - 1))
                links += 1
                if link.n >= 3:
                    worst = max(worst, max_triple_sum(link.multigraph())[0])
                common += find_common_color_triangle(link, 3) is not None
                cliques[high_multiplicity_graph(link, 3).clique_number()] += 1
    print(f"hosts={args.hosts} links={links} worst_triple_sum={worst} common_3_color_triangles={common}")
    print("clique number of J:", dict(sorted(cliques.items())))


if __name__ == "__main__":
    main()
