"""Hunt for k-fans in random graphs and print the witnesses.

A k-fan sits at a vertex whose neighbourhood induces a matching of size
k, so detection reduces to one matching computation per vertex.  The
witness printed below is (center, spoke pairs).
"""

import argparse
import random

from fanfree import contains_fan, fan_saturation_gap, is_fan_saturated, make_split
from fanfree.graphs import Graph


def random_graph(rng, n, p):
    rows = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=9)
    ap.add_argument("--k", type=int, default=2)
    ap.add_argument("--trials", type=int, default=8)
    ap.add_argument("--p", type=float, default=0.45)
    ap.add_argument("--seed", type=int, default=7)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    hits = 0
    for t in range(args.trials):
        g = random_graph(rng, args.n, args.p)
        witness = contains_fan(g, args.k)
        if witness is None:
            print(f"trial {t}: no {args.k}-fan ({g.edge_count()} edges)")
        else:
            hits += 1
            print(f"trial {t}: fan at vertex {witness.center}, "
                  f"spokes {witness.pairs}")
    print(f"{hits}/{args.trials} graphs contained a {args.k}-fan")

    # the complete split graph is extremal: fan-free, but one more edge
    # anywhere creates a fan, so the saturation gap scan finds nothing
    s = make_split(args.n, args.k)
    assert is_fan_saturated(s, args.k)
    assert fan_saturation_gap(s, args.k) is None
    print(f"S_{{{args.n},{args.k}}} is saturated: every missing edge "
          f"would create a {args.k}-fan")
    sparse = random_graph(rng, args.n, 0.15)
    while contains_fan(sparse, args.k) is not None:
        sparse = random_graph(rng, args.n, 0.15)
    gap = fan_saturation_gap(sparse, args.k)
    if gap is None:
        print("the sparse control graph happens to be saturated too")
    else:
        print(f"sparse control graph is not saturated: edge {gap} is safe")


if __name__ == "__main__":
    main()
