"""Count isomorphism classes by orderly generation, then show that the
shard split partitions the same set.  Counts for n <= 9 can be checked
against any published table of graph counts."""

import argparse
from collections import Counter

from fanfree import EnumerationTask, enumerate_graphs, graph6_encode


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=7)
    ap.add_argument("--connected-only", action="store_true")
    ap.add_argument("--shards", type=int, default=3, help="shard count for the demo split")
    args = ap.parse_args()

    for n in range(1, args.max_n + 1):
        count = sum(1 for _ in enumerate_graphs(
            EnumerationTask(n, connected_only=args.connected_only)))
        print(f"n={n}: {count} classes")

    n = args.max_n
    whole = {graph6_encode(g) for g in enumerate_graphs(
        EnumerationTask(n, connected_only=args.connected_only))}
    sizes = Counter()
    union = set()
    for index in range(args.shards):
        task = EnumerationTask(n, connected_only=args.connected_only,
                               shard=(index, args.shards))
        part = {graph6_encode(g) for g in enumerate_graphs(task)}
        assert not (union & part), "shards must be disjoint"
        union |= part
        sizes[index] = len(part)
    assert union == whole
    print(f"shard sizes at n={n}: "
          + " + ".join(str(sizes[i]) for i in range(args.shards))
          + f" = {len(whole)}")


if __name__ == "__main__":
    main()
