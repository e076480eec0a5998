"""Shared generators and independent oracles for the test suite.

Oracles here deliberately avoid the package's own algorithms: eigenvalues
come from numpy.linalg, fan containment from a literal subset-embedding
search, and matching numbers from exhaustive edge-subset search, so
agreement is meaningful.
"""

from __future__ import annotations

import itertools
import random

import numpy as np

from fanfree.graphs import Graph, from_edges


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    rows = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Graph(n, tuple(rows))


def random_connected_graph(rng: random.Random, n: int, extra: float = 0.2) -> Graph:
    """Random spanning tree plus each remaining pair with probability ``extra``."""
    order = list(range(n))
    rng.shuffle(order)
    edges = set()
    for i in range(1, n):
        anchor = rng.choice(order[:i])
        edges.add((min(order[i], anchor), max(order[i], anchor)))
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < extra:
                edges.add((i, j))
    return from_edges(n, sorted(edges))


def random_regular_graph(rng: random.Random, n: int) -> Graph:
    """Connected circulant: regular by construction; offset 1 keeps it connected."""
    half = (n - 1) // 2
    others = list(range(2, half + 1))
    rng.shuffle(others)
    offsets = [1] + others[:rng.randint(0, len(others))]
    rows = [0] * n
    for v in range(n):
        for off in offsets:
            rows[v] |= 1 << ((v + off) % n)
            rows[v] |= 1 << ((v - off) % n)
    if n % 2 == 0 and rng.random() < 0.5:
        for v in range(n):
            rows[v] |= 1 << ((v + n // 2) % n)
    return Graph(n, tuple(rows))


def numpy_q1(g: Graph) -> float:
    """Largest signless-Laplacian eigenvalue via numpy, built from scratch."""
    n = g.n
    q = np.zeros((n, n))
    for i in range(n):
        for j in range(n):
            if i != j and g.adj[i] >> j & 1:
                q[i, j] = 1.0
        q[i, i] = float(g.degree(i))
    return float(np.linalg.eigvalsh(q)[-1])


def numpy_spectrum(a: np.ndarray) -> np.ndarray:
    return np.linalg.eigvalsh(a)[::-1]


def brute_matching_number(g: Graph) -> int:
    """Largest set of pairwise disjoint edges, by exhaustive subset search."""
    edges = g.edges()
    best = 0
    for r in range(min(len(edges), g.n // 2), 0, -1):
        if r <= best:
            break
        for combo in itertools.combinations(edges, r):
            used = 0
            ok = True
            for u, v in combo:
                m = 1 << u | 1 << v
                if used & m:
                    ok = False
                    break
                used |= m
            if ok:
                best = r
                break
    return best


def _has_perfect_pairing(g: Graph, center: int, rest: tuple[int, ...]) -> bool:
    """Can ``rest`` be split into adjacent pairs, all inside N(center)?"""
    if not rest:
        return True
    a = rest[0]
    for i in range(1, len(rest)):
        b = rest[i]
        if g.has_edge(a, b):
            remainder = rest[1:i] + rest[i + 1:]
            if _has_perfect_pairing(g, center, remainder):
                return True
    return False


def naive_contains_fan(g: Graph, k: int) -> bool:
    """Literal embedding search: every (2k+1)-subset, every centre choice."""
    size = 2 * k + 1
    if g.n < size:
        return False
    for subset in itertools.combinations(range(g.n), size):
        for center in subset:
            rest = tuple(v for v in subset if v != center)
            if all(g.has_edge(center, v) for v in rest) and \
                    _has_perfect_pairing(g, center, rest):
                return True
    return False


def all_labeled_graphs(n: int):
    """Every labelled graph on n vertices, one Graph per adjacency choice."""
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        rows = [0] * n
        for b, (i, j) in enumerate(pairs):
            if mask >> b & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
        yield Graph(n, tuple(rows))


def permuted(g: Graph, perm: list[int]) -> Graph:
    rows = [0] * g.n
    for i in range(g.n):
        for j in range(g.n):
            if g.adj[i] >> j & 1:
                rows[perm[i]] |= 1 << perm[j]
    return Graph(g.n, tuple(rows))
