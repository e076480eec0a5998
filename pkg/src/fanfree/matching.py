"""Exact maximum matching and the edge-maximum formulas for bounded matching number.

The solver is a branch-and-bound over vertex inclusion with a greedy
lower bound and a half-order upper bound, memoised on the surviving
vertex mask.  Every call in this package is on graphs of at most 64
vertices (and almost always on neighbourhoods of a dozen or fewer), so
this is certified exact without needing a blossom implementation; the
contract is algorithm-agnostic and a blossom backend could replace it
without interface change.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .graphs import Graph, bits


class Regime(enum.Enum):
    """Which extremal family attains an edge-maximum formula."""

    CLIQUE = "clique-regime"
    SPLIT = "split-regime"
    BOUNDARY = "boundary"


@dataclass(frozen=True)
class MatchingResult:
    """Matching number together with a witness.

    ``pairs`` are pairwise vertex-disjoint edges in lexicographically
    smallest order; exactness is certified by the exhaustive search.
    """

    size: int
    pairs: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class ForbiddenPattern:
    """Forbidden-subgraph descriptor: ``kind`` is ``"kk2"`` or ``"fan"``."""

    kind: str
    k: int

    def __post_init__(self) -> None:
        if self.kind not in ("kk2", "fan"):
            raise ValueError(f"unknown pattern kind {self.kind!r}")
        if self.k < 1:
            raise ValueError("pattern parameter k must be positive")

    def label(self) -> str:
        return f"{self.k}K2" if self.kind == "kk2" else f"F{self.k}"


@dataclass(frozen=True)
class TuranRecord:
    """Edge-maximum over pattern-free graphs of a fixed order.

    ``extremal`` lists the canonical graph6 forms of every graph
    attaining ``max_edges``.  ``regime`` carries the clique/split
    trichotomy for kK2 patterns and is None for fan patterns, where no
    such trichotomy applies.
    """

    n: int
    pattern: ForbiddenPattern
    max_edges: int
    extremal: tuple[str, ...]
    regime: Regime | None


def _strip_isolated(adj: tuple[int, ...], mask: int) -> int:
    out = mask
    for v in bits(mask):
        if not adj[v] & mask:
            out &= ~(1 << v)
    return out


def _greedy_size(adj: tuple[int, ...], mask: int) -> int:
    """Size of the lexicographic greedy maximal matching inside ``mask``."""
    size = 0
    avail = mask
    while avail:
        u = (avail & -avail).bit_length() - 1
        avail &= ~(1 << u)
        nb = adj[u] & avail
        if nb:
            v = (nb & -nb).bit_length() - 1
            avail &= ~(1 << v)
            size += 1
    return size


def _max_matching_size(adj: tuple[int, ...], mask: int, memo: dict[int, int]) -> int:
    mask = _strip_isolated(adj, mask)
    if mask == 0:
        return 0
    hit = memo.get(mask)
    if hit is not None:
        return hit
    cap = mask.bit_count() // 2
    u = (mask & -mask).bit_length() - 1
    rest = mask & ~(1 << u)
    best = _max_matching_size(adj, rest, memo)
    if best < cap:
        for v in bits(adj[u] & rest):
            size = 1 + _max_matching_size(adj, rest & ~(1 << v), memo)
            if size > best:
                best = size
                if best == cap:
                    break
    memo[mask] = best
    return best


def _has_matching(adj: tuple[int, ...], mask: int, need: int) -> bool:
    """Decision variant: does ``mask`` induce a matching of size >= need?"""
    if need <= 0:
        return True
    if _greedy_size(adj, mask) >= need:
        return True
    return _has_matching_search(adj, _strip_isolated(adj, mask), need)


def _has_matching_search(adj: tuple[int, ...], mask: int, need: int) -> bool:
    if need <= 0:
        return True
    mask = _strip_isolated(adj, mask)
    if mask.bit_count() < 2 * need:
        return False
    u = (mask & -mask).bit_length() - 1
    rest = mask & ~(1 << u)
    for v in bits(adj[u] & rest):
        if _has_matching_search(adj, rest & ~(1 << v), need - 1):
            return True
    return _has_matching_search(adj, rest, need)


def _lex_witness(adj: tuple[int, ...], mask: int, size: int,
                 memo: dict[int, int]) -> tuple[tuple[int, int], ...]:
    """Lexicographically smallest set of ``size`` disjoint edges in ``mask``."""
    pairs = []
    avail = mask
    while len(pairs) < size:
        found = False
        for u in bits(avail):
            nbu = adj[u] & avail
            if not nbu:
                continue
            for v in bits(nbu):
                rest = avail & ~(1 << u) & ~(1 << v)
                if _max_matching_size(adj, rest, memo) >= size - len(pairs) - 1:
                    pairs.append((u, v))
                    avail = rest
                    found = True
                    break
            if found:
                break
        if not found:  # cannot happen when size is the true matching number
            raise RuntimeError("witness extraction lost feasibility")
    return tuple(pairs)


def matching_number(g: Graph) -> MatchingResult:
    """Exact matching number with a lexicographically smallest witness."""
    memo: dict[int, int] = {}
    full = (1 << g.n) - 1
    size = _max_matching_size(g.adj, full, memo)
    pairs = _lex_witness(g.adj, full, size, memo)
    return MatchingResult(size, pairs)


def is_kk2_free(g: Graph, k: int) -> bool:
    """True iff ``g`` contains no k pairwise disjoint edges."""
    if k < 1:
        raise ValueError("k must be positive")
    return not _has_matching(g.adj, (1 << g.n) - 1, k)


def _split_value(n: int, alpha: int) -> int:
    return alpha * n - alpha * (alpha + 1) // 2


def max_edges_matching(n: int, alpha: int) -> tuple[int, Regime]:
    """Maximum size of a graph of order ``n`` with matching number ``alpha``.

    The value is ``max(C(2a+1, 2), a*n - a(a+1)/2)``; the regime reports
    which family attains it: the clique ``K_{2a+1}`` plus isolated
    vertices below the boundary ``n = (5a+3)/2``, the complete split
    graph above it, and both exactly at the boundary.
    """
    if alpha < 0:
        raise ValueError("alpha must be nonnegative")
    if n < 2 * alpha + 1:
        raise ValueError(f"requires n >= 2*alpha+1 = {2 * alpha + 1}, got n={n}")
    clique = (2 * alpha + 1) * alpha  # C(2a+1, 2)
    split = _split_value(n, alpha)
    # trichotomy boundary at n = (5*alpha+3)/2, compared in integers
    lhs = 2 * n
    rhs = 5 * alpha + 3
    if lhs > rhs:
        return split, Regime.SPLIT
    if lhs == rhs:
        return clique, Regime.BOUNDARY  # both formulas agree here
    return clique, Regime.CLIQUE


def turan_kk2(n: int, k: int) -> tuple[int, Regime]:
    """Edge-maximum over kK2-free graphs of order ``n``.

    A graph is kK2-free iff its matching number is at most ``k-1``, so
    this is the bounded-matching maximum at ``alpha = k-1``: the value is
    ``(k-1)n - k(k-1)/2`` from ``n >= (5k-2)/2`` and ``C(2k-1, 2)``
    below, with both extremal families meeting at ``n = (5k-2)/2``.
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    if n < 2 * k - 1:
        raise ValueError(f"requires n >= 2k-1 = {2 * k - 1}, got n={n}")
    return max_edges_matching(n, k - 1)
