"""Isomorph-free exhaustive graph generation, canonical forms, graph6 streaming.

Generation is orderly: a labelling is *canonical* when its column-major
upper-triangle bit code (x(0,1), x(0,2), x(1,2), x(0,3), ...) is
lexicographically maximal over all relabellings.  Deleting the last
vertex of a canonical code leaves a canonical code, so extending each
canonical representative on n-1 vertices by one new last vertex over all
neighbour subsets, and keeping exactly the extensions whose identity
labelling is canonical, enumerates every isomorphism class once with no
global dedup table.

The canonicity test is a depth-first search for a lexicographically
greater relabelling, pruned by interchangeable-vertex (twin) classes; it
is JIT-compiled with numba when available.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable, Iterator, TextIO

import numpy as np

from .graphs import MAX_VERTICES, Graph, Graph6Error, graph6_decode, graph6_encode

try:
    from numba import njit

    _HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    _HAVE_NUMBA = False

logger = logging.getLogger("fanfree")

ENUMERATION_MAX_N = 11


@dataclass(frozen=True)
class CanonicalForm:
    """Canonical graph6 text: equal forms iff isomorphic graphs."""

    text: str


@dataclass(frozen=True)
class EnumerationTask:
    """Parameters for one exhaustive generation run.

    ``shard`` splits the run by round-robin over the parents on ``n-1``
    vertices; the union of all shards equals the unsharded run.
    """

    n: int
    connected_only: bool = False
    shard: tuple[int, int] | None = None

    def __post_init__(self) -> None:
        if not 1 <= self.n <= ENUMERATION_MAX_N:
            raise ValueError(
                f"enumeration order must be in 1..{ENUMERATION_MAX_N}, got {self.n}")
        if self.shard is not None:
            index, count = self.shard
            if count < 1 or not 0 <= index < count:
                raise ValueError(f"invalid shard {self.shard}")


# -- canonicity test ---------------------------------------------------
#
# Group value of vertex order (v_0, ..., v_{j-1}) at level j: the j bits
# of adjacency between the level-j candidate and the placed vertices,
# most significant bit first.  A labelling is lexicographically greater
# than the identity iff some placement makes a group value exceed the
# identity's group value at the first differing level.


def _twin_classes_py(adj: tuple[int, ...] | list[int], n: int) -> list[int]:
    """Vertex classes whose transpositions are automorphisms (union-find)."""
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u in range(n):
        for w in range(u + 1, n):
            m = (1 << u) | (1 << w)
            if (adj[u] & ~m) == (adj[w] & ~m):
                ru, rw = find(u), find(w)
                if ru != rw:
                    parent[rw] = ru
    return [find(v) for v in range(n)]


def _identity_groups(adj, n: int) -> list[int]:
    groups = [0] * n
    for j in range(1, n):
        val = 0
        for i in range(j):
            val = (val << 1) | (adj[j] >> i & 1)
        groups[j] = val
    return groups


def _is_canonical_py(adj, n: int) -> bool:
    if n <= 1:
        return True
    t = _identity_groups(adj, n)
    cls = _twin_classes_py(adj, n)
    gvals = [[0] * n for _ in range(n)]
    chosen = [0] * n
    nextu = [0] * n
    seen = [0] * n
    used = 0
    level = 0
    while True:
        u = nextu[level]
        found = False
        while u < n:
            if (not used >> u & 1 and gvals[level][u] == t[level]
                    and not seen[level] >> cls[u] & 1):
                found = True
                break
            u += 1
        if not found:
            level -= 1
            if level < 0:
                return True
            used &= ~(1 << chosen[level])
            continue
        nextu[level] = u + 1
        seen[level] |= 1 << cls[u]
        chosen[level] = u
        used |= 1 << u
        if level == n - 1:
            used &= ~(1 << u)  # complete equal relabelling: an automorphism
            continue
        nl = level + 1
        for w in range(n):
            if not used >> w & 1:
                gw = (gvals[level][w] << 1) | (adj[w] >> u & 1)
                if gw > t[nl]:
                    return False
                gvals[nl][w] = gw
        level = nl
        nextu[level] = 0
        seen[level] = 0


if _HAVE_NUMBA:

    @njit(cache=True)
    def _is_canonical_nb(adj, n):  # pragma: no cover - jit mirror of _is_canonical_py
        if n <= 1:
            return True
        t = np.zeros(n, dtype=np.int64)
        for j in range(1, n):
            val = 0
            for i in range(j):
                val = (val << 1) | ((adj[j] >> i) & 1)
            t[j] = val
        parent = np.arange(n)
        for u in range(n):
            for w in range(u + 1, n):
                m = (1 << u) | (1 << w)
                if (adj[u] & ~m) == (adj[w] & ~m):
                    ru = u
                    while parent[ru] != ru:
                        ru = parent[ru]
                    rw = w
                    while parent[rw] != rw:
                        rw = parent[rw]
                    if ru != rw:
                        parent[rw] = ru
        cls = np.zeros(n, dtype=np.int64)
        for v in range(n):
            r = v
            while parent[r] != r:
                r = parent[r]
            cls[v] = r
        gvals = np.zeros((n, n), dtype=np.int64)
        chosen = np.zeros(n, dtype=np.int64)
        nextu = np.zeros(n, dtype=np.int64)
        seen = np.zeros(n, dtype=np.int64)
        used = 0
        level = 0
        while True:
            u = nextu[level]
            found = False
            while u < n:
                if ((used >> u) & 1) == 0 and gvals[level, u] == t[level] \
                        and ((seen[level] >> cls[u]) & 1) == 0:
                    found = True
                    break
                u += 1
            if not found:
                level -= 1
                if level < 0:
                    return True
                used &= ~(1 << chosen[level])
                continue
            nextu[level] = u + 1
            seen[level] |= 1 << cls[u]
            chosen[level] = u
            used |= 1 << u
            if level == n - 1:
                used &= ~(1 << u)
                continue
            nl = level + 1
            for w in range(n):
                if ((used >> w) & 1) == 0:
                    gw = (gvals[level, w] << 1) | ((adj[w] >> u) & 1)
                    if gw > t[nl]:
                        return False
                    gvals[nl, w] = gw
            level = nl
            nextu[level] = 0
            seen[level] = 0

    @njit(cache=True)
    def _accepted_extensions_nb(rows, m):  # pragma: no cover - jit
        """Neighbour subsets s whose extension of a canonical parent is canonical."""
        out = np.empty(1 << m, dtype=np.int64)
        child = np.empty(m + 1, dtype=np.int64)
        cnt = 0
        for s in range(1 << m):
            for i in range(m):
                child[i] = rows[i] | (((s >> i) & 1) << m)
            child[m] = s
            if _is_canonical_nb(child, m + 1):
                out[cnt] = s
                cnt += 1
        return out[:cnt]


def _accepted_extensions_py(rows: np.ndarray, m: int) -> list[int]:
    parent = [int(x) for x in rows]
    accepted = []
    for s in range(1 << m):
        child = [parent[i] | ((s >> i & 1) << m) for i in range(m)]
        child.append(s)
        if _is_canonical_py(child, m + 1):
            accepted.append(s)
    return accepted


def _accepted_extensions(rows: np.ndarray, m: int) -> list[int]:
    if _HAVE_NUMBA:
        return [int(s) for s in _accepted_extensions_nb(rows, m)]
    return _accepted_extensions_py(rows, m)


def _reverse_bits(s: int, m: int) -> int:
    out = 0
    for i in range(m):
        out = (out << 1) | (s >> i & 1)
    return out


def _connected_rows(rows: np.ndarray, n: int) -> bool:
    seen = 1
    frontier = 1
    while frontier:
        reach = 0
        for v in range(n):
            if frontier >> v & 1:
                reach |= int(rows[v])
        frontier = reach & ~seen
        seen |= reach
    return seen == (1 << n) - 1


# -- canonical form ----------------------------------------------------


def _canonical_order(adj, n: int) -> list[int]:
    """Vertex order whose colex code is the lexicographic maximum.

    Depth-first branch and bound: every explored node at a given level
    shares the same prefix code, only candidates attaining the best group
    value are expanded, and twin classes collapse interchangeable
    branches.
    """
    cls = _twin_classes_py(adj, n)
    best = [-1] * (n + 1)
    best_order: list[int] | None = None

    def rec(order: list[int], used: int, gvals: list[int]) -> None:
        nonlocal best_order
        j = len(order)
        if j == n:
            if best_order is None:
                best_order = order.copy()
            return
        m = -1
        for u in range(n):
            if not used >> u & 1 and gvals[u] > m:
                m = gvals[u]
        if m < best[j]:
            return
        if m > best[j]:
            best[j] = m
            for i in range(j + 1, n):
                best[i] = -1
            best_order = None
        seen_cls = 0
        for u in range(n):
            if used >> u & 1 or gvals[u] != m or seen_cls >> cls[u] & 1:
                continue
            seen_cls |= 1 << cls[u]
            nxt = [(gvals[w] << 1) | (adj[w] >> u & 1) for w in range(n)]
            rec(order + [u], used | 1 << u, nxt)

    rec([], 0, [0] * n)
    assert best_order is not None
    return best_order


def _relabel(g: Graph, order: list[int]) -> Graph:
    pos = {old: new for new, old in enumerate(order)}
    rows = [0] * g.n
    for new, old in enumerate(order):
        for u_old in range(g.n):
            if g.adj[old] >> u_old & 1:
                rows[new] |= 1 << pos[u_old]
    return Graph._from_trusted(g.n, tuple(rows))


def canonical_label(g: Graph) -> Graph:
    """Relabelled copy in canonical vertex order."""
    if g.n == 1:
        return g
    return _relabel(g, _canonical_order(g.adj, g.n))


def canonical_form(g: Graph) -> CanonicalForm:
    """Canonical graph6 text; isomorphic inputs map to identical output."""
    return CanonicalForm(graph6_encode(canonical_label(g)))


def are_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and canonical_form(g) == canonical_form(h)


# -- exhaustive generation ---------------------------------------------


def enumerate_graphs(task: EnumerationTask) -> Iterator[Graph]:
    """One canonically labelled representative per isomorphism class.

    Emission order is deterministic: depth-first over parents, children
    in ascending canonical-code order within each parent.  With a shard
    plan, parents on ``n-1`` vertices are distributed round-robin.
    """
    n = task.n
    if n == 1:
        if task.shard is None or task.shard[0] == 0:
            yield Graph._from_trusted(1, (0,))  # one vertex is connected
        return

    shard = task.shard
    parent_counter = 0

    def walk(rows: np.ndarray) -> Iterator[np.ndarray]:
        nonlocal parent_counter
        m = len(rows)
        if m == n:
            yield rows
            return
        if m == n - 1 and shard is not None:
            idx = parent_counter
            parent_counter += 1
            if idx % shard[1] != shard[0]:
                return
        accepted = _accepted_extensions(rows, m)
        accepted.sort(key=lambda s: _reverse_bits(s, m))
        for s in accepted:
            child = np.empty(m + 1, dtype=np.int64)
            child[:m] = rows
            for i in range(m):
                if s >> i & 1:
                    child[i] |= 1 << m
            child[m] = s
            yield from walk(child)

    root = np.zeros(1, dtype=np.int64)
    for rows in walk(root):
        if task.connected_only and not _connected_rows(rows, n):
            continue
        yield Graph._from_trusted(n, tuple(int(x) for x in rows))


# -- graph6 streaming --------------------------------------------------


def stream_graph6(lines: Iterable[str], *, fail_fast: bool = True) -> Iterator[Graph]:
    """Decode graph6 lines into graphs; blank lines are skipped.

    Malformed lines raise ``Graph6Error`` tagged with the line number, or
    are logged and skipped when ``fail_fast`` is off.
    """
    for lineno, line in enumerate(lines, start=1):
        text = line.strip()
        if not text:
            continue
        try:
            yield graph6_decode(text)
        except Graph6Error as exc:
            if fail_fast:
                raise Graph6Error(f"line {lineno}: {exc}") from exc
            logger.warning("skipping malformed graph6 line %d: %s", lineno, exc)


def write_graph6(sink: TextIO, graphs: Iterable[Graph]) -> int:
    """Write one graph6 line per graph; returns the number written."""
    count = 0
    for g in graphs:
        sink.write(graph6_encode(g))
        sink.write("\n")
        count += 1
    return count
