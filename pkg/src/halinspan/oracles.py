"""Independent ground truth: matrix-tree counts, brute force, and bounds.

Nothing here shares code with the enumerator beyond edge normalization.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb, factorial
from typing import Iterable

from .errors import InvalidParamsError, TooLargeError
from .graph import CanonicalKey, Edge, canonical_key, edge
from .halin import HalinGraph

BRUTE_FORCE_MAX_N = 14
SUBSET_FILTER_MAX_EDGES = 16


@dataclass(frozen=True)
class ExactCount:
    value: int
    connected: bool = True

    def __int__(self) -> int:
        return self.value

    def __eq__(self, other):
        if isinstance(other, ExactCount):
            return self.value == other.value
        return self.value == other

    def __hash__(self):
        return hash(self.value)


def bareiss_determinant(matrix: list[list[int]]) -> int:
    """Exact determinant of a square integer matrix (fraction-free elimination)."""
    m = [list(row) for row in matrix]
    size = len(m)
    if size == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(size - 1):
        if m[k][k] == 0:
            swap = next((r for r in range(k + 1, size) if m[r][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        pivot = m[k][k]
        for i in range(k + 1, size):
            row_i = m[i]
            factor = row_i[k]
            row_k = m[k]
            for j in range(k + 1, size):
                # exact division is guaranteed by Sylvester's identity
                row_i[j] = (row_i[j] * pivot - factor * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * m[-1][-1]


def laplacian(n: int, edges: Iterable[Edge]) -> list[list[int]]:
    lap = [[0] * n for _ in range(n)]
    for a, b in edges:
        lap[a][a] += 1
        lap[b][b] += 1
        lap[a][b] -= 1
        lap[b][a] -= 1
    return lap


def _connected(n: int, edges: Iterable[Edge]) -> bool:
    adj: list[list[int]] = [[] for _ in range(n)]
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    seen = {0}
    stack = [0]
    while stack:
        for y in adj[stack.pop()]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == n


def kirchhoff_count(n: int, edges: Iterable[Edge]) -> ExactCount:
    """Number of spanning trees via a Laplacian cofactor.

    A disconnected graph gives ``ExactCount(0, connected=False)``.
    """
    edges = {edge(a, b) for a, b in edges}
    if n <= 1:
        return ExactCount(1)
    if not _connected(n, edges):
        return ExactCount(0, connected=False)
    lap = laplacian(n, edges)
    minor = [row[1:] for row in lap[1:]]
    return ExactCount(bareiss_determinant(minor))


def _subset_filter(n: int, edges: list[Edge]) -> set[CanonicalKey]:
    out = set()
    for subset in itertools.combinations(edges, n - 1):
        parent = list(range(n))
        ok = True
        for a, b in subset:
            while parent[a] != a:
                a = parent[a]
            while parent[b] != b:
                b = parent[b]
            if a == b:
                ok = False
                break
            parent[a] = b
        if ok:
            out.add(canonical_key(subset))
    return out


def _backtrack(n: int, edges: list[Edge]) -> set[CanonicalKey]:
    # include/exclude each edge in turn; prune when the chosen forest has a
    # cycle or when too few edges remain to finish a tree
    out: set[CanonicalKey] = set()
    m = len(edges)
    chosen: list[Edge] = []
    comp = list(range(n))

    def label_of(x: int) -> int:
        return comp[x]

    def rec(k: int) -> None:
        if len(chosen) == n - 1:
            out.add(canonical_key(chosen))
            return
        if m - k < n - 1 - len(chosen):
            return
        a, b = edges[k]
        ca, cb = label_of(a), label_of(b)
        if ca != cb:
            saved = comp[:]
            for v in range(n):
                if comp[v] == cb:
                    comp[v] = ca
            chosen.append(edges[k])
            rec(k + 1)
            chosen.pop()
            comp[:] = saved
        rec(k + 1)

    rec(0)
    return out


def brute_force_trees(
    n: int, edges: Iterable[Edge], max_n: int = BRUTE_FORCE_MAX_N
) -> set[CanonicalKey]:
    """Every spanning tree of a small graph, as canonical keys.

    Uses plain subset filtering for up to 16 edges and include/exclude
    backtracking above that.

    Raises:
        TooLargeError: ``n > max_n``.
    """
    if n > max_n:
        raise TooLargeError(f"brute force limited to n <= {max_n}, got n={n}")
    edges = sorted({edge(a, b) for a, b in edges})
    if n == 1:
        return {()}
    if len(edges) <= SUBSET_FILTER_MAX_EDGES:
        return _subset_filter(n, edges)
    return _backtrack(n, edges)


@dataclass(frozen=True)
class BoundSet:
    """Per-level and total upper bounds on spanning-tree counts.

    ``node_bound[i]`` bounds one computational-tree node with ``i`` cycle
    edges, ``per_level[i]`` a whole level, for ``0 <= i < p`` (no spanning
    tree holds all p cycle edges).  ``total`` is their sum and ``headline``
    is ``(2pd)^p``.
    """

    p: int
    d: int
    node_bound: tuple[int, ...]
    per_level: tuple[int, ...]
    total: int
    headline: int

    def level_bound(self, level: int) -> int:
        return self.per_level[level] if level < self.p else 0

    def node_limit(self, level: int) -> int:
        return self.node_bound[level] if level < self.p else 0


def compute_bounds(p: int, d: int) -> BoundSet:
    if p < 3 or d < 1:
        raise InvalidParamsError(f"need p >= 3 and d >= 1, got p={p}, d={d}")
    node = tuple(factorial(i) * (2 * d) ** i for i in range(p))
    level = tuple(comb(p, i) * node[i] for i in range(p))
    return BoundSet(p, d, node, level, sum(level), (2 * p * d) ** p)


def check_depth_bound(h: HalinGraph) -> bool:
    """``d <= floor(n/2) - 1``; every valid Halin graph satisfies it."""
    return h.d <= h.n // 2 - 1
