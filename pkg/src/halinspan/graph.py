"""Edge normalization, rooted tree paths and spanning-tree fingerprints.

Vertices are dense integer ids.  An edge is a normalized ``(min, max)`` tuple
and an edge set is any iterable of such tuples (usually a ``frozenset``).
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Sequence

from .errors import NotATreeError

Edge = tuple[int, int]
CanonicalKey = tuple[Edge, ...]


def edge(a: int, b: int) -> Edge:
    """Return the normalized edge ``{a, b}``."""
    if a == b:
        raise ValueError(f"self-loop on vertex {a}")
    return (a, b) if a < b else (b, a)


def canonical_key(tree: Iterable[Edge]) -> CanonicalKey:
    """Order-independent fingerprint of an edge set."""
    return tuple(sorted(edge(a, b) for a, b in tree))


def format_key(key: CanonicalKey) -> str:
    return ",".join(f"{a}-{b}" for a, b in key)


def _adjacency(edges: Iterable[Edge], n: int) -> list[list[int]]:
    adj: list[list[int]] = [[] for _ in range(n)]
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    return adj


def is_spanning_tree(candidate: Iterable[Edge], n: int) -> bool:
    """True iff ``candidate`` has n-1 distinct edges and connects all n vertices."""
    edges = {edge(a, b) for a, b in candidate}
    if len(edges) != n - 1:
        return False
    if any(not (0 <= a < n and 0 <= b < n) for a, b in edges):
        return False
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra == rb:
            return False
        parent[ra] = rb
    # n-1 edges and no cycle means connected
    return True


class RootedTree:
    """Parent pointers and depths of a tree edge set hung from ``root``.

    Construction validates the input: a cycle or a vertex of ``range(n)``
    left unreached raises :class:`NotATreeError`.
    """

    __slots__ = ("root", "n", "parent", "depth")

    def __init__(self, edges: Iterable[Edge], root: int, n: int):
        edges = list(edges)
        if len(edges) != n - 1:
            raise NotATreeError(f"expected {n - 1} edges, got {len(edges)}")
        adj = _adjacency(edges, n)
        parent = [-1] * n
        depth = [-1] * n
        depth[root] = 0
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if depth[y] < 0:
                    depth[y] = depth[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif y != parent[x]:
                    raise NotATreeError(f"cycle through edge {edge(x, y)}")
        unreached = [v for v in range(n) if depth[v] < 0]
        if unreached:
            raise NotATreeError(f"vertices {unreached} not connected to {root}")
        self.root = root
        self.n = n
        self.parent = parent
        self.depth = depth

    def junction(self, a: int, b: int) -> int:
        """Deepest common ancestor of ``a`` and ``b``."""
        parent, depth = self.parent, self.depth
        while depth[a] > depth[b]:
            a = parent[a]
        while depth[b] > depth[a]:
            b = parent[b]
        while a != b:
            a, b = parent[a], parent[b]
        return a

    def climb(self, a: int, top: int) -> list[Edge]:
        """Edges from ``a`` up to its ancestor ``top``, ordered from ``a``."""
        out = []
        parent = self.parent
        while a != top:
            p = parent[a]
            if p < 0:
                raise ValueError(f"{top} is not an ancestor")
            out.append(edge(a, p))
            a = p
        return out

    def path(self, a: int, b: int) -> list[Edge]:
        """Edges of the unique a-b path, ordered from ``a`` to ``b``."""
        v = self.junction(a, b)
        return self.climb(a, v) + self.climb(b, v)[::-1]


def _vertex_count(edges: Sequence[Edge], *vertices: int) -> int:
    return max([x for e in edges for x in e] + list(vertices)) + 1


def tree_path(tree: Iterable[Edge], a: int, b: int, n: int | None = None) -> list[Edge]:
    """Edges of the a-b path in ``tree``; empty when ``a == b``.

    ``n`` defaults to one more than the largest vertex id mentioned.
    """
    edges = [edge(x, y) for x, y in tree]
    if n is None:
        n = _vertex_count(edges, a, b)
    return RootedTree(edges, a, n).path(a, b)


def fundamental_cycle(tree: Iterable[Edge], e: Edge, n: int | None = None) -> list[Edge]:
    """The unique cycle of ``tree + e``, starting with ``e``.

    The remaining edges follow the tree path from e's second endpoint back
    to its first, so consecutive edges share a vertex.
    """
    edges = {edge(x, y) for x, y in tree}
    a, b = e
    e = edge(a, b)
    if e in edges:
        raise ValueError(f"edge {e} already in tree")
    return [e] + tree_path(edges, b, a, n)
