"""Spanning-tree enumeration on Halin graphs by cycle-edge insertion.

Both engines start from the characteristic tree ``T`` and build the same
computational tree: a node holds a spanning tree ``T'`` and a cycle-edge
index ``i``; adding ``e_i`` to ``T'`` closes a cycle ``C*`` and every
deletable tree edge ``b`` of ``C*`` yields a child ``T' + e_i - b``, which is
emitted and then expanded with every ``e_j``, ``j > i``.

The naive engine deletes every tree edge of ``C*`` and repeats trees.  The
distinct engine splits the deletable edges at the junction ``v`` of the
root paths to ``v_i`` and ``v_{i+1}`` into a left side (``v_i`` up to ``v``)
and a right side (``v`` down to ``v_{i+1}``) and colors edges blue after each
deletion; blue edges stay in every tree of that branch:

* deleting a left edge colors the whole right side and every left edge
  between ``v_i`` and the deleted edge;
* deleting a right edge colors the right-side edges between it and
  ``v_{i+1}``.

``coloring="right-only"`` drops the left-prefix part of the first rule and
``coloring="none"`` disables coloring; both repeat trees on some inputs and
exist as negative controls.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import ColoredRightEdgeError
from .graph import Edge, RootedTree
from .halin import HalinGraph
from .sinks import EnumReport, EnumSink

COLORINGS = ("full", "right-only", "none")
MODES = ("naive", "distinct")


class _Stop(Exception):
    """Sink limit reached."""


@dataclass(frozen=True)
class PartialTree:
    """A spanning tree of ``H`` reached during enumeration.

    ``kept`` are the surviving characteristic-tree edges, ``added`` the
    0-based indices of the cycle edges present (strictly increasing), and
    ``colored`` the blue edges of this branch (always a subset of ``kept``).
    """

    kept: frozenset[Edge]
    added: tuple[int, ...] = ()
    colored: frozenset[Edge] = frozenset()

    @classmethod
    def base(cls, h: HalinGraph) -> PartialTree:
        return cls(h.tree_edges)

    def edges(self, h: HalinGraph) -> frozenset[Edge]:
        return self.kept.union(h.cycle_edges[i] for i in self.added)

    @property
    def level(self) -> int:
        return len(self.added)


@dataclass(frozen=True)
class CyclePartition:
    """Split of the cycle closed by adding ``e_i``.

    Attributes:
        junction: the vertex ``v`` where the root paths to ``v_i`` and
            ``v_{i+1}`` part.
        cycle: all edges of ``C*``, starting with ``e_i``, then from
            ``v_{i+1}`` round to ``v_i``.
        left: uncolored tree edges from ``v_i`` up to ``v``.
        right: uncolored tree edges from ``v`` down to ``v_{i+1}``.
        blocked: colored edges of ``C*``.
    """

    junction: int
    cycle: tuple[Edge, ...]
    left: tuple[Edge, ...]
    right: tuple[Edge, ...]
    blocked: frozenset[Edge]

    @property
    def deletable(self) -> tuple[Edge, ...]:
        return self.left + self.right


def partition_cycle(
    h: HalinGraph, t: PartialTree, i: int, *, strict: bool = False
) -> CyclePartition:
    """Locate ``C*`` for ``t + e_i`` and split its deletable edges.

    Paths are taken in the current tree ``t`` rooted at the characteristic
    tree's root.  Cycle edges already in ``t`` are never deletable.

    With ``strict=True`` a colored edge on the path from the junction to
    ``v_{i+1}`` raises ColoredRightEdgeError instead of being moved to
    ``blocked``.  Such edges do occur once earlier cycles have rerouted root
    paths, so strict mode is only useful to locate them.
    """
    if i in t.added:
        raise ValueError(f"cycle edge {i} already in tree")
    a, b = h.cycle_endpoints(i)
    rooted = RootedTree(t.edges(h), h.root, h.n)
    v = rooted.junction(a, b)
    cyc = h.cycle_edge_set
    colored = t.colored
    up = rooted.climb(a, v)
    down = rooted.climb(b, v)[::-1]
    if strict:
        bad = [e for e in down if e in colored]
        if bad:
            raise ColoredRightEdgeError(f"colored edges {bad} on the right side of e_{i + 1}")
    return CyclePartition(
        junction=v,
        cycle=(h.cycle_edges[i],) + tuple(down[::-1]) + tuple(up[::-1]),
        left=tuple(e for e in up if e not in cyc and e not in colored),
        right=tuple(e for e in down if e not in cyc and e not in colored),
        blocked=frozenset(e for e in up + down if e in colored),
    )


def naive_children(h: HalinGraph, t: PartialTree, i: int) -> list[PartialTree]:
    """Every ``t + e_i - b`` for tree edges ``b`` of the closed cycle."""
    a, b = h.cycle_endpoints(i)
    rooted = RootedTree(t.edges(h), h.root, h.n)
    v = rooted.junction(a, b)
    cyc = h.cycle_edge_set
    sigma = [e for e in rooted.climb(a, v) + rooted.climb(b, v)[::-1] if e not in cyc]
    added = t.added + (i,)
    return [PartialTree(t.kept - {e}, added) for e in sigma]


def distinct_children(
    h: HalinGraph, t: PartialTree, i: int, coloring: str = "full"
) -> list[PartialTree]:
    """Children of ``(t, e_i)`` under the blue-coloring rules, in deletion order."""
    part = partition_cycle(h, t, i)
    added = t.added + (i,)
    out = []
    left, right = part.left, part.right
    for k, e in enumerate(left):
        colored = t.colored
        if coloring != "none":
            colored = colored.union(right)
            if coloring == "full":
                colored = colored.union(left[:k])
        out.append(PartialTree(t.kept - {e}, added, colored))
    for k, e in enumerate(right):
        colored = t.colored
        if coloring != "none":
            colored = colored.union(right[k + 1:])
        out.append(PartialTree(t.kept - {e}, added, colored))
    return out


def children(h: HalinGraph, t: PartialTree, i: int, mode: str, coloring: str = "full") -> list[PartialTree]:
    if mode == "naive":
        return naive_children(h, t, i)
    if mode == "distinct":
        return distinct_children(h, t, i, coloring)
    raise ValueError(f"unknown mode {mode!r}")


def _check_args(mode: str, coloring: str) -> None:
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    if coloring not in COLORINGS:
        raise ValueError(f"coloring must be one of {COLORINGS}, got {coloring!r}")


def run_enumeration(h: HalinGraph, sink: EnumSink, mode: str, coloring: str) -> EnumReport:
    _check_args(mode, coloring)
    p = h.p

    def expand(t: PartialTree, i: int) -> None:
        sink.expansions += 1
        for child in children(h, t, i, mode, coloring):
            if sink.full:
                raise _Stop
            sink.emit(child.added, child.edges(h))
            for j in range(i + 1, p):
                expand(child, j)

    base = PartialTree.base(h)
    try:
        sink.emit((), base.kept)
        for i in range(p):
            expand(base, i)
    except _Stop:
        pass
    return sink.report(p)


def enumerate_naive(h: HalinGraph, sink: EnumSink | None = None) -> EnumReport:
    """List spanning trees of ``h``, possibly with repetitions.

    The characteristic tree is emitted first.  Every spanning tree appears
    at least once.
    """
    sink = EnumSink("store") if sink is None else sink
    return run_enumeration(h, sink, "naive", "full")


def enumerate_distinct(
    h: HalinGraph, sink: EnumSink | None = None, coloring: str = "full"
) -> EnumReport:
    """List every spanning tree of ``h`` exactly once.

    ``coloring`` other than ``"full"`` is for negative controls only.
    """
    sink = EnumSink("store") if sink is None else sink
    return run_enumeration(h, sink, "distinct", coloring)


def enumerate_trees(
    h: HalinGraph, mode: str = "distinct", coloring: str = "full"
) -> Iterator[tuple[int, frozenset[Edge]]]:
    """Lazily yield ``(level, edge set)`` in the sequential emission order."""
    _check_args(mode, coloring)

    def node(t: PartialTree, i: int) -> Iterator[PartialTree]:
        for child in children(h, t, i, mode, coloring):
            yield child
            for j in range(i + 1, h.p):
                yield from node(child, j)

    base = PartialTree.base(h)
    yield 0, base.kept
    for i in range(h.p):
        for child in node(base, i):
            yield child.level, child.edges(h)
