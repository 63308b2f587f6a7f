"""Halin graph construction, validation and random generation.

A Halin graph is stored as its rooted characteristic tree (children in
left-to-right order) plus the leaf cycle.  The leaf cycle is by default the
left-to-right leaf traversal of the tree; any rotation or reflection of it
may be given instead, which is how the starting cycle edge is chosen.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import cached_property
from typing import Hashable, Mapping, Sequence

from .errors import (
    DegreeTwoVertexError,
    InfeasibleParamsError,
    LeafOrderMismatchError,
    NotATreeError,
    TooFewLeavesError,
    ValidationError,
)
from .graph import Edge, edge

Label = Hashable


@dataclass(frozen=True, eq=False)
class HalinGraph:
    """Immutable Halin graph on dense vertex ids ``0..n-1``.

    Attributes:
        root: id of the characteristic tree's root.
        children: ``children[v]`` is the ordered tuple of v's children.
        leaf_order: the leaves ``(v_1, ..., v_p)`` in cycle order; cycle edge
            ``e_i`` joins ``leaf_order[i]`` and ``leaf_order[(i + 1) % p]``.
        labels: original vertex labels, indexed by id.
    """

    root: int
    children: tuple[tuple[int, ...], ...]
    leaf_order: tuple[int, ...]
    labels: tuple[Label, ...] = field(default=())

    @property
    def n(self) -> int:
        return len(self.children)

    @property
    def p(self) -> int:
        return len(self.leaf_order)

    @cached_property
    def d(self) -> int:
        return max(self.vertex_depths)

    @cached_property
    def vertex_depths(self) -> tuple[int, ...]:
        depths = [0] * self.n
        stack = [self.root]
        while stack:
            v = stack.pop()
            for c in self.children[v]:
                depths[c] = depths[v] + 1
                stack.append(c)
        return tuple(depths)

    @cached_property
    def parent(self) -> tuple[int, ...]:
        parent = [-1] * self.n
        for v, cs in enumerate(self.children):
            for c in cs:
                parent[c] = v
        return tuple(parent)

    @cached_property
    def tree_edges(self) -> frozenset[Edge]:
        return frozenset(edge(v, c) for v, cs in enumerate(self.children) for c in cs)

    @cached_property
    def cycle_edges(self) -> tuple[Edge, ...]:
        """``(e_1, ..., e_p)`` in cycle order."""
        L, p = self.leaf_order, self.p
        return tuple(edge(L[i], L[(i + 1) % p]) for i in range(p))

    @cached_property
    def cycle_edge_set(self) -> frozenset[Edge]:
        return frozenset(self.cycle_edges)

    @cached_property
    def edges(self) -> frozenset[Edge]:
        return self.tree_edges | self.cycle_edge_set

    def cycle_endpoints(self, i: int) -> tuple[int, int]:
        """``(v_i, v_{i+1})`` for the 0-based cycle edge index ``i``."""
        return self.leaf_order[i], self.leaf_order[(i + 1) % self.p]

    def label(self, v: int) -> Label:
        return self.labels[v] if self.labels else v

    def default_leaf_order(self) -> tuple[int, ...]:
        return _leaf_traversal(self.root, self.children)

    def with_sigma_start(self, start: int) -> HalinGraph:
        """Same graph with the leaf cycle rotated so ``e_1`` is the old ``e_{start+1}``."""
        k = start % self.p
        order = self.leaf_order[k:] + self.leaf_order[:k]
        return HalinGraph(self.root, self.children, order, self.labels)

    def describe(self) -> str:
        return f"n={self.n} p={self.p} d={self.d}"

    def __eq__(self, other):
        if not isinstance(other, HalinGraph):
            return NotImplemented
        return (self.root, self.children, self.leaf_order, self.labels) == (
            other.root, other.children, other.leaf_order, other.labels)

    def __hash__(self):
        return hash((self.root, self.children, self.leaf_order))

    def __repr__(self):
        return f"HalinGraph({self.describe()})"


def _leaf_traversal(root: int, children: Sequence[Sequence[int]]) -> tuple[int, ...]:
    out = []
    stack = [root]
    while stack:
        v = stack.pop()
        if not children[v]:
            out.append(v)
        stack.extend(reversed(children[v]))
    return tuple(out)


def _is_rotation_or_reflection(order: Sequence[int], base: Sequence[int]) -> bool:
    if len(order) != len(base) or set(order) != set(base):
        return False
    p = len(base)
    k = base.index(order[0])
    forward = tuple(base[(k + j) % p] for j in range(p))
    backward = tuple(base[(k - j) % p] for j in range(p))
    return tuple(order) in (forward, backward)


def build_halin(
    root: Label,
    children: Mapping[Label, Sequence[Label]],
    leaf_order: Sequence[Label] | None = None,
) -> HalinGraph:
    """Validate a rooted tree spec and close its leaves into a cycle.

    Vertex ids are assigned in preorder, so the root is always id 0.

    Args:
        root: label of the root vertex.
        children: maps each internal vertex label to its children, left to
            right.  Leaves may be omitted or map to an empty sequence.
        leaf_order: optional explicit cycle order of the leaves; it must be a
            rotation or reflection of the left-to-right leaf traversal.

    Raises:
        NotATreeError: a vertex is reached twice, or a listed vertex is
            unreachable from ``root``.
        DegreeTwoVertexError: the root has fewer than three children or
            another internal vertex has exactly one child.
        TooFewLeavesError: fewer than three leaves.
        LeafOrderMismatchError: ``leaf_order`` is not a rotation or
            reflection of the planar leaf traversal.
    """
    ids: dict[Label, int] = {}
    labels: list[Label] = []
    kids: list[list[int]] = []
    # preorder walk; ids are assigned on pop so the root is 0 and leaves
    # appear in left-to-right order
    stack: list[tuple[Label, int]] = [(root, -1)]
    while stack:
        label, parent = stack.pop()
        if label in ids:
            raise NotATreeError(f"vertex {label!s} reached twice")
        vid = ids[label] = len(labels)
        labels.append(label)
        kids.append([])
        if parent >= 0:
            kids[parent].append(vid)
        stack.extend((c, vid) for c in reversed(list(children.get(label, ()))))

    mentioned = set(children) | {c for cs in children.values() for c in cs}
    stray = [lab for lab in mentioned if lab not in ids]
    if stray:
        raise NotATreeError(f"vertices not reachable from root: {sorted(map(str, stray))}")

    for v, cs in enumerate(kids):
        if v != 0 and len(cs) == 1:
            raise DegreeTwoVertexError(labels[v])
    if len(kids[0]) == 2:
        raise DegreeTwoVertexError(labels[0])
    if len(kids[0]) < 3:
        raise ValidationError(f"root {labels[0]!s} has {len(kids[0])} children, needs >= 3")

    children_t = tuple(tuple(cs) for cs in kids)
    base = _leaf_traversal(0, children_t)
    if len(base) < 3:
        raise TooFewLeavesError(f"only {len(base)} leaves")
    if leaf_order is None:
        order_t = base
    else:
        try:
            order_t = tuple(ids[lab] for lab in leaf_order)
        except KeyError as exc:
            raise LeafOrderMismatchError(f"unknown vertex {exc.args[0]!s} in leaf order") from None
        if not _is_rotation_or_reflection(order_t, base):
            raise LeafOrderMismatchError(
                "leaf order is not a rotation or reflection of the planar leaf traversal")
    return HalinGraph(0, children_t, order_t, tuple(labels))


def depth(h: HalinGraph) -> int:
    """Length of the longest root-to-leaf path of the characteristic tree."""
    return h.d


def random_halin(seed: int, target_n: int, max_children: int = 4) -> HalinGraph:
    """Grow a random Halin graph top-down.

    The root gets between 3 and ``max_children`` children, then random leaves
    are expanded into 2..``max_children`` children until the vertex budget is
    spent.  Child counts that would strand a single leftover vertex are
    avoided when possible, so ``n == target_n`` except when no combination of
    child counts can hit it exactly (then ``n`` overshoots by one).
    Deterministic in ``seed``; not uniform over Halin graphs.
    """
    if target_n < 4:
        raise InfeasibleParamsError(f"target_n must be >= 4, got {target_n}")
    if max_children < 3:
        raise InfeasibleParamsError("max_children must be >= 3 (the root needs three children)")
    rng = random.Random(seed)
    budget = target_n - 1

    def pick(lo: int, remaining: int) -> int:
        hi = min(max_children, remaining)
        if hi < lo:
            return lo
        options = [k for k in range(lo, hi + 1) if remaining - k != 1]
        return rng.choice(options or list(range(lo, hi + 1)))

    children: dict[int, list[int]] = {}
    k = pick(3, budget)
    children[0] = list(range(1, k + 1))
    leaves = list(children[0])
    nxt = k + 1
    budget -= k
    while budget >= 1:
        v = leaves.pop(rng.randrange(len(leaves)))
        k = pick(2, budget)
        children[v] = list(range(nxt, nxt + k))
        leaves.extend(children[v])
        nxt += k
        budget -= k
    return build_halin(0, children)
