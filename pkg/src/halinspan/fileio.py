"""Text format for Halin graphs.

::

    # comment
    halin 6
    u : a v3
    a : v1 v2
    cycle: v1 v2 v3

Line one (after comments) is ``halin <n>``.  Each following line lists an
internal vertex and its children left to right.  The first internal vertex
listed is the root.  An optional ``cycle:`` line fixes the leaf order.
"""

from __future__ import annotations

from pathlib import Path

from .errors import ParseError, ValidationError
from .halin import HalinGraph, build_halin


def parse_halin(text: str) -> HalinGraph:
    """Parse the text format; raises ParseError or a ValidationError subclass."""
    header_n = None
    root = None
    children: dict[str, list[str]] = {}
    cycle = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if header_n is None:
            parts = line.split()
            if len(parts) != 2 or parts[0] != "halin":
                raise ParseError("expected header 'halin <n>'", lineno)
            try:
                header_n = int(parts[1])
            except ValueError:
                raise ParseError(f"bad vertex count {parts[1]!r}", lineno) from None
            if header_n < 1:
                raise ParseError(f"bad vertex count {header_n}", lineno)
            continue
        if line.startswith("cycle:") or line.startswith("cycle :"):
            if cycle is not None:
                raise ParseError("duplicate cycle line", lineno)
            cycle = line.split(":", 1)[1].split()
            if not cycle:
                raise ParseError("empty cycle line", lineno)
            continue
        if ":" not in line:
            raise ParseError(f"expected '<vertex> : <child> ...', got {line!r}", lineno)
        head, tail = line.split(":", 1)
        head_parts = head.split()
        if len(head_parts) != 1:
            raise ParseError(f"bad vertex name {head.strip()!r}", lineno)
        v = head_parts[0]
        if v in children:
            raise ParseError(f"vertex {v} listed twice", lineno)
        kids = tail.split()
        if not kids:
            raise ParseError(f"vertex {v} has no children", lineno)
        children[v] = kids
        if root is None:
            root = v
    if header_n is None:
        raise ParseError("empty file")
    if root is None:
        raise ParseError("no internal vertices listed")
    h = build_halin(root, children, cycle)
    if h.n != header_n:
        raise ValidationError(f"header says n={header_n} but the tree has {h.n} vertices")
    return h


def serialize_halin(h: HalinGraph) -> str:
    """Inverse of :func:`parse_halin` up to comments and whitespace."""
    lines = [f"halin {h.n}"]
    stack = [h.root]
    while stack:
        v = stack.pop()
        if h.children[v]:
            kids = " ".join(str(h.label(c)) for c in h.children[v])
            lines.append(f"{h.label(v)} : {kids}")
        stack.extend(reversed(h.children[v]))
    if h.leaf_order != h.default_leaf_order():
        lines.append("cycle: " + " ".join(str(h.label(v)) for v in h.leaf_order))
    return "\n".join(lines) + "\n"


def read_halin(path: str | Path) -> HalinGraph:
    return parse_halin(Path(path).read_text())


def write_halin(h: HalinGraph, path: str | Path) -> None:
    Path(path).write_text(serialize_halin(h))
