"""Batch verdict: one enumeration checked against every oracle."""

from __future__ import annotations

from dataclasses import dataclass, field

from .enumerator import enumerate_distinct
from .graph import format_key, is_spanning_tree
from .halin import HalinGraph
from .oracles import BRUTE_FORCE_MAX_N, brute_force_trees, check_depth_bound, compute_bounds, kirchhoff_count
from .sinks import EnumSink


@dataclass
class Clause:
    name: str
    ok: bool
    detail: str = ""


@dataclass
class Verdict:
    clauses: list[Clause] = field(default_factory=list)
    total: int = 0
    kirchhoff: int = 0

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.clauses)

    def failures(self) -> list[Clause]:
        return [c for c in self.clauses if not c.ok]

    def add(self, name: str, ok: bool, detail: str = "") -> None:
        self.clauses.append(Clause(name, bool(ok), detail))

    def summary(self) -> str:
        head = "PASS" if self.passed else "FAIL"
        lines = [f"{head} total={self.total} kirchhoff={self.kirchhoff}"]
        for c in self.clauses:
            mark = "ok  " if c.ok else "FAIL"
            lines.append(f"  {mark} {c.name}" + (f": {c.detail}" if c.detail else ""))
        return "\n".join(lines)


def run_check(
    h: HalinGraph, coloring: str = "full", guard: int = BRUTE_FORCE_MAX_N, max_listed: int = 5
) -> Verdict:
    """Enumerate ``h`` in distinct mode and test every claim about the output.

    Brute-force set equality is only attempted when ``h.n <= guard``.
    """
    verdict = Verdict()
    sink = EnumSink("count", track_keys=True)
    report = enumerate_distinct(h, sink, coloring=coloring)
    keys = sink.keys
    verdict.total = report.total_emitted
    verdict.kirchhoff = kirchhoff_count(h.n, h.edges).value

    verdict.add("depth_bound", check_depth_bound(h), f"d={h.d} n={h.n}")
    verdict.add(
        "count_equals_kirchhoff",
        report.total_emitted == verdict.kirchhoff,
        f"{report.total_emitted} vs {verdict.kirchhoff}",
    )
    dups = sorted(k for k, m in keys.items() if m > 1)
    verdict.add(
        "no_duplicate_keys",
        not dups,
        (f"{len(dups)} duplicate keys, e.g. " + "; ".join(format_key(k) for k in dups[:max_listed]))
        if dups else "",
    )
    bad = [k for k in keys if not is_spanning_tree(k, h.n) or not set(k) <= h.edges]
    verdict.add("all_spanning_trees", not bad, f"{len(bad)} invalid" if bad else "")
    if h.n <= guard:
        oracle = brute_force_trees(h.n, h.edges)
        missing = oracle - set(keys)
        extra = set(keys) - oracle
        verdict.add(
            "set_equals_brute_force",
            not missing and not extra,
            f"missing={len(missing)} extra={len(extra)}",
        )
    bounds = compute_bounds(h.p, h.d)
    over = [(lvl, c) for lvl, c in report.per_level if c > bounds.level_bound(lvl)]
    verdict.add("level_bounds", not over, f"over at levels {over}" if over else "")
    node_over = [
        (node, c) for node, c in report.per_node.items() if c > bounds.node_limit(len(node))
    ]
    verdict.add("node_bounds", not node_over, f"{len(node_over)} nodes over" if node_over else "")
    verdict.add(
        "total_below_headline",
        report.total_emitted <= bounds.headline,
        f"{report.total_emitted} <= {bounds.headline}",
    )
    return verdict
