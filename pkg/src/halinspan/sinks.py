"""Emission sinks and enumeration reports."""

from __future__ import annotations

import threading
import time
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Iterable

from .errors import SinkOverflowError
from .graph import CanonicalKey, canonical_key

DEFAULT_STORE_CAP = 10**7

Emission = tuple[int, CanonicalKey]


@dataclass
class EnumReport:
    total_emitted: int = 0
    distinct_count: int | None = None
    per_level: list[tuple[int, int]] = field(default_factory=list)
    max_delay: float = 0.0
    mean_delay: float = 0.0
    duplicate_multiplicities: dict[int, int] = field(default_factory=dict)
    duplicates_by_level: dict[int, int] = field(default_factory=dict)
    per_node: dict[tuple[int, ...], int] = field(default_factory=dict)
    expansions: int = 0
    partial: bool = False

    @property
    def duplicates(self) -> int | None:
        if self.distinct_count is None:
            return None
        return self.total_emitted - self.distinct_count

    def to_dict(self) -> dict:
        return {
            "total": self.total_emitted,
            "distinct": self.distinct_count,
            "duplicates": self.duplicates,
            "per_level": [list(x) for x in self.per_level],
            "max_delay": self.max_delay,
            "mean_delay": self.mean_delay,
            "duplicate_multiplicities": {str(k): v for k, v in sorted(self.duplicate_multiplicities.items())},
            "duplicates_by_level": {str(k): v for k, v in sorted(self.duplicates_by_level.items())},
            "expansions": self.expansions,
            "partial": self.partial,
        }


def collect_levels(report: EnumReport) -> list[tuple[int, int]]:
    """Emission counts grouped by the number of cycle edges in the tree."""
    return list(report.per_level)


class EnumSink:
    """Receives emitted spanning trees.

    Args:
        mode: ``"store"`` keeps every tree (in emission order) in ``trees``;
            ``"stream"`` forwards each emission to ``callback``;
            ``"count"`` only counts.
        track_keys: keep a multiset of canonical keys so the report can give
            distinct counts and duplicate histograms.  Defaults to on for
            store mode and off otherwise.
        cap: store-mode limit; exceeding it raises SinkOverflowError.
        callback: ``callback(level, key)`` for stream mode.
        limit: stop the enumeration quietly after this many emissions; the
            report is then marked partial.
    """

    def __init__(
        self,
        mode: str = "store",
        *,
        track_keys: bool | None = None,
        cap: int = DEFAULT_STORE_CAP,
        callback: Callable[[int, CanonicalKey], None] | None = None,
        limit: int | None = None,
    ):
        if mode not in ("store", "stream", "count"):
            raise ValueError(f"unknown sink mode {mode!r}")
        if cap <= 0:
            raise ValueError("cap must be positive")
        if mode == "stream" and callback is None:
            raise ValueError("stream mode needs a callback")
        self.mode = mode
        self.cap = cap
        self.callback = callback
        self.limit = limit
        self.track_keys = mode == "store" if track_keys is None else track_keys
        self.trees: list[Emission] = []
        self.level_counts: Counter[int] = Counter()
        self.node_counts: Counter[tuple[int, ...]] = Counter()
        self.keys: Counter[CanonicalKey] = Counter()
        self.key_levels: dict[CanonicalKey, int] = {}
        self.total = 0
        self.expansions = 0
        self._start = time.perf_counter()
        self._last = self._start
        self._max_delay = 0.0

    @property
    def full(self) -> bool:
        return self.limit is not None and self.total >= self.limit

    def emit(self, added: tuple[int, ...], tree: Iterable) -> None:
        key = canonical_key(tree)
        level = len(added)
        if self.mode == "store" and len(self.trees) >= self.cap:
            raise SinkOverflowError(self.cap, self.report(partial=True))
        now = time.perf_counter()
        self._max_delay = max(self._max_delay, now - self._last)
        self._last = now
        self.total += 1
        self.level_counts[level] += 1
        self.node_counts[added] += 1
        if self.track_keys:
            self.keys[key] += 1
            self.key_levels[key] = level
        if self.mode == "store":
            self.trees.append((level, key))
        elif self.mode == "stream":
            self.callback(level, key)

    def report(self, p: int | None = None, partial: bool = False) -> EnumReport:
        top = p if p is not None else max(self.level_counts, default=0)
        per_level = [(lvl, self.level_counts.get(lvl, 0)) for lvl in range(top + 1)]
        rep = EnumReport(
            total_emitted=self.total,
            per_level=per_level,
            max_delay=self._max_delay,
            mean_delay=(self._last - self._start) / self.total if self.total else 0.0,
            per_node=dict(self.node_counts),
            expansions=self.expansions,
            partial=partial or self.full,
        )
        if self.track_keys:
            rep.distinct_count = len(self.keys)
            rep.duplicate_multiplicities = dict(Counter(self.keys.values()))
            dup_levels: Counter[int] = Counter()
            for key, mult in self.keys.items():
                if mult > 1:
                    dup_levels[self.key_levels[key]] += mult - 1
            rep.duplicates_by_level = dict(dup_levels)
        return rep


class ConcurrentSink(EnumSink):
    """EnumSink whose appends are serialized by a lock."""

    def __init__(self, mode: str = "store", **kwargs):
        super().__init__(mode, **kwargs)
        self._lock = threading.Lock()

    def emit(self, added, tree) -> None:
        with self._lock:
            super().emit(added, tree)

    def add_expansions(self, count: int) -> None:
        with self._lock:
            self.expansions += count
