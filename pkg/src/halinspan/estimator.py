"""scikit-learn style facade over the enumeration engines."""

from __future__ import annotations

from collections.abc import Mapping
from pathlib import Path

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .enumerator import COLORINGS, MODES, run_enumeration
from .fileio import parse_halin, read_halin
from .halin import HalinGraph, build_halin
from .parallel import run_parallel
from .sinks import DEFAULT_STORE_CAP, ConcurrentSink, EnumSink


def check_halin(X) -> HalinGraph:
    """Coerce ``X`` into a HalinGraph.

    Accepts a HalinGraph, text in the graph file format, a path to such a
    file, or a ``(root, children)`` pair as taken by ``build_halin``.
    """
    if isinstance(X, HalinGraph):
        return X
    if isinstance(X, Path):
        return read_halin(X)
    if isinstance(X, str):
        if "\n" in X or X.lstrip().startswith("halin"):
            return parse_halin(X)
        return read_halin(X)
    if isinstance(X, tuple) and len(X) == 2 and isinstance(X[1], Mapping):
        return build_halin(*X)
    raise TypeError(f"cannot interpret {type(X).__name__} as a Halin graph")


class SpanningTreeEnumerator(TransformerMixin, BaseEstimator):
    """Enumerate the spanning trees of a Halin graph.

    ``fit`` runs the enumeration; ``transform`` returns the 0/1 tree-by-edge
    incidence matrix, with columns in the order of ``edges_``.

    Parameters:
        mode: ``"distinct"`` or ``"naive"``.
        workers: ``None`` for the sequential engine, else the thread count.
        coloring: blue-coloring rule for distinct mode.
        sigma_start: rotation of the leaf cycle.
        cap: store-mode tree cap.
        seed: randomized task selection in parallel mode.

    Attributes:
        graph_: the (rotated) HalinGraph that was enumerated.
        trees_: list of ``(level, canonical key)`` in emission order.
        report_: EnumReport of the run.
        parallel_report_: ParallelReport, or None for sequential runs.
        edges_: sorted edge list of the graph.
        n_trees_: number of emissions.
    """

    def __init__(self, mode="distinct", workers=None, coloring="full", sigma_start=0,
                 cap=DEFAULT_STORE_CAP, seed=None):
        self.mode = mode
        self.workers = workers
        self.coloring = coloring
        self.sigma_start = sigma_start
        self.cap = cap
        self.seed = seed

    def fit(self, X, y=None):
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}")
        if self.coloring not in COLORINGS:
            raise ValueError(f"coloring must be one of {COLORINGS}")
        h = check_halin(X)
        if self.sigma_start:
            h = h.with_sigma_start(self.sigma_start)
        if self.workers is None:
            sink = EnumSink("store", cap=self.cap)
            report = run_enumeration(h, sink, self.mode, self.coloring)
            self.parallel_report_ = None
        else:
            sink = ConcurrentSink("store", cap=self.cap)
            report, self.parallel_report_ = run_parallel(
                h, self.mode, self.workers, sink, coloring=self.coloring, seed=self.seed)
        self.graph_ = h
        self.trees_ = list(sink.trees)
        self.report_ = report
        self.edges_ = sorted(h.edges)
        self.n_trees_ = report.total_emitted
        return self

    def transform(self, X=None):
        check_is_fitted(self, "trees_")
        column = {e: k for k, e in enumerate(self.edges_)}
        out = np.zeros((len(self.trees_), len(self.edges_)), dtype=np.int8)
        for row, (_, key) in enumerate(self.trees_):
            out[row, [column[e] for e in key]] = 1
        return out

    def predict(self, X=None):
        """Level (number of cycle edges) of every emitted tree."""
        check_is_fitted(self, "trees_")
        return np.array([level for level, _ in self.trees_], dtype=np.int64)
