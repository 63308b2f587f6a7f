"""Enumerate the spanning trees of Halin graphs."""

from .enumerator import (
    CyclePartition,
    PartialTree,
    enumerate_distinct,
    enumerate_naive,
    enumerate_trees,
    partition_cycle,
)
from .errors import (
    ColoredRightEdgeError,
    DegreeTwoVertexError,
    HalinSpanError,
    InfeasibleParamsError,
    LeafOrderMismatchError,
    NotATreeError,
    ParseError,
    SinkOverflowError,
    TooFewLeavesError,
    TooLargeError,
    ValidationError,
)
from .estimator import SpanningTreeEnumerator, check_halin
from .fileio import parse_halin, read_halin, serialize_halin, write_halin
from .graph import canonical_key, fundamental_cycle, is_spanning_tree, tree_path
from .halin import HalinGraph, build_halin, depth, random_halin
from .oracles import brute_force_trees, check_depth_bound, compute_bounds, kirchhoff_count
from .parallel import run_parallel, speedup_report
from .sinks import ConcurrentSink, EnumReport, EnumSink, collect_levels
from .verify import run_check

__version__ = "0.1.0"
