"""Fork-join execution of the enumeration engines on a bounded thread pool.

Each node of the computational tree, a ``(tree, e_i)`` pair, is an
independent :class:`ExpansionTask`.  Running a task emits its children and
spawns one task per child and later cycle edge.  Spawned tasks go to a
shared pool; when the pool holds ``queue_limit`` tasks the spawning worker
runs the task itself instead.  The colored set travels inside the task as a
frozenset, so no two tasks can see each other's coloring.

With ``workers=1`` every task runs inline and the emission order is exactly
the sequential one.
"""

from __future__ import annotations

import random
import threading
import time
from dataclasses import asdict, dataclass

from .enumerator import PartialTree, _check_args, children
from .errors import ParallelRunError, SinkOverflowError
from .halin import HalinGraph
from .sinks import ConcurrentSink, EnumReport

DEFAULT_QUEUE_LIMIT = 4096


@dataclass(frozen=True)
class ExpansionTask:
    tree: PartialTree
    index: int
    depth: int = 1


@dataclass
class ParallelReport:
    tasks_spawned: int = 0
    max_task_depth: int = 0
    wall_time: float = 0.0
    workers: int = 1
    queued: int = 0
    inlined: int = 0
    max_emissions_per_task: int = 0
    max_spawns_per_task: int = 0
    sequential_wall_time: float | None = None

    def to_dict(self) -> dict:
        return asdict(self)


class _Counters:
    __slots__ = ("tasks", "depth", "queued", "inlined", "emit", "spawn")

    def __init__(self):
        self.tasks = self.depth = self.queued = self.inlined = self.emit = self.spawn = 0


class _Stop(Exception):
    pass


class _Pool:
    def __init__(self, h, sink, mode, coloring, workers, queue_limit, seed):
        self.h = h
        self.sink = sink
        self.mode = mode
        self.coloring = coloring
        self.workers = workers
        self.queue_limit = queue_limit
        self.seed = seed
        self.pending: list[ExpansionTask] = []
        self.outstanding = 0
        self.cond = threading.Condition()
        self.error: BaseException | None = None
        self.stopped = False
        self.counters = [_Counters() for _ in range(workers)]

    def submit(self, task: ExpansionTask, c: _Counters, rng) -> None:
        if self.workers > 1:
            with self.cond:
                if len(self.pending) < self.queue_limit:
                    self.pending.append(task)
                    self.outstanding += 1
                    c.queued += 1
                    self.cond.notify()
                    return
        c.inlined += 1
        self.execute(task, c, rng)

    def execute(self, task: ExpansionTask, c: _Counters, rng) -> None:
        if self.stopped:
            raise _Stop
        h, sink = self.h, self.sink
        c.tasks += 1
        c.depth = max(c.depth, task.depth)
        kids = children(h, task.tree, task.index, self.mode, self.coloring)
        c.emit = max(c.emit, len(kids))
        c.spawn = max(c.spawn, len(kids) * (h.p - task.index - 1))
        for child in kids:
            if sink.full:
                self.stopped = True
                raise _Stop
            sink.emit(child.added, child.edges(h))
            for j in range(task.index + 1, h.p):
                self.submit(ExpansionTask(child, j, task.depth + 1), c, rng)

    def worker(self, wid: int) -> None:
        c = self.counters[wid]
        rng = random.Random(None if self.seed is None else self.seed * 7919 + wid)
        while True:
            with self.cond:
                while not self.pending and self.outstanding and self.error is None and not self.stopped:
                    self.cond.wait()
                if self.error is not None or self.stopped or not self.outstanding:
                    return
                if self.seed is None:
                    task = self.pending.pop()
                else:
                    k = rng.randrange(len(self.pending))
                    self.pending[k], self.pending[-1] = self.pending[-1], self.pending[k]
                    task = self.pending.pop()
            try:
                self.execute(task, c, rng)
            except _Stop:
                with self.cond:
                    self.stopped = True
                    self.cond.notify_all()
                return
            except BaseException as exc:
                with self.cond:
                    if self.error is None:
                        self.error = exc
                    self.cond.notify_all()
                return
            with self.cond:
                self.outstanding -= 1
                if not self.outstanding:
                    self.cond.notify_all()


def run_parallel(
    h: HalinGraph,
    mode: str = "distinct",
    workers: int = 4,
    sink: ConcurrentSink | None = None,
    *,
    coloring: str = "full",
    queue_limit: int = DEFAULT_QUEUE_LIMIT,
    seed: int | None = None,
) -> tuple[EnumReport, ParallelReport]:
    """Enumerate spanning trees of ``h`` with a pool of ``workers`` threads.

    The emitted multiset, the per-level counts and the number of expansions
    match the sequential engine of the same mode; the order does not unless
    ``workers == 1``.  ``seed`` switches the pool from LIFO to seeded random
    task selection.

    Raises:
        SinkOverflowError: store cap exceeded; ``report`` is partial.
        ParallelRunError: any other worker failure; ``report`` is partial.
    """
    _check_args(mode, coloring)
    if workers < 1:
        raise ValueError("workers must be >= 1")
    if queue_limit < 1:
        raise ValueError("queue_limit must be >= 1")
    sink = ConcurrentSink("store") if sink is None else sink
    pool = _Pool(h, sink, mode, coloring, workers, queue_limit, seed)
    start = time.perf_counter()
    base = PartialTree.base(h)
    main = _Counters()
    error: BaseException | None = None
    try:
        sink.emit((), base.kept)
        for i in range(h.p):
            pool.submit(ExpansionTask(base, i), main, random.Random(seed))
    except _Stop:
        pass
    except BaseException as exc:
        error = exc
    if workers > 1 and error is None:
        threads = [threading.Thread(target=pool.worker, args=(w,), daemon=True) for w in range(workers)]
        for t in threads:
            t.start()
        for t in threads:
            t.join()
        error = pool.error
    wall = time.perf_counter() - start

    counters = pool.counters + [main]
    prep = ParallelReport(
        tasks_spawned=sum(c.tasks for c in counters),
        max_task_depth=max(c.depth for c in counters),
        wall_time=wall,
        workers=workers,
        queued=sum(c.queued for c in counters),
        inlined=sum(c.inlined for c in counters),
        max_emissions_per_task=max(c.emit for c in counters),
        max_spawns_per_task=max(c.spawn for c in counters),
    )
    sink.expansions = prep.tasks_spawned
    if error is not None:
        partial = sink.report(h.p, partial=True)
        if isinstance(error, SinkOverflowError):
            error.report = partial
            raise error
        raise ParallelRunError(error, partial) from error
    return sink.report(h.p, partial=pool.stopped), prep


def speedup_report(
    h: HalinGraph,
    mode: str = "distinct",
    worker_counts=(1, 2, 4, 8),
    repeats: int = 1,
) -> list[dict]:
    """Wall time, speed-up ``T_1 / T_k`` and efficiency ``S_k / k`` per worker count.

    Informational only: Python threads share one interpreter lock, so the
    numbers mostly measure scheduling overhead.
    """
    times = {}
    for k in sorted(set(worker_counts) | {1}):
        best = None
        for _ in range(repeats):
            _, prep = run_parallel(h, mode, k, ConcurrentSink("count"))
            best = prep.wall_time if best is None else min(best, prep.wall_time)
        times[k] = best
    t1 = times[1]
    rows = []
    for k in worker_counts:
        s = t1 / times[k] if times[k] > 0 else float("inf")
        rows.append({"workers": k, "wall_time": times[k], "speedup": s, "efficiency": s / k})
    return rows
