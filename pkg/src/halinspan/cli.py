"""Command line interface: ``halinspan <command> ...``.

Exit codes: 0 success or PASS, 1 usage or parse error, 2 validation error,
3 check FAIL, 4 resource cap hit.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .enumerator import COLORINGS, run_enumeration
from .errors import InfeasibleParamsError, InvalidParamsError, ParseError, SinkOverflowError, ValidationError
from .fileio import read_halin, serialize_halin
from .graph import format_key
from .halin import HalinGraph, random_halin
from .oracles import compute_bounds
from .parallel import DEFAULT_QUEUE_LIMIT, run_parallel, speedup_report
from .sinks import DEFAULT_STORE_CAP, ConcurrentSink, EnumSink
from .verify import run_check

EXIT_OK, EXIT_USAGE, EXIT_INVALID, EXIT_FAIL, EXIT_CAP = 0, 1, 2, 3, 4
STREAM_ABOVE_N = 14


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _load(path: str, sigma_start: int = 0) -> HalinGraph:
    h = read_halin(path)
    return h.with_sigma_start(sigma_start) if sigma_start else h


def _edges_text(h: HalinGraph, key) -> str:
    return ",".join(f"{h.label(a)}-{h.label(b)}" for a, b in key)


def cmd_validate(args) -> int:
    h = read_halin(args.file)
    print(h.describe())
    return EXIT_OK


def _report_lines(report) -> list[str]:
    lines = [f"total={report.total_emitted} distinct={report.distinct_count} duplicates={report.duplicates}"]
    lines.append("levels " + " ".join(f"{lvl}:{c}" for lvl, c in report.per_level))
    lines.append(f"max_delay={report.max_delay:.6f}s mean_delay={report.mean_delay:.6f}s")
    if report.partial:
        lines.append("partial=true")
    return lines


def cmd_enumerate(args) -> int:
    h = _load(args.file, args.sigma_start)
    fmt = args.format
    out = sys.stdout
    stream = args.stream or h.n > STREAM_ABOVE_N
    sorted_keys = fmt == "keys" and not stream

    def emit_line(level, key):
        if fmt == "human":
            out.write(f"level={level} edges={_edges_text(h, key)}\n")
        elif fmt == "keys":
            out.write(format_key(key) + "\n")
        else:
            out.write(json.dumps({"level": level, "key": format_key(key)}) + "\n")

    kwargs = dict(track_keys=True, cap=args.cap, limit=args.limit)
    if sorted_keys:
        mode = "store"
        kwargs["callback"] = None
    else:
        mode = "stream"
        kwargs["callback"] = emit_line
    sink_cls = ConcurrentSink if args.parallel else EnumSink
    sink = sink_cls(mode, **kwargs)
    prep = None
    code = EXIT_OK
    try:
        if args.parallel:
            report, prep = run_parallel(
                h, args.mode, args.parallel, sink, queue_limit=args.queue_limit, seed=args.seed)
        else:
            report = run_enumeration(h, sink, args.mode, "full")
    except SinkOverflowError as exc:
        report = exc.report
        code = EXIT_CAP
        print(f"error: {exc}", file=sys.stderr)
    if sorted_keys:
        for key in sorted(sink.keys):
            for _ in range(sink.keys[key]):
                out.write(format_key(key) + "\n")
    if fmt == "jsonl":
        rec = {"report": report.to_dict()}
        if prep is not None:
            rec["parallel"] = prep.to_dict()
        out.write(json.dumps(rec) + "\n")
    else:
        for line in _report_lines(report):
            print(line, file=sys.stderr)
        if prep is not None:
            print(json.dumps(prep.to_dict()), file=sys.stderr)
    return code


def cmd_check(args) -> int:
    h = _load(args.file, args.sigma_start)
    verdict = run_check(h, coloring=args.coloring)
    if args.format == "jsonl":
        for c in verdict.clauses:
            print(json.dumps({"clause": c.name, "ok": c.ok, "detail": c.detail}))
        print(json.dumps({"verdict": "PASS" if verdict.passed else "FAIL"}))
    else:
        print(verdict.summary())
    return EXIT_OK if verdict.passed else EXIT_FAIL


def cmd_gen(args) -> int:
    outdir = Path(args.out)
    outdir.mkdir(parents=True, exist_ok=True)
    for k in range(args.count):
        h = random_halin(args.seed + k, args.n, args.max_children)
        path = outdir / f"halin_n{args.n}_s{args.seed + k}.txt"
        path.write_text(serialize_halin(h))
        print(path)
    return EXIT_OK


def cmd_bounds(args) -> int:
    if args.file:
        h = read_halin(args.file)
        p, d = h.p, h.d
    elif args.p is not None and args.d is not None:
        p, d = args.p, args.d
    else:
        raise InvalidParamsError("give a graph file or both --p and --d")
    b = compute_bounds(p, d)
    if args.format == "jsonl":
        print(json.dumps({"p": p, "d": d, "node_bound": b.node_bound, "per_level": b.per_level,
                          "total": b.total, "headline": b.headline}))
    else:
        print(f"p={p} d={d}")
        for i in range(p):
            print(f"level {i}: node<={b.node_bound[i]} level<={b.per_level[i]}")
        print(f"total<={b.total} headline (2pd)^p={b.headline}")
    return EXIT_OK


def cmd_bench(args) -> int:
    if args.file:
        h = _load(args.file, args.sigma_start)
    else:
        h = random_halin(args.seed, args.n, args.max_children)
    counts = [int(x) for x in args.workers.split(",")]
    rows = speedup_report(h, args.mode, counts, repeats=args.repeats)
    for row in rows:
        if args.format == "jsonl":
            print(json.dumps({"graph": h.describe(), "mode": args.mode, **row}))
        else:
            print(f"workers={row['workers']} wall={row['wall_time']:.4f}s "
                  f"S={row['speedup']:.3f} E={row['efficiency']:.3f}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="halinspan", description="Enumerate spanning trees of Halin graphs.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def graph_arg(p, optional=False):
        if optional:
            p.add_argument("file", nargs="?")
        else:
            p.add_argument("file")
        p.add_argument("--sigma-start", type=int, default=0,
                       help="rotate the leaf cycle so e_1 is the given 0-based cycle edge")

    p = sub.add_parser("validate", help="validate a graph file")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("enumerate", help="list spanning trees")
    graph_arg(p)
    p.add_argument("--mode", choices=("distinct", "naive"), default="distinct")
    p.add_argument("--parallel", type=int, default=0, metavar="K", help="worker threads")
    p.add_argument("--format", choices=("human", "keys", "jsonl"), default="human")
    p.add_argument("--cap", type=int, default=DEFAULT_STORE_CAP, help="store-mode tree cap")
    p.add_argument("--limit", type=int, default=None, help="stop after this many trees")
    p.add_argument("--stream", action="store_true", help="stream even when the graph is small")
    p.add_argument("--seed", type=int, default=None, help="randomize parallel task selection")
    p.add_argument("--queue-limit", type=int, default=DEFAULT_QUEUE_LIMIT)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("check", help="verify the distinct engine against the oracles")
    graph_arg(p)
    p.add_argument("--coloring", choices=COLORINGS, default="full")
    p.add_argument("--format", choices=("human", "jsonl"), default="human")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("gen", help="write random Halin graph files")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--max-children", type=int, default=4)
    p.add_argument("--out", default=".")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bounds", help="print the level and total bounds")
    p.add_argument("file", nargs="?")
    p.add_argument("--p", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--format", choices=("human", "jsonl"), default="human")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("bench", help="time parallel runs for several worker counts")
    graph_arg(p, optional=True)
    p.add_argument("--mode", choices=("distinct", "naive"), default="distinct")
    p.add_argument("--workers", default="1,2,4,8")
    p.add_argument("--repeats", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n", type=int, default=16)
    p.add_argument("--max-children", type=int, default=4)
    p.add_argument("--format", choices=("human", "jsonl"), default="human")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValidationError, InfeasibleParamsError, InvalidParamsError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
