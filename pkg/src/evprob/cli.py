"""Command-line front end.

    evprob query KB OBJECT TARGET [--alg ALG] [--trace] [--format text|json]
    evprob resolve INTERVALS|- [--alg ALG] [--trace] [--format text|json]
    evprob check KB

Exit codes: 0 success, 2 unreadable or invalid input, 3 resolution failure
(for example an empty interval list).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional, Sequence

from . import __version__
from .interval import Interval, conflicts
from .kb import QueryResult, answer_query, candidates_for
from .parser import ParseFailure, parse_interval_list, parse_kb
from .resolution import (
    IterationTrace,
    NoCandidatesError,
    OracleLimitError,
    ResolutionResult,
    TrackedInterval,
    UnknownAlgorithmError,
    get_algorithm,
)

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_RESOLUTION = 3


class CLIError(Exception):
    def __init__(self, message: str, code: int, details: Sequence[str] = ()):
        super().__init__(message)
        self.code = code
        self.details = list(details)


# -- record construction ---------------------------------------------------


def _tracked_json(t: TrackedInterval, labels) -> dict:
    return {
        "interval": str(t.interval),
        "constituents": sorted(labels(i) for i in t.constituents),
        "marked": t.marked,
    }


def _trace_json(trace: Sequence[IterationTrace], labels) -> List[dict]:
    return [
        {
            "iteration": it.iteration,
            "generated": [_tracked_json(t, labels) for t in it.generated],
            "surviving": [_tracked_json(t, labels) for t in it.surviving],
        }
        for it in trace
    ]


def query_record(obj: str, target: str, result: QueryResult, trace: bool) -> dict:
    record = {
        "query": {"object": obj, "target": target},
        "algorithm": result.algorithm,
        "interval": str(result.interval),
        "status": result.status,
        "reference_classes": sorted(result.reference_classes),
        "dropped_by_dominance": sorted(result.dropped_by_dominance),
        "trace": None,
    }
    if trace:
        steps = result.resolution.trace if result.resolution else ()
        names = [c.cls for c in result.candidates]
        record["trace"] = _trace_json(steps, lambda i: names[i])
    return record


def resolve_record(intervals: Sequence[Interval], result: ResolutionResult, trace: bool) -> dict:
    pairwise_agree = all(
        not conflicts(a, b) for i, a in enumerate(intervals) for b in intervals[i + 1 :]
    )
    record = {
        "query": "raw",
        "algorithm": result.algorithm,
        "interval": str(result.interval),
        "status": "nesting" if pairwise_agree else "resolved",
        "reference_classes": sorted(result.constituent_classes),
        "dropped_by_dominance": [],
        "trace": _trace_json(result.trace, int) if trace else None,
    }
    if result.ties:
        record["ties"] = [str(t) for t in result.ties]
    return record


# -- rendering -------------------------------------------------------------


def _render_tracked(t: dict) -> str:
    return t["interval"] + ("*" if t["marked"] else "")


def render_text(record: dict) -> str:
    lines = [record["interval"]]
    if record["query"] == "raw":
        refs = ", ".join(f"#{i}" for i in record["reference_classes"])
        lines.append(f"  inputs: {refs or '-'}")
    else:
        q = record["query"]
        lines.append(f"  query: {q['object']} {q['target']}")
        lines.append(f"  reference classes: {', '.join(record['reference_classes']) or '-'}")
        lines.append(
            f"  dropped by dominance: {', '.join(record['dropped_by_dominance']) or '-'}"
        )
    lines.append(f"  status: {record['status']}")
    lines.append(f"  algorithm: {record['algorithm']}")
    if record.get("ties"):
        lines.append(f"  width ties: {' '.join(record['ties'])}")
    if record["trace"] is not None:
        if not record["trace"]:
            lines.append("  trace: (no passes)")
        for it in record["trace"]:
            lines.append(f"  pass {it['iteration']}")
            lines.append("    generated: " + (" ".join(_render_tracked(t) for t in it["generated"]) or "-"))
            lines.append("    working set: " + (" ".join(_render_tracked(t) for t in it["surviving"]) or "-"))
    return "\n".join(lines) + "\n"


def emit(record: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(record, sort_keys=True, separators=(",", ":")) + "\n"
    return render_text(record)


# -- commands --------------------------------------------------------------


def _load_kb(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            source = fh.read()
    except OSError as exc:
        raise CLIError(f"cannot read {path}: {exc.strerror}", EXIT_INPUT) from None
    try:
        return parse_kb(source)
    except ParseFailure as exc:
        raise CLIError(
            f"{path}: {len(exc.errors)} error(s)",
            EXIT_INPUT,
            [f"{path}:{e}" for e in exc.errors],
        ) from None


def cmd_query(args) -> str:
    kb, _ = _load_kb(args.kb)
    try:
        result = answer_query(kb, args.object, args.target, args.alg)
    except UnknownAlgorithmError as exc:
        raise CLIError(str(exc), EXIT_RESOLUTION) from None
    return emit(query_record(args.object, args.target, result, args.trace), args.format)


def cmd_resolve(args) -> str:
    source = sys.stdin.read() if args.intervals == "-" else args.intervals
    try:
        intervals = parse_interval_list(source)
    except ParseFailure as exc:
        raise CLIError(
            f"{len(exc.errors)} error(s) in interval list", EXIT_INPUT, [str(e) for e in exc.errors]
        ) from None
    try:
        result = get_algorithm(args.alg)(intervals)
    except (NoCandidatesError, OracleLimitError, UnknownAlgorithmError) as exc:
        raise CLIError(str(exc), EXIT_RESOLUTION) from None
    return emit(resolve_record(intervals, result, args.trace), args.format)


def cmd_check(args) -> str:
    kb, warnings = _load_kb(args.kb)
    lines = [f"warning: {w}" for w in warnings]
    if not kb.queries:
        lines.append("OK")
    for q in kb.queries:
        n = len(candidates_for(kb, q.obj, q.target))
        lines.append(f"OK, {n} candidate{'' if n == 1 else 's'} for ({q.obj}, {q.target})")
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="evprob", description="Interval-valued evidential probability queries."
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, algs):
        p.add_argument("--alg", choices=algs, default="alg2prime")
        p.add_argument("--trace", action="store_true", help="print every pass")
        p.add_argument("--format", choices=("text", "json"), default="text")

    q = sub.add_parser("query", help="answer 'is OBJECT in TARGET' from a KB file")
    q.add_argument("kb")
    q.add_argument("object")
    q.add_argument("target")
    common(q, ("alg1", "alg2", "alg2prime"))
    q.set_defaults(func=cmd_query)

    r = sub.add_parser("resolve", help="resolve a raw list of intervals ('-' reads stdin)")
    r.add_argument("intervals")
    common(r, ("alg1", "alg2", "alg2prime", "oracle"))
    r.set_defaults(func=cmd_resolve)

    c = sub.add_parser("check", help="validate a KB file and count candidates for its queries")
    c.add_argument("kb")
    c.set_defaults(func=cmd_check)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        out = args.func(args)
    except CLIError as exc:
        for line in exc.details:
            print(line, file=sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    sys.stdout.write(out)
    return EXIT_OK


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
