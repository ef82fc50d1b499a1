"""
Command-line surface tying the library together.

Subcommands: count, enumerate, construct {s3,prop2,connolly}, lambda, wilf,
check, rect-check, verify {theorem6,corollary6,remark4,es}.

Exit codes: 0 success, 1 internal error or failed verification, 2 invalid
input, 3 feasibility refusal.  Output goes to stdout as JSON by default
(`--format table|csv` for humans and spreadsheets); progress and timing
chatter goes to stderr so stdout stays byte-deterministic: for fixed inputs
and flags, the output never depends on --jobs.

Counting results can be cached in a JSON-lines file under --cache-dir (or
$LATINPAT_CACHE_DIR); --no-cache disables it and --verify-cache recomputes
every hit and fails loudly on any mismatch.
"""
from __future__ import annotations

import argparse
import datetime
import hashlib
import json
import os
import sys
import time
from pathlib import Path
from typing import Callable

from . import __version__, analysis, construct, rectpat
from .enumeration import (
    FeasibilityError,
    count_squares,
    default_split_depth,
    enumerate_squares,
)
from .perm import find_occurrence, parse_perm
from .square import (
    AvoidanceSpec,
    column_permutations,
    load_rectangle,
    load_square,
    row_permutations,
    serialize_square,
    square_to_json,
)

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_INVALID = 2
EXIT_INFEASIBLE = 3

CACHE_ENV_VAR = "LATINPAT_CACHE_DIR"
CACHE_FILE = "cache.jsonl"


# ---------------------------------------------------------------------------
# output helpers
# ---------------------------------------------------------------------------

def _emit_json(obj) -> None:
    sys.stdout.write(json.dumps(obj, sort_keys=True) + "\n")


def _is_grid(v) -> bool:
    return (
        isinstance(v, list)
        and bool(v)
        and all(
            isinstance(row, list) and row and not any(isinstance(x, (dict, list)) for x in row)
            for row in v
        )
    )


def _emit_table(obj, indent: str = "") -> None:
    if isinstance(obj, dict):
        for k, v in obj.items():
            if _is_grid(v):
                sys.stdout.write(f"{indent}{k}:\n")
                for row in v:
                    sys.stdout.write(f"{indent}  {' '.join(str(x) for x in row)}\n")
            elif isinstance(v, (dict, list)):
                sys.stdout.write(f"{indent}{k}:\n")
                _emit_table(v, indent + "  ")
            else:
                sys.stdout.write(f"{indent}{k}: {v}\n")
    elif isinstance(obj, list):
        for v in obj:
            if isinstance(v, (dict, list)):
                _emit_table(v, indent + "  ")
            else:
                sys.stdout.write(f"{indent}- {v}\n")
    else:
        sys.stdout.write(f"{indent}{obj}\n")


def _progress_emitter(args) -> Callable[[int, int], None] | None:
    if getattr(args, "progress", None) != "json":
        return None

    def emit(done: int, total: int) -> None:
        sys.stderr.write(json.dumps({"event": "progress", "tasks_done": done, "tasks_total": total}) + "\n")
        sys.stderr.flush()

    return emit


# ---------------------------------------------------------------------------
# cache
# ---------------------------------------------------------------------------

class CacheStore:
    """Append-only JSON-lines cache; the last entry for a key wins."""

    def __init__(self, directory: Path):
        directory.mkdir(parents=True, exist_ok=True)
        self.path = directory / CACHE_FILE

    def lookup(self, key: dict) -> dict | None:
        if not self.path.exists():
            return None
        wanted = json.dumps(key, sort_keys=True)
        found = None
        with self.path.open() as fh:
            for line in fh:
                line = line.strip()
                if not line:
                    continue
                try:
                    entry = json.loads(line)
                except json.JSONDecodeError:
                    continue
                if json.dumps(entry.get("key"), sort_keys=True) == wanted:
                    found = entry.get("value")
        return found

    def store(self, key: dict, value: dict) -> None:
        entry = {
            "key": key,
            "value": value,
            "tool_version": __version__,
            "timestamp": datetime.datetime.now(datetime.timezone.utc).isoformat(),
        }
        with self.path.open("a") as fh:
            fh.write(json.dumps(entry, sort_keys=True) + "\n")


def _cache_store(args) -> CacheStore | None:
    if getattr(args, "no_cache", False):
        return None
    directory = getattr(args, "cache_dir", None) or os.environ.get(CACHE_ENV_VAR)
    if not directory:
        return None
    return CacheStore(Path(directory))


def _cached(args, key: dict, compute: Callable[[], dict]) -> dict:
    """
    Fetch from the cache or compute and store.  With --verify-cache a hit is
    recomputed and any discrepancy aborts the program.
    """
    store = _cache_store(args)
    if store is None:
        return compute()
    hit = store.lookup(key)
    if hit is not None:
        if getattr(args, "verify_cache", False):
            fresh = compute()
            if json.dumps(fresh, sort_keys=True) != json.dumps(hit, sort_keys=True):
                raise RuntimeError(
                    f"cache verification failed for key {json.dumps(key, sort_keys=True)}: "
                    f"cached {hit} != recomputed {fresh}"
                )
            sys.stderr.write("cache entry verified\n")
        return hit
    value = compute()
    store.store(key, value)
    return value


def _spec_digest(spec: AvoidanceSpec) -> str:
    return hashlib.sha256(
        json.dumps(spec.to_dict(), sort_keys=True).encode()
    ).hexdigest()


# ---------------------------------------------------------------------------
# shared argument plumbing
# ---------------------------------------------------------------------------

def _add_avoid_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--avoid", action="append", default=[], metavar="P",
                   help="pattern to avoid in all rows and all columns (repeatable)")
    p.add_argument("--avoid-rows", action="append", default=[], metavar="P",
                   help="pattern to avoid in rows only")
    p.add_argument("--avoid-cols", action="append", default=[], metavar="P",
                   help="pattern to avoid in columns only")
    p.add_argument("--avoid-symbols", action="append", default=[], metavar="P",
                   help="pattern the symbol permutations must avoid")


def _add_common_flags(p: argparse.ArgumentParser, formats=("json", "csv", "table")) -> None:
    p.add_argument("--format", choices=formats, default=formats[0])
    p.add_argument("--jobs", type=int, default=os.cpu_count() or 1,
                   help="worker processes (affects wall time only, never output)")
    p.add_argument("--timings", action="store_true",
                   help="report elapsed time on stderr")
    p.add_argument("--progress", choices=["json"],
                   help="emit machine-readable progress lines on stderr")


def _add_cache_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--cache-dir", help=f"cache directory (default: ${CACHE_ENV_VAR})")
    p.add_argument("--no-cache", action="store_true")
    p.add_argument("--verify-cache", action="store_true",
                   help="recompute cache hits and fail on mismatch")


def _build_spec(args) -> AvoidanceSpec:
    rows = [parse_perm(p) for p in args.avoid] + [parse_perm(p) for p in args.avoid_rows]
    cols = [parse_perm(p) for p in args.avoid] + [parse_perm(p) for p in args.avoid_cols]
    syms = [parse_perm(p) for p in args.avoid_symbols]
    return AvoidanceSpec(tuple(rows), tuple(cols), tuple(syms))


def _check_order(n: int) -> int:
    if n < 1:
        raise ValueError(f"order must be >= 1, got {n}")
    return n


# ---------------------------------------------------------------------------
# subcommand handlers
# ---------------------------------------------------------------------------

def _cmd_count(args) -> int:
    n = _check_order(args.order)
    spec = _build_spec(args)
    progress = _progress_emitter(args)
    t0 = time.perf_counter()

    def compute() -> dict:
        result = count_squares(
            n,
            spec,
            jobs=args.jobs,
            split_depth=default_split_depth(n),
            max_order=args.max_order,
            progress=progress,
        )
        return result.to_dict()

    key = {"op": "count", "order": n, "spec": _spec_digest(spec)}
    value = _cached(args, key, compute)
    if args.timings:
        sys.stderr.write(f"elapsed: {time.perf_counter() - t0:.3f}s\n")
    if args.format == "json":
        _emit_json(value)
    elif args.format == "csv":
        sys.stdout.write("order,count,nodes_explored\n")
        sys.stdout.write(f"{value['order']},{value['count']},{value['nodes_explored']}\n")
    else:
        _emit_table(value)
    return EXIT_OK


def _cmd_enumerate(args) -> int:
    n = _check_order(args.order)
    spec = _build_spec(args)
    out = sys.stdout
    seen = [0]
    progress = args.progress == "json"

    def visit(sq) -> None:
        out.write(json.dumps(square_to_json(sq), sort_keys=True) + "\n")
        seen[0] += 1
        if progress and seen[0] % 10000 == 0:
            sys.stderr.write(json.dumps({"event": "progress", "squares": seen[0]}) + "\n")
            sys.stderr.flush()

    enumerate_squares(n, spec, visit, jobs=args.jobs, max_order=args.max_order)
    if progress:
        sys.stderr.write(json.dumps({"event": "done", "squares": seen[0]}) + "\n")
    return EXIT_OK


def _emit_square(sq, fmt: str) -> None:
    if fmt == "json":
        _emit_json(square_to_json(sq))
    else:
        sys.stdout.write(serialize_square(sq))


def _cmd_construct_s3(args) -> int:
    sq = construct.construct_s3_avoider(_check_order(args.order), parse_perm(args.pattern), args.start)
    _emit_square(sq, args.format)
    return EXIT_OK


def _cmd_construct_prop2(args) -> int:
    sq = construct.complete_columns_avoiding(parse_perm(args.first_row), parse_perm(args.pattern))
    _emit_square(sq, args.format)
    return EXIT_OK


def _cmd_construct_connolly(args) -> int:
    if args.root < 1:
        raise ValueError(f"root must be >= 1, got {args.root}")
    _emit_square(construct.connolly_square(args.root), args.format)
    return EXIT_OK


def _lambda_report_from_dict(value: dict, fmt: str) -> None:
    if fmt == "json":
        _emit_json(value)
    elif fmt == "csv":
        sys.stdout.write("order,lower_bound,exact_value,witness_cap,method\n")
        sys.stdout.write(
            f"{value['order']},{value['lower_bound']},"
            f"{'' if value['exact_value'] is None else value['exact_value']},"
            f"{'' if value['witness_cap'] is None else value['witness_cap']},"
            f"{value['method']}\n"
        )
    else:
        _emit_table(value)


def _cmd_lambda(args) -> int:
    n = _check_order(args.order)
    if args.exhaustive:
        key = {"op": "lambda-exhaustive", "order": n}
        value = _cached(args, key, lambda: analysis.compute_lambda_exhaustive(n, jobs=args.jobs).to_json())
    else:
        value = analysis.lambda_bound_report(n).to_json()
    _lambda_report_from_dict(value, args.format)
    return EXIT_OK


def _wilf_csv_from_dict(value: dict) -> str:
    class_of = {}
    for cid, cls in enumerate(value["classes"], start=1):
        for p in cls["patterns"]:
            class_of[p] = cid
    lines = ["pattern,count,class_id"]
    for p in sorted(value["counts"]):
        lines.append(f"{p},{value['counts'][p]},{class_of[p]}")
    return "\n".join(lines) + "\n"


def _cmd_wilf(args) -> int:
    n = _check_order(args.order)
    if args.length < 1:
        raise ValueError(f"pattern length must be >= 1, got {args.length}")
    key = {"op": "wilf", "length": args.length, "order": n, "mode": args.mode}

    def compute() -> dict:
        return analysis.wilf_classes(
            args.length, n, mode=args.mode, jobs=args.jobs, force=args.force
        ).to_json()

    value = _cached(args, key, compute)
    if args.format == "json":
        _emit_json(value)
    elif args.format == "csv":
        sys.stdout.write(_wilf_csv_from_dict(value))
    else:
        _emit_table(value)
    return EXIT_OK


def _cmd_check(args) -> int:
    sq = load_square(Path(args.square).read_text())
    if getattr(args, "rectangle", None):
        rect = load_rectangle(Path(args.rectangle).read_text())
        witness = rectpat.contains_rectangle(sq, rect)
        result = {
            "order": sq.order,
            "pattern_rows": rect.rows,
            "pattern_cols": rect.cols,
            "contained": witness is not None,
            "witness": None if witness is None else {"rows": list(witness[0]), "cols": list(witness[1])},
        }
    else:
        pattern = parse_perm(args.pattern)
        witness = None
        for kind, lines in (("row", row_permutations(sq)), ("column", column_permutations(sq))):
            for idx, line in enumerate(lines, start=1):
                pos = find_occurrence(line, pattern)
                if pos is not None:
                    witness = {"line_kind": kind, "line_index": idx, "positions": list(pos)}
                    break
            if witness:
                break
        result = {
            "order": sq.order,
            "pattern": "".join(map(str, pattern)) if len(pattern) <= 9 else list(pattern),
            "contained": witness is not None,
            "witness": witness,
        }
    if args.format == "json":
        _emit_json(result)
    else:
        _emit_table(result)
    return EXIT_OK


def _cmd_rect_check(args) -> int:
    return _cmd_check(args)


def _cmd_verify(args) -> int:
    if args.what == "theorem6":
        pats = [parse_perm(p) for p in args.patterns] if args.patterns else None
        report = analysis.verify_full_length_counts(_check_order(args.order), pats, jobs=args.jobs)
    elif args.what == "corollary6":
        report = analysis.verify_triple_containment(_check_order(args.order))
    elif args.what == "remark4":
        report = analysis.verify_cyclic_structure(_check_order(args.order))
    else:  # es
        report = analysis.verify_erdos_szekeres(args.p, args.q)
    if args.format == "json":
        _emit_json(report)
    else:
        _emit_table(report)
    return EXIT_OK if report["ok"] else EXIT_INTERNAL


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="latinpat",
        description="Exact pattern-avoidance computations over Latin squares.",
    )
    parser.add_argument("--version", action="version", version=f"latinpat {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="count squares satisfying an avoidance spec")
    p.add_argument("--order", type=int, required=True)
    _add_avoid_flags(p)
    p.add_argument("--max-order", type=int, default=None,
                   help="raise the unrestricted-enumeration order bound (default 6)")
    _add_common_flags(p)
    _add_cache_flags(p)
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("enumerate", help="stream satisfying squares as JSON lines")
    p.add_argument("--order", type=int, required=True)
    _add_avoid_flags(p)
    p.add_argument("--max-order", type=int, default=None)
    _add_common_flags(p, formats=("json",))
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("construct", help="emit squares built in closed form")
    csub = p.add_subparsers(dest="generator", required=True)

    g = csub.add_parser("s3", help="the unique avoider of a length-3 pattern with a chosen top-left entry")
    g.add_argument("--order", type=int, required=True)
    g.add_argument("--pattern", required=True)
    g.add_argument("--start", type=int, required=True, help="top-left symbol, 1..order")
    g.add_argument("--format", choices=("grid", "json"), default="grid")
    g.set_defaults(func=_cmd_construct_s3)

    g = csub.add_parser(
        "prop2",
        help="the unique column-avoiding completion of an anchor row "
             "(top row; for patterns 231 and 213 the anchor is the bottom row)",
    )
    g.add_argument("--first-row", required=True, dest="first_row")
    g.add_argument("--pattern", required=True)
    g.add_argument("--format", choices=("grid", "json"), default="grid")
    g.set_defaults(func=_cmd_construct_prop2)

    g = csub.add_parser("connolly", help="the order-root^2 modular square with small line-monotone length")
    g.add_argument("--root", type=int, required=True)
    g.add_argument("--format", choices=("grid", "json"), default="grid")
    g.set_defaults(func=_cmd_construct_connolly)

    p = sub.add_parser("lambda", help="monotone-subsequence minimax analysis")
    p.add_argument("--order", type=int, required=True)
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--exhaustive", action="store_true", help="exact value by full scan (order <= 5)")
    mode.add_argument("--bounds", action="store_true", help="lower bound plus witness cap, no scan")
    _add_common_flags(p)
    _add_cache_flags(p)
    p.set_defaults(func=_cmd_lambda)

    p = sub.add_parser("wilf", help="partition patterns of one length by avoider count")
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--mode", choices=("filter", "pruned"), default="filter")
    p.add_argument("--force", action="store_true", help="lift the default feasibility box")
    _add_common_flags(p)
    _add_cache_flags(p)
    p.set_defaults(func=_cmd_wilf)

    p = sub.add_parser("check", help="test a square for a permutation pattern or rectangle pattern")
    p.add_argument("--square", required=True, help="square file (text grid or JSON)")
    what = p.add_mutually_exclusive_group(required=True)
    what.add_argument("--pattern", help="permutation pattern")
    what.add_argument("--rectangle", help="rectangle pattern file (text grid or JSON)")
    p.add_argument("--format", choices=("json", "table"), default="json")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("rect-check", help="test a square for a rectangle pattern")
    p.add_argument("--square", required=True)
    p.add_argument("--rectangle", required=True)
    p.add_argument("--format", choices=("json", "table"), default="json")
    p.set_defaults(func=_cmd_rect_check)

    p = sub.add_parser("verify", help="re-derive structural facts by enumeration; exit 1 on violation")
    vsub = p.add_subparsers(dest="what", required=True)

    v = vsub.add_parser("theorem6", help="full-length pattern counts match their closed forms")
    v.add_argument("--order", type=int, required=True)
    v.add_argument("--patterns", nargs="*", help="full-length patterns to sample")
    v.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    v.add_argument("--format", choices=("json", "table"), default="json")
    v.set_defaults(func=_cmd_verify)

    v = vsub.add_parser("corollary6", help="all-or-none containment of the two length-3 triples")
    v.add_argument("--order", type=int, required=True)
    v.add_argument("--format", choices=("json", "table"), default="json")
    v.set_defaults(func=_cmd_verify)

    v = vsub.add_parser("remark4", help="avoiders of 123 are the n cyclic-decreasing squares")
    v.add_argument("--order", type=int, required=True)
    v.add_argument("--format", choices=("json", "table"), default="json")
    v.set_defaults(func=_cmd_verify)

    v = vsub.add_parser("es", help="exhaustive monotone-subsequence guarantee over a small symmetric group")
    v.add_argument("--p", type=int, required=True, dest="p")
    v.add_argument("--q", type=int, required=True, dest="q")
    v.add_argument("--format", choices=("json", "table"), default="json")
    v.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except FeasibilityError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INFEASIBLE
    except (ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INVALID
    except Exception as exc:  # pragma: no cover - safety net
        sys.stderr.write(f"internal error: {exc}\n")
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
