"""Command-line front end.

Subcommands: `table` (weight tables), `verify` (property suites), `code`
(code construction and export), `ghw` (generalized Hamming weights),
`conjecture` (weight-ordering scans).

Exit codes: 0 success, 1 check failure, 2 usage error, 3 resource limit,
4 conjecture counterexample.  A counterexample is a reportable discovery,
not a malfunction, hence its own code.

All numbers in JSON/CSV output are decimal strings, so documents round-trip
byte-identically through `json.loads` / canonical re-emission.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import codes
from .cache import cache_from_env
from .errors import InvalidParameterError, ResourceLimitError
from .gfield import DEFAULT_ENUM_GUARD, field_new
from .oracle import DEFAULT_SUBSPACE_GUARD
from .qcombin import Params
from .spectrum import (
    ConjectureVerdict,
    conjecture_report,
    conjecture_report_rank_counts,
    weight_table,
)
from .verify import SUITES, run_suite

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3
EXIT_COUNTEREXAMPLE = 4


def canonical_json(doc) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"


def _write(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _csv_text(header: list[str], rows: list[list[str]]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _params(args) -> Params:
    return Params(args.q, args.l, args.m)


def _parse_q_list(text: str) -> list[int]:
    try:
        values = [int(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise InvalidParameterError(f"bad --q-list {text!r}") from exc
    if not values:
        raise InvalidParameterError("empty --q-list")
    return values


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def cmd_table(args) -> int:
    params = _params(args)
    t_values = [args.t] if args.t is not None else list(range(1, params.ell + 1))
    for t in t_values:
        if not 1 <= t <= params.ell:
            raise InvalidParameterError(f"need 1 <= t <= ell, got t={t}")
    tables = {t: weight_table(t, params) for t in t_values}
    if args.format == "json":
        doc = {
            "version": "1",
            "params": {"q": str(params.q), "ell": str(params.ell), "m": str(params.m)},
            "table": [
                {"t": str(t), "w_hat": [str(tables[t].w[r]) for r in range(1, params.ell + 1)]}
                for t in t_values
            ],
        }
        _write(canonical_json(doc), args.out)
    elif args.format == "csv":
        rows = [
            [str(t), str(r), str(tables[t].w[r])]
            for t in t_values
            for r in range(1, params.ell + 1)
        ]
        _write(_csv_text(["t", "r", "w_hat"], rows), args.out)
    else:
        lines = [f"w_hat_r(t) for q={params.q}, ell={params.ell}, m={params.m}"]
        width = max(
            len(str(tables[t].w[r])) for t in t_values for r in range(1, params.ell + 1)
        )
        lines.append(
            "t\\r " + " ".join(f"{r:>{width}}" for r in range(1, params.ell + 1))
        )
        for t in t_values:
            lines.append(
                f"{t:>3} "
                + " ".join(f"{tables[t].w[r]:>{width}}" for r in range(1, params.ell + 1))
            )
        _write("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    q_list = _parse_q_list(args.q_list) if args.q_list else None
    report = run_suite(
        args.suite,
        q_list=q_list,
        max_m=args.max_m,
        guard=args.guard,
        cache=cache_from_env(),
        jobs=args.jobs,
    )
    if args.format == "json":
        _write(canonical_json(report.to_dict()), args.out)
    elif args.format == "csv":
        rows = [
            [
                c.check_id,
                ";".join(f"{k}={v}" for k, v in c.point.items()),
                "1" if c.passed else "0",
                c.expected,
                c.actual,
            ]
            for c in report.checks
        ]
        _write(_csv_text(["check", "point", "passed", "expected", "actual"], rows), args.out)
    else:
        lines = [f"suite {report.suite}: {report.n_passed} passed, {report.n_failed} failed"]
        for c in report.checks:
            if not c.passed:
                point = ", ".join(f"{k}={v}" for k, v in c.point.items())
                lines.append(
                    f"FAIL {c.check_id} [{point}] expected {c.expected}, got {c.actual}"
                )
        _write("\n".join(lines) + "\n", args.out)
    return EXIT_OK if report.ok else EXIT_CHECK_FAILED


def cmd_code(args) -> int:
    params = _params(args)
    if args.t is None:
        raise InvalidParameterError("code requires --t")
    field = field_new(params.q)
    code = codes.build_code(args.t, params, field, args.guard)
    doc = codes.export_document(code)
    if args.format == "json":
        _write(canonical_json(doc), args.out)
    elif args.format == "csv":
        scalar = [
            [k, doc[k]]
            for k in ("n", "k", "min_distance", "min_weight_count", "dual_min_distance")
        ]
        _write(_csv_text(["key", "value"], scalar), args.out)
    else:
        lines = [
            f"code q={params.q} ell={params.ell} m={params.m} t={args.t}",
            f"n = {doc['n']}",
            f"k = {doc['k']}",
            f"min_distance = {doc['min_distance']}",
            f"min_weight_count = {doc['min_weight_count']}",
            f"dual_min_distance = {doc['dual_min_distance']}",
            "weight_distribution:",
        ]
        for w, c in sorted(doc["weight_distribution"].items(), key=lambda kv: int(kv[0])):
            lines.append(f"  {w}: {c}")
        _write("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_ghw(args) -> int:
    params = _params(args)
    if args.t is None:
        raise InvalidParameterError("ghw requires --t")
    field = field_new(params.q)
    if args.s is not None:
        entries = [
            codes.ghw(
                args.s, args.t, params, field, args.exhaustive,
                subspace_guard=args.subspace_guard, enum_guard=args.guard,
            )
        ]
    else:
        entries = codes.ghw_table(
            args.t, params, field, args.exhaustive,
            subspace_guard=args.subspace_guard, enum_guard=args.guard,
        )
    if args.format == "json":
        doc = {
            "version": "1",
            "params": {
                "q": str(params.q),
                "ell": str(params.ell),
                "m": str(params.m),
                "t": str(args.t),
            },
            "ghw": [
                {
                    "s": str(e.s),
                    "value": None if e.value is None else str(e.value),
                    "method": e.method,
                    "cross_checks": [
                        {"method": mth, "value": str(v)} for mth, v in e.cross_checks
                    ],
                }
                for e in entries
            ],
        }
        _write(canonical_json(doc), args.out)
    elif args.format == "csv":
        rows = [
            [
                str(e.s),
                "" if e.value is None else str(e.value),
                e.method,
                ";".join(f"{mth}={v}" for mth, v in e.cross_checks),
            ]
            for e in entries
        ]
        _write(_csv_text(["s", "value", "method", "cross_checks"], rows), args.out)
    else:
        lines = [f"ghw q={params.q} ell={params.ell} m={params.m} t={args.t}"]
        for e in entries:
            val = "?" if e.value is None else str(e.value)
            extra = "".join(f"  [{mth}: {v}]" for mth, v in e.cross_checks)
            lines.append(f"  s={e.s:<3} d_s={val:<12} method={e.method}{extra}")
        _write("\n".join(lines) + "\n", args.out)
    return EXIT_OK


_CLAUSES = (
    ("distinct", "distinct"),
    ("initial_increasing", "initial-increasing"),
    ("interleaved", "interleaved"),
)


def _violated_clauses(v: ConjectureVerdict) -> list[str]:
    return [label for attr, label in _CLAUSES if not getattr(v, attr)]


def _verdict_record(family: str, v: ConjectureVerdict) -> dict:
    return {
        "family": family,
        "q": str(v.params.q),
        "ell": str(v.params.ell),
        "m": str(v.params.m),
        "t": str(v.t),
        "weights": [str(w) for w in v.weights],
        "ordering": [str(r) for r in v.ordering],
        "in_range": v.in_range,
        "holds": v.holds,
        "violated": _violated_clauses(v) if not v.holds else [],
    }


def cmd_conjecture(args) -> int:
    q_list = _parse_q_list(args.q_list) if args.q_list else [2]
    if args.max_m < 1:
        raise InvalidParameterError(f"need --max-m >= 1, got {args.max_m}")
    records: list[dict] = []
    counterexample = False
    for q in q_list:
        for ell in range(1, args.max_m + 1):
            for m in range(ell, args.max_m + 1):
                params = Params(q, ell, m)
                for t in range(1, ell + 1):
                    for family, fn in (
                        ("code-weights", conjecture_report),
                        ("rank-counts", conjecture_report_rank_counts),
                    ):
                        v = fn(t, params)
                        if not v.in_range:
                            continue
                        records.append(_verdict_record(family, v))
                        if not v.holds:
                            counterexample = True
    if args.format == "json":
        doc = {
            "version": "1",
            "counterexample_found": counterexample,
            "verdicts": records,
        }
        _write(canonical_json(doc), args.out)
    elif args.format == "csv":
        rows = [
            [
                r["family"], r["q"], r["ell"], r["m"], r["t"],
                "1" if r["holds"] else "0",
                ";".join(r["violated"]),
                ";".join(r["weights"]),
                ";".join(r["ordering"]),
            ]
            for r in records
        ]
        _write(
            _csv_text(
                ["family", "q", "ell", "m", "t", "holds", "violated", "weights", "ordering"],
                rows,
            ),
            args.out,
        )
    else:
        lines = []
        for r in records:
            where = f"q={r['q']} ell={r['ell']} m={r['m']} t={r['t']}"
            order = " < ".join(
                f"w[{rk}]={w}"
                for rk, w in sorted(
                    zip(r["ordering"], sorted(r["weights"], key=int)),
                    key=lambda kv: int(kv[1]),
                )
            )
            if r["holds"]:
                lines.append(f"OK   {r['family']} {where}: {order}")
            else:
                lines.append(
                    f"COUNTEREXAMPLE {r['family']} {where}: "
                    f"violates {', '.join(r['violated'])}; "
                    f"weights (r=1..ell): {', '.join(r['weights'])}"
                )
        lines.append(
            "counterexample found" if counterexample else "no counterexample found"
        )
        _write("\n".join(lines) + "\n", args.out)
    return EXIT_COUNTEREXAMPLE if counterexample else EXIT_OK


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="detcodes",
        description="Exact weight tables, distributions and generalized "
        "Hamming weights of determinantal codes over finite fields.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, need_params=False):
        if need_params:
            p.add_argument("--q", type=int, required=True, help="field order")
            p.add_argument("--l", type=int, required=True, help="number of rows")
            p.add_argument("--m", type=int, required=True, help="number of columns")
        p.add_argument("--format", choices=("human", "json", "csv"), default="human")
        p.add_argument("--out", metavar="PATH", help="write output to PATH")
        p.add_argument(
            "--guard",
            type=int,
            default=DEFAULT_ENUM_GUARD,
            help="enumeration guard (max matrices per sweep)",
        )

    p = sub.add_parser("table", help="weight table w_hat_r(t)")
    common(p, need_params=True)
    p.add_argument("--t", type=int, help="rank bound (default: all 1..l)")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="run a property suite")
    common(p)
    p.add_argument("--suite", choices=SUITES, default="all")
    p.add_argument("--q-list", help="comma-separated field orders")
    p.add_argument("--max-m", type=int, help="largest matrix side in the grid")
    p.add_argument("--jobs", type=int, default=1, help="parallel enumeration jobs")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("code", help="construct and export a code")
    common(p, need_params=True)
    p.add_argument("--t", type=int, required=True, help="rank bound")
    p.set_defaults(func=cmd_code)

    p = sub.add_parser("ghw", help="generalized Hamming weights")
    common(p, need_params=True)
    p.add_argument("--t", type=int, required=True, help="rank bound")
    p.add_argument("--s", type=int, help="single subcode dimension (default: all)")
    p.add_argument(
        "--exhaustive",
        action="store_true",
        help="also run the exhaustive subspace search and cross-check",
    )
    p.add_argument(
        "--subspace-guard",
        type=int,
        default=DEFAULT_SUBSPACE_GUARD,
        help="max subspaces for the exhaustive search",
    )
    p.set_defaults(func=cmd_ghw)

    p = sub.add_parser("conjecture", help="scan weight-ordering conjectures")
    common(p)
    p.add_argument("--q-list", help="comma-separated field orders (default: 2)")
    p.add_argument("--max-m", type=int, default=5)
    p.set_defaults(func=cmd_conjecture)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InvalidParameterError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
