"""Command-line front end: regularity tables, exception sweeps, Pell data,
cohomology probes, convergence diagnostics.

All data goes to stdout (or --out), all diagnostics to stderr. Exit codes:
0 success, 1 I/O failure, 2 invalid parameters, 3 a request that hinges on
an undetermined cohomology value (including --scan-check mismatches).
Output is deterministic: fixed headers, fixed field order, ascending r, no
timestamps.
"""

from __future__ import annotations

import argparse
import json
import sys

from .cohomology import UnknownValueError, h_blowup, h_surface
from .pell import (
    NegativePellUnsolvableError,
    cf_expand_sqrt,
    convergents,
    negative_pell_solutions,
)
from .regularity import (
    RegRecord,
    exception_set,
    limit_gap,
    reg_closed_form,
    reg_scan,
    sparsity_check,
)
from .surface import ParameterError, Strictness, validate_params

EXIT_OK = 0
EXIT_IO = 1
EXIT_INVALID = 2
EXIT_UNKNOWN = 3

REG_HEADER = ("r", "floor_r_lambda2", "sigma", "reg", "is_exception")
LIMIT_HEADER = ("r", "gap_rational", "gap_sqrt_coeff", "bracket_ok")

# json consumers parse numbers as doubles; anything past 2^53 - 1 loses
# precision, so such integers are serialized as decimal strings.
_JSON_SAFE_MAX = 2**53 - 1


def _json_int(n: int):
    return n if abs(n) <= _JSON_SAFE_MAX else str(n)


def _bool_str(flag: bool) -> str:
    return "true" if flag else "false"


def _emit(lines: list[str], out_path: str | None) -> None:
    text = "".join(line + "\n" for line in lines)
    if out_path is None:
        sys.stdout.write(text)
    else:
        with open(out_path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _record_row(record: RegRecord, sep: str) -> str:
    return sep.join(
        (
            str(record.r),
            str(record.floor_r_lambda2),
            str(record.sigma),
            str(record.reg),
            _bool_str(record.is_exception),
        )
    )


def _records_json(params, records: list[RegRecord]) -> str:
    payload = {
        "params": {
            "a": _json_int(params.a),
            "b": _json_int(params.b),
            "c": _json_int(params.c),
            "d": _json_int(params.d),
        },
        "rows": [
            {
                "r": _json_int(rec.r),
                "floor_r_lambda2": _json_int(rec.floor_r_lambda2),
                "sigma": rec.sigma,
                "reg": _json_int(rec.reg),
                "is_exception": rec.is_exception,
            }
            for rec in records
        ],
    }
    return json.dumps(payload, indent=2)


def _strictness(args) -> Strictness:
    lattice_only = getattr(args, "lattice_only", False)
    return Strictness.LATTICE_ONLY if lattice_only else Strictness.STRICT


def _cmd_validate(args) -> int:
    params = validate_params(args.a, args.b, args.c, _strictness(args))
    print(f"valid: a={params.a} b={params.b} c={params.c} d={params.d}")
    return EXIT_OK


def _cmd_reg(args) -> int:
    if args.r_min < 1 or args.r_min > args.r_max:
        raise ValueError(f"need 1 <= r_min <= r_max, got [{args.r_min}, {args.r_max}]")
    params = validate_params(args.a, args.b, args.c)
    records = [reg_closed_form(params, r) for r in range(args.r_min, args.r_max + 1)]
    if args.scan_check:
        for record in records:
            scanned = reg_scan(params, record.r)
            if scanned != record.reg:
                print(
                    f"scan-check mismatch at r={record.r}: "
                    f"closed form {record.reg}, scan {scanned}",
                    file=sys.stderr,
                )
                return EXIT_UNKNOWN
    if args.format == "json":
        _emit([_records_json(params, records)], args.out)
    else:
        sep = "," if args.format == "csv" else "\t"
        lines = [sep.join(REG_HEADER)]
        lines.extend(_record_row(record, sep) for record in records)
        _emit(lines, args.out)
    return EXIT_OK


def _cmd_exceptions(args) -> int:
    params = validate_params(args.a, args.b, args.c)
    for r in exception_set(params, args.r_max):
        print(r)
    return EXIT_OK


def _cmd_pell(args) -> int:
    count = args.count
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    if args.cf:
        expansion = cf_expand_sqrt(args.d)
        print(f"cf: {expansion}")
        for p, q in convergents(args.d, count):
            print(f"{p},{q}")
    else:
        for solution in negative_pell_solutions(args.d, count):
            print(f"{solution.s},{solution.r}")
    return EXIT_OK


def _cmd_cohom(args) -> int:
    params = validate_params(args.a, args.b, args.c, _strictness(args))
    for i in (0, 1, 2):
        print(f"surface h{i}: {h_surface(params, args.m, args.r, i)}")
    for i in (1, 2, 3):
        print(f"ideal h{i}: {h_blowup(params, args.m, args.r, i)}")
    return EXIT_OK


def _cmd_limit(args) -> int:
    if args.r_max < 1:
        raise ValueError(f"r_max must be >= 1, got {args.r_max}")
    params = validate_params(args.a, args.b, args.c)
    lines = [",".join(LIMIT_HEADER)]
    for r in range(1, args.r_max + 1):
        gap = limit_gap(params, r)
        in_bracket = gap.sign() == 1 and (gap - 2).sign() == -1
        lines.append(f"{r},{gap.p},{-gap.q},{_bool_str(in_bracket)}")
    _emit(lines, args.out)
    return EXIT_OK


def _cmd_sparsity(args) -> int:
    print(_bool_str(sparsity_check(args.n_max)))
    return EXIT_OK


def _add_abc(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--a", type=int, required=True, help="hyperplane coordinate of the curve class")
    parser.add_argument("--b", type=int, required=True)
    parser.add_argument("--c", type=int, required=True)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="regpowers",
        description="Exact regularity of powers of curve ideal sheaves, "
        "with Pell-equation and cohomology diagnostics.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a parameter triple (a, b, c)")
    _add_abc(p)
    p.add_argument("--lattice-only", action="store_true", help="skip the strict-regime constraints")
    p.set_defaults(handler=_cmd_validate)

    p = sub.add_parser("reg", help="regularity table over a range of exponents")
    _add_abc(p)
    p.add_argument("--r-min", type=int, required=True)
    p.add_argument("--r-max", type=int, required=True)
    p.add_argument("--format", choices=("csv", "tsv", "json"), default="csv")
    p.add_argument("--out", help="write the table to a file instead of stdout")
    p.add_argument(
        "--scan-check",
        action="store_true",
        help="cross-check every row against the independent twist scan",
    )
    p.set_defaults(handler=_cmd_reg)

    p = sub.add_parser("exceptions", help="exponents where the regularity dips (sigma = 0)")
    _add_abc(p)
    p.add_argument("--r-max", type=int, required=True)
    p.set_defaults(handler=_cmd_exceptions)

    p = sub.add_parser("pell", help="negative Pell solutions or the continued fraction of sqrt(d)")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--count", type=int, default=5)
    p.add_argument("--cf", action="store_true", help="print the expansion and convergents instead")
    p.set_defaults(handler=_cmd_pell)

    p = sub.add_parser("cohom", help="probe cohomology at one twist (m, r)")
    _add_abc(p)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--lattice-only", action="store_true", help="skip the strict-regime constraints")
    p.set_defaults(handler=_cmd_cohom)

    p = sub.add_parser("limit", help="exact gap reg(r) - r*lambda2 per exponent")
    _add_abc(p)
    p.add_argument("--r-max", type=int, required=True)
    p.add_argument("--out", help="write the table to a file instead of stdout")
    p.set_defaults(handler=_cmd_limit)

    p = sub.add_parser("sparsity", help="check q_{2n} >= 3^n for the denominator recurrence")
    p.add_argument("--n-max", type=int, required=True)
    p.set_defaults(handler=_cmd_sparsity)

    return parser


def run_cli(argv: list[str] | None = None) -> int:
    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.handler(args)
    except UnknownValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNKNOWN
    except (ParameterError, NegativePellUnsolvableError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


def main() -> None:
    raise SystemExit(run_cli())


if __name__ == "__main__":
    main()
