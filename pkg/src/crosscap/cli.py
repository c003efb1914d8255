"""Command-line surface: invariant queries, expansion inspection, families, sweeps.

Exit codes: 0 = success / all checks hold, 1 = usage or input error,
2 = verification finding or internal failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from math import gcd
from pathlib import Path

from .continued_fractions import (
    HalfInteger,
    cf_expand,
    coefficient_sum,
    make_rational,
    skipped_sum,
)
from .torus_knots import (
    IntegralityError,
    InvariantRecord,
    invariants,
    mobius_family,
    normalize,
    sharp_family,
)
from .verify import (
    CHECK_NAMES,
    SweepCapError,
    SweepConfig,
    check_knot,
    enumerate_coprime,
    run_verification,
    serialize_report,
)

RECORD_FIELDS = (
    "p",
    "q",
    "parity",
    "genus",
    "crossing",
    "crosscap",
    "bound_clark",
    "bound_my",
    "bound_thm1",
    "bound_thm2",
    "gap",
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_FINDING = 2


class _Parser(argparse.ArgumentParser):
    """argparse exits with 2 on bad flags; the contract here reserves 2 for findings."""

    def error(self, message: str) -> None:
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _usage_error(message: str) -> int:
    print(f"crosscap: error: {message}", file=sys.stderr)
    return EXIT_USAGE


def _finding_error(message: str) -> int:
    print(f"crosscap: {message}", file=sys.stderr)
    return EXIT_FINDING


def _add_format_flags(sub: argparse.ArgumentParser, with_csv: bool = True) -> None:
    group = sub.add_mutually_exclusive_group()
    group.add_argument(
        "--json",
        nargs="?",
        const="-",
        metavar="PATH",
        help="emit JSON (to PATH, or stdout when no path is given)",
    )
    if with_csv:
        group.add_argument(
            "--csv",
            nargs="?",
            const="-",
            metavar="PATH",
            help="emit CSV rows (to PATH, or stdout when no path is given)",
        )


def _emit(text: str, target: str) -> None:
    if target == "-":
        sys.stdout.write(text)
    else:
        Path(target).write_text(text)


def _csv_text(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _record_row(rec: InvariantRecord) -> list:
    fields = rec.as_dict()
    return [fields[name] for name in RECORD_FIELDS]


def _print_record_human(rec: InvariantRecord, a: int, b: int) -> None:
    fields = rec.as_dict()
    if fields["parity"] == "unknot":
        print(f"({max(a, b)},{min(a, b)}) is the unknot: every invariant is zero")
        return
    print(f"torus knot ({fields['p']},{fields['q']}), parity {fields['parity']}")
    print(f"  genus:     {fields['genus']}")
    print(f"  crossing:  {fields['crossing']}")
    print(f"  crosscap:  {fields['crosscap']}")
    print(f"  gap (genus - crosscap): {fields['gap']}")
    print(
        "  bounds:    "
        f"clark={fields['bound_clark']} "
        f"murakami-yasuhara={fields['bound_my']} "
        f"genus-based={fields['bound_thm1']} "
        f"crossing-based={fields['bound_thm2']}"
    )


def cmd_invariants(args: argparse.Namespace) -> int:
    try:
        knot = normalize(args.p, args.q)
    except ValueError as exc:
        return _usage_error(str(exc))
    try:
        rec = invariants(knot)
    except IntegralityError as exc:
        return _finding_error(str(exc))
    if args.json is not None:
        _emit(json.dumps(rec.as_dict(), indent=2) + "\n", args.json)
    elif args.csv is not None:
        _emit(_csv_text(list(RECORD_FIELDS), [_record_row(rec)]), args.csv)
    else:
        _print_record_human(rec, args.p, args.q)
    return EXIT_OK


def cmd_cf(args: argparse.Namespace) -> int:
    a, b = args.numerator, args.denominator
    if a < 0 or b < 1:
        return _usage_error(f"need numerator >= 0 and denominator >= 1, got {a}/{b}")
    if gcd(a, b) != 1:
        return _usage_error(f"{a}/{b} is not in lowest terms (gcd {gcd(a, b)})")
    cf = cf_expand(make_rational(a, b))
    total = skipped_sum(cf)
    n_value = HalfInteger(total)
    if args.json is not None:
        payload = {
            "numerator": a,
            "denominator": b,
            "coefficients": list(cf.coefficients),
            "coefficient_sum": coefficient_sum(cf),
            "skipped_total": total,
            "n": str(n_value),
        }
        _emit(json.dumps(payload, indent=2) + "\n", args.json)
    else:
        print(f"{a}/{b} = {cf}")
        print(f"coefficient sum: {coefficient_sum(cf)}")
        print(f"skipped total:   {total}")
        print(f"N:               {n_value}")
    return EXIT_OK


def _verify_csv_text(max_p: int) -> str:
    header = list(RECORD_FIELDS) + [f"violated_{name}" for name in CHECK_NAMES]
    rows = []
    for knot in enumerate_coprime(max_p):
        checked = check_knot(knot)
        flags = [1 if name in checked.violated else 0 for name in CHECK_NAMES]
        rows.append(_record_row(checked.record) + flags)
    return _csv_text(header, rows)


def cmd_verify(args: argparse.Namespace) -> int:
    try:
        config = SweepConfig(max_p=args.max_p, workers=args.workers)
    except SweepCapError as exc:
        return _finding_error(str(exc))
    except ValueError as exc:
        return _usage_error(str(exc))
    try:
        report = run_verification(config)
        if args.csv is not None:
            _emit(_verify_csv_text(config.max_p), args.csv)
    except IntegralityError as exc:
        return _finding_error(str(exc))

    if args.json is not None:
        _emit(serialize_report(report), args.json)
    if args.json != "-" and args.csv != "-":
        witness = report.max_gap_witness
        wd = witness.as_dict()
        print(
            f"checked {report.knots_checked} torus knots with 2 <= q < p <= {report.max_p}"
        )
        print(
            f"{len(report.violations)} violations, "
            f"{len(report.lemma_failures)} lemma failures, "
            f"{len(report.sharpness_hits)} sharpness hits"
        )
        print(
            f"max gap: {wd['gap']} at ({wd['p']},{wd['q']}) "
            f"(genus {witness.genus}, crosscap {witness.crosscap})"
        )
    if report.violations or report.lemma_failures:
        return EXIT_FINDING
    return EXIT_OK


def cmd_family(args: argparse.Namespace) -> int:
    if args.count < 1:
        return _usage_error(f"count must be at least 1, got {args.count}")
    generator = mobius_family if args.name == "mobius" else sharp_family
    rows = []
    all_match = True
    try:
        for n in range(1, args.count + 1):
            knot, expected = generator(n)
            computed = invariants(knot)
            match = computed == expected
            all_match = all_match and match
            rows.append((n, computed, expected, match))
    except IntegralityError as exc:
        return _finding_error(str(exc))

    if args.json is not None:
        payload = [
            {
                "n": n,
                "match": match,
                "computed": computed.as_dict(),
                "expected": expected.as_dict(),
            }
            for n, computed, expected, match in rows
        ]
        _emit(json.dumps(payload, indent=2) + "\n", args.json)
    elif args.csv is not None:
        header = ["n"] + list(RECORD_FIELDS) + [
            "expected_genus",
            "expected_crossing",
            "expected_crosscap",
            "expected_gap",
            "match",
        ]
        csv_rows = [
            [n]
            + _record_row(computed)
            + [expected.genus, expected.crossing, expected.crosscap, expected.gap]
            + [1 if match else 0]
            for n, computed, expected, match in rows
        ]
        _emit(_csv_text(header, csv_rows), args.csv)
    else:
        print(f"{args.name} family, n = 1..{args.count}")
        print(f"{'n':>4}  {'knot':>10}  {'genus':>6}  {'crossing':>8}  {'crosscap':>8}  {'gap':>6}  match")
        for n, computed, expected, match in rows:
            knot = computed.knot
            print(
                f"{n:>4}  {str(knot):>10}  {computed.genus:>6}  {computed.crossing:>8}  "
                f"{computed.crosscap:>8}  {computed.gap:>6}  {'ok' if match else 'MISMATCH'}"
            )
    if not all_match:
        return EXIT_FINDING
    return EXIT_OK


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="crosscap",
        description=(
            "Exact torus-knot invariants (genus, crossing number, crosscap number) "
            "and exhaustive verification of the crosscap bounds."
        ),
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    p_inv = subparsers.add_parser(
        "invariants", help="compute every invariant of one (p, q) torus knot"
    )
    p_inv.add_argument("p", type=int)
    p_inv.add_argument("q", type=int)
    _add_format_flags(p_inv)
    p_inv.set_defaults(handler=cmd_invariants)

    p_cf = subparsers.add_parser(
        "cf", help="continued-fraction expansion and skip-sum of a/b"
    )
    p_cf.add_argument("numerator", type=int)
    p_cf.add_argument("denominator", type=int)
    _add_format_flags(p_cf, with_csv=False)
    p_cf.set_defaults(handler=cmd_cf, csv=None)

    p_verify = subparsers.add_parser(
        "verify", help="sweep all coprime pairs up to --max-p and check every bound"
    )
    p_verify.add_argument("--max-p", type=int, required=True, dest="max_p")
    p_verify.add_argument("--workers", type=int, default=1)
    _add_format_flags(p_verify)
    p_verify.set_defaults(handler=cmd_verify)

    p_family = subparsers.add_parser(
        "family", help="expected-vs-computed table for a witness family"
    )
    p_family.add_argument("name", choices=("mobius", "sharp"))
    p_family.add_argument("count", type=int)
    _add_format_flags(p_family)
    p_family.set_defaults(handler=cmd_family)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except OSError as exc:
        return _usage_error(f"cannot write output: {exc}")


if __name__ == "__main__":
    sys.exit(main())
