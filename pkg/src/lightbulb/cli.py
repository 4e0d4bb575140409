"""Batch command-line interface.

Every subcommand is deterministic given its flags, prints a single envelope
(JSON) or its rows (CSV) to stdout, and exits 0 only if every assertion in
the run held.  Exact rationals are always emitted losslessly as num/den
strings next to any rounded decimal rendering.
"""

from __future__ import annotations

import argparse
import csv
import decimal
import json
import math
import random
import sys
from fractions import Fraction

from .clubbed import ParityClass, clubbed_pmf, parity_class_of
from .process import exact_terminal_pmf
from .simulate import SimConfig, empirical_tv, run
from .stein import lemma_bound, max_abs_residual, sharp_sup_bound, solve_set
from .verify import ReportRow, build_report, collision_probability, float_ceil, verify_theorem

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


def frac_str(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def dec_str(q: Fraction, digits: int) -> str:
    with decimal.localcontext() as ctx:
        ctx.prec = digits
        return str(decimal.Decimal(q.numerator) / decimal.Decimal(q.denominator))


def flt_str(x: float, digits: int) -> str:
    return f"{x:.{digits}g}"


def _emit(envelope: dict, fmt: str) -> None:
    if fmt == "json":
        json.dump(envelope, sys.stdout, indent=2)
        sys.stdout.write("\n")
    else:
        rows = envelope["rows"]
        writer = csv.writer(sys.stdout)
        if rows:
            writer.writerow(rows[0].keys())
            for row in rows:
                writer.writerow(row.values())


def _resolve_m(n: int, m_flag: str) -> int:
    if m_flag == "auto":
        return parity_class_of(n).m
    return int(m_flag)


def _report_row_dict(row: ReportRow, digits: int) -> dict:
    return {
        "n": row.n,
        "m": row.m,
        "tv": frac_str(row.tv_exact),
        "tv_decimal": dec_str(row.tv_exact, digits),
        "bound": flt_str(row.bound, digits),
        "ratio": flt_str(row.ratio, digits),
        "sharp_stein_norm": frac_str(row.sharp_stein_norm) if row.sharp_stein_norm is not None else "",
        "collision_prob": frac_str(row.collision_prob) if row.collision_prob is not None else "",
        "collision_bound": flt_str(row.collision_bound, digits),
        "status": "pass" if row.passed else "fail",
    }


def cmd_exact(args: argparse.Namespace) -> tuple[dict, bool]:
    pmf = exact_terminal_pmf(args.n)
    rows = [
        {
            "point": k,
            "probability": frac_str(p),
            "probability_decimal": dec_str(p, args.float_digits),
        }
        for k, p in pmf.items()
    ]
    return {"parameters": {"n": args.n}, "rows": rows}, True


def cmd_clubbed(args: argparse.Namespace) -> tuple[dict, bool]:
    m = _resolve_m(args.n, args.m)
    club = clubbed_pmf(args.n, m)
    rows = [
        {
            "point": k,
            "probability": frac_str(p),
            "probability_decimal": dec_str(p, args.float_digits),
        }
        for k, p in club.dist.items()
    ]
    return {"parameters": {"n": args.n, "m": m}, "rows": rows}, True


def cmd_tv(args: argparse.Namespace) -> tuple[dict, bool]:
    row = verify_theorem(args.n)
    return {"parameters": {"n": args.n}, "rows": [_report_row_dict(row, args.float_digits)]}, row.passed


def cmd_report(args: argparse.Namespace) -> tuple[dict, bool]:
    report = build_report(args.n_max)
    rows = [_report_row_dict(r, args.float_digits) for r in report]
    return {"parameters": {"n_max": args.n_max}, "rows": rows}, all(r.passed for r in report)


def _parse_sets(spec: str, parity: ParityClass) -> list[tuple[int, ...]]:
    lattice = parity.lattice
    if spec == "all-singletons":
        return [(x,) for x in lattice]
    if spec.startswith("random:"):
        try:
            _, count, seed = spec.split(":")
            count, seed = int(count), int(seed)
        except ValueError:
            raise ValueError(f"bad random set spec {spec!r}, expected random:COUNT:SEED")
        rnd = random.Random(seed)
        sets = []
        for _ in range(count):
            size = rnd.randint(1, len(lattice))
            sets.append(tuple(sorted(rnd.sample(lattice, size))))
        return sets
    return [tuple(sorted(int(tok) for tok in spec.split(",")))]


def cmd_stein_verify(args: argparse.Namespace) -> tuple[dict, bool]:
    m = _resolve_m(args.n, args.m)
    parity = ParityClass(args.n, m)
    rows = []
    ok = True
    for target in _parse_sets(args.set, parity):
        solution = solve_set(parity, target)
        residual = max_abs_residual(solution)
        ok = ok and residual == 0
        rows.append(
            {
                "set": "+".join(str(x) for x in target),
                "max_residual": frac_str(residual),
                "status": "pass" if residual == 0 else "fail",
            }
        )
    params = {"n": args.n, "m": m, "set": args.set}
    return {"parameters": params, "rows": rows}, ok


def cmd_stein_norm(args: argparse.Namespace) -> tuple[dict, bool]:
    m = _resolve_m(args.n, args.m)
    sharp = sharp_sup_bound(ParityClass(args.n, m))
    bound = lemma_bound(args.n)
    ok = float_ceil(sharp) <= bound + 1e-12
    row = {
        "n": args.n,
        "m": m,
        "sharp": frac_str(sharp),
        "sharp_decimal": dec_str(sharp, args.float_digits),
        "lemma_bound": flt_str(bound, args.float_digits),
        "ratio": flt_str(float(sharp) / bound, args.float_digits),
        "status": "pass" if ok else "fail",
    }
    return {"parameters": {"n": args.n, "m": m}, "rows": [row]}, ok


def cmd_simulate(args: argparse.Namespace) -> tuple[dict, bool]:
    config = SimConfig(n=args.n, reps=args.reps, seed=args.seed, batches=args.batches)
    result = run(config)
    reference = exact_terminal_pmf(args.n)
    tv = empirical_tv(result, reference)
    ok = result.parity_violations == 0
    rows = []
    for w in sorted(set(result.empirical) | set(reference.mass)):
        rows.append(
            {
                "on_count": w,
                "count": result.empirical.get(w, 0),
                "frequency": flt_str(result.empirical.get(w, 0) / result.reps, args.float_digits),
                "exact_probability": frac_str(reference.prob(w)),
                "exact_decimal": dec_str(reference.prob(w), args.float_digits),
                "empirical_tv": flt_str(tv, args.float_digits),
                "parity_violations": result.parity_violations,
            }
        )
    params = {"n": args.n, "reps": args.reps, "seed": args.seed, "batches": args.batches}
    return {"parameters": params, "rows": rows}, ok


def cmd_collision(args: argparse.Namespace) -> tuple[dict, bool]:
    prob = collision_probability(args.n)
    bound = math.exp(-(args.n + 1) / 3)
    ok = float_ceil(prob) <= bound
    row = {
        "n": args.n,
        "collision_prob": frac_str(prob),
        "collision_decimal": dec_str(prob, args.float_digits),
        "bound": flt_str(bound, args.float_digits),
        "status": "pass" if ok else "fail",
    }
    return {"parameters": {"n": args.n}, "rows": [row]}, ok


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=("json", "csv"), default="json")
    parser.add_argument("--float-digits", type=int, default=12)


def _positive(name: str):
    def convert(text: str) -> int:
        value = int(text)
        if value < 1:
            raise argparse.ArgumentTypeError(f"{name} must be >= 1, got {value}")
        return value

    return convert


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lightbulb", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("exact", help="exact terminal on-count distribution")
    p.add_argument("--n", type=_positive("n"), required=True)
    _add_common(p)
    p.set_defaults(fn=cmd_exact)

    p = sub.add_parser("clubbed", help="clubbed binomial distribution")
    p.add_argument("--n", type=_positive("n"), required=True)
    p.add_argument("--m", choices=("auto", "0", "1"), default="auto")
    _add_common(p)
    p.set_defaults(fn=cmd_clubbed)

    p = sub.add_parser("tv", help="exact distance against the theorem bound")
    p.add_argument("--n", type=_positive("n"), required=True)
    _add_common(p)
    p.set_defaults(fn=cmd_tv)

    p = sub.add_parser("report", help="verification rows for n = 1..n_max")
    p.add_argument("--n-max", type=_positive("n_max"), required=True)
    _add_common(p)
    p.set_defaults(fn=cmd_report)

    p = sub.add_parser("stein", help="Stein equation checks")
    stein_sub = p.add_subparsers(dest="stein_mode", required=True)

    pv = stein_sub.add_parser("verify", help="exact residuals of the solver")
    pv.add_argument("--n", type=_positive("n"), required=True)
    pv.add_argument("--m", choices=("auto", "0", "1"), default="auto")
    pv.add_argument("--set", required=True, help="comma list, all-singletons, or random:COUNT:SEED")
    _add_common(pv)
    pv.set_defaults(fn=cmd_stein_verify)

    pn = stein_sub.add_parser("norm", help="sharp sup-norm against the proven bound")
    pn.add_argument("--n", type=_positive("n"), required=True)
    pn.add_argument("--m", choices=("auto", "0", "1"), default="auto")
    _add_common(pn)
    pn.set_defaults(fn=cmd_stein_norm)

    p = sub.add_parser("simulate", help="seeded Monte Carlo cross-check")
    p.add_argument("--n", type=_positive("n"), required=True)
    p.add_argument("--reps", type=_positive("reps"), required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--batches", type=_positive("batches"), default=1)
    _add_common(p)
    p.set_defaults(fn=cmd_simulate)

    p = sub.add_parser("collision", help="exact pairwise collision probability")
    p.add_argument("--n", type=_positive("n"), required=True)
    _add_common(p)
    p.set_defaults(fn=cmd_collision)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "collision" and args.n < 2:
        parser.error("collision requires --n >= 2")
    if args.command == "stein" and args.stein_mode == "norm" and args.n < 2:
        parser.error("stein norm requires --n >= 2")
    try:
        envelope, ok = args.fn(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    name = args.command if args.command != "stein" else f"stein {args.stein_mode}"
    full = {
        "command": name,
        "parameters": envelope["parameters"],
        "rows": envelope["rows"],
        "status": "pass" if ok else "fail",
    }
    _emit(full, args.format)
    return EXIT_PASS if ok else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
