"""
Command line for point counts, torsion, good-point certificates and sweeps

Usage:
    python cli.py count-points --a 0 --b 5 --q 7
    python cli.py certify --n 0 --x 3 --y 5
    python cli.py sweep --from -50 --to 50 --height 200 --jobs 4 --out sweep.json
"""
import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional

sys.path.insert(0, str(Path(__file__).parent))

from config import (
    ANOMALOUS_FAMILIES,
    CLASS_ONE_CONVENTIONS,
    DATASET_PATH,
    DEFAULT_HEIGHT,
    DEFAULT_JOBS,
    DEFAULT_PRECISION,
    DEFAULT_PRIME,
    GENERATOR_SEED,
    LOG_LEVEL,
)
from errors import GoodPointsError
from certifier.good import certify_good, family_coefficient, restrict_level_to_L
from cm.families import anomalous_residue_classes, check_family, check_gaussian_family
from cm.formulas import cm_curve, count_formula_eisenstein, resolve_class_one_convention, split_frobenius
from finitefields.counting import count_points, trace_of_frobenius
from localcurves.torsion import formal_torsion_cyclotomic, torsion7_qp
from padic.field import PadicField
from survey.sweep import render_table, sweep
from utils.helpers import parse_rational
from validation.schema import dump_report, save_report

logger = logging.getLogger(__name__)


def _emit(data: Dict[str, Any]):
    print(json.dumps(data, indent=2, sort_keys=True))


def cmd_count_points(args) -> int:
    count = count_points(args.a, args.b, args.q)
    _emit({"A": args.a, "B": args.b, "q": args.q, "count": count, "trace": args.q + 1 - count})
    return 0


def cmd_split_prime(args) -> int:
    trace = args.trace
    if trace is None:
        curve = cm_curve(args.d)
        trace = trace_of_frobenius(int(curve.A) % args.p, int(curve.B) % args.p, args.p)
    pi = split_frobenius(args.d, args.p, trace)
    _emit({
        "D": args.d,
        "p": args.p,
        "trace": trace,
        "pi": str(pi),
        "coordinates": [pi.a, pi.b],
        "count": args.p + 1 - trace,
    })
    return 0


def cmd_torsion(args) -> int:
    a = family_coefficient(args.n)
    base = PadicField(7, args.precision)
    points = []
    for P in torsion7_qp(a, args.precision):
        if P.is_infinity:
            points.append({"x": None, "y": None})
            continue
        points.append({
            "x": str(P.x.with_precision(args.precision)),
            "y": str(P.y.with_precision(args.precision)),
            "x_residue": base.residue(P.x).to_int(),
            "y_residue": base.residue(P.y).to_int(),
        })
    _emit({"n": args.n, "a": a, "precision": args.precision, "points": points})
    return 0


def cmd_certify(args) -> int:
    cert = certify_good(
        args.n, parse_rational(args.x), parse_rational(args.y), args.p, args.precision, args.seed
    )
    data = cert.to_dict()
    if cert.is_good:
        data["restricted_level"] = restrict_level_to_L(cert)
    _emit(data)
    return 0


def cmd_sweep(args) -> int:
    report = sweep(
        args.n_lo,
        args.n_hi,
        dataset_path=args.dataset,
        height=args.height,
        p=args.p,
        precision=args.precision,
        jobs=args.jobs,
        seed=args.seed,
    )
    print(render_table(report))
    counts = ", ".join(f"{k} {v}" for k, v in report["counts"].items())
    print(f"\n{counts}; good fraction {report['good_fraction']}; skipped {report['skipped_count']}")
    if args.out:
        save_report(report, args.out)
        print(f"Report saved to: {args.out}")
    elif args.json:
        print(dump_report(report))
    return 0


def cmd_filtration(args) -> int:
    a = family_coefficient(args.n)
    data: Dict[str, Any] = {"n": args.n, "a": a, "torsion_level": formal_torsion_cyclotomic(a, 7, args.precision).level}
    if args.x is not None and args.y is not None:
        cert = certify_good(args.n, parse_rational(args.x), parse_rational(args.y), 7, args.precision)
        data["verdict"] = cert.verdict
        data["restricted_level"] = restrict_level_to_L(cert) if cert.is_good else None
    _emit(data)
    return 0


def cmd_conventions(args) -> int:
    rows = []
    for D, frozen in CLASS_ONE_CONVENTIONS.items():
        resolved = resolve_class_one_convention(D, frozen["primes"])
        rows.append({
            "D": D,
            "frozen": frozen,
            "resolved": resolved,
            "matches": resolved is not None and all(resolved[k] == frozen[k] for k in ("symbol", "u_rule", "sign")),
        })
    _emit({"conventions": rows})
    return 0 if all(row["matches"] for row in rows) else 1


def cmd_families(args) -> int:
    results = [check_family(name) for name in ANOMALOUS_FAMILIES]
    gaussian = check_gaussian_family()
    _emit({"families": results, "gaussian": gaussian})
    ok = all(r["anomalous"] for r in results) and gaussian["divisible"] and gaussian["trace_even"]
    return 0 if ok else 1


def cmd_formula(args) -> int:
    p = args.p
    rows = [
        {"c": c, "formula": count_formula_eisenstein(c, p), "enumerated": count_points(0, c, p)}
        for c in range(1, p)
    ]
    mismatches = [row["c"] for row in rows if row["formula"] != row["enumerated"]]
    _emit({"p": p, "counts": rows, "mismatches": mismatches, "anomalous": anomalous_residue_classes(p)})
    return 1 if mismatches else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description="Good points on CM elliptic curves")
    parser.add_argument("--log-level", default=LOG_LEVEL, help="Logging level (default: %(default)s)")
    sub = parser.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("count-points", help="#E(F_q) for y^2 = x^3 + Ax + B")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.set_defaults(func=cmd_count_points)

    p = sub.add_parser("split-prime", help="Frobenius element of a split prime")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--trace", type=int, help="a_p; computed from the CM curve with c = 1 when omitted")
    p.set_defaults(func=cmd_split_prime)

    p = sub.add_parser("torsion", help="The 7-torsion of E_n over Q_7")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--precision", type=int, default=DEFAULT_PRECISION)
    p.set_defaults(func=cmd_torsion)

    p = sub.add_parser("certify", help="Good-point certificate for a rational point on E_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--x", required=True, help="num/den")
    p.add_argument("--y", required=True, help="num/den")
    p.add_argument("--p", type=int, default=DEFAULT_PRIME)
    p.add_argument("--precision", type=int, default=DEFAULT_PRECISION)
    p.add_argument("--seed", type=int, default=GENERATOR_SEED)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("sweep", help="Certify E_n for every n in a range")
    p.add_argument("--from", dest="n_lo", type=int, required=True)
    p.add_argument("--to", dest="n_hi", type=int, required=True)
    p.add_argument("--dataset", default=DATASET_PATH or None, help="JSON lines of generators")
    p.add_argument("--height", type=int, default=DEFAULT_HEIGHT)
    p.add_argument("--p", type=int, default=DEFAULT_PRIME)
    p.add_argument("--precision", type=int, default=DEFAULT_PRECISION)
    p.add_argument("--jobs", type=int, default=DEFAULT_JOBS)
    p.add_argument("--seed", type=int, default=GENERATOR_SEED)
    p.add_argument("--out", help="Write the JSON report here")
    p.add_argument("--json", action="store_true", help="Print the JSON report when --out is not given")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("filtration", help="Levels over Q_7(zeta_7)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--x", help="num/den of a point to restrict")
    p.add_argument("--y", help="num/den of a point to restrict")
    p.add_argument("--precision", type=int, default=DEFAULT_PRECISION)
    p.set_defaults(func=cmd_filtration)

    p = sub.add_parser("conventions", help="Re-resolve the class-one sign conventions")
    p.set_defaults(func=cmd_conventions)

    p = sub.add_parser("families", help="Check the registered anomalous families and the Gaussian family")
    p.set_defaults(func=cmd_families)

    p = sub.add_parser("formula", help="Sixth-power-residue count against enumeration")
    p.add_argument("--p", type=int, required=True)
    p.set_defaults(func=cmd_formula)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=getattr(logging, str(args.log_level).upper(), logging.WARNING),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
    try:
        return args.func(args)
    except GoodPointsError as exc:
        logger.debug("command failed", exc_info=True)
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return exc.exit_code
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
