"""Command-line front end.

Single-value computations (scalar, qscalar, corr, oracle), solver access
(bethe, expand), table emission (kostka), and the verification suites
(verify).  Rational inputs are written as "p/q" and point sets as
comma-separated lists, so exact values survive the shell; outputs print
rationals the same way.

Exit codes: 0 on success / all checks passing, 1 when a computed
comparison or suite check fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import List, Optional, Sequence

from .algebra_core import format_rational, parse_rational
from .partitions import enumerate_in_box
from .phase_model import BoxSpec, correlation_Am, scalar_product
from .qboson_model import (MODES, QBosonSpec, mode_agreement_report,
                           scalar_product_q)
from .symfunc import kostka_tables, kostka_tables_json
from .suites import SuiteConfig, desk_caps, emit_report, run_suite
from . import bethe as bethe_mod
from . import fock_oracle as oracle


def _points(text: str) -> List[Fraction]:
    if not text:
        return []
    return [parse_rational(part) for part in text.split(",")]


def _ints(text: str) -> List[int]:
    if not text:
        return []
    return [int(part) for part in text.split(",")]


def _check_caps(n: int, m: int, cutoff: Optional[int] = None) -> None:
    cap_n, cap_m, cap_d = desk_caps()
    if n > cap_n or m > cap_m or (cutoff is not None and cutoff > cap_d):
        raise ValueError(
            f"size exceeds the desk-scale caps (N<={cap_n}, M<={cap_m}, "
            f"D<={cap_d}); set QTAU_MAX_SIZE to override")
    if n < 1 or m < 0:
        raise ValueError("need N >= 1 and M >= 0")


def _write_out(text: str, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    try:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text)
    except OSError as exc:
        raise ValueError(f"cannot write {out!r}: {exc}") from exc


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def _cmd_scalar(args) -> int:
    _check_caps(args.n, args.m)
    xs, ys = _points(args.x), _points(args.y)
    if len(xs) != args.n or len(ys) != args.n:
        raise ValueError("need exactly N values in --x and in --y")
    box = BoxSpec(args.n, args.m)
    if args.mode in ("det", "schur_sum"):
        print(format_rational(scalar_product(xs, ys, box, mode=args.mode)))
        return 0
    det = scalar_product(xs, ys, box, mode="det")
    sch = scalar_product(xs, ys, box, mode="schur_sum")
    print(f"det       = {format_rational(det)}")
    print(f"schur_sum = {format_rational(sch)}")
    if det != sch:
        print("MISMATCH")
        return 1
    return 0


def _cmd_qscalar(args) -> int:
    _check_caps(args.n, args.m)
    xs, ys = _points(args.x), _points(args.y)
    if len(xs) != args.n or len(ys) != args.n:
        raise ValueError("need exactly N values in --x and in --y")
    spec = QBosonSpec(BoxSpec(args.n, args.m), parse_rational(args.q))
    if args.mode != "all":
        value = scalar_product_q(xs, ys, spec, mode=args.mode)
        print(format_rational(value))
        return 0
    rep = mode_agreement_report(xs, ys, spec)
    width = max(len(mode) for mode in MODES)
    for mode in MODES:
        print(f"{mode:<{width}} = {format_rational(rep['values'][mode])}")
    graded = rep["graded_equal_hl"]
    bad = [mode for mode in MODES if not graded[mode]]
    print(f"graded agreement through degree {rep['graded_window']}: "
          + ("all modes" if not bad else "FAILS for " + ",".join(bad)))
    return 0 if not bad else 1


def _cmd_corr(args) -> int:
    _check_caps(args.n, args.m)
    xs, ys = _points(args.x), _points(args.y)
    if len(xs) != args.n or len(ys) != args.n - 1:
        raise ValueError("the one-point function pairs N points in --x "
                         "with N-1 points in --y")
    box = BoxSpec(args.n, args.m)
    if args.mode in ("det", "skew_sum"):
        value = correlation_Am(xs, ys, args.site, box, mode=args.mode)
        print(format_rational(value))
        return 0
    det = correlation_Am(xs, ys, args.site, box, mode="det")
    sk = correlation_Am(xs, ys, args.site, box, mode="skew_sum")
    print(f"det      = {format_rational(det)}")
    print(f"skew_sum = {format_rational(sk)}")
    if det != sk:
        print("MISMATCH")
        return 1
    return 0


def _cmd_oracle(args) -> int:
    _check_caps(args.n, args.m)
    xs, ys = _points(args.x), _points(args.y)
    box = BoxSpec(args.n, args.m)
    if args.model == "phase":
        spec = box
    else:
        spec = QBosonSpec(box, parse_rational(args.q))
    if args.site is not None and args.model != "phase":
        raise ValueError("--site comparison is only wired for the "
                         "phase model")
    value = oracle.oracle_pairing(args.model, spec, xs, ys,
                                  insertion=args.site)
    if args.site is not None:
        formula = correlation_Am(xs, ys, args.site, box, mode="skew_sum")
    elif args.model == "phase":
        formula = scalar_product(xs, ys, box, mode="schur_sum")
    else:
        formula = scalar_product_q(xs, ys, spec, mode="hl_sum")
    print(f"oracle  = {format_rational(value)}")
    print(f"formula = {format_rational(formula)}")
    agree = value == formula
    print("agreement: " + ("yes" if agree else "NO"))
    return 0 if agree else 1


def _cmd_bethe(args) -> int:
    _check_caps(args.n, args.m)
    qn = _ints(args.qn)
    if args.model == "phase":
        result = bethe_mod.solve_phase(args.n, args.m, qn)
        q_used = 0.0
    else:
        q_used = float(args.q) if args.q is not None else 0.0
        result = bethe_mod.solve_qboson_continued(args.n, args.m, q_used, qn)
    payload = {
        "model": args.model,
        "n": args.n,
        "m": args.m,
        "quantum_numbers": qn,
        "q": q_used,
        "roots": [[z.real, z.imag] for z in result.roots],
        "residual": result.residual,
    }
    if args.format == "json":
        _write_out(json.dumps(payload, indent=2) + "\n", args.out)
    else:
        lines = [f"root[{k}] = {z.real:+.12e} {z.imag:+.12e}i"
                 for k, z in enumerate(result.roots)]
        lines.append(f"residual = {result.residual:.3e}")
        _write_out("\n".join(lines) + "\n", args.out)
    return 0


def _cmd_kostka(args) -> int:
    cap_d = desk_caps()[2]
    if args.cutoff > cap_d:
        raise ValueError(f"weight exceeds the desk-scale cap D<={cap_d}; "
                         "set QTAU_MAX_SIZE to override")
    if args.cutoff < 0:
        raise ValueError("weight must be nonnegative")
    payload = kostka_tables_json(kostka_tables(args.cutoff))
    _write_out(json.dumps(payload, indent=2) + "\n", args.out)
    return 0


def _cmd_verify(args) -> int:
    q_values = tuple(_points(args.q)) if args.q else None
    kwargs = dict(suite=args.suite, seed=args.seed, trials=args.trials,
                  out=args.out)
    if args.n is not None:
        kwargs["n_max"] = args.n
    if args.m is not None:
        kwargs["m_max"] = args.m
    if args.cutoff is not None:
        kwargs["cutoff"] = args.cutoff
    if q_values:
        kwargs["q_values"] = q_values
    config = SuiteConfig(**kwargs)
    report = run_suite(config)
    _write_out(emit_report(report, fmt=args.format), args.out)
    return 0 if report.all_pass else 1


def _cmd_expand(args) -> int:
    _check_caps(args.n, args.m)
    us = _points(args.u)
    if not 0 < len(us) <= args.n:
        raise ValueError("need between 1 and N spectral values in --u")
    box = BoxSpec(args.n, args.m)
    if args.model == "phase":
        spec = box
    else:
        spec = QBosonSpec(box, parse_rational(args.q))
    vec = oracle.bethe_state(args.model, spec, us)
    basis = oracle.sector_basis(args.n, args.m)
    sector = len(us)
    coeffs = oracle.partition_coefficients(basis, vec, sector)
    table = [
        {"partition": list(lam),
         "value": format_rational(coeffs.get(lam, Fraction(0)))}
        for lam in enumerate_in_box(sector, args.m)
    ]
    payload = {
        "model": args.model,
        "n": args.n,
        "m": args.m,
        "u": [format_rational(u) for u in us],
        "sector": sector,
        "coefficients": table,
    }
    _write_out(json.dumps(payload, indent=2) + "\n", args.out)
    return 0


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qtau",
        description="exact scalar products, correlation functions and "
                    "verification suites for the phase and q-boson models")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_size(p):
        p.add_argument("--n", type=int, required=True,
                       help="number of particles N")
        p.add_argument("--m", type=int, required=True,
                       help="number of lattice momenta M (sites 0..M)")

    p = sub.add_parser("scalar", help="phase-model scalar product")
    add_size(p)
    p.add_argument("--x", required=True, help="comma-separated rationals")
    p.add_argument("--y", required=True, help="comma-separated rationals")
    p.add_argument("--mode", choices=("det", "schur_sum", "both"),
                   default="both")
    p.set_defaults(func=_cmd_scalar)

    p = sub.add_parser("qscalar", help="q-boson scalar product")
    add_size(p)
    p.add_argument("--q", required=True, help="deformation Q as p/q")
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    p.add_argument("--mode", choices=MODES + ("all",), default="all")
    p.set_defaults(func=_cmd_qscalar)

    p = sub.add_parser("corr", help="one-point function <x| phi_m^+ |y>")
    add_size(p)
    p.add_argument("--site", type=int, required=True,
                   help="lattice site m of the insertion")
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    p.add_argument("--mode", choices=("det", "skew_sum", "both"),
                   default="both")
    p.set_defaults(func=_cmd_corr)

    p = sub.add_parser("oracle",
                       help="Fock-space pairing vs. the formula route")
    p.add_argument("--model", choices=("phase", "qboson"), required=True)
    add_size(p)
    p.add_argument("--q", default="0", help="deformation Q (qboson only)")
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    p.add_argument("--site", type=int, default=None,
                   help="optional creation insertion site")
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("bethe", help="solve the Bethe equations")
    p.add_argument("--model", choices=("phase", "qboson"), required=True)
    add_size(p)
    p.add_argument("--qn", required=True,
                   help="comma-separated integer quantum numbers")
    p.add_argument("--q", default=None,
                   help="target deformation (qboson only, float)")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_bethe)

    p = sub.add_parser("kostka",
                       help="emit the deformation tables for one weight")
    p.add_argument("--cutoff", type=int, required=True,
                   help="partition weight d")
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_kostka)

    p = sub.add_parser("verify", help="run a named verification suite")
    p.add_argument("--suite", required=True)
    p.add_argument("--n", type=int, default=None, help="override N bound")
    p.add_argument("--m", type=int, default=None, help="override M bound")
    p.add_argument("--cutoff", type=int, default=None,
                   help="override degree bound")
    p.add_argument("--q", default=None,
                   help="comma-separated deformation values as p/q")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=5)
    p.add_argument("--out", default=None)
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("expand",
                       help="coefficient table of a creation-operator state")
    p.add_argument("--model", choices=("phase", "qboson"), required=True)
    add_size(p)
    p.add_argument("--q", default="0", help="deformation Q (qboson only)")
    p.add_argument("--u", required=True,
                   help="comma-separated spectral parameters u (y = u^2)")
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_expand)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else 0
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ArithmeticError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
