"""Command line front end.

Four subcommands:

* eval      exact (or float) evaluation of one family member
* converge  exact-versus-approximation table over a range of n
* identity  residual check of the boundary-sum identity
            S(n, y) = -(i n / y) * chebyshev_fourier(n, y)
* trace     CSV/JSON sampling of the critical curve

Exit codes: 0 success, 2 malformed input, 3 precision ceiling
exceeded, 4 regime mismatch, 5 identity residual above tolerance,
6 quadrature refusing to converge.  All numeric output is formatted
from arbitrary-precision values, so repeated runs are byte identical.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional

import gmpy2
from gmpy2 import mpfr, mpq

from .arith import BigComplex, GaussianRational, parse_rational, pi_value
from .asym import (
    RegimeError,
    endpoint_approx,
    exterior_approx,
    interior_approx,
    segment_approx,
)
from .geometry import CurveTraceError, Regime, RegimeTag, trace_curve
from .hyper import (
    PolyParams,
    PrecisionCeilingError,
    conjugate_pair_sum,
    family_exact,
    family_float,
    segment_target,
)
from .quad import QuadratureConfig, QuadratureConvergenceError, chebyshev_fourier


def _format_real(x, digits: int) -> str:
    """Scientific notation with a fixed digit count, deterministic."""
    with gmpy2.context(precision=max(64, digits * 4)):
        v = mpfr(x)
    if gmpy2.is_zero(v):
        return "0." + "0" * (digits - 1) + "e+00"
    ds, exp, _ = gmpy2.digits(v, 10, digits)
    neg = ds.startswith("-")
    if neg:
        ds = ds[1:]
    return f"{'-' if neg else ''}{ds[0]}.{ds[1:]}e{exp - 1:+03d}"


def _parse_n_range(text: str) -> List[int]:
    parts = text.split(":")
    if len(parts) not in (2, 3):
        raise ValueError(f"expected lo:hi or lo:hi:step, got {text!r}")
    lo, hi = int(parts[0]), int(parts[1])
    step = int(parts[2]) if len(parts) == 3 else 1
    if step < 1 or hi < lo:
        raise ValueError(f"empty range {text!r}")
    return list(range(lo, hi + 1, step))


@dataclass(frozen=True)
class ConvergenceRow:
    """One table row: exact value, approximation, absolute error and
    the ratio exact/approx (its real part; blank when the oscillation
    passes too close to a zero for the ratio to mean anything)."""

    n: int
    exact_re: object
    exact_im: object
    approx_re: object
    approx_im: object
    abs_error: object
    ratio: Optional[object]


_CONVERGE_HEADER = "n,exact_re,exact_im,approx_re,approx_im,abs_error,ratio"


def _row_fields(row: ConvergenceRow, digits: int) -> List[str]:
    return [
        str(row.n),
        _format_real(row.exact_re, digits),
        _format_real(row.exact_im, digits),
        _format_real(row.approx_re, digits),
        _format_real(row.approx_im, digits),
        _format_real(row.abs_error, digits),
        "n/a" if row.ratio is None else _format_real(row.ratio, digits),
    ]


def _emit_rows(rows: List[ConvergenceRow], fmt: str, digits: int, out) -> None:
    if fmt == "csv":
        print(_CONVERGE_HEADER, file=out)
        for row in rows:
            print(",".join(_row_fields(row, digits)), file=out)
    else:
        keys = _CONVERGE_HEADER.split(",")
        payload = [dict(zip(keys, _row_fields(row, digits))) for row in rows]
        print(json.dumps(payload, indent=2), file=out)


def _require_arg(value, name: str, regime: str):
    if value is None:
        raise ValueError(f"--{name} is required for regime {regime}")
    return value


def cmd_eval(args) -> int:
    params = PolyParams(args.n, args.alpha)
    if args.z is not None:
        z = args.z
    elif args.y is not None:
        z = GaussianRational(0, args.y)
    else:
        raise ValueError("eval needs --z or --y")
    if args.float_mode:
        value = family_float(params, z, args.precision_bits,
                             precision_ceiling=args.precision_ceiling)
        print(f"{_format_real(value.real, args.digits)} "
              f"{_format_real(value.imag, args.digits)}")
    else:
        print(str(family_exact(params, z)))
    return 0


def _segment_envelope(n: int, y: Fraction, prec: int):
    with gmpy2.context(precision=prec):
        yv = mpfr(mpq(y.numerator, y.denominator))
        rad = Fraction(1) - y * y
        root = gmpy2.sqrt(mpfr(mpq(rad.numerator, rad.denominator)))
        return gmpy2.sqrt(n * pi_value(prec) * yv / (2 * root))


def cmd_converge(args) -> int:
    ns = _parse_n_range(args.n_range)
    prec = args.precision_bits
    digits = args.digits
    rows = []
    if args.regime in ("exterior", "interior"):
        z = _require_arg(args.z, "z", args.regime)
        approx_fn = exterior_approx if args.regime == "exterior" else interior_approx
        for n in ns:
            params = PolyParams(n, args.alpha)
            exact = family_exact(params, z).to_bigcomplex(prec)
            approx = approx_fn(params, z, prec).value
            with gmpy2.context(precision=prec):
                err = abs(exact - approx)
                ratio = (exact / approx).real
            rows.append(ConvergenceRow(
                n, exact.real, exact.imag, approx.real, approx.imag, err, ratio))
    elif args.regime == "segment":
        y = _require_arg(args.y, "y", "segment")
        for n in ns:
            exact = segment_target(n, y, prec)
            approx = segment_approx(n, y, prec).value
            env = _segment_envelope(n, y, prec)
            with gmpy2.context(precision=prec):
                err = abs(exact - approx)
                floor = env * mpfr(10) ** (-(digits // 2))
                ratio = None if abs(approx) < floor else exact / approx
            zero = mpfr(0)
            rows.append(ConvergenceRow(n, exact, zero, approx, zero, err, ratio))
    elif args.regime == "endpoint":
        if args.y is not None and args.y != 1:
            raise RegimeError(RegimeTag.SEGMENT_ENDPOINT,
                              Regime(RegimeTag.SEGMENT_INTERIOR))
        for n in ns:
            exact = segment_target(n, Fraction(1), prec)
            approx = endpoint_approx(n, prec).value
            with gmpy2.context(precision=prec):
                err = abs(exact - approx)
                ratio = exact / approx
            zero = mpfr(0)
            rows.append(ConvergenceRow(n, exact, zero, approx, zero, err, ratio))
    else:
        raise ValueError(f"unknown regime {args.regime!r}")
    _emit_rows(rows, args.format, digits, sys.stdout)
    return 0


def cmd_identity(args) -> int:
    prec = args.precision_bits
    config = QuadratureConfig(
        panel_count=args.panel_count,
        precision_bits=prec,
        refinement_limit=args.refinement_limit,
    )
    s = conjugate_pair_sum(args.n, args.y, prec)
    integral = chebyshev_fourier(args.n, args.y, config)
    factor = GaussianRational(0, Fraction(args.n) / args.y)
    with gmpy2.context(precision=prec):
        residual = abs(s + integral.value * factor)
        ok = residual <= mpfr(args.tol)
    verdict = "PASS" if ok else "FAIL"
    print(f"residual {_format_real(residual, args.digits)} "
          f"tol {args.tol:g} {verdict}")
    return 0 if ok else 5


def cmd_trace(args) -> int:
    trace = trace_curve(args.angle_count, args.tol, args.precision_bits)
    digits = args.digits
    lines = []
    for theta, point, residual in zip(trace.angles, trace.points, trace.residuals):
        lines.append([
            _format_real(theta, digits),
            _format_real(point.real, digits),
            _format_real(point.imag, digits),
            _format_real(residual, digits),
        ])
    out = sys.stdout if args.output == "-" else open(args.output, "w")
    try:
        if args.format == "csv":
            print("theta,re,im,residual", file=out)
            for fields in lines:
                print(",".join(fields), file=out)
        else:
            keys = ["theta", "re", "im", "residual"]
            print(json.dumps([dict(zip(keys, f)) for f in lines], indent=2),
                  file=out)
    finally:
        if out is not sys.stdout:
            out.close()
    return 0


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--precision-bits", type=int, default=128,
                   help="working precision in bits (default 128)")
    p.add_argument("--digits", type=int, default=30,
                   help="significant digits in printed values (default 30)")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyp3f1",
        description="Exact and asymptotic evaluation of a terminating "
                    "3F1 polynomial family and its critical curve.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate one family member")
    p_eval.add_argument("--n", type=int, required=True)
    p_eval.add_argument("--alpha", type=int, default=1)
    p_eval.add_argument("--z", type=GaussianRational.parse,
                        help='evaluation point, "a/b+c/di" or "(a/b, c/d)"')
    p_eval.add_argument("--y", type=parse_rational,
                        help="shorthand for z = iy")
    p_eval.add_argument("--float", dest="float_mode", action="store_true",
                        help="print a decimal value instead of the exact one")
    p_eval.add_argument("--precision-ceiling", type=int, default=1 << 18,
                        help="largest working precision the float path may use")
    _add_common(p_eval)
    p_eval.set_defaults(func=cmd_eval)

    p_conv = sub.add_parser("converge", help="exact vs approximation table")
    p_conv.add_argument("--regime", required=True,
                        choices=["exterior", "interior", "segment", "endpoint"])
    p_conv.add_argument("--n-range", required=True,
                        help="degrees to tabulate, lo:hi or lo:hi:step")
    p_conv.add_argument("--alpha", type=int, default=1)
    p_conv.add_argument("--z", type=GaussianRational.parse)
    p_conv.add_argument("--y", type=parse_rational)
    p_conv.add_argument("--format", choices=["csv", "json"], default="csv")
    _add_common(p_conv)
    p_conv.set_defaults(func=cmd_converge)

    p_id = sub.add_parser("identity", help="boundary-sum identity residual")
    p_id.add_argument("--n", type=int, required=True)
    p_id.add_argument("--y", type=parse_rational, required=True)
    p_id.add_argument("--tol", type=float, default=1e-12)
    p_id.add_argument("--panel-count", type=int, default=None,
                      help="override the automatic panel count")
    p_id.add_argument("--refinement-limit", type=int, default=6)
    _add_common(p_id)
    p_id.set_defaults(func=cmd_identity)

    p_tr = sub.add_parser("trace", help="sample the critical curve")
    p_tr.add_argument("--angle-count", type=int, default=64)
    p_tr.add_argument("--tol", type=float, default=1e-12)
    p_tr.add_argument("--format", choices=["csv", "json"], default="csv")
    p_tr.add_argument("--output", default="-",
                      help="output path, - for stdout (default)")
    _add_common(p_tr)
    p_tr.set_defaults(func=cmd_trace)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except PrecisionCeilingError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except RegimeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except QuadratureConvergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 6
    except CurveTraceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
