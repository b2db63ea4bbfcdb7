"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 domain or pole error (and overflow),
3 quadrature convergence failure.
"""
from __future__ import annotations

import argparse
import json
import math
import sys

from .bsato import bsato_monomial, bsato_quadratic
from .errors import ConvergenceError, DomainError, EvaluationOverflow
from .gammaf import (GammaDomain, asymptotic_approx, gamma_f_quadrature, gamma_tk_closed,
                     gamma_tk_continued, gauss_limit_product, k_gamma,
                     weierstrass_reciprocal)
from .poly import RealPolynomial, _fmt
from .special import ComplexEval
from .verify import IDENTITIES, check_identity, emit_reports
from .zetabeta import beta_f, zeta_f_series, zeta_tk

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_CONVERGENCE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def parse_complex(text: str) -> complex:
    parts = text.split(",")
    if len(parts) > 2:
        raise argparse.ArgumentTypeError(f"expected RE[,IM], got {text!r}")
    try:
        vals = [float(p) for p in parts]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected RE[,IM], got {text!r}") from None
    return complex(vals[0], vals[1] if len(vals) == 2 else 0.0)


def _positive_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return v


def _coeffs(text: str) -> RealPolynomial:
    # admissibility is checked later so that it maps to the domain exit code
    try:
        return RealPolynomial.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _method(text: str):
    if text in ("closed", "quad", "continued", "asymptotic"):
        return (text, None)
    name, sep, n = text.partition(":")
    if sep and name in ("limit", "product"):
        return (name, _positive_int(n))
    raise argparse.ArgumentTypeError(f"unknown method {text!r}")


def _quadratic(text: str):
    parts = text.split(",")
    try:
        b, c = (float(p) for p in parts)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected B,C, got {text!r}") from None
    return b, c


def parse_grid(text: str) -> dict:
    """``s=START:STOP:STEP[;k=K1,K2,...][;bc=B1:C1,B2:C2,...]``; STOP is inclusive."""
    out = {}
    for part in text.split(";"):
        key, sep, val = part.partition("=")
        if not sep or key in out:
            raise UsageError(f"bad grid component {part!r}")
        try:
            if key == "s":
                start, stop, step = (float(x) for x in val.split(":"))
                if not step > 0 or stop < start:
                    raise ValueError
                n = int(math.floor((stop - start) / step + 1e-9))
                out["s"] = [round(start + i * step, 12) for i in range(n + 1)]
            elif key == "k":
                out["k"] = [_positive_int(x) for x in val.split(",")]
            elif key == "bc":
                out["bc"] = [tuple(float(y) for y in x.split(":", 1)) for x in val.split(",")]
                if any(len(t) != 2 for t in out["bc"]):
                    raise ValueError
            else:
                raise ValueError
        except (ValueError, argparse.ArgumentTypeError):
            raise UsageError(f"bad grid component {part!r}") from None
    if "s" not in out:
        raise UsageError("grid needs an s=START:STOP:STEP range")
    return out


def _json_number(x: float):
    return float(x) if math.isfinite(x) else None


def format_eval(res: ComplexEval) -> str:
    v = complex(res.value)
    return json.dumps({
        "value": {"re": _json_number(v.real), "im": _json_number(v.imag)},
        "abs_error_estimate": _json_number(res.abs_err),
        "method": res.method,
        "warnings": list(res.warnings),
    })


def _eval_gamma(args) -> ComplexEval:
    if args.coeffs is not None:
        if args.method not in (None, ("quad", None)):
            raise UsageError("--coeffs supports quadrature only")
        return gamma_f_quadrature(GammaDomain(args.coeffs), args.s)
    k = args.monomial
    name, n = args.method or ("closed", None)
    if name == "closed":
        return gamma_tk_closed(k, args.s)
    if name == "quad":
        return gamma_f_quadrature(GammaDomain.monomial(k), args.s)
    if name == "continued":
        return gamma_tk_continued(k, args.s)
    if name == "limit":
        return gauss_limit_product(k, args.s, n)
    if name == "asymptotic":
        return asymptotic_approx(k, args.s)
    inv = weierstrass_reciprocal(k, args.s, n)
    if inv.value == 0:
        raise DomainError("truncated product vanishes: s is a pole")
    value = 1 / inv.value
    return ComplexEval(value, inv.abs_err * abs(value) ** 2, "product", inv.warnings)


def _eval_zeta(args) -> ComplexEval:
    if args.coeffs is not None:
        if args.terms is None:
            raise UsageError("--coeffs requires --terms N")
        return zeta_f_series(GammaDomain(args.coeffs), args.s, args.terms)
    if args.terms is not None:
        return zeta_f_series(GammaDomain.monomial(args.monomial), args.s, args.terms)
    return zeta_tk(args.monomial, args.s)


def _eval_beta(args) -> ComplexEval:
    dom = GammaDomain(args.coeffs) if args.coeffs is not None else GammaDomain.monomial(args.monomial)
    return beta_f(dom, args.p, args.q)


def _run_bsato(args) -> str:
    res = bsato_monomial(args.monomial) if args.monomial is not None else bsato_quadratic(*args.quadratic)
    lines = [
        f"coefficients: {res.big_b.format()}",
        f"roots: {','.join(_fmt(r) for r in res.roots)}",
        f"operator: {res.operator.describe()}",
        f"degenerate: {'true' if res.degenerate else 'false'}",
    ]
    return "\n".join(lines) + "\n"


def _run_verify(args) -> str:
    if args.identity not in IDENTITIES:
        raise UsageError(f"unknown identity {args.identity!r}; known: {', '.join(sorted(IDENTITIES))}")
    ident = IDENTITIES[args.identity]
    grid = parse_grid(args.grid)
    if ident.family == "quadratic":
        params = grid.get("bc")
    else:
        params = grid.get("k")
    points = grid["s"]
    if ident.family == "beta":
        points = [(p, q) for p in points for q in points]
    reports = check_identity(args.identity, params, points, args.tol)
    return emit_reports(reports, args.format)


def _add_target(p, *, coeffs=True, required=True):
    g = p.add_mutually_exclusive_group(required=required)
    g.add_argument("--monomial", type=_positive_int, metavar="K")
    if coeffs:
        g.add_argument("--coeffs", type=_coeffs, metavar="C0,C1,...")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="fgamma", description="Gamma, zeta and beta functions attached to polynomials.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    ev = sub.add_parser("eval", help="evaluate a function")
    esub = ev.add_subparsers(dest="function", required=True, parser_class=_Parser)

    g = esub.add_parser("gamma")
    _add_target(g)
    g.add_argument("--s", type=parse_complex, required=True, metavar="RE[,IM]")
    g.add_argument("--method", type=_method, default=None,
                   metavar="closed|quad|continued|limit:N|product:N|asymptotic")

    kg = esub.add_parser("kgamma")
    kg.add_argument("--k", type=float, required=True, metavar="KP")
    kg.add_argument("--s", type=parse_complex, required=True, metavar="RE[,IM]")

    z = esub.add_parser("zeta")
    _add_target(z)
    z.add_argument("--s", type=parse_complex, required=True, metavar="RE[,IM]")
    z.add_argument("--terms", type=_positive_int, default=None, metavar="N")

    b = esub.add_parser("beta")
    _add_target(b)
    b.add_argument("--p", type=parse_complex, required=True, metavar="RE[,IM]")
    b.add_argument("--q", type=parse_complex, required=True, metavar="RE[,IM]")

    bs = sub.add_parser("bsato", help="construct B(s)")
    grp = bs.add_mutually_exclusive_group(required=True)
    grp.add_argument("--monomial", type=_positive_int, metavar="K")
    grp.add_argument("--quadratic", type=_quadratic, metavar="B,C")

    v = sub.add_parser("verify", help="run the identity harness")
    v.add_argument("--identity", required=True, metavar="NAME")
    v.add_argument("--grid", required=True, metavar="SPEC")
    v.add_argument("--format", choices=("csv", "json"), default="csv")
    v.add_argument("--tol", type=float, default=None)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "eval":
            if args.function == "kgamma":
                res = k_gamma(args.k, args.s)
            else:
                res = {"gamma": _eval_gamma, "zeta": _eval_zeta, "beta": _eval_beta}[args.function](args)
            out = format_eval(res) + "\n"
        elif args.command == "bsato":
            out = _run_bsato(args)
        else:
            out = _run_verify(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"fgamma: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DomainError, EvaluationOverflow) as exc:
        print(f"fgamma: error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ConvergenceError as exc:
        print(f"fgamma: error: {exc}", file=sys.stderr)
        return EXIT_CONVERGENCE
    sys.stdout.write(out)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
