"""Grid-based verification of the identities satisfied by ``Gamma_f``.

Every registered identity evaluates a left- and right-hand side at each grid
point and records the residual in an :class:`IdentityReport`. False
identities are recorded, never raised: ``quadratic_printed`` is kept next to
its boundary-corrected form precisely to document the discrepancy.

Report serialization (CSV and JSON) uses the columns::

    identity,param1,param2,s_re,s_im,lhs_re,lhs_im,rhs_re,rhs_im,
    abs_residual,rel_residual,status
"""
from __future__ import annotations

import cmath
import csv
import io
import json
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

from .bsato import bsato_quadratic
from .errors import DomainError
from .gammaf import (GammaDomain, gamma_f_quadrature, gamma_tk_closed,
                     gamma_tk_continued, gamma_tk_via_kgamma, gauss_limit_product,
                     asymptotic_approx, kgamma_shift_rhs, monomial_B,
                     quarter_reflection_rhs, quarter_reflection_rhs_corrected,
                     reflection_rhs, weierstrass_reciprocal)
from .poly import RealPolynomial
from .quad import QuadratureConfig
from .special import ComplexEval
from .zetabeta import beta_f, beta_tk_relation_rhs, zeta_f_series, zeta_tk

__all__ = [
    "IdentityReport",
    "Identity",
    "IDENTITIES",
    "CSV_COLUMNS",
    "check_identity",
    "emit_reports",
    "load_reports",
    "quadratic_printed_sides",
    "quadratic_corrected_sides",
    "quadratic_gap",
]

CSV_COLUMNS = ("identity", "param1", "param2", "s_re", "s_im", "lhs_re", "lhs_im",
               "rhs_re", "rhs_im", "abs_residual", "rel_residual", "status")
STATUSES = ("pass", "fail", "skipped_singular")
SINGULAR_RADIUS = 1e-6

# grid sizes used by the limit-type identities
LIMIT_TERMS = 100_000
PRODUCT_TERMS = 100_000
ZETA_TERMS = 1_000


@dataclass(frozen=True)
class IdentityReport:
    identity: str
    params: tuple
    s: complex
    lhs: complex
    rhs: complex
    abs_residual: float
    rel_residual: float
    status: str

    def sort_key(self):
        return (self.identity,
                tuple((complex(p).real, complex(p).imag) for p in self.params),
                self.s.real, self.s.imag)


def _residuals(lhs: complex, rhs: complex):
    abs_res = abs(lhs - rhs)
    return abs_res, abs_res / max(abs(lhs), abs(rhs), 1e-300)


# ---------------------------------------------------------------------------
# quadratic difference equation


def _quadratic_gammas(b, c, s, cfg):
    s = complex(s)
    if s == -1:
        raise DomainError("s = -1 is excluded (division by s + 1)")
    if not c > 0:
        raise DomainError("the quadratic identity needs c > 0")
    res = bsato_quadratic(b, c)
    if res.degenerate:
        raise DomainError("degenerate quadratic: B(s) vanishes identically")
    dom = GammaDomain(RealPolynomial((c, b, 1.0)))
    g = [gamma_f_quadrature(dom, s + j, cfg) for j in range(3)]
    return res.big_b(s), g


def _c_power(c, w):
    w = complex(w)
    if w.imag == 0:
        # real pow is exact at integer exponents, so boundary terms cancel at s = 1
        return complex(math.pow(c, w.real))
    return cmath.exp(w * math.log(c))


def quadratic_printed_sides(b: float, c: float, s: complex,
                            cfg: QuadratureConfig | None = None):
    """Both sides of the second-order relation in its originally stated form.

    ``(1 - 2/(s+1)) G(s+2)`` versus
    ``B(s) G(s) + 2(s-1)(2s+1) G(s+1) + 2 c^{s+1}/(s+1)``.
    """
    s = complex(s)
    B, (g0, g1, g2) = _quadratic_gammas(b, c, s, cfg)
    lhs = (1 - 2 / (s + 1)) * g2.value
    rhs = B * g0.value + 2 * (s - 1) * (2 * s + 1) * g1.value + 2 * _c_power(c, s + 1) / (s + 1)
    lerr = abs(1 - 2 / (s + 1)) * g2.abs_err
    rerr = abs(B) * g0.abs_err + abs(2 * (s - 1) * (2 * s + 1)) * g1.abs_err
    return ComplexEval(lhs, lerr, "quadrature"), ComplexEval(rhs, rerr, "quadrature")


def quadratic_corrected_sides(b: float, c: float, s: complex,
                              cfg: QuadratureConfig | None = None):
    """Both sides of the relation with the ``t = 0`` boundary terms kept.

    Integrating ``int f (f^s)'' e^{-t}`` by parts twice leaves
    ``-c^s (b(s-1) + c)`` at the origin, and ``int (2t+b) f^s e^{-t}``
    contributes ``-c^{s+1}/(s+1)``; hence the right-hand side
    ``B G(s) + 2(s-1)(2s+1) G(s+1) - 2c^{s+1}/(s+1) + c^s (b(s-1) + c)``.
    """
    s = complex(s)
    B, (g0, g1, g2) = _quadratic_gammas(b, c, s, cfg)
    lhs = (1 - 2 / (s + 1)) * g2.value
    rhs = (B * g0.value + 2 * (s - 1) * (2 * s + 1) * g1.value
           - 2 * _c_power(c, s + 1) / (s + 1) + _c_power(c, s) * (b * (s - 1) + c))
    lerr = abs(1 - 2 / (s + 1)) * g2.abs_err
    rerr = abs(B) * g0.abs_err + abs(2 * (s - 1) * (2 * s + 1)) * g1.abs_err
    return ComplexEval(lhs, lerr, "quadrature"), ComplexEval(rhs, rerr, "quadrature")


def quadratic_gap(b: float, c: float, s: complex) -> complex:
    """Printed minus corrected right-hand side: ``4c^{s+1}/(s+1) - c^s (b(s-1)+c)``."""
    s = complex(s)
    return 4 * _c_power(c, s + 1) / (s + 1) - _c_power(c, s) * (b * (s - 1) + c)


# ---------------------------------------------------------------------------
# singularity screens (distances measured in s)


def _near_int(x: complex, upper=math.inf, scale=1.0) -> bool:
    n = round(x.real)
    return n <= upper and abs(x - n) / scale < SINGULAR_RADIUS


def _near_pole_tk(k, s):
    # poles of Gamma_{t^k}(s): k(s-1)+1 in {0, -1, ...}
    return _near_int(k * (s - 1) + 1, upper=0, scale=k)


def _near_ks_integer(k, s, upper=math.inf):
    return _near_int(k * s, upper=upper, scale=k)


# ---------------------------------------------------------------------------
# identity registry


@dataclass(frozen=True)
class Identity:
    name: str
    family: str                 # "monomial", "quadratic" or "beta"
    tolerance: float
    evaluate: Callable
    singular: Callable
    default_params: tuple
    default_grid: tuple
    error_aware: bool = False
    description: str = ""


def _functional_eq(k, s, cfg):
    lhs = gamma_tk_closed(k, s + 1)
    g = gamma_tk_closed(k, s)
    B = monomial_B(k)(s)
    return lhs, ComplexEval(B * g.value, abs(B) * g.abs_err, "closed_form")


def _functional_eq_quad(k, s, cfg):
    dom = GammaDomain.monomial(k)
    lhs = gamma_f_quadrature(dom, s + 1, cfg)
    g = gamma_f_quadrature(dom, s, cfg)
    B = monomial_B(k)(s)
    return lhs, ComplexEval(B * g.value, abs(B) * g.abs_err, "quadrature")


def _limit_rep(k, s, cfg):
    return gamma_tk_closed(k, s), gauss_limit_product(k, s, LIMIT_TERMS)


def _weierstrass(k, s, cfg):
    g = gamma_tk_closed(k, s)
    inv = 1 / g.value
    return (ComplexEval(inv, abs(inv) * g.abs_err / abs(g.value), "closed_form"),
            weierstrass_reciprocal(k, s, PRODUCT_TERMS))


def _product(a: ComplexEval, b: ComplexEval) -> ComplexEval:
    v = a.value * b.value
    return ComplexEval(v, abs(a.value) * b.abs_err + abs(b.value) * a.abs_err, a.method)


def _reflection(k, s, cfg):
    lhs = _product(gamma_tk_continued(k, s), gamma_tk_continued(k, 1 - s))
    return lhs, reflection_rhs(k, s)


def _quarter(k, s, cfg):
    lhs = _product(gamma_tk_continued(k, s), gamma_tk_continued(k, 1 / k - s))
    return lhs, quarter_reflection_rhs(k, s)


def _quarter_corrected(k, s, cfg):
    lhs = _product(gamma_tk_continued(k, s), gamma_tk_continued(k, 1 / k - s))
    return lhs, quarter_reflection_rhs_corrected(k, s)


def _kgamma_bridge(k, s, cfg):
    return gamma_tk_closed(k, s), gamma_tk_via_kgamma(k, s, cfg)


def _kgamma_shift(k, s, cfg):
    return gamma_tk_closed(k, s + 1), kgamma_shift_rhs(k, s, cfg)


def _zeta_relation(k, s, cfg):
    return zeta_f_series(GammaDomain.monomial(k), s, ZETA_TERMS, cfg), zeta_tk(k, s)


def _beta_relation(k, pq, cfg):
    p, q = pq
    return beta_f(GammaDomain.monomial(k), p, q, cfg), beta_tk_relation_rhs(k, p, q)


def _asymptotic(k, s, cfg):
    return gamma_tk_closed(k, s), asymptotic_approx(k, s)


def _quad_printed(bc, s, cfg):
    return quadratic_printed_sides(bc[0], bc[1], s, cfg)


def _quad_corrected(bc, s, cfg):
    return quadratic_corrected_sides(bc[0], bc[1], s, cfg)


def _beta_singular(k, pq):
    p, q = pq
    return (_near_ks_integer(k, p, upper=k - 1) or _near_ks_integer(k, q, upper=k - 1)
            or _near_ks_integer(k, p + q, upper=k - 1))


_S_MAIN = tuple(complex(x, y) for y in (0.0, 1.0) for x in (1.2, 1.5, 2.0, 2.5))
_K123 = (1, 2, 3)
_BC = ((0.0, 1.0), (1.0, 3.0), (0.0, 4.0))
_S_QUAD = (1.0, 1.5, 2.0, 2.5)
_PQ = tuple((complex(p), complex(q)) for p in (0.5, 1.0, 1.7, 3.0) for q in (0.5, 1.0, 1.7, 3.0))


def _mk(name, family, tol, fn, singular, params, grid, error_aware=False, description=""):
    return Identity(name, family, tol, fn, singular, tuple(params),
                    tuple(grid), error_aware, description)


IDENTITIES: dict[str, Identity] = {i.name: i for i in [
    _mk("functional_eq", "monomial", 1e-10, _functional_eq,
        lambda k, s: _near_pole_tk(k, s) or _near_pole_tk(k, s + 1), _K123, _S_MAIN,
        description="G(s+1) = B(s) G(s), closed-form gammas"),
    _mk("functional_eq_quadrature", "monomial", 1e-6, _functional_eq_quad,
        lambda k, s: _near_pole_tk(k, s), _K123, _S_MAIN,
        description="G(s+1) = B(s) G(s), quadrature gammas"),
    _mk("limit_rep", "monomial", 1e-3, _limit_rep, _near_pole_tk,
        (1, 2), (1.5, 2.0, 2.5),
        description=f"Gauss limit product at n = {LIMIT_TERMS}"),
    _mk("weierstrass", "monomial", 1e-3, _weierstrass, _near_pole_tk,
        (1, 2), (0.75, 1.5),
        description=f"Weierstrass product for 1/G truncated at N = {PRODUCT_TERMS}"),
    _mk("reflection", "monomial", 1e-8, _reflection,
        lambda k, s: _near_ks_integer(k, s), _K123, (0.2, 0.25, 0.3, 0.7, 1.3),
        description="G(s) G(1-s) = pi/sin(pi ks) prod 1/(k(s-1)+i)"),
    _mk("quarter_reflection", "monomial", 1e-6, _quarter,
        lambda k, s: _near_ks_integer(k, s), _K123, (0.1, 0.125, 0.2, 0.3, 0.45, 0.7, 1.3),
        description="G(s) G(1/k-s) = s(1-ks)/(B(s)B(1/k-s)) pi/sin(pi ks), as stated"),
    _mk("quarter_reflection_corrected", "monomial", 1e-6, _quarter_corrected,
        lambda k, s: _near_ks_integer(k, s), _K123, (0.1, 0.125, 0.2, 0.3, 0.45, 0.7, 1.3),
        description="same with the missing factor k restored"),
    _mk("kgamma_bridge", "monomial", 1e-6, _kgamma_bridge,
        lambda k, s: _near_ks_integer(k, s, upper=k - 1), _K123, (1.0, 1.5, 2.0),
        description="G(s) = k^{ks} s / B(s) Gamma_{1/k}(s)"),
    _mk("kgamma_shift", "monomial", 1e-6, _kgamma_shift,
        lambda k, s: _near_pole_tk(k, s + 1), _K123, (1.0, 1.5, 2.0),
        description="G(s+1) = k^{ks} Gamma_{1/k}(s + 1/k)"),
    _mk("zeta_relation", "monomial", 1e-8, _zeta_relation, lambda k, s: False,
        _K123, (1.5, 2.0, 3.0), error_aware=True,
        description=f"series for zeta_t^k (N = {ZETA_TERMS}) against zeta(k(s-1)+1)"),
    _mk("beta_relation", "beta", 1e-8, _beta_relation, _beta_singular, _K123, _PQ,
        description="B_t^k(p,q) = kpq/(p+q) B(p+q)/(B(p)B(q)) Beta(kp,kq)"),
    _mk("quadratic_printed", "quadratic", 1e-6, _quad_printed,
        lambda bc, s: abs(s + 1) < SINGULAR_RADIUS, _BC, _S_QUAD,
        description="second-order relation for t^2+bt+c as stated"),
    _mk("quadratic_corrected", "quadratic", 1e-6, _quad_corrected,
        lambda bc, s: abs(s + 1) < SINGULAR_RADIUS, _BC, _S_QUAD,
        description="second-order relation with boundary terms kept"),
    _mk("asymptotic_ratio", "monomial", 2e-2, _asymptotic,
        lambda k, s: _near_ks_integer(k, s, upper=k - 1), _K123, (5.0, 10.0, 20.0),
        description="G(s) against sqrt(2 pi)(ks)^{ks+1/2} e^{-ks} / B(s)"),
]}


def _coerce_point(family, point):
    if family == "beta":
        p, q = point
        return (complex(p), complex(q))
    return complex(point)


def _coerce_param(family, param):
    if family == "quadratic":
        b, c = param
        return (float(b), float(c))
    return int(param)


def _evaluate_point(ident: Identity, param, point, tol, cfg) -> IdentityReport:
    if ident.family == "beta":
        params = (param, point[1])
        s = point[0]
    elif ident.family == "quadratic":
        params = param
        s = point
    else:
        params = (param,)
        s = point
    nan = complex(math.nan, math.nan)
    if ident.singular(param, point):
        return IdentityReport(ident.name, params, s, nan, nan, math.nan, math.nan,
                              "skipped_singular")
    try:
        lhs, rhs = ident.evaluate(param, point, cfg)
    except DomainError:
        return IdentityReport(ident.name, params, s, nan, nan, math.nan, math.nan,
                              "skipped_singular")
    abs_res, rel_res = _residuals(lhs.value, rhs.value)
    ok = rel_res <= tol
    if ident.error_aware and not ok:
        ok = abs_res <= 2 * (lhs.abs_err + rhs.abs_err) + tol * abs(rhs.value)
    return IdentityReport(ident.name, params, s, complex(lhs.value), complex(rhs.value),
                          abs_res, rel_res, "pass" if ok else "fail")


def check_identity(name: str, params=None, grid=None, tolerances=None,
                   cfg: QuadratureConfig | None = None, workers: int = 1) -> list[IdentityReport]:
    """Evaluate identity ``name`` on ``params x grid``.

    ``params`` are orders ``k`` (or ``(b, c)`` pairs for the quadratic
    identities); ``grid`` holds values of ``s`` (or ``(p, q)`` pairs for
    ``beta_relation``). Defaults come from the registry. ``tolerances`` is a
    float or a mapping ``name -> float`` overriding the registered relative
    tolerance.
    """
    if name not in IDENTITIES:
        raise KeyError(f"unknown identity {name!r}; known: {', '.join(sorted(IDENTITIES))}")
    ident = IDENTITIES[name]
    params = ident.default_params if params is None else params
    grid = ident.default_grid if grid is None else grid
    tol = ident.tolerance
    if isinstance(tolerances, dict):
        tol = tolerances.get(name, tol)
    elif tolerances is not None:
        tol = float(tolerances)
    cfg = cfg or QuadratureConfig()
    jobs = [(_coerce_param(ident.family, p), _coerce_point(ident.family, g))
            for p in params for g in grid]
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(lambda job: _evaluate_point(ident, *job, tol, cfg), jobs))
    else:
        reports = [_evaluate_point(ident, p, g, tol, cfg) for p, g in jobs]
    return sorted(reports, key=IdentityReport.sort_key)


# ---------------------------------------------------------------------------
# serialization


def _fmt(x) -> str:
    x = float(x)
    if math.isnan(x):
        return "nan"
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    text = repr(x)
    return text[:-2] if text.endswith(".0") else text


def _fmt_param(p) -> str:
    if isinstance(p, complex):
        return _fmt(p.real) if p.imag == 0 else f"{_fmt(p.real)},{_fmt(p.imag)}"
    return str(p) if isinstance(p, int) else _fmt(p)


def _row(r: IdentityReport) -> dict:
    p1 = _fmt_param(r.params[0]) if len(r.params) > 0 else ""
    p2 = _fmt_param(r.params[1]) if len(r.params) > 1 else ""
    return {
        "identity": r.identity, "param1": p1, "param2": p2,
        "s_re": _fmt(r.s.real), "s_im": _fmt(r.s.imag),
        "lhs_re": _fmt(r.lhs.real), "lhs_im": _fmt(r.lhs.imag),
        "rhs_re": _fmt(r.rhs.real), "rhs_im": _fmt(r.rhs.imag),
        "abs_residual": _fmt(r.abs_residual), "rel_residual": _fmt(r.rel_residual),
        "status": r.status,
    }


def _json_num(text: str):
    v = float(text)
    if not math.isfinite(v):
        return None
    return int(v) if text.lstrip("-").isdigit() else v


def emit_reports(reports, format: str = "csv") -> str:
    """Serialize reports deterministically, sorted by (identity, params, s)."""
    rows = [_row(r) for r in sorted(reports, key=IdentityReport.sort_key)]
    if format == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        return buf.getvalue()
    if format == "json":
        out = []
        for row in rows:
            obj = {}
            for col in CSV_COLUMNS:
                val = row[col]
                if col in ("identity", "status"):
                    obj[col] = val
                elif col in ("param1", "param2"):
                    obj[col] = None if val == "" else (val if "," in val else _json_num(val))
                else:
                    obj[col] = _json_num(val)
            out.append(obj)
        return json.dumps(out, indent=1) + "\n"
    raise ValueError(f"unknown report format {format!r}")


def _parse_param(val):
    if val is None or val == "":
        return None
    if isinstance(val, str):
        if "," in val:
            re_, im = val.split(",")
            return complex(float(re_), float(im))
        return int(val) if val.lstrip("-").isdigit() else float(val)
    return val


def _num(v):
    return math.nan if v is None else float(v)


def load_reports(text: str, format: str = "csv") -> list[IdentityReport]:
    """Inverse of :func:`emit_reports`."""
    if format == "csv":
        records = list(csv.DictReader(io.StringIO(text)))
    elif format == "json":
        records = json.loads(text)
    else:
        raise ValueError(f"unknown report format {format!r}")
    out = []
    for rec in records:
        params = tuple(p for p in (_parse_param(rec["param1"]), _parse_param(rec["param2"]))
                       if p is not None)
        if rec["identity"] in IDENTITIES and IDENTITIES[rec["identity"]].family == "beta":
            params = (params[0], complex(params[1]))
        out.append(IdentityReport(
            rec["identity"], params,
            complex(_num(rec["s_re"]), _num(rec["s_im"])),
            complex(_num(rec["lhs_re"]), _num(rec["lhs_im"])),
            complex(_num(rec["rhs_re"]), _num(rec["rhs_im"])),
            _num(rec["abs_residual"]), _num(rec["rel_residual"]), rec["status"]))
    return out
