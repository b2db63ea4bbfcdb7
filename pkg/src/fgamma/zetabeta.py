"""Zeta and beta functions attached to a polynomial ``f``.

    B_f(p, q) = Gamma_f(p) Gamma_f(q) / Gamma_f(p + q)
    zeta_f(s) Gamma_f(s) = sum_{n>=0} int_0^inf f^{s-1} e^{-(n+1)t} dt

For ``f = t**k`` these reduce to classical objects:
``zeta_{t^k}(s) = zeta(k(s-1)+1)`` and
``B_{t^k}(p,q) = kpq/(p+q) * B(p+q)/(B(p)B(q)) * Beta(kp, kq)``.
"""
from __future__ import annotations

import math

import numpy as np

from .errors import DomainError
from .gammaf import (GammaDomain, _check_k, _quadrature_majorant, gamma_f,
                     gamma_f_quadrature, monomial_B)
from .poly import RealPolynomial
from .quad import QuadratureConfig, integrate_exp_weighted
from .special import ComplexEval, classical_beta, riemann_zeta

__all__ = [
    "beta_f",
    "beta_tk_relation_rhs",
    "zeta_tk",
    "zeta_f_series",
    "zeta_f_terms",
    "zeta_tail_bound",
]


def beta_f(dom: GammaDomain, p: complex, q: complex,
           cfg: QuadratureConfig | None = None) -> ComplexEval:
    """``Gamma_f(p) Gamma_f(q) / Gamma_f(p+q)``; symmetric in ``p, q``."""
    p, q = complex(p), complex(q)
    if not (p.real > 0 and q.real > 0):
        raise DomainError("beta_f requires Re(p) > 0 and Re(q) > 0")
    gp = gamma_f(dom, p, cfg)
    gq = gamma_f(dom, q, cfg)
    gpq = gamma_f(dom, p + q, cfg)
    if gpq.value == 0:
        raise DomainError("Gamma_f(p+q) vanishes")
    num = gp.value * gq.value
    value = num / gpq.value
    rel = (gp.abs_err / abs(gp.value) + gq.abs_err / abs(gq.value)
           + gpq.abs_err / abs(gpq.value))
    method = "closed_form" if {gp.method, gq.method, gpq.method} == {"closed_form"} else "quadrature"
    return ComplexEval(value, abs(value) * rel, method)


def beta_tk_relation_rhs(k: int, p: complex, q: complex) -> ComplexEval:
    """``kpq/(p+q) * B(p+q) / (B(p) B(q)) * Beta(kp, kq)``."""
    k = _check_k(k)
    p, q = complex(p), complex(q)
    B = monomial_B(k)
    bp, bq = B(p), B(q)
    if bp == 0 or bq == 0:
        raise DomainError("B(p) or B(q) vanishes")
    if p + q == 0:
        raise DomainError("p + q vanishes")
    beta = classical_beta(k * p, k * q)
    value = k * p * q / (p + q) * B(p + q) / (bp * bq) * beta.value
    return ComplexEval(value, abs(value) * (beta.abs_err / abs(beta.value) + 1e-15 * (6 + 3 * k)),
                       "closed_form")


def zeta_tk(k: int, s: complex) -> ComplexEval:
    """``zeta_{t^k}(s) = zeta(k(s-1)+1)`` for ``Re(s) > 1``."""
    k = _check_k(k)
    s = complex(s)
    if not s.real > 1:
        raise DomainError("zeta_{t^k}(s) requires Re(s) > 1")
    return riemann_zeta(k * (s - 1) + 1)


def _term_config(cfg: QuadratureConfig | None, alpha: float) -> QuadratureConfig:
    cfg = cfg or QuadratureConfig()
    # terms shrink like (n+1)^-(alpha+1); tolerances must be relative
    return cfg.replace(abs_tol=1e-300, singularity_exponent=alpha)


def zeta_f_terms(dom: GammaDomain, s: complex, N: int,
                 cfg: QuadratureConfig | None = None) -> list:
    """Quadrature results for ``int_0^inf f^{s-1} e^{-(n+1)t} dt``, ``n = 0..N``."""
    s = complex(s)
    k0 = dom.k0
    q = RealPolynomial(dom.f.coeffs[k0:])
    w = s - 1
    alpha = k0 * (s.real - 1) if k0 else 0.0

    def integrand(t):
        with np.errstate(divide="ignore", invalid="ignore"):
            log_f = np.log(q(t))
            if k0:
                log_f = log_f + k0 * np.log(t)
            return np.exp(w * log_f)

    tcfg = _term_config(cfg, alpha)
    maj = _quadrature_majorant(dom.f, s.real)
    return [integrate_exp_weighted(integrand, n + 1.0, tcfg, majorant=maj)
            for n in range(int(N) + 1)]


def zeta_tail_bound(dom: GammaDomain, s: complex, N: int) -> float:
    """Bound on ``sum_{n>N} |int_0^inf f^{s-1} e^{-(n+1)t} dt|``.

    With ``f = t^k0 q`` and ``Q`` the sum of ``|q_i|``, for ``Re s > 1``
    ``|f^{s-1}| <= Q^{sigma-1} t^a e^{beta t}`` where ``a = k0 (sigma-1)``,
    ``beta = deg(q) (sigma-1)``. Each term is then at most
    ``Q^{sigma-1} Gamma(a+1) / (n+1-beta)^{a+1}`` and the integral test bounds
    the sum. Infinite when ``a = 0`` (``f(0) > 0``): the series diverges.
    """
    s = complex(s)
    sigma = s.real
    k0 = dom.k0
    q = dom.f.coeffs[k0:]
    e = sigma - 1
    a = k0 * e
    beta = (len(q) - 1) * e
    start = N + 1 - beta
    if a <= 0 or start <= 0:
        return math.inf
    Q = math.fsum(abs(c) for c in q)
    log_b = e * math.log(Q) + math.lgamma(a + 1) - a * math.log(start) - math.log(a)
    return math.exp(log_b)


def zeta_f_series(dom: GammaDomain, s: complex, N: int,
                  cfg: QuadratureConfig | None = None) -> ComplexEval:
    """Partial sum ``sum_{n=0}^{N}`` of the series for ``zeta_f(s) Gamma_f(s)``, over ``Gamma_f(s)``.

    ``abs_err`` combines the quadrature errors with :func:`zeta_tail_bound`.
    When ``f(0) > 0`` the series diverges logarithmically: the partial sum
    is returned with ``abs_err = inf`` and a warning.
    """
    s = complex(s)
    if not s.real > 1:
        raise DomainError("zeta_f(s) requires Re(s) > 1")
    if int(N) < 0:
        raise DomainError("N must be nonnegative")
    cfg = cfg or QuadratureConfig()
    terms = zeta_f_terms(dom, s, N, cfg)
    total = complex(math.fsum(t.value.real for t in terms), math.fsum(t.value.imag for t in terms))
    quad_err = math.fsum(t.abs_err for t in terms)
    # quadrature even for t^k, so numerator and denominator share one path
    gf = gamma_f_quadrature(dom, s, cfg)
    value = total / gf.value
    if s.imag == 0:
        value = complex(value.real, 0.0)
    tail = zeta_tail_bound(dom, s, N) / abs(gf.value)
    warnings = []
    if math.isinf(tail):
        warnings.append("series diverges or tail is unbounded for this N (f(0) > 0 or N too small)")
    elif tail > cfg.rel_tol * abs(value):
        warnings.append(f"truncation: tail bound {tail:.3g} exceeds rel_tol")
    err = quad_err / abs(gf.value) + abs(value) * gf.abs_err / abs(gf.value) + tail
    return ComplexEval(value, err, "series", tuple(warnings))

