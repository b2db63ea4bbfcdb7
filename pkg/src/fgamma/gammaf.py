"""Evaluators for the gamma function attached to a polynomial.

``Gamma_f(s) = int_0^inf f(t)**(s-1) exp(-t) dt`` for a polynomial ``f``
positive on ``(0, inf)``. For ``f = t**k`` this equals
``Gamma(k(s-1)+1)``; the monomial family additionally has a first-order
functional equation ``Gamma_{t^k}(s+1) = B(s) Gamma_{t^k}(s)``, product and
limit representations, reflection formulas, a Stirling-type asymptotic and a
bridge to the k-gamma function

    Gamma_k(s) = int_0^inf t**(s-1) exp(-t**k / k) dt.

All evaluators return :class:`~fgamma.special.ComplexEval`. Products and
powers that can get large are accumulated as logarithms and exponentiated
once at the end.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .bsato import MAX_ORDER, bsato_monomial
from .errors import DomainError, EvaluationOverflow, PoleError, SingularPointError
from .poly import RealPolynomial, is_admissible, multiplicity_at_zero
from .quad import QuadratureConfig, TailMajorant, integrate_exp_weighted
from .special import (LOG_MAX_FLOAT, ComplexEval, euler_gamma_constant, gamma,
                      log_gamma, log_sinpi)

__all__ = [
    "GammaDomain",
    "gamma_tk_closed",
    "gamma_f_quadrature",
    "gamma_f",
    "gamma_tk_continued",
    "gauss_limit_product",
    "weierstrass_reciprocal",
    "reflection_rhs",
    "asymptotic_approx",
    "k_gamma",
    "gamma_tk_via_kgamma",
    "kgamma_shift_rhs",
    "quarter_reflection_rhs",
    "quarter_reflection_rhs_corrected",
    "monomial_B",
]

# |B| below this fraction of its local scale triggers a near-pole warning
NEAR_POLE_RATIO = 1e-12


@dataclass(frozen=True)
class GammaDomain:
    """An admissible polynomial together with its half-plane of convergence.

    ``convergence_bound`` is ``1 - 1/k0`` for multiplicity ``k0 >= 1`` at the
    origin and ``-inf`` when ``f(0) > 0``.
    """

    f: RealPolynomial
    k0: int = field(init=False)
    convergence_bound: float = field(init=False)

    def __post_init__(self):
        f = self.f if isinstance(self.f, RealPolynomial) else RealPolynomial(tuple(self.f))
        object.__setattr__(self, "f", f)
        if f.is_zero():
            raise DomainError("Gamma_f is undefined for the zero polynomial")
        if not is_admissible(f):
            raise DomainError(f"f = [{f.format()}] is not positive on (0, inf)")
        k0 = multiplicity_at_zero(f)
        object.__setattr__(self, "k0", k0)
        object.__setattr__(self, "convergence_bound", 1.0 - 1.0 / k0 if k0 else -math.inf)

    @classmethod
    def monomial(cls, k: int) -> "GammaDomain":
        return cls(RealPolynomial.monomial(int(k)))

    @classmethod
    def parse(cls, text: str) -> "GammaDomain":
        return cls(RealPolynomial.parse(text))

    def contains(self, s: complex) -> bool:
        return complex(s).real > self.convergence_bound


def _check_k(k) -> int:
    if int(k) != k or k < 1:
        raise DomainError(f"k must be a positive integer, got {k!r}")
    return int(k)


def _clean(value: complex, log_value: complex, real_input: bool) -> complex:
    # for real inputs the phase is a multiple of pi; drop rounding noise
    if real_input:
        sign = -1.0 if round(log_value.imag / math.pi) % 2 else 1.0
        return complex(sign * abs(value), 0.0)
    return value


def _exp(log_value: complex, what: str) -> complex:
    if log_value.real > LOG_MAX_FLOAT:
        raise EvaluationOverflow(f"{what} overflows binary64")
    return cmath.exp(log_value)


def _csum(values) -> complex:
    values = np.asarray(values, dtype=complex)
    return complex(math.fsum(values.real), math.fsum(values.imag))


@lru_cache(maxsize=None)
def monomial_B(k: int):
    """``B(s) = ks (ks-1) ... (ks-(k-1))`` with its factored form."""
    return bsato_monomial(k).big_b


def _log_B(k: int, s: complex):
    """``log B(s)`` as a sum of factor logs; raises on an exact root."""
    ks = k * s
    factors = [ks - i for i in range(k)]
    for i, fac in enumerate(factors):
        if fac == 0 or s == i / k:
            raise PoleError(f"B(s) vanishes at s = {s!r} (root {i}/{k})", shift=0, root=i / k)
    log_b = k * 0j + _csum([cmath.log(fac) for fac in factors])
    scale = k * math.log(k) + k * math.log(max(1.0, abs(s)))
    near = log_b.real - scale < math.log(NEAR_POLE_RATIO)
    return log_b, near


# ---------------------------------------------------------------------------


def gamma_tk_closed(k: int, s: complex) -> ComplexEval:
    """``Gamma_{t^k}(s) = Gamma(k(s-1)+1)``."""
    k = _check_k(k)
    s = complex(s)
    x = k * (s - 1) + 1
    try:
        res = gamma(x)
    except PoleError as exc:
        raise PoleError(f"Gamma_t^{k} has a pole at s = {s!r} (k(s-1)+1 = {x.real:g})") from exc
    return ComplexEval(res.value, res.abs_err, "closed_form")


def _quadrature_majorant(f: RealPolynomial, sigma: float) -> TailMajorant:
    n = f.degree
    e = sigma - 1.0
    if e >= 0:
        upper = math.fsum(abs(c) for c in f.coeffs)
        return TailMajorant(upper ** e, n * e, 1.0)
    lead = f.leading
    rest = math.fsum(abs(c) for c in f.coeffs[:-1])
    if rest == 0:
        return TailMajorant(lead ** e, n * e, 1.0)
    # f(t) >= lead t^n / 2 once t >= 2 rest / lead (and t >= 1)
    return TailMajorant((lead / 2) ** e, n * e, max(1.0, 2 * rest / lead))


def gamma_f_quadrature(dom: GammaDomain, s: complex,
                       cfg: QuadratureConfig | None = None) -> ComplexEval:
    """``Gamma_f(s)`` by direct quadrature of its defining integral."""
    s = complex(s)
    if not dom.contains(s):
        raise DomainError(
            f"Re(s) = {s.real:g} outside the convergence half-plane Re(s) > {dom.convergence_bound:g}")
    cfg = cfg or QuadratureConfig()
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

    res = integrate_exp_weighted(integrand, 1.0, cfg.replace(singularity_exponent=alpha),
                                 majorant=_quadrature_majorant(dom.f, s.real))
    value = res.value
    if s.imag == 0:
        value = complex(value.real, 0.0)
    return ComplexEval(value, res.abs_err, "quadrature")


def gamma_f(dom: GammaDomain, s: complex, cfg: QuadratureConfig | None = None) -> ComplexEval:
    """Closed form when ``f`` is exactly ``t**k``, quadrature otherwise."""
    k = dom.f.monomial_order()
    if k is not None and k >= 1:
        return gamma_tk_closed(k, s)
    return gamma_f_quadrature(dom, s, cfg)


def gamma_tk_continued(k: int, s: complex, cfg: QuadratureConfig | None = None) -> ComplexEval:
    """Continuation ``Gamma(s) = Gamma(s+n) / (B(s) B(s+1) ... B(s+n-1))``.

    ``n`` is the smallest shift putting ``Re(s+n)`` one unit inside the
    half-plane ``Re > 1 - 1/k``. A pole is reported when a factor of the
    denominator vanishes exactly; an ill-conditioned but nonzero factor adds
    a warning instead.
    """
    k = _check_k(k)
    if k > MAX_ORDER:
        raise ValueError(f"k={k} exceeds the supported maximum {MAX_ORDER}")
    s = complex(s)
    target = 2.0 - 1.0 / k
    n = max(0, math.ceil(target - s.real))
    while s.real + n <= target:
        n += 1

    warnings = []
    log_den = 0j
    terms = []
    for j in range(n):
        sj = s + j
        for i in range(k):
            fac = k * sj - i
            if fac == 0 or sj == i / k:
                raise PoleError(
                    f"Gamma_t^{k} has a pole at s = {s!r}: B(s+{j}) = 0 at root {i}/{k}",
                    shift=j, root=i / k)
            terms.append(cmath.log(fac))
        scale = k * math.log(k) + k * math.log(max(1.0, abs(sj)))
        if math.fsum(math.log(abs(k * sj - i)) for i in range(k)) - scale < math.log(NEAR_POLE_RATIO):
            warnings.append(f"near pole: |B(s+{j})| is below {NEAR_POLE_RATIO:g} of its scale")
    if terms:
        log_den = _csum(terms)
    log_num = log_gamma(k * (s + n - 1) + 1)
    log_val = log_num - log_den
    value = _clean(_exp(log_val, "continued Gamma_t^k"), log_val, s.imag == 0)
    err = abs(value) * 1e-15 * (10 + n * k + abs(log_num))
    return ComplexEval(value, err, "continuation", tuple(warnings))


def gauss_limit_product(k: int, s: complex, n: int) -> ComplexEval:
    """Finite Gauss product ``n! n^x / (x (x+1) ... (x+n))``, ``x = k(s-1)+1``."""
    k = _check_k(k)
    n = int(n)
    if n < 1:
        raise DomainError("n must be positive")
    s = complex(s)
    x = k * (s - 1) + 1
    if x.imag == 0 and x.real <= 0 and x.real == math.floor(x.real) and -x.real <= n:
        raise DomainError(f"factor x + {int(-x.real)} of the limit product vanishes")
    logs = np.log(x + np.arange(n + 1, dtype=float).astype(complex))
    log_val = math.lgamma(n + 1) + x * math.log(n) - _csum(logs)
    value = _clean(_exp(log_val, "limit product"), log_val, s.imag == 0)
    err = abs(value) * abs(x * (x + 1)) / (2 * n)
    return ComplexEval(value, err, "limit")


def _log1p_minus_id(z: np.ndarray) -> np.ndarray:
    """``log(1+z) - z`` elementwise without cancellation for small ``|z|``."""
    z = np.asarray(z, dtype=complex)
    out = np.empty_like(z)
    small = np.abs(z) < 0.1
    zs = z[small]
    acc = np.zeros_like(zs)
    for j in range(24, 1, -1):
        acc = acc * zs + ((-1) ** (j + 1)) / j
    out[small] = acc * zs * zs
    zl = z[~small]
    out[~small] = np.log1p(zl) - zl
    return out


def weierstrass_reciprocal(k: int, s: complex, N: int) -> ComplexEval:
    """Truncated product ``x e^{gamma x} prod_{n<=N} (1 + x/n) e^{-x/n}``.

    Approximates ``1 / Gamma_{t^k}(s)``; ``x = k(s-1)+1``.
    """
    k = _check_k(k)
    N = int(N)
    if N < 1:
        raise DomainError("N must be positive")
    s = complex(s)
    x = k * (s - 1) + 1
    if x == 0 or (x.imag == 0 and x.real < 0 and x.real == math.floor(x.real) and -x.real <= N):
        return ComplexEval(0j, 0.0, "product")
    n = np.arange(1, N + 1, dtype=float)
    log_val = cmath.log(x) + euler_gamma_constant() * x + _csum(_log1p_minus_id(x / n))
    value = _clean(_exp(log_val, "Weierstrass product"), log_val, s.imag == 0)
    tail = abs(x) ** 2 / (2 * N)
    return ComplexEval(value, abs(value) * tail, "product")


def _real_integer(z: complex) -> bool:
    return z.imag == 0 and z.real == math.floor(z.real)


def reflection_rhs(k: int, s: complex) -> ComplexEval:
    """``pi / sin(pi k s) * prod_{i=1}^{k-1} 1 / (k(s-1)+i)``."""
    k = _check_k(k)
    s = complex(s)
    ks = k * s
    if _real_integer(ks):
        raise SingularPointError(f"sin(pi k s) = 0 at s = {s!r}")
    facs = [k * (s - 1) + i for i in range(1, k)]
    if any(f == 0 for f in facs):
        raise SingularPointError(f"a factor k(s-1)+i vanishes at s = {s!r}")
    log_val = math.log(math.pi) - log_sinpi(ks) - _csum([cmath.log(f) for f in facs] or [0j])
    value = _clean(_exp(log_val, "reflection"), log_val, s.imag == 0)
    return ComplexEval(value, abs(value) * 1e-15 * (4 + k), "closed_form")


def asymptotic_approx(k: int, s: complex) -> ComplexEval:
    """Leading term ``sqrt(2 pi) (ks)^{ks+1/2} e^{-ks} / B(s)``."""
    k = _check_k(k)
    s = complex(s)
    if not s.real > 0:
        raise DomainError("asymptotic approximation requires Re(s) > 0")
    log_b, near = _log_B(k, s)
    ks = k * s
    log_val = 0.5 * math.log(2 * math.pi) + (ks + 0.5) * cmath.log(ks) - ks - log_b
    value = _clean(_exp(log_val, "asymptotic approximation"), log_val, s.imag == 0)
    warnings = ("near pole: |B(s)| is tiny",) if near else ()
    return ComplexEval(value, abs(value) / (12 * abs(ks)), "asymptotic", warnings)


def k_gamma(kp: float, s: complex, cfg: QuadratureConfig | None = None) -> ComplexEval:
    """``Gamma_kp(s) = int_0^inf t^{s-1} exp(-t^kp / kp) dt`` by quadrature.

    With ``u = t^kp / kp`` the integral becomes
    ``int_0^inf (kp u)^{s/kp - 1} e^{-u} du``.
    """
    kp = float(kp)
    s = complex(s)
    if not kp > 0:
        raise DomainError("kp must be positive")
    if not s.real > 0:
        raise DomainError("k-gamma requires Re(s) > 0")
    cfg = cfg or QuadratureConfig()
    w = s / kp - 1
    log_kp = math.log(kp)

    def integrand(u):
        with np.errstate(divide="ignore"):
            return np.exp(w * (log_kp + np.log(u)))

    e = w.real
    maj = TailMajorant(kp ** e, e, 1.0)
    res = integrate_exp_weighted(integrand, 1.0, cfg.replace(singularity_exponent=e), majorant=maj)
    value = res.value if s.imag else complex(res.value.real, 0.0)
    return ComplexEval(value, res.abs_err, "quadrature")


def gamma_tk_via_kgamma(k: int, s: complex, cfg: QuadratureConfig | None = None) -> ComplexEval:
    """``k^{ks} s / B(s) * Gamma_{1/k}(s)``, an independent route to ``Gamma_{t^k}``."""
    k = _check_k(k)
    s = complex(s)
    if not s.real > 0:
        raise DomainError("the k-gamma bridge requires Re(s) > 0")
    log_b, near = _log_B(k, s)
    kg = k_gamma(1.0 / k, s, cfg)
    log_pref = k * s * math.log(k) + cmath.log(s) - log_b
    pref = _exp(log_pref, "k-gamma prefactor")
    value = pref * kg.value
    if s.imag == 0:
        value = complex(value.real, 0.0)
    warnings = ("near pole: |B(s)| is tiny",) if near else ()
    return ComplexEval(value, abs(pref) * kg.abs_err + abs(value) * 1e-15 * (4 + k),
                       "quadrature", warnings)


def kgamma_shift_rhs(k: int, s: complex, cfg: QuadratureConfig | None = None) -> ComplexEval:
    """``k^{ks} Gamma_{1/k}(s + 1/k)``, which equals ``Gamma_{t^k}(s+1)``."""
    k = _check_k(k)
    s = complex(s)
    kg = k_gamma(1.0 / k, s + 1.0 / k, cfg)
    pref = _exp(k * s * math.log(k), "k-gamma prefactor")
    value = pref * kg.value
    return ComplexEval(value, abs(pref) * kg.abs_err, "quadrature")


def quarter_reflection_rhs(k: int, s: complex) -> ComplexEval:
    """``s(1-ks) / (B(s) B(1/k-s)) * pi / sin(pi k s)``.

    This is the right-hand side exactly as stated for the product
    ``Gamma_{t^k}(s) Gamma_{t^k}(1/k - s)``. For ``k >= 2`` the product
    actually equals ``k`` times this value, see
    :func:`quarter_reflection_rhs_corrected`.
    """
    k = _check_k(k)
    s = complex(s)
    ks = k * s
    if _real_integer(ks):
        raise SingularPointError(f"k s is an integer at s = {s!r}")
    B = monomial_B(k)
    den = B(s) * B(1.0 / k - s)
    if den == 0:
        raise SingularPointError(f"B(s) B(1/k - s) vanishes at s = {s!r}")
    log_val = math.log(math.pi) - log_sinpi(ks)
    value = s * (1 - ks) / den * _exp(log_val, "quarter reflection")
    if s.imag == 0:
        value = complex(value.real, 0.0)
    return ComplexEval(value, abs(value) * 1e-15 * (8 + 2 * k), "closed_form")


def quarter_reflection_rhs_corrected(k: int, s: complex) -> ComplexEval:
    """``k s(1-ks) / (B(s) B(1/k-s)) * pi / sin(pi k s)``.

    Follows from ``Gamma_{t^k}(s) = Gamma(ks) ks / B(s)`` and Euler's
    reflection formula for ``Gamma(ks) Gamma(1-ks)``.
    """
    res = quarter_reflection_rhs(k, s)
    return ComplexEval(k * res.value, k * res.abs_err, "closed_form")
