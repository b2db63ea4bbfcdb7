"""Classical special functions used as building blocks and oracles.

Complex gamma values come from :func:`log_gamma` and are exponentiated from
log space so large arguments never overflow silently; on the real line the
libm gamma is used directly.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import DomainError, EvaluationOverflow, PoleError

__all__ = [
    "ComplexEval",
    "METHODS",
    "log_gamma",
    "gamma",
    "riemann_zeta",
    "classical_beta",
    "euler_gamma_constant",
    "laplace_point_approx",
    "log_sinpi",
]

METHODS = ("closed_form", "quadrature", "continuation", "product", "limit",
           "asymptotic", "series")

EULER_GAMMA = 0.5772156649015329
LOG_PI = math.log(math.pi)
HALF_LOG_2PI = 0.5 * math.log(2 * math.pi)
# largest x with exp(x) finite in binary64
LOG_MAX_FLOAT = math.log(np.finfo(float).max)

# Even Bernoulli numbers B_2, B_4, ..., B_22.
_BERNOULLI_EVEN = [Fraction(1, 6), Fraction(-1, 30), Fraction(1, 42),
                   Fraction(-1, 30), Fraction(5, 66), Fraction(-691, 2730),
                   Fraction(7, 6), Fraction(-3617, 510), Fraction(43867, 798),
                   Fraction(-174611, 330), Fraction(854513, 138)]

# Stirling series coefficients B_2m / (2m (2m - 1)), m = 1..10. With the
# argument shifted to |z| >= 8 the first omitted term is below 1e-19.
_STIRLING = [float(b / (2 * m * (2 * m - 1)))
             for m, b in enumerate(_BERNOULLI_EVEN[:10], start=1)]
_STIRLING_MIN_ABS = 8.0

# Euler-Maclaurin coefficients B_2j / (2j)!, j = 1..11.
_EM = [float(b / math.factorial(2 * j))
       for j, b in enumerate(_BERNOULLI_EVEN, start=1)]


@dataclass(frozen=True)
class ComplexEval:
    """A complex value with an absolute-error estimate and a method tag."""

    value: complex
    abs_err: float
    method: str
    warnings: tuple[str, ...] = ()

    def __post_init__(self):
        if self.method not in METHODS:
            raise ValueError(f"unknown method tag {self.method!r}")
        if not self.abs_err >= 0:
            raise ValueError("abs_err must be nonnegative")

    def __complex__(self):
        return complex(self.value)


def _is_nonpositive_integer(z: complex) -> bool:
    return z.imag == 0 and z.real <= 0 and z.real == math.floor(z.real)


def _stirling(z: complex) -> complex:
    inv = 1 / z
    inv2 = inv * inv
    series = 0j
    for c in reversed(_STIRLING):
        series = series * inv2 + c
    return (z - 0.5) * cmath.log(z) - z + HALF_LOG_2PI + series * inv


def log_sinpi(z: complex) -> complex:
    """Principal ``log(sin(pi z))`` without overflow for large ``|Im z|``."""
    z = complex(z)
    x = z.real - 2.0 * round(z.real / 2.0)
    y = z.imag
    if y == 0.0:
        v = math.sin(math.pi * x)
        if v == 0.0:
            raise PoleError(f"sin(pi z) vanishes at z = {z!r}")
        # limit from Im z = +0: the sign of Im sin(pi z) is that of cos(pi x)
        if v > 0:
            return complex(math.log(v), 0.0)
        return complex(math.log(-v), -math.pi if math.cos(math.pi * x) < 0 else math.pi)
    if abs(y) < 20.0:
        return cmath.log(cmath.sin(math.pi * complex(x, y)))
    w = complex(x, abs(y))
    # sin(pi w) = (i/2) e^{-i pi w} (1 - e^{2 i pi w}), |e^{2 i pi w}| tiny
    val = -1j * math.pi * w + cmath.log(0.5j) + cmath.log(1 - cmath.exp(2j * math.pi * w))
    im = math.remainder(val.imag, 2 * math.pi)
    if im == -math.pi:
        im = math.pi
    val = complex(val.real, im)
    return val if y > 0 else val.conjugate()


def log_gamma(z: complex) -> complex:
    """Principal branch of ``log Gamma(z)``.

    Stirling series (fixed Bernoulli coefficients) after an upward shift to
    ``|z| >= 8`` for ``Re z >= 1/2``; the reflection formula with an explicit
    ``2 pi i`` branch correction otherwise. The branch cut is the negative
    real axis, approached from above for real arguments.
    """
    z = complex(z)
    if z.imag == 0.0:
        z = complex(z.real, 0.0)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise DomainError(f"log_gamma of non-finite {z!r}")
    if _is_nonpositive_integer(z):
        raise PoleError(f"Gamma has a pole at {z.real:g}")
    if z.real < 0.5:
        m = math.copysign(1.0, z.imag) * math.floor(0.5 * z.real + 0.25)
        return (LOG_PI - log_sinpi(z) - log_gamma(1 - z)
                + complex(0.0, 2 * math.pi * m))
    if abs(z) >= _STIRLING_MIN_ABS:
        return _stirling(z)
    n = math.ceil(_STIRLING_MIN_ABS - z.real)
    shift = math.fsum(cmath.log(z + j).real for j in range(n))
    shift_im = math.fsum(cmath.log(z + j).imag for j in range(n))
    return _stirling(z + n) - complex(shift, shift_im)


def _exp_checked(lg: complex, what: str) -> complex:
    if lg.real > LOG_MAX_FLOAT:
        raise EvaluationOverflow(f"{what} overflows binary64 (log modulus {lg.real:.6g})")
    return cmath.exp(lg)


def gamma(z: complex) -> ComplexEval:
    """Euler gamma function; libm on the real line, ``exp(log_gamma(z))`` elsewhere."""
    z = complex(z)
    if z.imag == 0.0 and not _is_nonpositive_integer(z):
        try:
            # libm gamma is accurate to a few ulp on the real line
            v = math.gamma(z.real)
            return ComplexEval(complex(v, 0.0), abs(v) * 4e-16 * 4, "closed_form")
        except OverflowError:
            pass
    lg = log_gamma(z)
    value = _exp_checked(lg, f"Gamma({z!r})")
    if z.imag == 0.0:
        sign = -1.0 if round(lg.imag / math.pi) % 2 else 1.0
        value = complex(sign * abs(value), 0.0)
    err = abs(value) * 4e-16 * (8.0 + abs(lg))
    return ComplexEval(value, err, "closed_form")


def riemann_zeta(z: complex) -> ComplexEval:
    """Riemann zeta for ``Re z > 1`` by Euler-Maclaurin summation."""
    z = complex(z)
    if not z.real > 1.0:
        raise DomainError(f"riemann_zeta requires Re(z) > 1, got {z!r}")
    N = max(20, math.ceil(abs(z)))
    n = np.arange(1, N, dtype=float)
    terms = np.exp(-z * np.log(n))
    head = complex(math.fsum(terms.real), math.fsum(terms.imag))
    Nz = cmath.exp(-z * math.log(N))
    tail = N * Nz / (z - 1) + 0.5 * Nz
    # rising factorial (z)_{2j-1} times N^{-z-2j+1}
    poch = z / N
    corr = []
    for j, c in enumerate(_EM, start=1):
        corr.append(c * poch * Nz)
        poch *= (z + 2 * j - 1) * (z + 2 * j) / (N * N)
    value = head + tail + sum(corr[:-1])
    err = abs(corr[-1]) + abs(value) * 1e-15
    return ComplexEval(value, err, "series")


def classical_beta(p: complex, q: complex) -> ComplexEval:
    """``Gamma(p) Gamma(q) / Gamma(p + q)``, symmetric in ``p`` and ``q``."""
    p, q = complex(p), complex(q)
    lg = log_gamma(p) + log_gamma(q) - log_gamma(p + q)
    value = _exp_checked(lg, "beta")
    if p.imag == 0.0 and q.imag == 0.0:
        sign = -1.0 if round(lg.imag / math.pi) % 2 else 1.0
        value = complex(sign * abs(value), 0.0)
    err = abs(value) * 1e-15 * (8.0 + abs(lg))
    return ComplexEval(value, err, "closed_form")


def euler_gamma_constant() -> float:
    """The Euler-Mascheroni constant."""
    return EULER_GAMMA


def laplace_point_approx(g_at_c: float, f_at_c: float, f2_at_c: float, h: float) -> float:
    """Leading Laplace-method term for ``int g(x) exp(-f(x)/h) dx``.

    ``sqrt(h) exp(-f(c)/h) sqrt(2 pi) g(c) / sqrt(f''(c))`` for an interior
    nondegenerate minimum ``c``; assembled in log space.
    """
    if not f2_at_c > 0:
        raise DomainError("f''(c) must be positive")
    if not h > 0:
        raise DomainError("h must be positive")
    if g_at_c == 0:
        return 0.0
    log_mag = 0.5 * math.log(h) - f_at_c / h + HALF_LOG_2PI - 0.5 * math.log(f2_at_c)
    log_mag += math.log(abs(g_at_c))
    if log_mag > LOG_MAX_FLOAT:
        raise EvaluationOverflow("Laplace approximation overflows binary64")
    return math.copysign(math.exp(log_mag), g_at_c)
