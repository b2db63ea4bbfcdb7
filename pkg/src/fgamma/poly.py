"""Real-coefficient univariate polynomials.

Two flavours share one implementation: :class:`RealPolynomial` in the
integration variable ``t`` (the ``f`` of ``Gamma_f``) and
:class:`SPolynomial` in the parameter ``s`` (``B(s)``, ``C_m(s)``, ``b(s)``).
Coefficients are stored in ascending order, ``coeffs[i]`` multiplies ``x**i``.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .errors import DomainError

__all__ = [
    "RealPolynomial",
    "SPolynomial",
    "evaluate",
    "eval_complex_power",
    "derivative",
    "multiplicity_at_zero",
    "is_admissible",
    "sturm_count",
    "s_poly_eval",
    "s_poly_mul",
    "s_poly_roots",
]


def _normalize(coeffs) -> tuple[float, ...]:
    out = [float(c) for c in coeffs]
    if any(not math.isfinite(c) for c in out):
        raise ValueError("polynomial coefficients must be finite")
    while len(out) > 1 and out[-1] == 0.0:
        out.pop()
    if not out:
        out = [0.0]
    return tuple(out)


def _horner(coeffs, x):
    acc = coeffs[-1] * (x * 0 + 1)
    for c in reversed(coeffs[:-1]):
        acc = acc * x + c
    return acc


def _mul_coeffs(a, b):
    out = [0.0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0.0:
            continue
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return out


@dataclass(frozen=True)
class _Poly:
    coeffs: tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _normalize(self.coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> float:
        return self.coeffs[-1]

    def is_zero(self) -> bool:
        return self.coeffs == (0.0,)

    def __call__(self, x):
        """Horner evaluation; works for floats, complex numbers and arrays."""
        return _horner(self.coeffs, x)

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)


@dataclass(frozen=True)
class RealPolynomial(_Poly):
    """Polynomial ``f(t)`` with real coefficients."""

    @classmethod
    def parse(cls, text: str) -> "RealPolynomial":
        """Parse the comma-separated ascending format, e.g. ``"1,0,1"``."""
        if not text or " " in text:
            raise ValueError(f"bad polynomial text {text!r}")
        try:
            return cls(tuple(float(tok) for tok in text.split(",")))
        except ValueError as exc:
            raise ValueError(f"bad polynomial text {text!r}") from exc

    @classmethod
    def monomial(cls, k: int) -> "RealPolynomial":
        return cls((0.0,) * k + (1.0,))

    def format(self) -> str:
        return ",".join(_fmt(c) for c in self.coeffs)

    def monomial_order(self) -> int | None:
        """``k`` if the polynomial is exactly ``t**k``, else ``None``."""
        k = self.degree
        if self.leading == 1.0 and all(c == 0.0 for c in self.coeffs[:-1]):
            return k
        return None

    def derivative(self) -> "RealPolynomial":
        return derivative(self)

    def multiplicity_at_zero(self) -> int:
        return multiplicity_at_zero(self)

    def is_admissible(self) -> bool:
        return is_admissible(self)


@dataclass(frozen=True)
class SPolynomial(_Poly):
    """Polynomial in the parameter ``s``.

    When built with :meth:`from_roots` the factored form ``leading * prod(s - r)``
    is kept alongside the expanded coefficients; evaluation and root queries
    then use the factors, so root locations are exact.
    """

    factored: tuple[float, tuple[float, ...]] | None = field(default=None, compare=False)

    @classmethod
    def from_roots(cls, leading: float, roots) -> "SPolynomial":
        roots = tuple(float(r) for r in roots)
        coeffs = [float(leading)]
        for r in roots:
            coeffs = _mul_coeffs(coeffs, [-r, 1.0])
        if leading == 0.0:
            return cls((0.0,))
        return cls(tuple(coeffs), factored=(float(leading), roots))

    @property
    def roots(self) -> tuple[float, ...] | None:
        return None if self.factored is None else self.factored[1]

    def __call__(self, s):
        return s_poly_eval(self, s)

    def format(self) -> str:
        return ",".join(_fmt(c) for c in self.coeffs)


def _fmt(x: float) -> str:
    text = repr(float(x))
    if text.endswith(".0"):
        text = text[:-2]
    return "0" if text == "-0" else text


# ---------------------------------------------------------------------------
# operations on RealPolynomial


def evaluate(p: _Poly, t):
    return p(t)


def eval_complex_power(p: RealPolynomial, t: float, w: complex) -> complex:
    """``exp(w * ln p(t))`` with the real logarithm; requires ``p(t) > 0``."""
    v = p(t)
    if not v > 0:
        raise DomainError(f"p({t!r}) = {v!r} is not positive")
    return cmath.exp(complex(w) * math.log(v))


def derivative(p: RealPolynomial) -> RealPolynomial:
    if p.degree == 0:
        return type(p)((0.0,))
    return type(p)(tuple(i * c for i, c in enumerate(p.coeffs) if i > 0))


def multiplicity_at_zero(p: RealPolynomial) -> int:
    if p.is_zero():
        raise DomainError("the zero polynomial has no multiplicity at 0")
    for i, c in enumerate(p.coeffs):
        if c != 0.0:
            return i
    raise AssertionError("unreachable")


def _frac_trim(c):
    while len(c) > 1 and c[-1] == 0:
        c.pop()
    return c


def _frac_rem(a, b):
    a = list(a)
    while len(a) >= len(b) and any(a):
        q = a[-1] / b[-1]
        shift = len(a) - len(b)
        for i, bi in enumerate(b):
            a[shift + i] -= q * bi
        a.pop()
    return _frac_trim(a or [Fraction(0)])


def _sign_changes(seq, x):
    signs = []
    for c in seq:
        v = _horner(c, x)
        if v != 0:
            signs.append(v > 0)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def sturm_count(p: RealPolynomial, lo: float, hi: float) -> int:
    """Number of distinct real roots of ``p`` in ``(lo, hi]``.

    The Sturm sequence is built in exact rational arithmetic from the
    (exactly representable) binary64 coefficients.
    """
    if p.is_zero():
        raise DomainError("Sturm count of the zero polynomial")
    p0 = [Fraction(c) for c in p.coeffs]
    if len(p0) == 1:
        return 0
    p1 = [i * c for i, c in enumerate(p0)][1:]
    seq = [p0, _frac_trim(p1)]
    while len(seq[-1]) > 1:
        r = _frac_rem(seq[-2], seq[-1])
        if not any(r):
            break
        seq.append([-c for c in r])
    lo, hi = Fraction(lo), Fraction(hi)
    return _sign_changes(seq, lo) - _sign_changes(seq, hi)


def is_admissible(p: RealPolynomial) -> bool:
    """True iff ``p(t) > 0`` for every ``t > 0``.

    The factor ``t**k0`` is removed first so that the Sturm count runs on a
    polynomial that does not vanish at 0; the count covers ``(0, M]`` with
    ``M`` the Cauchy root bound.
    """
    if p.is_zero():
        raise DomainError("the zero polynomial is not admissible")
    k0 = multiplicity_at_zero(p)
    q = RealPolynomial(p.coeffs[k0:])
    if q.leading < 0:
        return False
    if q.degree == 0:
        return True
    bound = 1.0 + max(abs(c / q.leading) for c in q.coeffs[:-1])
    return sturm_count(q, 0.0, bound) == 0


# ---------------------------------------------------------------------------
# operations on SPolynomial


def s_poly_eval(B: SPolynomial, s):
    if B.factored is not None:
        lead, roots = B.factored
        acc = lead * (s * 0 + 1)
        for r in roots:
            acc = acc * (s - r)
        return acc
    return _horner(B.coeffs, s)


def s_poly_mul(A: SPolynomial, B: SPolynomial) -> SPolynomial:
    if A.factored is not None and B.factored is not None:
        return SPolynomial.from_roots(A.factored[0] * B.factored[0],
                                      A.factored[1] + B.factored[1])
    return SPolynomial(tuple(_mul_coeffs(A.coeffs, B.coeffs)))


def s_poly_roots(B: SPolynomial) -> list[complex]:
    """Roots of ``B``; exact when ``B`` carries its factored form."""
    if B.degree < 1:
        raise DomainError("root finding on a constant polynomial")
    if B.factored is not None:
        return [complex(r) for r in B.factored[1]]
    return [complex(r) for r in np.polynomial.polynomial.polyroots(B.coeffs)]
