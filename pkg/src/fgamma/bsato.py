"""Bernstein-Sato type polynomials for ``t**k`` and ``t**2 + b t + c``.

For ``f = t**k`` the operator ``d^k/dt^k`` maps ``f**s`` to
``B(s) f**(s-1)`` with ``B(s) = ks (ks-1) ... (ks-(k-1))``; the monic
generator is ``b(s) = s (s - 1/k) ... (s - (k-1)/k) = B(s) / k**k``.

For ``f = t**2 + b t + c`` the operator ``f d^2/dt^2 - 2s(2s-1)`` gives
``B(s) = (b**2 - 4c) s (s - 1)``.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError
from .poly import RealPolynomial, SPolynomial, is_admissible, s_poly_mul

__all__ = [
    "MAX_ORDER",
    "OperatorSpec",
    "BsatoResult",
    "c_recurrence",
    "bsato_monomial",
    "bsato_quadratic",
]

MAX_ORDER = 64


@dataclass(frozen=True)
class OperatorSpec:
    """Differential operator ``P`` with ``P f**s = B(s) f**(s-1)``.

    ``kind`` is ``"pure_derivative"`` (``d^order/dt^order``) or
    ``"quadratic_form"`` (``(t^2+bt+c) d^2/dt^2 - scalar_term(s)``).
    """

    kind: str
    order: int | None = None
    b: float | None = None
    c: float | None = None
    scalar_term: SPolynomial | None = None

    def __post_init__(self):
        if self.kind == "pure_derivative":
            if self.order is None or self.order < 1:
                raise ValueError("pure_derivative needs order >= 1")
        elif self.kind != "quadratic_form":
            raise ValueError(f"unknown operator kind {self.kind!r}")

    def describe(self) -> str:
        if self.kind == "pure_derivative":
            return "d/dt" if self.order == 1 else f"d^{self.order}/dt^{self.order}"
        return f"(t^2{self.b:+g}t{self.c:+g}) d^2/dt^2 - 2s(2s-1)"


@dataclass(frozen=True)
class BsatoResult:
    big_b: SPolynomial
    monic_b: SPolynomial | None
    operator: OperatorSpec
    degenerate: bool

    @property
    def roots(self) -> tuple[float, ...]:
        return () if self.degenerate else self.big_b.roots


def _check_order(k):
    if int(k) != k or k < 1:
        raise DomainError(f"k must be a positive integer, got {k!r}")
    if k > MAX_ORDER:
        raise ValueError(f"k={k} exceeds the supported maximum {MAX_ORDER}")
    return int(k)


def c_recurrence(k: int, m: int) -> SPolynomial:
    """``C_m(s)`` from ``C_1 = ks`` and ``C_{m+1} = C_m (ks - m)``."""
    k = _check_order(k)
    if int(m) != m or not 1 <= m <= k:
        raise DomainError(f"m must lie in [1, {k}], got {m!r}")
    C = SPolynomial.from_roots(k, [0.0])
    for j in range(1, int(m)):
        # ks - j = k (s - j/k)
        C = s_poly_mul(C, SPolynomial.from_roots(k, [j / k]))
    return C


def bsato_monomial(k: int) -> BsatoResult:
    k = _check_order(k)
    big_b = c_recurrence(k, k)
    roots = tuple(j / k for j in range(k))
    monic = SPolynomial.from_roots(1.0, roots)
    return BsatoResult(big_b, monic, OperatorSpec("pure_derivative", order=k), False)


def bsato_quadratic(b: float, c: float) -> BsatoResult:
    b, c = float(b), float(c)
    if not is_admissible(RealPolynomial((c, b, 1.0))):
        raise DomainError(f"t^2 + {b:g} t + {c:g} has a root in (0, inf)")
    disc = b * b - 4.0 * c
    scalar = SPolynomial.from_roots(4.0, [0.0, 0.5])  # 2s(2s-1)
    op = OperatorSpec("quadratic_form", b=b, c=c, scalar_term=scalar)
    if disc == 0.0:
        return BsatoResult(SPolynomial((0.0,)), None, op, True)
    big_b = SPolynomial.from_roots(disc, [0.0, 1.0])
    monic = SPolynomial.from_roots(1.0, [0.0, 1.0])
    return BsatoResult(big_b, monic, op, False)

