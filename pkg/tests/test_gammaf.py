import math

import mpmath as mp
import pytest
from hypothesis import assume, given, strategies as st

from fgamma.errors import DomainError, PoleError, SingularPointError
from fgamma.gammaf import (GammaDomain, asymptotic_approx, gamma_f, gamma_f_quadrature,
                           gamma_tk_closed, gamma_tk_continued, gamma_tk_via_kgamma,
                           gauss_limit_product, k_gamma, kgamma_shift_rhs, monomial_B,
                           quarter_reflection_rhs, quarter_reflection_rhs_corrected,
                           reflection_rhs, weierstrass_reciprocal)
from fgamma.poly import RealPolynomial

from conftest import rel

SQRT_PI = math.sqrt(math.pi)


def moment_gamma(coeffs, n):
    """Gamma_f(n+1) = int f^n e^{-t} for integer n, by expanding f^n."""
    poly = [1]
    for _ in range(n):
        out = [0] * (len(poly) + len(coeffs) - 1)
        for i, a in enumerate(poly):
            for j, b in enumerate(coeffs):
                out[i + j] += a * b
        poly = out
    return sum(c * math.factorial(i) for i, c in enumerate(poly))


def mp_gamma_f(coeffs, s):
    f = lambda t: sum(c * t ** i for i, c in enumerate(coeffs))
    return complex(mp.quad(lambda t: f(t) ** (s - 1) * mp.exp(-t), [0, 1, 10, mp.inf]))


# --- domain -----------------------------------------------------------------

def test_domain_bounds():
    assert GammaDomain.monomial(2).convergence_bound == 0.5
    assert GammaDomain.monomial(1).convergence_bound == 0.0
    d = GammaDomain.parse("1,0,1")
    assert d.k0 == 0 and d.convergence_bound == -math.inf and d.contains(-50)
    assert GammaDomain.parse("0,1,1").k0 == 1
    with pytest.raises(DomainError):
        GammaDomain.parse("1,-3,1")
    with pytest.raises(DomainError):
        GammaDomain.parse("0")


# --- closed form and quadrature ---------------------------------------------

def test_closed_form_examples():
    for k in (1, 2, 5):
        assert gamma_tk_closed(k, 1).value == 1.0
    assert gamma_tk_closed(2, 1.5).value == 1.0
    assert gamma_tk_closed(2, 2).value == 2.0
    with pytest.raises(PoleError):
        gamma_tk_closed(2, 0.5)


@pytest.mark.parametrize("coeffs,n", [((1, 0, 1), 1), ((1, 0, 1), 2), ((1, 0, 1), 3),
                                      ((3, 1, 1), 2), ((0, 1), 4), ((2, 0, 0, 1), 2)])
def test_quadrature_against_moment_expansion(coeffs, n):
    dom = GammaDomain(RealPolynomial(tuple(float(c) for c in coeffs)))
    want = moment_gamma(coeffs, n)
    assert rel(gamma_f_quadrature(dom, n + 1).value, want) <= 1e-12


def test_spec_quadrature_values():
    assert gamma_f_quadrature(GammaDomain.monomial(1), 5).value.real == pytest.approx(24, rel=1e-12)
    d = GammaDomain.parse("1,0,1")
    assert gamma_f_quadrature(d, 2).value.real == pytest.approx(3, rel=1e-12)
    assert gamma_f_quadrature(d, 3).value.real == pytest.approx(29, rel=1e-12)


@given(st.integers(1, 3), st.floats(0.1, 3.0), st.floats(-2, 2))
def test_quadrature_matches_closed_form(k, dx, y):
    s = complex(1 - 1 / k + dx, y)
    q = gamma_f_quadrature(GammaDomain.monomial(k), s)
    c = gamma_tk_closed(k, s)
    assert rel(q.value, c.value) <= 1e-8


@pytest.mark.parametrize("coeffs,s", [((1, 0, 1), 0.3 + 0.5j), ((3, 1, 1), -1.7),
                                      ((0, 2, 1), 1.6 - 1j), ((1, 1), 2.5)])
def test_quadrature_against_mpmath(coeffs, s):
    dom = GammaDomain(RealPolynomial(tuple(float(c) for c in coeffs)))
    res = gamma_f_quadrature(dom, s)
    assert rel(res.value, mp_gamma_f(coeffs, s)) <= 1e-9


def test_quadrature_outside_domain():
    with pytest.raises(DomainError):
        gamma_f_quadrature(GammaDomain.monomial(2), 0.4)


def test_gamma_f_dispatch():
    assert gamma_f(GammaDomain.monomial(3), 2).method == "closed_form"
    assert gamma_f(GammaDomain.parse("1,0,1"), 2).method == "quadrature"


# --- functional equation and continuation -----------------------------------

@given(st.integers(1, 6), st.floats(0.8, 4), st.floats(-2, 2))
def test_functional_equation(k, x, y):
    s = complex(x, y)
    assume(abs(k * (s - 1) + 1) > 0.05)
    lhs = gamma_tk_closed(k, s + 1).value
    rhs = monomial_B(k)(s) * gamma_tk_closed(k, s).value
    assert rel(lhs, rhs) <= 1e-10


def test_continued_examples():
    assert gamma_tk_continued(2, 0.25).value.real == pytest.approx(-2 * SQRT_PI, rel=1e-10)
    assert gamma_tk_continued(1, -0.5).value.real == pytest.approx(-2 * SQRT_PI, rel=1e-10)
    for s in (0.0, 0.5):
        with pytest.raises(PoleError) as info:
            gamma_tk_continued(2, s)
        assert info.value.shift == 0 and info.value.root == s


def test_continued_reports_shift():
    with pytest.raises(PoleError) as info:
        gamma_tk_continued(2, -1.5)
    assert info.value.shift == 2 and info.value.root == 0.5


@given(st.integers(1, 4), st.floats(-4, 3), st.floats(-1.5, 1.5))
def test_continued_agrees_with_closed(k, x, y):
    s = complex(x, y)
    z = k * (s - 1) + 1
    assume(abs(z.imag) > 1e-2 or abs(z.real - round(z.real)) > 1e-2 or z.real > 0.5)
    c = gamma_tk_closed(k, s).value
    assert rel(gamma_tk_continued(k, s).value, c) <= 1e-10


@given(st.sampled_from([1, 2, 4, 8]), st.integers(-5, 0), st.integers(0, 7))
def test_pole_set_is_exact(k, j, i):
    # every candidate pole i/k + j (i < k, j <= 0) is a pole of Gamma(k(s-1)+1);
    # k is a power of two so the candidate is exact in binary
    assume(i < k)
    s = i / k + j
    assume(k * (s - 1) + 1 <= 0)
    with pytest.raises(PoleError):
        gamma_tk_continued(k, s)
    with pytest.raises(PoleError):
        gamma_tk_closed(k, s)


def test_inexact_candidate_pole_warns():
    # -2/3 is not representable: the factor 3(s+1) - 1 is tiny but nonzero
    res = gamma_tk_continued(3, 1 / 3 - 1)
    assert any("near pole" in w for w in res.warnings)


def test_near_pole_warns():
    res = gamma_tk_continued(2, 0.5 + 1e-14)
    assert res.warnings and "near pole" in res.warnings[0]


# --- limit and product -----------------------------------------------------

def test_gauss_examples():
    assert gauss_limit_product(1, 2, 10).value.real == pytest.approx(100 / 132, rel=1e-13)
    # x = 2 telescopes to n^2 / ((n+1)(n+2)), about 3e-3 below the limit 1 at n = 1000
    n = 1000
    assert gauss_limit_product(2, 1.5, n).value.real == pytest.approx(n * n / ((n + 1) * (n + 2)), rel=1e-12)
    assert abs(gauss_limit_product(2, 1.5, n).value - 1) < 3e-3
    with pytest.raises(DomainError):
        gauss_limit_product(1, -1, 5)


@pytest.mark.parametrize("k,s", [(1, 2), (2, 1.5), (3, 1.2 + 0.5j)])
def test_gauss_rate(k, s):
    g = gamma_tk_closed(k, s).value
    for n in (250, 500, 1000):
        e1 = abs(gauss_limit_product(k, s, n).value - g)
        e2 = abs(gauss_limit_product(k, s, 2 * n).value - g)
        assert 0.4 <= e2 / e1 <= 0.6


@pytest.mark.parametrize("k,s", [(1, 1.5), (2, 1.5), (2, 0.75), (3, 1.1 + 0.3j)])
@pytest.mark.parametrize("N", [10 ** 3, 10 ** 4, 10 ** 5])
def test_weierstrass_within_tail(k, s, N):
    res = weierstrass_reciprocal(k, s, N)
    want = 1 / gamma_tk_closed(k, s).value
    assert abs(res.value - want) <= 3 * res.abs_err


def test_weierstrass_zero_at_poles():
    assert weierstrass_reciprocal(2, 0.5, 100).value == 0
    assert weierstrass_reciprocal(1, 1, 10 ** 5).value.real == pytest.approx(1, abs=1e-3)


# --- reflection formulas ---------------------------------------------------

def test_reflection_examples():
    assert reflection_rhs(1, 0.5).value.real == pytest.approx(math.pi, rel=1e-15)
    assert reflection_rhs(2, 0.25).value.real == pytest.approx(-2 * math.pi, rel=1e-14)
    with pytest.raises(SingularPointError):
        reflection_rhs(2, 0.5)


@given(st.integers(1, 4), st.floats(-2, 3), st.floats(-1, 1))
def test_reflection_identity(k, x, y):
    s = complex(x, y)
    ks = k * s
    assume(abs(ks.imag) > 1e-3 or abs(ks.real - round(ks.real)) > 1e-3)
    lhs = gamma_tk_continued(k, s).value * gamma_tk_continued(k, 1 - s).value
    assert rel(lhs, reflection_rhs(k, s).value) <= 1e-8


def test_quarter_reflection_k1():
    assert quarter_reflection_rhs(1, 0.5).value.real == pytest.approx(math.pi, rel=1e-15)
    with pytest.raises(SingularPointError):
        quarter_reflection_rhs(2, 0.5)


@given(st.integers(1, 5), st.floats(-1.5, 1.5), st.floats(-1, 1))
def test_quarter_reflection_true_form(k, x, y):
    # the product equals k times the stated right-hand side
    s = complex(x, y)
    ks = k * s
    assume(abs(ks.imag) > 1e-3 or abs(ks.real - round(ks.real)) > 1e-3)
    lhs = gamma_tk_continued(k, s).value * gamma_tk_continued(k, 1 / k - s).value
    assert rel(lhs, quarter_reflection_rhs_corrected(k, s).value) <= 1e-8
    assert rel(lhs, k * quarter_reflection_rhs(k, s).value) <= 1e-8


def test_quarter_reflection_against_mpmath():
    mp.mp.dps = 30
    k, s = 2, mp.mpf(1) / 8
    G = lambda x: mp.gamma(k * (x - 1) + 1)
    lhs = complex(G(s) * G(mp.mpf(1) / k - s))
    assert rel(quarter_reflection_rhs_corrected(k, 0.125).value, lhs) <= 1e-13
    assert rel(quarter_reflection_rhs(k, 0.125).value, lhs / 2) <= 1e-13


# --- asymptotic ----------------------------------------------------------

def test_asymptotic_k1_is_stirling():
    s = 30.0
    want = math.sqrt(2 * math.pi) * s ** (s - 0.5) * math.exp(-s)
    assert asymptotic_approx(1, s).value.real == pytest.approx(want, rel=1e-13)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_asymptotic_ratio_decreases(k):
    def r(s):
        return abs(asymptotic_approx(k, s).value / gamma_tk_closed(k, s).value - 1)
    assert r(20) < r(10) < r(5)
    assert r(20) <= 2e-2


def test_asymptotic_k2_s10():
    ratio = asymptotic_approx(2, 10).value / gamma_tk_closed(2, 10).value
    assert abs(ratio - 1) < 1e-2


def test_asymptotic_domain():
    with pytest.raises(DomainError):
        asymptotic_approx(2, -1)
    with pytest.raises(PoleError):
        asymptotic_approx(2, 0.5)


# --- k-gamma ------------------------------------------------------------

def test_kgamma_examples():
    assert k_gamma(1, 3.3).value.real == pytest.approx(math.gamma(3.3), rel=1e-10)
    assert k_gamma(2, 2).value.real == pytest.approx(1.0, rel=1e-10)
    assert k_gamma(0.5, 2).value.real == pytest.approx(0.75, rel=1e-10)
    with pytest.raises(DomainError):
        k_gamma(2, -1)
    with pytest.raises(DomainError):
        k_gamma(0, 1)


@given(st.floats(0.2, 4), st.floats(0.2, 5), st.floats(-2, 2))
def test_kgamma_closed_form(kp, x, y):
    s = complex(x, y)
    want = complex(mp.power(kp, s / kp - 1) * mp.gamma(s / kp))
    assert rel(k_gamma(kp, s).value, want) <= 1e-8


def test_kgamma_bridge_examples():
    assert gamma_tk_via_kgamma(1, 3).value.real == pytest.approx(2.0, rel=1e-10)
    assert gamma_tk_via_kgamma(2, 2).value.real == pytest.approx(2.0, rel=1e-10)
    assert gamma_tk_via_kgamma(2, 1).value.real == pytest.approx(1.0, rel=1e-10)
    with pytest.raises(PoleError):
        gamma_tk_via_kgamma(2, 0.5)


@given(st.integers(1, 4), st.floats(0.3, 3), st.floats(-1, 1))
def test_kgamma_bridge_and_shift(k, x, y):
    s = complex(x, y)
    assume(min(abs(k * s - i) for i in range(k)) > 1e-3)
    assert rel(gamma_tk_via_kgamma(k, s).value, gamma_tk_closed(k, s).value) <= 1e-6
    assert rel(kgamma_shift_rhs(k, s).value, gamma_tk_closed(k, s + 1).value) <= 1e-6
