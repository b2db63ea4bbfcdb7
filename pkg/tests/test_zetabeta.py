import math

import mpmath as mp
import pytest
from hypothesis import assume, given, strategies as st

from fgamma.errors import DomainError
from fgamma.gammaf import GammaDomain, gamma_tk_closed
from fgamma.zetabeta import (beta_f, beta_tk_relation_rhs, zeta_f_series, zeta_f_terms,
                             zeta_tail_bound, zeta_tk)

from conftest import rel

ZETA3 = 1.2020569031595942


def test_zeta_tk_values():
    assert zeta_tk(2, 2).value.real == pytest.approx(ZETA3, abs=1e-12)
    assert zeta_tk(1, 2).value.real == pytest.approx(math.pi ** 2 / 6, rel=1e-13)
    with pytest.raises(DomainError):
        zeta_tk(2, 1)


@pytest.mark.parametrize("k,s", [(1, 2.0), (2, 2.0), (3, 1.5 + 0.5j)])
def test_terms_are_scaled_gammas(k, s):
    terms = zeta_f_terms(GammaDomain.monomial(k), s, 6)
    g = gamma_tk_closed(k, s).value
    for n, t in enumerate(terms):
        assert rel(t.value, g / (n + 1) ** (k * (s - 1) + 1)) <= 1e-8


@pytest.mark.parametrize("N", [100, 1000])
def test_series_converges_within_tail(N):
    res = zeta_f_series(GammaDomain.monomial(2), 2, N)
    gap = abs(res.value - ZETA3)
    tail = zeta_tail_bound(GammaDomain.monomial(2), 2, N) / gamma_tk_closed(2, 2).value.real
    assert gap <= 2 * tail
    assert gap <= res.abs_err


def test_tail_bound_is_an_upper_bound():
    # sum_{n>N} Gamma(ks-k+1)/(n+1)^{k(s-1)+1} against the integral-test bound
    k, s, N = 2, 2.0, 50
    exact = float(mp.gamma(k * (s - 1) + 1) * mp.zeta(k * (s - 1) + 1, N + 2))
    assert zeta_tail_bound(GammaDomain.monomial(k), s, N) >= exact


def test_divergent_series_flags():
    res = zeta_f_series(GammaDomain.parse("1,0,1"), 2, 20)
    assert res.abs_err == math.inf and res.warnings
    assert zeta_tail_bound(GammaDomain.parse("1,0,1"), 2, 20) == math.inf


def test_general_polynomial_series_against_mpmath():
    # f = t^2 + t: zeta_f(s) Gamma_f(s) = sum_n int f^{s-1} e^{-(n+1)t}
    dom = GammaDomain.parse("0,1,1")
    s, N = 3.0, 30
    f = lambda t: t * t + t
    num = sum(mp.quad(lambda t: f(t) ** (s - 1) * mp.exp(-(n + 1) * t), [0, mp.inf])
              for n in range(N + 1))
    den = mp.quad(lambda t: f(t) ** (s - 1) * mp.exp(-t), [0, mp.inf])
    res = zeta_f_series(dom, s, N)
    assert rel(res.value, complex(num / den)) <= 1e-9


def test_series_domain():
    with pytest.raises(DomainError):
        zeta_f_series(GammaDomain.monomial(2), 1.0, 10)


def test_beta_examples():
    assert beta_f(GammaDomain.monomial(2), 1, 1).value.real == pytest.approx(0.5, rel=1e-14)
    assert beta_tk_relation_rhs(2, 1, 1).value.real == pytest.approx(0.5, rel=1e-14)
    assert beta_f(GammaDomain.parse("1,0,1"), 1, 1).value.real == pytest.approx(1 / 3, rel=1e-10)
    with pytest.raises(DomainError):
        beta_f(GammaDomain.monomial(2), -1, 1)


@given(st.integers(1, 4), st.floats(0.5, 3), st.floats(0.5, 3), st.floats(-1, 1))
def test_beta_relation(k, p, q, y):
    p = complex(p, y)
    assume(all(abs(k * x - i) > 1e-3 for x in (p, q, p + q) for i in range(k)))
    lhs = beta_f(GammaDomain.monomial(k), p, q).value
    assert rel(lhs, beta_tk_relation_rhs(k, p, q).value) <= 1e-8


@given(st.floats(0.3, 4), st.floats(0.3, 4))
def test_beta_symmetric(p, q):
    dom = GammaDomain.parse("1,0,1")
    assert beta_f(dom, p, q).value == beta_f(dom, q, p).value
    mono = GammaDomain.monomial(3)
    assert beta_f(mono, p, q).value == beta_f(mono, q, p).value
