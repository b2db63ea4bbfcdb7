"""
Three routes to Gamma_f
=======================

For f = t^k there is a closed form Gamma(k(s-1)+1). The defining integral
can also be computed directly, and left of the convergence half-plane the
functional equation continues the function.
"""

import math

from fgamma import (GammaDomain, PoleError, gamma_f_quadrature, gamma_tk_closed,
                    gamma_tk_continued)

dom = GammaDomain.monomial(2)
print("convergence half-plane: Re(s) >", dom.convergence_bound)

for s in [1.2, 2.0, 2.5 + 1j]:
    c = gamma_tk_closed(2, s)
    q = gamma_f_quadrature(dom, s)
    print(f"s={s}:  closed {c.value:.15g}  quadrature {q.value:.15g}  (est. err {q.abs_err:.1e})")

###############################################################################
# Non-monomial f only has the quadrature route. For f = 1 + t^2 the integer
# values are moments: Gamma_f(3) = int (1 + 2t^2 + t^4) e^{-t} = 1 + 4 + 24.

quad = GammaDomain.parse("1,0,1")
print("Gamma_{1+t^2}(3) =", gamma_f_quadrature(quad, 3).value.real)
print("Gamma_{1+t^2}(-1.5) =", gamma_f_quadrature(quad, -1.5).value.real, "(converges for every s)")

###############################################################################
# Continuation: Gamma(s) = Gamma(s+n) / (B(s) ... B(s+n-1)).

v = gamma_tk_continued(2, 0.25).value.real
print("continued Gamma_{t^2}(1/4) =", v, " -2 sqrt(pi) =", -2 * math.sqrt(math.pi))

for s in (0.0, 0.5, -1.5):
    try:
        gamma_tk_continued(2, s)
    except PoleError as err:
        print(f"s={s}: pole, B(s+{err.shift}) vanishes at root {err.root}")
