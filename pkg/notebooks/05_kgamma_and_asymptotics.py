"""
The k-gamma bridge and large-s behaviour
========================================

Gamma_k(s) = int t^{s-1} exp(-t^k/k) dt is computed by quadrature and used
as an independent route to Gamma_{t^k}. The Stirling-type leading term is
compared against the closed form for growing s.
"""

import math

from fgamma import (asymptotic_approx, gamma_tk_closed, gamma_tk_via_kgamma, k_gamma,
                    kgamma_shift_rhs)

for kp, s in [(1, 3.3), (2, 2), (0.5, 2)]:
    closed = kp ** (s / kp - 1) * math.gamma(s / kp)
    print(f"Gamma_{kp}({s}) = {k_gamma(kp, s).value.real:.14f}   closed form {closed:.14f}")

print()
for k in (1, 2, 3):
    for s in (1.0, 1.5 + 0.5j):
        a = gamma_tk_via_kgamma(k, s).value
        b = gamma_tk_closed(k, s).value
        c = kgamma_shift_rhs(k, s).value / gamma_tk_closed(k, s + 1).value
        print(f"k={k} s={s}: bridge rel err {abs(a - b) / abs(b):.1e}   shift ratio {c:.12f}")

###############################################################################
# Relative deviation of the leading term falls off like 1/s.

print("\n k   r(5)      r(10)     r(20)")
for k in (1, 2, 3):
    r = [abs(asymptotic_approx(k, s).value / gamma_tk_closed(k, s).value - 1) for s in (5, 10, 20)]
    print(f"{k:2d}  " + "  ".join(f"{x:.2e}" for x in r))
