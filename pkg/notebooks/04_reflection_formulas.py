"""
Reflection formulas
===================

Gamma_{t^k}(s) Gamma_{t^k}(1-s) has a closed form with pi/sin(pi k s).
A second formula pairs s with 1/k - s; checking it numerically shows that
the commonly stated right-hand side is short by a factor k.
"""

from fgamma import (gamma_tk_continued, quarter_reflection_rhs, quarter_reflection_rhs_corrected,
                    reflection_rhs)

for k, s in [(1, 0.5), (2, 0.25), (3, 0.7)]:
    lhs = gamma_tk_continued(k, s).value * gamma_tk_continued(k, 1 - s).value
    print(f"k={k} s={s}:  product {lhs.real:+.15f}  formula {reflection_rhs(k, s).value.real:+.15f}")

###############################################################################
# Pairing s with 1/k - s.

print("\n k    s   product / stated RHS")
for k in (1, 2, 3, 4):
    for s in (0.1, 0.3):
        lhs = gamma_tk_continued(k, s).value * gamma_tk_continued(k, 1 / k - s).value
        print(f"{k:2d}  {s:.1f}   {(lhs / quarter_reflection_rhs(k, s).value).real:.12f}")

# Writing Gamma_{t^k}(s) = ks Gamma(ks) / B(s) and applying Euler's
# reflection to Gamma(ks) Gamma(1 - ks) gives the factor k directly.
k, s = 3, 0.1
lhs = gamma_tk_continued(k, s).value * gamma_tk_continued(k, 1 / k - s).value
print("\nwith the factor restored:", lhs.real, quarter_reflection_rhs_corrected(k, s).value.real)
