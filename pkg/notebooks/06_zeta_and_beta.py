"""
Zeta and beta functions of a polynomial
=======================================

zeta_f is only available as a truncated series with an explicit tail bound.
For f = t^k it collapses to zeta(k(s-1)+1), which gives a sharp check.
"""

from fgamma import GammaDomain, beta_f, beta_tk_relation_rhs, zeta_f_series, zeta_tk

target = zeta_tk(2, 2).value.real
print("zeta_{t^2}(2) = zeta(3) =", target)
for N in (10, 100, 1000):
    res = zeta_f_series(GammaDomain.monomial(2), 2, N)
    print(f"  N={N:5d}  partial {res.value.real:.12f}  gap {target - res.value.real:.2e}  bound {res.abs_err:.2e}")

# With f(0) > 0 every term behaves like 1/(n+1): the series diverges and
# says so instead of returning a number that looks converged.
res = zeta_f_series(GammaDomain.parse("1,0,1"), 2, 50)
print("f = 1 + t^2:", res.value.real, res.abs_err, res.warnings)

###############################################################################
# Beta: symmetric, and for t^k a rescaled Euler beta.

for k, p, q in [(2, 1, 1), (3, 0.7, 2.2), (2, 1.5 + 0.5j, 1)]:
    lhs = beta_f(GammaDomain.monomial(k), p, q).value
    rhs = beta_tk_relation_rhs(k, p, q).value
    print(f"k={k} p={p} q={q}: {lhs:.14g}  vs  {rhs:.14g}")

print("B_{1+t^2}(1, 1) =", beta_f(GammaDomain.parse("1,0,1"), 1, 1).value.real)
