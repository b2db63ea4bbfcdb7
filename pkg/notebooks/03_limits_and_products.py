"""
Limit and product representations
=================================

Gauss's limit converges like 1/n; the truncated Weierstrass product for
1/Gamma has a tail of order |x|^2/(2N) on the log scale.
"""

from fgamma import gamma_tk_closed, gauss_limit_product, weierstrass_reciprocal

k, s = 2, 1.5
exact = gamma_tk_closed(k, s).value.real
print("Gauss limit, k=2, s=1.5 (exact value 1)")
prev = None
for n in (250, 500, 1000, 2000):
    err = abs(gauss_limit_product(k, s, n).value - exact)
    ratio = "" if prev is None else f"  ratio {err / prev:.4f}"
    print(f"  n={n:5d}  error {err:.3e}{ratio}")
    prev = err

###############################################################################
# The product approximates the reciprocal; its reported error is the tail
# estimate, which tracks the true error closely.

for k, s in [(1, 1.5), (2, 0.75)]:
    target = 1 / gamma_tk_closed(k, s).value
    for N in (10 ** 3, 10 ** 5):
        res = weierstrass_reciprocal(k, s, N)
        print(f"k={k} s={s} N={N:6d}: error {abs(res.value - target):.2e}  estimate {res.abs_err:.2e}")
