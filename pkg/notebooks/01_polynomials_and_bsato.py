"""
Polynomials, admissibility and B(s)
===================================

Gamma_f only makes sense for polynomials that stay positive on (0, inf).
This script checks a few candidates and then builds the polynomial B(s)
that shifts the exponent of f**s by one.
"""

from fgamma.bsato import bsato_monomial, bsato_quadratic, c_recurrence
from fgamma.poly import RealPolynomial, sturm_count

# Coefficients are written in ascending order: "1,0,1" is 1 + t^2.
for text in ["0,0,1", "1,0,1", "1,-2,1", "2,-3,1", "0,1,1"]:
    p = RealPolynomial.parse(text)
    print(f"{text:>8}  admissible={p.is_admissible()}  k0={p.multiplicity_at_zero()}")

# (t-1)^2 touches zero at t = 1; the Sturm count sees one distinct root.
print("roots of (t-1)^2 in (0, 5]:", sturm_count(RealPolynomial.parse("1,-2,1"), 0, 5))

###############################################################################
# For t^k the k-th derivative maps t^{ks} to B(s) t^{k(s-1)}.

for k in (1, 2, 3, 4):
    res = bsato_monomial(k)
    print(f"k={k}: B = {res.big_b.format():<22} roots {res.roots}  via {res.operator.describe()}")

# B is built one factor at a time: C_{m+1}(s) = C_m(s) (ks - m).
print("C_1..C_3 for k=3:", [c_recurrence(3, m).format() for m in (1, 2, 3)])

###############################################################################
# Quadratics t^2 + bt + c use a second-order operator. B vanishes
# identically when the discriminant is zero.

for b, c in [(0, 1), (1, 3), (2, 1)]:
    res = bsato_quadratic(b, c)
    print(f"b={b}, c={c}: B = {res.big_b.format():<10} degenerate={res.degenerate}")
