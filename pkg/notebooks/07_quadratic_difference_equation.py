"""
A second-order relation for t^2 + bt + c
========================================

Integrating by parts twice relates Gamma_f(s), Gamma_f(s+1) and
Gamma_f(s+2). Keeping the boundary terms at t = 0 matters: without them
the relation is off by 4c^{s+1}/(s+1) - c^s(b(s-1)+c).
"""

from fgamma import quadratic_corrected_sides, quadratic_gap, quadratic_printed_sides

print("  b    c     s    residual(no boundary)   gap formula   residual(with boundary)")
for b, c in [(0, 1), (1, 3), (0, 4)]:
    for s in (1, 1.5, 2, 2.5):
        pl, pr = quadratic_printed_sides(b, c, s)
        cl, cr = quadratic_corrected_sides(b, c, s)
        print(f"{b:3d} {c:4d} {s:5.1f}   {abs(pl.value - pr.value):18.12f}   "
              f"{abs(quadratic_gap(b, c, s)):12.8f}   {abs(cl.value - cr.value):.1e}")

# At s = 1 both sides of the corrected relation vanish term by term.
print(quadratic_corrected_sides(0, 1, 1)[1].value)
