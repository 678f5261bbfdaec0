"""Compute the first zero of J0 from scratch and derive the two key constants.

The zero is bracketed in [2, 3] by bisection on the power series, then
polished with Newton's method (J0' = -J1).  The two derived constants,
pi*j01^2 (the disk Faber-Krahn product) and j01^2/(4*pi) (the ratio-test
bound), drive the Courant-sharp certification.
"""

import math

from torusspec import bessel_j0, faber_krahn_constant, j01, ratio_bound

zero = j01()
print(f"j01        = {zero.value:.15f}")
print(f"residual   = {zero.residual:.3e} (tolerance {zero.tolerance:.0e})")
print(f"pi*j01^2   = {faber_krahn_constant():.10g}")
print(f"j01^2/4pi  = {ratio_bound():.10g}")

print("\nJ0 along [0, 6]:")
for x in [0.0, 1.0, 2.0, zero.value, 3.0, 4.0, 5.0, 6.0]:
    marker = "  <- first zero" if x == zero.value else ""
    print(f"  J0({x:6.4f}) = {bessel_j0(x):+.12f}{marker}")

# sanity: the product lambda_1(D)*|D| for a planar disk of radius r is
# (j01/r)^2 * pi*r^2 = pi*j01^2, independent of r
print(f"\ndisk product check: {math.pi * zero.value**2:.10g}")
