"""Walk through the exact spectrum of the flat unit torus.

Every eigenvalue is 4*pi^2*(m^2 + n^2), so enumerating eigenvalues is
lattice-point counting: an integer appears iff it is a sum of two squares.
This script prints the first eleven distinct eigenvalues with their
multiplicities and shows the exact counting formula in action.
"""

import math

from torusspec import (
    build_spectrum_table,
    counting_function_exact,
    lambda_k,
    weyl_lower_bound,
)
from torusspec.spectrum import FOUR_PI_SQ

table = build_spectrum_table(17)
print(table.to_csv())

print("Eigenvalues indexed with multiplicity:")
for k in (1, 2, 5, 6, 49, 50):
    val, cls = lambda_k(k)
    print(f"  lambda_{k} = 4*pi^2 * {cls.s}  (class indices {cls.first_index}..{cls.last_index})")

print("\nCounting function vs its explicit lower bound:")
for s in (1, 4, 17, 100, 1000):
    lam = FOUR_PI_SQ * s
    n = counting_function_exact(lam)
    lb = weyl_lower_bound(lam)
    print(f"  s={s:5d}: N = {n:6d}, bound = {lb:10.2f}, Weyl target lam/4pi = {lam/(4*math.pi):8.1f}")
