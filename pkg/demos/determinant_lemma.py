"""
Small image vectors
===================

A square rational matrix with 0 < |det A| < 1 maps some nonzero integer vector
into the open unit cube.  The search below finds all such vectors exactly.
"""
import random
from fractions import Fraction

from latsimplex import RationalMatrix, det, find_small_image_vector
from latsimplex.prodsum import small_image_vectors

A = RationalMatrix.from_rows([[Fraction(5, 3), Fraction(-4, 3)], [-1, 1]])
print("det A =", det(A))
print("all solutions:", small_image_vectors(A))
print("chosen:", find_small_image_vector(A))

###############################################################################
# Random matrices
# ---------------

rng = random.Random(1)
found = 0
while found < 5:
    n = rng.randint(2, 4)
    M = RationalMatrix.from_rows([[Fraction(rng.randint(-9, 9), rng.randint(1, 6)) for _ in range(n)]
                                  for _ in range(n)])
    D = det(M)
    if not 0 < abs(D) < 1:
        continue
    y = find_small_image_vector(M)
    print(f"n={n} det={D} y={y} image={[str(v) for v in M.apply(y)]}")
    found += 1
