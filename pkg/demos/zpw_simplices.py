"""
Sylvester numbers and the ZPW simplices
=======================================

Sylvester's sequence grows doubly exponentially, and the simplices built from
it are the largest known lattice simplices with a given number of interior
lattice points.  This script builds a few, counts their interior points and
prints their volumes.
"""
from latsimplex import interior_points, sylvester_list, volume, zpw_simplex, zpw_volume

###############################################################################
# The sequence
# ------------
# Each term is one more than the product of all earlier terms.

s = sylvester_list(7)
print("s_1..s_7 =", s)
print("bits of s_20:", sylvester_list(20)[-1].bit_length())

###############################################################################
# A simplex with one interior point
# ---------------------------------

S = zpw_simplex(3, 1)
print(S)
print("interior points:", interior_points(S))
print("volume:", volume(S))

###############################################################################
# Volume table
# ------------
# Interior points are enumerated exactly, then the count and the volume are
# compared with the closed form.

print(f"{'d':>2} {'k':>2} {'count':>5} {'volume':>12}")
for d in range(1, 5):
    for k in (1, 2, 5):
        S = zpw_simplex(d, k)
        n = len(interior_points(S))
        assert n == k and volume(S) == zpw_volume(d, k)
        print(f"{d:>2} {k:>2} {n:>5} {str(volume(S)):>12}")
