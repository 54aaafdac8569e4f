"""A tour of the Walsh-Hadamard transform this package is built on.

The transform matrix contains only +1 and -1, so the fast version needs
nothing but additions and subtractions plus one final division.  Run
this script to see the matrix, the self-inverse property, and the DC
coefficient's direct link to image brightness.
"""

import numpy as np

from hadamark import fwht_1d_inplace, fwht_2d, hadamard_matrix

print("The order-4 transform matrix (Sylvester construction):")
print(hadamard_matrix(4))
print()

v = np.array([1.0, 2.0, 3.0, 4.0])
print(f"1-d transform of {v}:")
print(" ", fwht_1d_inplace(v.copy()))
print("  (unnormalized: first entry is the plain sum of the samples)")
print()

x = np.array([[1.0, 0.0], [0.0, 0.0]])
print("2-d transform of a single bright pixel:")
print(fwht_2d(x))
print("  energy spreads evenly over every coefficient")
print()

rng = np.random.default_rng(7)
img = rng.random((8, 8))
coeffs = fwht_2d(img)
back = fwht_2d(coeffs)
print("Self-inverse check on a random 8x8 image:")
print(f"  max |T(T(img)) - img| = {np.abs(back - img).max():.3e}")
print()

print("The [0,0] coefficient is N times the mean brightness:")
print(f"  T[0,0]      = {coeffs[0, 0]:.12f}")
print(f"  N * mean    = {8 * img.mean():.12f}")
print()

n = 512
big = rng.random((n, n))
import time

t0 = time.perf_counter()
fwht_2d(big)
ms = (time.perf_counter() - t0) * 1000
print(f"512x512 transform in {ms:.1f} ms")
