"""Exact determinants, permanents and truncated power series."""

from fractions import Fraction

from selim import ExactMatrix, det_fraction_free, permanent_ryser, series_reciprocal
from selim.poly import SparsePolynomial

# A Hilbert matrix is notoriously ill conditioned; with rationals its
# determinant comes out exactly.
n = 5
hilbert = ExactMatrix.from_rows([[Fraction(1, i + j + 1) for j in range(n)] for i in range(n)])
print("det H_5 =", det_fraction_free(hilbert))

# The permanent of J - I counts permutations without fixed points.
for k in range(2, 8):
    m = ExactMatrix.from_rows([[int(i != j) for j in range(k)] for i in range(k)])
    print(f"derangements of {k}: {permanent_ryser(m)}")

# 1/(1 - x - y) truncated at x^3 y^3 holds the binomial coefficients.
p = SparsePolynomial(("x", "y"), {(0, 0): 1, (1, 0): -1, (0, 1): -1})
series = series_reciprocal(p, (3, 3))
for i in range(4):
    print(" ".join(f"{int(series.coeff((i, j))):3d}" for j in range(4)))
