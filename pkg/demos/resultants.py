"""Sylvester and Macaulay resultants, and where the rational formula breaks."""

from selim import (DegenerateSpecializationError, DenseHomogeneousSystem, UnivariatePair,
                   macaulay_matrix, macaulay_resultant, sylvester_resultant)
from selim.poly import SparsePolynomial

x = SparsePolynomial.gens(("x",))[0]
f, g = x ** 2 - 3 * x + 2, x ** 2 - 5 * x + 6   # common root x = 2
print("Res(f, g) =", sylvester_resultant(UnivariatePair(f, g)))
print("Macaulay on the homogenized pair:",
      macaulay_resultant(DenseHomogeneousSystem.from_polynomials([f, g])))

X, Y, Z = SparsePolynomial.gens(("x", "y", "z"))
lines_and_conic = DenseHomogeneousSystem((X + 2 * Y + 3 * Z, 4 * X + 5 * Y + 6 * Z,
                                          X ** 2 + Y * Z - 2 * Z ** 2))
mm = macaulay_matrix(lines_and_conic)
print(f"critical degree {mm.D}, matrix {mm.matrix.shape}, extraneous minor rows {mm.reduced_rows}")
print("Res =", macaulay_resultant(lines_and_conic))

# Without an x term in the first line the extraneous minor is zero.
broken = DenseHomogeneousSystem((2 * Y + 3 * Z, 4 * X + 5 * Y + 6 * Z,
                                 X ** 2 + Y * Z - 2 * Z ** 2))
try:
    macaulay_resultant(broken)
except DegenerateSpecializationError as exc:
    print("degenerate:", exc)
