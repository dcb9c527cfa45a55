"""Sylvester matrices and Macaulay's rational resultant formula.

For ``n + 1`` homogeneous polynomials ``f_0..f_n`` in ``x_0..x_n`` of
degrees ``d_i`` the Macaulay matrix lives at the critical degree
``D = 1 + sum(d_i - 1)``. Rows and columns are both labelled by the
monomials of degree ``D``: the row of ``x^a`` holds ``(x^a / x_i^d_i) f_i``
for the least ``i`` with ``x_i^d_i | x^a``. The extraneous factor
``det M'`` is the principal minor on the monomials divisible by at least
two of the ``x_j^d_j``, and ``Res = det M / det M'``.

Worked case, degrees (1, 1, 2) in (x, y, z): ``D = 2``, six monomials
``x^2, xy, xz, y^2, yz, z^2``. Only ``xy`` is divisible by two of
``x, y, z^2``, so ``M'`` is the 1x1 matrix holding the coefficient of
``x`` in ``f_0`` (row ``y * f_0``, column ``xy``).

Because row labels coincide with column labels, ``Res(x_0^d_0, ..., x_n^d_n)
= 1``, which fixes the sign.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import DegenerateSpecializationError, DimensionError, DomainError
from .exact import ExactMatrix, det_fraction_free, format_scalar
from .poly import SparsePolynomial


@dataclass(frozen=True)
class UnivariatePair:
    f: SparsePolynomial
    g: SparsePolynomial

    def __post_init__(self):
        for name, p in (("f", self.f), ("g", self.g)):
            if p.nvars != 1:
                raise DimensionError(f"{name} must be univariate")
            if p.is_zero():
                raise DomainError(f"{name} is the zero polynomial")
            if p.degree_in(0) < 1:
                raise DomainError(f"{name} must have degree at least 1")
            if any(e[0] < 0 for e in p.terms):
                raise DomainError(f"{name} has a negative exponent")

    @property
    def degrees(self) -> tuple[int, int]:
        return self.f.degree_in(0), self.g.degree_in(0)


def sylvester_matrix(pair: UnivariatePair) -> ExactMatrix:
    """``d_g`` shifted rows of f, then ``d_f`` shifted rows of g, highest degree first.

    ``det`` equals ``lc(f)^d_g * prod g(alpha)`` over the roots of f.
    """
    if not isinstance(pair, UnivariatePair):
        pair = UnivariatePair(*pair)
    fc = pair.f.univariate_coeffs()[::-1]
    gc = pair.g.univariate_coeffs()[::-1]
    m, n = len(fc) - 1, len(gc) - 1
    size = m + n
    rows = []
    for k in range(n):
        rows.append([0] * k + fc + [0] * (size - m - 1 - k))
    for k in range(m):
        rows.append([0] * k + gc + [0] * (size - n - 1 - k))
    return ExactMatrix.from_rows(rows)


def sylvester_resultant(pair: UnivariatePair) -> Fraction:
    return det_fraction_free(sylvester_matrix(pair))


@dataclass(frozen=True)
class DenseHomogeneousSystem:
    """``n + 1`` homogeneous polynomials in ``n + 1`` variables."""

    polys: tuple[SparsePolynomial, ...]
    degrees: tuple[int, ...] = field(default=())

    def __post_init__(self):
        polys = tuple(self.polys)
        if len(polys) < 2:
            raise DimensionError("at least two polynomials are required")
        variables = polys[0].variables
        if any(p.variables != variables for p in polys):
            raise DimensionError("all polynomials must share the same variables")
        if len(variables) != len(polys):
            raise DimensionError(f"{len(polys)} polynomials in {len(variables)} variables")
        degrees = tuple(self.degrees) or tuple(
            p.total_degree() if not p.is_zero() else 0 for p in polys)
        if len(degrees) != len(polys):
            raise DimensionError("one degree per polynomial required")
        for i, (p, d) in enumerate(zip(polys, degrees)):
            if d < 1:
                raise DomainError(f"polynomial {i} must have degree at least 1")
            if not p.is_homogeneous(d) or any(x < 0 for e in p.terms for x in e):
                raise DomainError(f"polynomial {i} is not homogeneous of degree {d}")
        object.__setattr__(self, "polys", polys)
        object.__setattr__(self, "degrees", degrees)

    @classmethod
    def from_polynomials(cls, polys: Sequence[SparsePolynomial],
                         fresh: str = "h") -> "DenseHomogeneousSystem":
        """Accept homogeneous input as is; homogenize affine input with ``fresh`` appended last."""
        polys = tuple(polys)
        if polys and polys[0].nvars == len(polys) - 1:
            degrees = tuple(p.total_degree() for p in polys)
            return cls(tuple(p.homogenize(fresh) for p in polys), degrees)
        return cls(polys)

    @property
    def n(self) -> int:
        return len(self.polys) - 1

    @property
    def variables(self) -> tuple[str, ...]:
        return self.polys[0].variables


def monomials_of_degree(nvars: int, degree: int) -> list[tuple[int, ...]]:
    """All exponent vectors of the given total degree, lexicographically descending."""
    out = []
    for cut in itertools.combinations(range(degree + nvars - 1), nvars - 1):
        bounds = (-1,) + cut + (degree + nvars - 1,)
        out.append(tuple(bounds[k + 1] - bounds[k] - 1 for k in range(nvars)))
    return sorted(out, reverse=True)


@dataclass(frozen=True)
class MacaulayMatrix:
    """Macaulay matrix M with the index sets of its extraneous minor M'.

    ``row_labels[k]`` is ``(i, multiplier)``: row k holds ``x^multiplier * f_i``.
    ``reduced_rows``/``reduced_cols`` select M' (equal, since M' is principal).
    """

    matrix: ExactMatrix
    row_labels: tuple[tuple[int, tuple[int, ...]], ...]
    col_labels: tuple[tuple[int, ...], ...]
    reduced_rows: tuple[int, ...]
    reduced_cols: tuple[int, ...]
    D: int

    def minor(self) -> ExactMatrix:
        return self.matrix.submatrix(self.reduced_rows, self.reduced_cols)

    def to_json(self, variables: Sequence[str] | None = None) -> dict:
        return {
            "critical_degree": self.D,
            "variables": list(variables) if variables else None,
            "col_labels": [list(c) for c in self.col_labels],
            "row_labels": [{"poly": i, "multiplier": list(m)} for i, m in self.row_labels],
            "entries": [[format_scalar(e) for e in self.matrix.row(i)]
                        for i in range(self.matrix.rows)],
            "minor_indices": list(self.reduced_rows),
        }


def macaulay_matrix(system: DenseHomogeneousSystem) -> MacaulayMatrix:
    if not isinstance(system, DenseHomogeneousSystem):
        system = DenseHomogeneousSystem.from_polynomials(system)
    degrees = system.degrees
    nv = len(degrees)
    D = 1 + sum(d - 1 for d in degrees)
    cols = monomials_of_degree(nv, D)
    index = {c: k for k, c in enumerate(cols)}
    rows, labels, minor = [], [], []
    for k, alpha in enumerate(cols):
        divisors = [j for j in range(nv) if alpha[j] >= degrees[j]]
        assert divisors, f"monomial {alpha} has no x_i^d_i divisor at the critical degree"
        i = divisors[0]
        if len(divisors) >= 2:
            minor.append(k)
        mult = tuple(a - (degrees[i] if j == i else 0) for j, a in enumerate(alpha))
        row = [Fraction(0)] * len(cols)
        for e, c in system.polys[i].terms.items():
            row[index[tuple(x + y for x, y in zip(e, mult))]] = c
        rows.append(row)
        labels.append((i, mult))
    return MacaulayMatrix(ExactMatrix.from_rows(rows), tuple(labels), tuple(cols),
                          tuple(minor), tuple(minor), D)


def macaulay_resultant(system: DenseHomogeneousSystem) -> Fraction:
    """``det M / det M'``; raises when ``det M'`` vanishes for these coefficients."""
    mm = macaulay_matrix(system)
    denominator = det_fraction_free(mm.minor())
    if not denominator:
        raise DegenerateSpecializationError(
            "det M' = 0: the rational formula is undefined for this specialization "
            "of the coefficients; perturb the input or use a different variable order")
    return det_fraction_free(mm.matrix) / denominator
