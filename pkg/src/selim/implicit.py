"""Implicit equations of polynomial plane curves by exact interpolation.

A curve ``t -> (x(t), y(t))`` is sampled at small integer parameters; the
interpolation matrix has one row per sample and one column per candidate
monomial ``X^i Y^j``. Its kernel holds the coefficient vectors of the
polynomials vanishing on the curve, and a point lies on the curve exactly
when appending its monomial row leaves the rank unchanged.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from functools import cached_property
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DimensionError, DomainError, SupportTooSmallError
from .exact import ExactMatrix, kernel_basis, rank, to_fraction
from .poly import SparsePolynomial, grlex_key

IMPLICIT_VARIABLES = ("X", "Y")


class KernelDimensionWarning(UserWarning):
    """Several independent polynomials vanish on the curve (support superset or non-reduced image)."""


@dataclass(frozen=True)
class ParametricPlaneCurve:
    x_of_t: SparsePolynomial
    y_of_t: SparsePolynomial

    def __post_init__(self):
        for name in ("x_of_t", "y_of_t"):
            p = getattr(self, name)
            if not isinstance(p, SparsePolynomial):
                p = SparsePolynomial.univariate(p, "t")
                object.__setattr__(self, name, p)
            if p.nvars != 1 or any(e[0] < 0 for e in p.terms):
                raise DomainError(f"{name} must be a polynomial in one variable")
        if self.x_of_t.variables != self.y_of_t.variables:
            raise DimensionError("both coordinates must use the same parameter")
        if self.d_x == 0 and self.d_y == 0:
            raise DomainError("a constant map does not parameterize a curve")

    @classmethod
    def from_coeffs(cls, x_coeffs: Sequence, y_coeffs: Sequence) -> "ParametricPlaneCurve":
        """Coefficient lists from the constant term upwards."""
        return cls(SparsePolynomial.univariate(x_coeffs, "t"),
                   SparsePolynomial.univariate(y_coeffs, "t"))

    @property
    def d_x(self) -> int:
        return self.x_of_t.degree_in(0)

    @property
    def d_y(self) -> int:
        return self.y_of_t.degree_in(0)

    def __call__(self, t) -> tuple[Fraction, Fraction]:
        return self.x_of_t(t), self.y_of_t(t)


@dataclass(frozen=True)
class SupportSet:
    """Exponents ``(i, j)`` of candidate monomials ``X^i Y^j``, kept in ascending graded-lex order."""

    points: tuple[tuple[int, int], ...]

    def __post_init__(self):
        pts = [(int(i), int(j)) for i, j in self.points]
        if not pts:
            raise DomainError("support must be nonempty")
        if len(set(pts)) != len(pts):
            raise DomainError("support has duplicate points")
        if any(i < 0 or j < 0 for i, j in pts):
            raise DomainError("support exponents must be nonnegative")
        object.__setattr__(self, "points", tuple(sorted(pts, key=grlex_key)))

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)


def predict_support(curve: ParametricPlaneCurve) -> SupportSet:
    """Lattice points of ``{(i, j) >= 0 : i d_x + j d_y <= d_x d_y}``."""
    dx, dy = curve.d_x, curve.d_y
    if dx == 0:
        return SupportSet(((0, 0), (1, 0)))
    if dy == 0:
        return SupportSet(((0, 0), (0, 1)))
    return SupportSet(tuple((i, j) for i in range(dy + 1) for j in range(dx + 1)
                            if i * dx + j * dy <= dx * dy))


def sample_parameters(count: int) -> list[int]:
    """``0, 1, -1, 2, -2, ...``"""
    return [(k + 1) // 2 * (1 if k % 2 else -1) for k in range(count)]


def _monomial_row(support: SupportSet, x: Fraction, y: Fraction) -> list[Fraction]:
    return [x ** i * y ** j for i, j in support]


@dataclass(frozen=True)
class InterpolationMatrix:
    matrix: ExactMatrix
    samples: tuple[Fraction, ...]
    support: SupportSet

    @cached_property
    def rank(self) -> int:
        return rank(self.matrix)

    @property
    def kernel_dimension(self) -> int:
        return self.matrix.cols - self.rank


def build_interpolation_matrix(curve: ParametricPlaneCurve, support: SupportSet,
                               count: int) -> InterpolationMatrix:
    if not isinstance(support, SupportSet):
        support = SupportSet(tuple(support))
    if count < len(support):
        raise DomainError(f"{count} samples cannot determine {len(support)} coefficients")
    samples = tuple(Fraction(t) for t in sample_parameters(count))
    rows = [_monomial_row(support, *curve(t)) for t in samples]
    return InterpolationMatrix(ExactMatrix.from_rows(rows), samples, support)


def default_sample_count(curve: ParametricPlaneCurve, support: SupportSet) -> int:
    """Enough samples that every kernel vector vanishes on the whole curve."""
    # A support polynomial composed with the curve has degree at most
    # max(i d_x + j d_y); vanishing at one more sample makes it vanish identically.
    bound = max(i * curve.d_x + j * curve.d_y for i, j in support)
    return max(len(support), bound + 1)


def implicit_equation(curve: ParametricPlaneCurve,
                      support: SupportSet | Iterable | None = None,
                      samples: int | None = None) -> SparsePolynomial:
    """Implicit polynomial in ``X, Y`` with integer coprime coefficients.

    The result has positive leading coefficient in graded-lex order. When
    the kernel is more than one-dimensional the element with the smallest
    graded-lex leading monomial is returned, with a KernelDimensionWarning.
    """
    if support is None:
        support = predict_support(curve)
    elif not isinstance(support, SupportSet):
        support = SupportSet(tuple(support))
    count = max(samples or 0, default_sample_count(curve, support))
    m = build_interpolation_matrix(curve, support, count)
    if m.kernel_dimension == 0:
        raise SupportTooSmallError(
            "interpolation matrix has trivial kernel: no polynomial on this support "
            "vanishes on the curve")
    if m.kernel_dimension > 1:
        m = build_interpolation_matrix(curve, support, max(count, 2 * len(support)))
    basis = kernel_basis(m.matrix)
    if len(basis) > 1:
        warnings.warn(
            f"kernel has dimension {len(basis)}: support is a strict superset of the "
            "implicit support or the parameterization is not proper",
            KernelDimensionWarning, stacklevel=2)
    # Basis vectors are indexed by free columns in ascending graded-lex order,
    # so the first one has the smallest leading monomial.
    vec = basis[0]
    poly = SparsePolynomial(IMPLICIT_VARIABLES,
                            {e: c for e, c in zip(support, vec) if c})
    return poly.primitive()


def membership_test(m: InterpolationMatrix, point: Sequence) -> bool:
    """True iff appending the monomial row of ``point`` does not raise the rank."""
    if len(point) != 2:
        raise DimensionError("a plane point has two coordinates")
    x, y = (to_fraction(v) for v in point)
    extended = m.matrix.with_row(_monomial_row(m.support, x, y))
    return rank(extended) == m.rank


def compose_with_curve(p: SparsePolynomial, curve: ParametricPlaneCurve) -> SparsePolynomial:
    """``p(x(t), y(t))`` expanded symbolically."""
    return p.substitute([curve.x_of_t, curve.y_of_t])
