"""Exact rational scalars and dense matrices.

Scalars are :class:`fractions.Fraction` throughout; a ``Fraction`` is always
kept in lowest terms with a positive denominator, which is the canonical
form every routine here returns.

The heavy kernels (determinant, permanent, rank) clear denominators row by
row and run on Python integers, then divide the scaling back out.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence

from .errors import DimensionError, DomainError, ResourceLimitError

PERMANENT_LIMIT = 30
BRUTEFORCE_LIMIT = 8


def to_fraction(value) -> Fraction:
    """Convert ints, Fractions and ``"p/q"`` strings to a Fraction.

    Floats are rejected: they would silently carry binary rounding error.
    """
    if isinstance(value, bool):
        raise DomainError(f"booleans are not scalars: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except ValueError as exc:
            raise DomainError(f"not an exact rational: {value!r}") from exc
    if isinstance(value, Rational):
        return Fraction(value.numerator, value.denominator)
    if hasattr(value, "__index__"):
        return Fraction(value.__index__())
    raise DomainError(f"cannot convert {type(value).__name__} to an exact rational")


def format_scalar(value: Fraction) -> str:
    value = to_fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


class ExactMatrix:
    """Dense row-major matrix of Fractions. Immutable."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Iterable):
        entries = tuple(to_fraction(e) for e in entries)
        if rows < 0 or cols < 0 or len(entries) != rows * cols:
            raise DimensionError(
                f"{len(entries)} entries do not fill a {rows}x{cols} matrix")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("ExactMatrix is immutable")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "ExactMatrix":
        rows = [list(r) for r in rows]
        if not rows:
            return cls(0, 0, ())
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise DimensionError("ragged rows")
        return cls(len(rows), width, (e for r in rows for e in r))

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls(n, n, (int(i == j) for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "ExactMatrix":
        return cls(rows, cols, (0,) * (rows * cols))

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(self.cols, self.rows,
                           (self[i, j] for j in range(self.cols) for i in range(self.rows)))

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "ExactMatrix":
        return ExactMatrix(len(rows), len(cols), (self[i, j] for i in rows for j in cols))

    def swap_rows(self, i: int, j: int) -> "ExactMatrix":
        order = list(range(self.rows))
        order[i], order[j] = order[j], order[i]
        return self.submatrix(order, range(self.cols))

    def with_row(self, values: Sequence) -> "ExactMatrix":
        if len(values) != self.cols:
            raise DimensionError(f"row of length {len(values)} for {self.cols} columns")
        return ExactMatrix(self.rows + 1, self.cols, self.entries + tuple(values))

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.rows:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        return ExactMatrix(self.rows, other.cols, (
            sum((self[i, k] * other[k, j] for k in range(self.cols)), Fraction(0))
            for i in range(self.rows) for j in range(other.cols)))

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        body = ", ".join("[" + ", ".join(format_scalar(e) for e in self.row(i)) + "]"
                         for i in range(self.rows))
        return f"ExactMatrix([{body}])"


def _integer_rows(m: ExactMatrix) -> tuple[list[list[int]], int]:
    """Scale each row to integers; return rows and the product of the scalings."""
    rows, scale = [], 1
    for i in range(m.rows):
        r = m.row(i)
        den = math.lcm(*(e.denominator for e in r)) if r else 1
        rows.append([int(e * den) for e in r])
        scale *= den
    return rows, scale


def _require_square(m: ExactMatrix) -> None:
    if not m.is_square:
        raise DimensionError(f"square matrix required, got {m.rows}x{m.cols}")


def det_fraction_free(m: ExactMatrix) -> Fraction:
    """Exact determinant by Bareiss elimination.

    The pivot at step k is the first nonzero entry of the trailing block,
    scanning row by row and then column by column.
    """
    _require_square(m)
    n = m.rows
    if n == 0:
        return Fraction(1)
    a, scale = _integer_rows(m)
    sign, prev = 1, 1
    for k in range(n - 1):
        pivot = next(((i, j) for i in range(k, n) for j in range(k, n) if a[i][j]), None)
        if pivot is None:
            return Fraction(0)
        pi, pj = pivot
        if pi != k:
            a[k], a[pi] = a[pi], a[k]
            sign = -sign
        if pj != k:
            for r in a:
                r[k], r[pj] = r[pj], r[k]
            sign = -sign
        akk = a[k][k]
        rk = a[k]
        for i in range(k + 1, n):
            ri = a[i]
            aik = ri[k]
            for j in range(k + 1, n):
                ri[j] = (ri[j] * akk - aik * rk[j]) // prev
            ri[k] = 0
        prev = akk
    return Fraction(sign * a[n - 1][n - 1], scale)


def det_cofactor(m: ExactMatrix) -> Fraction:
    """Laplace expansion along the first row. Exponential; test oracle only."""
    _require_square(m)
    n = m.rows
    if n == 0:
        return Fraction(1)
    if n == 1:
        return m[0, 0]
    total = Fraction(0)
    rest = range(1, n)
    for j in range(n):
        if m[0, j]:
            minor = m.submatrix(rest, [c for c in range(n) if c != j])
            total += (-1) ** j * m[0, j] * det_cofactor(minor)
    return total


def permanent_ryser(m: ExactMatrix, limit: int = PERMANENT_LIMIT) -> Fraction:
    """Permanent by Ryser's inclusion-exclusion over column subsets.

    Subsets are visited in binary-reflected Gray code order, so each step
    toggles one column and updates the n row sums in place.
    """
    _require_square(m)
    n = m.rows
    if n > limit:
        raise ResourceLimitError(f"permanent of a {n}x{n} matrix exceeds the limit {limit}")
    if n == 0:
        return Fraction(1)
    a, scale = _integer_rows(m)
    cols = [[a[i][j] for i in range(n)] for j in range(n)]
    sums = [0] * n
    total = 0
    size = 0
    for k in range(1, 1 << n):
        j = (k & -k).bit_length() - 1
        col = cols[j]
        if (k ^ (k >> 1)) >> j & 1:
            size += 1
            for i in range(n):
                sums[i] += col[i]
        else:
            size -= 1
            for i in range(n):
                sums[i] -= col[i]
        prod = 1
        for s in sums:
            if not s:
                prod = 0
                break
            prod *= s
        total += -prod if size & 1 else prod
    if n & 1:
        total = -total
    return Fraction(total, scale)


def permanent_bruteforce(m: ExactMatrix) -> Fraction:
    """Sum over all n! permutations. Test oracle."""
    _require_square(m)
    n = m.rows
    if n > BRUTEFORCE_LIMIT:
        raise ResourceLimitError(f"brute-force permanent limited to n <= {BRUTEFORCE_LIMIT}")
    total = Fraction(0)
    for perm in itertools.permutations(range(n)):
        prod = Fraction(1)
        for i, j in enumerate(perm):
            prod *= m[i, j]
            if not prod:
                break
        total += prod
    return total


def row_echelon(m: ExactMatrix) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form and pivot columns (left-to-right pivoting)."""
    a = m.to_rows()
    pivots: list[int] = []
    r = 0
    for c in range(m.cols):
        p = next((i for i in range(r, m.rows) if a[i][c]), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [e * inv for e in a[r]]
        for i in range(m.rows):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == m.rows:
            break
    return a, pivots


def rank(m: ExactMatrix) -> int:
    """Exact rank via fraction-free elimination on the row-scaled integer matrix."""
    a, _ = _integer_rows(m)
    rows, cols = m.rows, m.cols
    r = 0
    prev = 1
    for c in range(cols):
        p = next((i for i in range(r, rows) if a[i][c]), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        piv = a[r][c]
        for i in range(r + 1, rows):
            f = a[i][c]
            ri = a[i]
            for j in range(c, cols):
                ri[j] = (ri[j] * piv - f * a[r][j]) // prev
        prev = piv
        r += 1
        if r == rows:
            break
    return r


def kernel_basis(m: ExactMatrix) -> list[list[Fraction]]:
    """Basis of the right kernel, one vector per non-pivot column, in column order."""
    reduced, pivots = row_echelon(m)
    free = [c for c in range(m.cols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * m.cols
        v[f] = Fraction(1)
        for r, p in enumerate(pivots):
            v[p] = -reduced[r][f]
        basis.append(v)
    return basis


def solve(m: ExactMatrix, rhs: Sequence) -> list[Fraction]:
    """Unique solution of a square nonsingular system."""
    _require_square(m)
    if len(rhs) != m.rows:
        raise DimensionError("right-hand side length does not match")
    aug = ExactMatrix(m.rows, m.cols + 1,
                      (e for i in range(m.rows) for e in (*m.row(i), to_fraction(rhs[i]))))
    reduced, pivots = row_echelon(aug)
    if pivots != list(range(m.cols)):
        raise DomainError("singular system")
    return [reduced[i][m.cols] for i in range(m.rows)]
