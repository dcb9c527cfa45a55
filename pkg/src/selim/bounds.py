"""Root bounds for multihomogeneous systems.

Three independent routes to the same number:

* the m-Bezout coefficient of a product of linear forms,
* the Taylor coefficient of ``1/det(I - V A)`` (MacMahon's Master Theorem),
* a matrix permanent, which also yields mixed volumes of products of
  scaled block polytopes.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DimensionError, DomainError
from .exact import ExactMatrix, det_fraction_free, permanent_ryser, to_fraction
from .poly import SparsePolynomial
from .series import TruncatedSeries, series_mul, series_reciprocal

PER_EQUATION = "per-equation"
PER_BLOCK = "per-block"


@dataclass(frozen=True)
class BlockStructure:
    """Partition ``N = n_1 + ... + n_S`` of the variables into blocks."""

    block_sizes: tuple[int, ...]

    def __post_init__(self):
        sizes = tuple(self.block_sizes)
        if not sizes:
            raise DomainError("at least one block is required")
        if any(isinstance(n, bool) or not isinstance(n, int) or n < 1 for n in sizes):
            raise DomainError(f"block sizes must be positive integers, got {sizes}")
        object.__setattr__(self, "block_sizes", sizes)

    @property
    def S(self) -> int:
        return len(self.block_sizes)

    @property
    def N(self) -> int:
        return sum(self.block_sizes)


@dataclass(frozen=True)
class DegreeMatrix:
    """Nonnegative degree data.

    ``per-equation`` form is N x S (degree of equation i in block j);
    ``per-block`` form is S x S (degree of every equation of block i in
    variable block j).
    """

    entries: tuple[tuple[int, ...], ...]
    form: str = PER_EQUATION

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.entries)
        if not rows or not rows[0]:
            raise DimensionError("degree matrix is empty")
        if any(len(r) != len(rows[0]) for r in rows):
            raise DimensionError("ragged degree matrix")
        for r in rows:
            for d in r:
                if isinstance(d, bool) or not isinstance(d, int) or d < 0:
                    raise DomainError(f"degrees must be nonnegative integers, got {d!r}")
        if self.form not in (PER_EQUATION, PER_BLOCK):
            raise DomainError(f"unknown degree matrix form {self.form!r}")
        if self.form == PER_BLOCK and len(rows) != len(rows[0]):
            raise DimensionError("per-block degree matrix must be S x S")
        object.__setattr__(self, "entries", rows)

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.entries), len(self.entries[0]))

    def check_blocks(self, blocks: BlockStructure) -> None:
        nrows, ncols = self.shape
        if ncols != blocks.S:
            raise DimensionError(f"{ncols} degree columns for {blocks.S} variable blocks")
        expected = blocks.S if self.form == PER_BLOCK else blocks.N
        if nrows != expected:
            raise DimensionError(f"{nrows} degree rows, expected {expected}")


def _as_degree_matrix(d, form: str) -> DegreeMatrix:
    if isinstance(d, DegreeMatrix):
        return d
    return DegreeMatrix(tuple(tuple(r) for r in d), form)


def _as_blocks(blocks) -> BlockStructure:
    return blocks if isinstance(blocks, BlockStructure) else BlockStructure(tuple(blocks))


def expand_rows(a, blocks) -> DegreeMatrix:
    """Per-block S x S data to the per-equation N x S matrix (row i repeated n_i times)."""
    a, blocks = _as_degree_matrix(a, PER_BLOCK), _as_blocks(blocks)
    a.check_blocks(blocks)
    rows = [r for r, n in zip(a.entries, blocks.block_sizes) for _ in range(n)]
    return DegreeMatrix(tuple(rows), PER_EQUATION)


def expand_columns(d, blocks) -> ExactMatrix:
    """N x S per-equation data to the N x N matrix with column j repeated n_j times."""
    d, blocks = _as_degree_matrix(d, PER_EQUATION), _as_blocks(blocks)
    d.check_blocks(blocks)
    return ExactMatrix.from_rows(
        [[v for v, n in zip(r, blocks.block_sizes) for _ in range(n)] for r in d.entries])


def mbezout_product(d, blocks) -> int:
    """Coefficient of ``x_1^n_1 ... x_S^n_S`` in ``prod_i (d_i1 x_1 + ... + d_iS x_S)``.

    The N linear forms are multiplied as series truncated at the block
    sizes, so the full product is never expanded.
    """
    d, blocks = _as_degree_matrix(d, PER_EQUATION), _as_blocks(blocks)
    if d.form != PER_EQUATION:
        d = expand_rows(d, blocks)
    d.check_blocks(blocks)
    cap = blocks.block_sizes
    S = blocks.S
    unit = [tuple(int(k == j) for k in range(S)) for j in range(S)]
    acc = TruncatedSeries.one(cap)
    for row in d.entries:
        acc = series_mul(acc, TruncatedSeries(cap, {unit[j]: row[j] for j in range(S)}))
        if not acc.coefficients:
            return 0
    return int(acc.coeff(cap))


def det_identity_minus_va(a, variables: Sequence[str] | None = None) -> SparsePolynomial:
    """``det(I - V A)`` with ``V = diag(x_1, ..., x_S)`` as a polynomial.

    Expanded over principal minors: the coefficient of ``prod_{i in T} x_i``
    is ``(-1)^|T| det A[T, T]``.
    """
    a = _as_degree_matrix(a, PER_BLOCK)
    S = a.shape[0]
    if a.shape != (S, S):
        raise DimensionError("square matrix required")
    variables = tuple(variables) if variables else tuple(f"x{j + 1}" for j in range(S))
    A = ExactMatrix.from_rows(a.entries)
    terms = {}
    for mask in range(1 << S):
        idx = [i for i in range(S) if mask >> i & 1]
        minor = det_fraction_free(A.submatrix(idx, idx))
        if minor:
            terms[tuple(mask >> i & 1 for i in range(S))] = (-1) ** len(idx) * minor
    return SparsePolynomial(variables, terms)


def mbezout_generating_function(a, blocks) -> int:
    """m-Bezout bound of a square semi-mixed system as a Taylor coefficient of ``1/det(I - V A)``."""
    a, blocks = _as_degree_matrix(a, PER_BLOCK), _as_blocks(blocks)
    if a.form != PER_BLOCK:
        raise DomainError("the generating function needs the S x S per-block degree matrix")
    a.check_blocks(blocks)
    series = series_reciprocal(det_identity_minus_va(a), blocks.block_sizes)
    return int(series.coeff(blocks.block_sizes))


def elementary_symmetric(k: int, variables: Sequence[str]) -> SparsePolynomial:
    S = len(variables)
    return SparsePolynomial(variables, {
        tuple(int(i in c) for i in range(S)): 1 for c in itertools.combinations(range(S), k)})


def tmne_series_denominator(S: int) -> SparsePolynomial:
    """``1 - sigma_2 - 2 sigma_3 - ... - (S-1) sigma_S`` in ``x1..xS``."""
    variables = tuple(f"x{j + 1}" for j in range(S))
    p = SparsePolynomial.constant(variables, 1)
    for k in range(2, S + 1):
        p = p - elementary_symmetric(k, variables).scale(k - 1)
    return p


def tmne_bound(S: int) -> int:
    """Root bound of the S-player, two-strategy totally mixed Nash system."""
    if isinstance(S, bool) or not isinstance(S, int) or S < 1:
        raise DomainError(f"player count must be a positive integer, got {S!r}")
    cap = (1,) * S
    return int(series_reciprocal(tmne_series_denominator(S), cap).coeff(cap))


def tmne_degree_matrix(S: int) -> DegreeMatrix:
    """Degrees of the two-strategy Nash system: zero on the diagonal, one elsewhere."""
    return DegreeMatrix(tuple(tuple(int(i != j) for j in range(S)) for i in range(S)), PER_BLOCK)


@dataclass(frozen=True)
class SimplexBlockSystem:
    """Newton polytopes ``Q_i = prod_j a_ij Gamma_j`` over block polytopes ``Gamma_j``."""

    blocks: BlockStructure
    scale_matrix: DegreeMatrix
    block_volumes: tuple[Fraction, ...]

    def __post_init__(self):
        blocks = _as_blocks(self.blocks)
        scale = _as_degree_matrix(self.scale_matrix, PER_EQUATION)
        vols = tuple(to_fraction(v) for v in self.block_volumes)
        if len(vols) != blocks.S:
            raise DimensionError(f"{len(vols)} block volumes for {blocks.S} blocks")
        if any(v <= 0 for v in vols):
            raise DomainError("block volumes must be positive")
        object.__setattr__(self, "blocks", blocks)
        object.__setattr__(self, "scale_matrix", scale)
        object.__setattr__(self, "block_volumes", vols)

    @classmethod
    def unit_simplices(cls, scale_matrix, blocks) -> "SimplexBlockSystem":
        """Every ``Gamma_j`` the standard simplex of dimension n_j (volume 1/n_j!)."""
        blocks = _as_blocks(blocks)
        return cls(blocks, _as_degree_matrix(scale_matrix, PER_EQUATION),
                   tuple(Fraction(1, math.factorial(n)) for n in blocks.block_sizes))


def mixed_volume_permanent(system: SimplexBlockSystem) -> Fraction:
    """``MV(Q_1..Q_N) = perm(A) * prod_j vol(Gamma_j)`` with A column-expanded."""
    expanded = expand_columns(system.scale_matrix, system.blocks)
    if expanded.shape != (system.blocks.N, system.blocks.N):
        raise DimensionError("column expansion does not give an N x N matrix")
    result = permanent_ryser(expanded)
    for v in system.block_volumes:
        result *= v
    return result


def mbezout_permanent(d, blocks) -> int:
    """m-Bezout number as ``perm(expanded A) / (n_1! ... n_S!)``."""
    blocks = _as_blocks(blocks)
    d = _as_degree_matrix(d, PER_EQUATION)
    if d.form != PER_EQUATION:
        d = expand_rows(d, blocks)
    value = mixed_volume_permanent(SimplexBlockSystem.unit_simplices(d, blocks))
    if value.denominator != 1:
        raise AssertionError(f"m-Bezout number {value} is not an integer")
    return int(value)
