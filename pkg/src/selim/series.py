"""Multivariate power series truncated at a box of exponents."""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Mapping, Sequence

from .errors import DimensionError, DomainError, NotInvertibleError
from .exact import to_fraction
from .poly import SparsePolynomial


class TruncatedSeries:
    """Power series keeping only exponents componentwise within ``[0, cap]``.

    Coefficients are stored sparsely; terms outside the box are dropped on
    construction.
    """

    __slots__ = ("cap", "coefficients")

    def __init__(self, cap: Sequence[int], coefficients: Mapping = ()):
        cap = tuple(int(c) for c in cap)
        if any(c < 0 for c in cap):
            raise DomainError(f"negative cap {cap}")
        items = coefficients.items() if isinstance(coefficients, Mapping) else coefficients
        coeffs: dict[tuple[int, ...], Fraction] = {}
        for e, c in items:
            e = tuple(e)
            if len(e) != len(cap):
                raise DimensionError(f"exponent {e} does not match cap {cap}")
            if any(x < 0 for x in e):
                raise DomainError(f"negative exponent {e} in a power series")
            if all(x <= b for x, b in zip(e, cap)):
                coeffs[e] = coeffs.get(e, 0) + to_fraction(c)
        object.__setattr__(self, "cap", cap)
        object.__setattr__(self, "coefficients", {e: c for e, c in coeffs.items() if c})

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    @classmethod
    def from_polynomial(cls, p: SparsePolynomial, cap: Sequence[int]) -> "TruncatedSeries":
        if len(cap) != p.nvars:
            raise DimensionError(f"cap {tuple(cap)} for {p.nvars} variables")
        return cls(cap, p.terms)

    @classmethod
    def one(cls, cap: Sequence[int]) -> "TruncatedSeries":
        return cls(cap, {(0,) * len(cap): 1})

    @property
    def nvars(self) -> int:
        return len(self.cap)

    def coeff(self, exps: Sequence[int]) -> Fraction:
        exps = tuple(exps)
        if len(exps) != self.nvars or any(not 0 <= x <= b for x, b in zip(exps, self.cap)):
            raise DimensionError(f"exponent {exps} outside the truncation box {self.cap}")
        return self.coefficients.get(exps, Fraction(0))

    def to_polynomial(self, variables: Sequence[str]) -> SparsePolynomial:
        return SparsePolynomial(variables, self.coefficients)

    def __mul__(self, other):
        return series_mul(self, other)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.cap == other.cap and self.coefficients == other.coefficients

    def __hash__(self):
        return hash((self.cap, frozenset(self.coefficients.items())))

    def __repr__(self):
        return f"TruncatedSeries(cap={self.cap}, {len(self.coefficients)} terms)"


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    if a.cap != b.cap:
        raise DimensionError(f"cap mismatch {a.cap} vs {b.cap}")
    cap = a.cap
    out: dict[tuple[int, ...], Fraction] = {}
    for e1, c1 in a.coefficients.items():
        for e2, c2 in b.coefficients.items():
            e = tuple(x + y for x, y in zip(e1, e2))
            if all(x <= m for x, m in zip(e, cap)):
                out[e] = out.get(e, 0) + c1 * c2
    return TruncatedSeries(cap, out)


def series_reciprocal(p: SparsePolynomial, cap: Sequence[int]) -> TruncatedSeries:
    """Taylor coefficients of ``1/p`` around the origin, truncated at ``cap``.

    Coefficients are filled in lexicographic order over the box, which
    visits every ``e - f`` (``f`` a nonzero exponent of ``p``) before ``e``:

        q[0] = 1/p[0],   q[e] = -(1/p[0]) * sum_{f != 0} p[f] * q[e - f]
    """
    cap = tuple(cap)
    if len(cap) != p.nvars:
        raise DimensionError(f"cap {cap} for {p.nvars} variables")
    if any(x < 0 for e in p.terms for x in e):
        raise DomainError("power series reciprocal needs nonnegative exponents")
    p0 = p.constant_term()
    if not p0:
        raise NotInvertibleError("constant term is zero; 1/p has no Taylor expansion at 0")
    inv0 = 1 / p0
    zero = (0,) * len(cap)
    rest = [(f, c) for f, c in p.terms.items()
            if f != zero and all(x <= m for x, m in zip(f, cap))]
    q: dict[tuple[int, ...], Fraction] = {zero: inv0}
    for e in itertools.product(*(range(m + 1) for m in cap)):
        if e == zero:
            continue
        acc = Fraction(0)
        for f, c in rest:
            if all(x >= y for x, y in zip(e, f)):
                prev = q.get(tuple(x - y for x, y in zip(e, f)))
                if prev:
                    acc += c * prev
        if acc:
            q[e] = -acc * inv0
    return TruncatedSeries(cap, q)
