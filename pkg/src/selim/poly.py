"""Sparse multivariate Laurent polynomials with exact rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Mapping, Sequence

from .errors import DimensionError, DomainError
from .exact import format_scalar, to_fraction

EXPONENT_BOUND = 2 ** 63


def check_exponents(exps: Iterable[int]) -> tuple[int, ...]:
    """Validate an exponent vector; exponents must fit a signed 64-bit integer."""
    out = tuple(exps)
    for e in out:
        if isinstance(e, bool) or not isinstance(e, int):
            raise DomainError(f"exponent {e!r} is not an integer")
        if not -EXPONENT_BOUND <= e < EXPONENT_BOUND:
            raise OverflowError(f"exponent {e} overflows 64 bits")
    return out


def grlex_key(exps: Sequence[int]) -> tuple:
    """Sort key for graded lexicographic order (first variable largest)."""
    return (sum(exps), tuple(exps))


class SparsePolynomial:
    """Polynomial as a map from exponent vectors to nonzero Fractions.

    Negative exponents are allowed (Laurent polynomials). Instances are
    immutable and hashable; arithmetic returns new objects.
    """

    __slots__ = ("variables", "terms")

    def __init__(self, variables: Sequence[str], terms: Mapping | Iterable = ()):
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise DomainError(f"duplicate variable names in {variables}")
        items = terms.items() if isinstance(terms, Mapping) else terms
        collected: dict[tuple[int, ...], Fraction] = {}
        for exps, coeff in items:
            exps = check_exponents(exps)
            if len(exps) != len(variables):
                raise DimensionError(
                    f"exponent vector {exps} has length {len(exps)}, expected {len(variables)}")
            c = to_fraction(coeff)
            collected[exps] = collected.get(exps, 0) + c
        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "terms", {e: c for e, c in collected.items() if c})

    def __setattr__(self, name, value):
        raise AttributeError("SparsePolynomial is immutable")

    # construction helpers
    @classmethod
    def constant(cls, variables: Sequence[str], value) -> "SparsePolynomial":
        return cls(variables, {(0,) * len(variables): value})

    @classmethod
    def variable(cls, variables: Sequence[str], name: str) -> "SparsePolynomial":
        variables = tuple(variables)
        exps = tuple(int(v == name) for v in variables)
        if name not in variables:
            raise DomainError(f"unknown variable {name!r}")
        return cls(variables, {exps: 1})

    @classmethod
    def gens(cls, variables: Sequence[str]) -> list["SparsePolynomial"]:
        return [cls.variable(variables, v) for v in variables]

    @classmethod
    def univariate(cls, coeffs: Sequence, var: str = "x") -> "SparsePolynomial":
        """Build from coefficients listed from the constant term upwards."""
        return cls((var,), {(k,): c for k, c in enumerate(coeffs)})

    # basic queries
    @property
    def nvars(self) -> int:
        return len(self.variables)

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, exps: Sequence[int]) -> Fraction:
        return self.terms.get(tuple(exps), Fraction(0))

    def constant_term(self) -> Fraction:
        return self.coeff((0,) * self.nvars)

    def support(self) -> list[tuple[int, ...]]:
        return sorted(self.terms, key=grlex_key, reverse=True)

    def total_degree(self) -> int:
        if not self.terms:
            raise DomainError("the zero polynomial has no degree")
        return max(sum(e) for e in self.terms)

    def degree_in(self, var: str | int) -> int:
        k = self.variables.index(var) if isinstance(var, str) else var
        return max((e[k] for e in self.terms), default=0)

    def is_homogeneous(self, degree: int | None = None) -> bool:
        degrees = {sum(e) for e in self.terms}
        if degree is not None:
            return degrees <= {degree}
        return len(degrees) <= 1

    def leading_term(self) -> tuple[tuple[int, ...], Fraction]:
        if not self.terms:
            raise DomainError("the zero polynomial has no leading term")
        lead = max(self.terms, key=grlex_key)
        return lead, self.terms[lead]

    def univariate_coeffs(self) -> list[Fraction]:
        """Coefficients from the constant term up; only for one nonnegative variable."""
        if self.nvars != 1:
            raise DimensionError("univariate polynomial required")
        if any(e[0] < 0 for e in self.terms):
            raise DomainError("negative exponent in a univariate polynomial")
        if not self.terms:
            return []
        deg = self.degree_in(0)
        return [self.coeff((k,)) for k in range(deg + 1)]

    # arithmetic
    def _coerce(self, other) -> "SparsePolynomial":
        if isinstance(other, SparsePolynomial):
            if other.variables != self.variables:
                raise DimensionError(f"variable mismatch: {self.variables} vs {other.variables}")
            return other
        return SparsePolynomial.constant(self.variables, other)

    def __add__(self, other):
        other = self._coerce(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, 0) + c
        return SparsePolynomial(self.variables, terms)

    __radd__ = __add__

    def __neg__(self):
        return SparsePolynomial(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        terms: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = check_exponents(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        return SparsePolynomial(self.variables, terms)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self.terms) != 1:
                raise DomainError("only monomials have negative powers")
            (e, c), = self.terms.items()
            return SparsePolynomial(self.variables, {tuple(x * k for x in e): c ** k})
        result = SparsePolynomial.constant(self.variables, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def scale(self, factor) -> "SparsePolynomial":
        factor = to_fraction(factor)
        return SparsePolynomial(self.variables, {e: c * factor for e, c in self.terms.items()})

    def __eq__(self, other):
        if isinstance(other, SparsePolynomial):
            return self.variables == other.variables and self.terms == other.terms
        try:
            return self == self._coerce(other)
        except Exception:
            return NotImplemented

    def __hash__(self):
        return hash((self.variables, frozenset(self.terms.items())))

    # evaluation and substitution
    def __call__(self, *point):
        return poly_eval(self, point)

    def substitute(self, images: Sequence["SparsePolynomial"]) -> "SparsePolynomial":
        """Compose: replace variable k by ``images[k]`` (all in a common ring)."""
        if len(images) != self.nvars:
            raise DimensionError("one image per variable required")
        if not images:
            raise DimensionError("cannot substitute into a polynomial with no variables")
        ring = images[0].variables
        result = SparsePolynomial(ring)
        for e, c in self.terms.items():
            term = SparsePolynomial.constant(ring, c)
            for img, k in zip(images, e):
                if k:
                    term = term * img ** k
            result = result + term
        return result

    def homogenize(self, var: str = "h") -> "SparsePolynomial":
        """Homogenize with a fresh variable appended last."""
        if var in self.variables:
            raise DomainError(f"variable {var!r} already present")
        if any(x < 0 for e in self.terms for x in e):
            raise DomainError("cannot homogenize a Laurent polynomial")
        d = self.total_degree() if self.terms else 0
        return SparsePolynomial(self.variables + (var,),
                                {e + (d - sum(e),): c for e, c in self.terms.items()})

    def rename(self, variables: Sequence[str]) -> "SparsePolynomial":
        if len(variables) != self.nvars:
            raise DimensionError("rename needs one name per variable")
        return SparsePolynomial(variables, self.terms)

    def primitive(self) -> "SparsePolynomial":
        """Integer coprime coefficients with positive graded-lex leading coefficient."""
        if not self.terms:
            return self
        den = lcm(*(c.denominator for c in self.terms.values()))
        ints = {e: int(c * den) for e, c in self.terms.items()}
        g = gcd(*ints.values())
        _, lc = self.leading_term()
        if lc < 0:
            g = -g
        return SparsePolynomial(self.variables, {e: Fraction(c, g) for e, c in ints.items()})

    # serialization
    def to_json(self) -> dict:
        return {
            "vars": list(self.variables),
            "terms": [{"coeff": format_scalar(self.terms[e]), "exps": list(e)}
                      for e in self.support()],
        }

    @classmethod
    def from_json(cls, doc: Mapping) -> "SparsePolynomial":
        return cls(doc["vars"], [(t["exps"], t["coeff"]) for t in doc["terms"]])

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in self.support():
            c = self.terms[e]
            mono = "*".join(
                v if k == 1 else f"{v}^{k}" if k >= 0 else f"{v}^({k})"
                for v, k in zip(self.variables, e) if k)
            mag = abs(c)
            if not mono:
                body = format_scalar(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{format_scalar(mag)}*{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"SparsePolynomial({self.variables}, {str(self)!r})"


def poly_eval(p: SparsePolynomial, point: Sequence) -> Fraction:
    """Evaluate ``p`` exactly at a rational point."""
    if len(point) != p.nvars:
        raise DimensionError(f"point has {len(point)} coordinates, polynomial has {p.nvars} variables")
    pt = [to_fraction(v) for v in point]
    total = Fraction(0)
    for e, c in p.terms.items():
        term = c
        for v, k in zip(pt, e):
            if k < 0 and v == 0:
                raise DomainError("zero raised to a negative power")
            if k:
                term *= v ** k
        total += term
    return total
