"""Totally mixed Nash equilibria as multilinear systems.

For three players with two strategies each the system is bilinear on
P^1 x P^1 x P^1 with homogeneous coordinates ``(x1:x0)``, ``(y1:y0)``,
``(z1:z0)`` (probability of the first strategy : probability of the
second). Every equation omits its own player's block::

    F1 = a0 y1z1 + a1 y1z0 + a2 y0z1 + a3 y0z0
    F2 = b0 x1z1 + b1 x1z0 + b2 x0z1 + b3 x0z0
    F3 = c0 x1y1 + c1 x1y0 + c2 x0y1 + c3 x0y0

Writing ``A``, ``B``, ``C`` for the 2x2 coefficient matrices (row index
from the first block, ``.1`` before ``.0``), the discriminant is the
determinant of the symmetric block matrix ``[[0, C, B], [C^T, 0, A],
[B^T, A^T, 0]]``. It equals ``-(beta^2 - 4 alpha gamma)`` for the quadratic
``alpha x1^2 + beta x1 x0 + gamma x0^2`` left after eliminating z and y.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DegenerateSystemError, DimensionError, DomainError, InconclusiveError
from .exact import ExactMatrix, det_fraction_free, format_scalar, solve, to_fraction
from .poly import SparsePolynomial

HOMOGENEOUS_VARIABLES = ("x1", "x0", "y1", "y0", "z1", "z0")

# Rows and columns ordered x1, x0, y1, y0, z1, z0. Calibrated against the
# elimination oracle; the ratio det / oracle is ORACLE_RATIO on every sample.
DISCRIMINANT_LAYOUT = (
    ("0", "0", "c0", "c1", "b0", "b1"),
    ("0", "0", "c2", "c3", "b2", "b3"),
    ("c0", "c2", "0", "0", "a0", "a1"),
    ("c1", "c3", "0", "0", "a2", "a3"),
    ("b0", "b2", "a0", "a2", "0", "0"),
    ("b1", "b3", "a1", "a3", "0", "0"),
)
ORACLE_RATIO = Fraction(-1)
DEGREES_PER_EQUATION = (2, 2, 2)


@dataclass(frozen=True)
class PayoffTensor:
    """Payoffs ``payoffs[j][k_1, ..., k_S]`` of player j for each pure profile.

    Profiles use 0-based strategy indices internally; ``from_nested`` reads
    one nested list per player with extents equal to the strategy counts.
    """

    strategy_counts: tuple[int, ...]
    payoffs: tuple[dict, ...]

    def __post_init__(self):
        counts = tuple(self.strategy_counts)
        if not counts:
            raise DomainError("a game needs at least one player")
        if len(self.payoffs) != len(counts):
            raise DimensionError(f"{len(self.payoffs)} payoff tables for {len(counts)} players")
        profiles = set(itertools.product(*(range(m) for m in counts)))
        tables = []
        for j, table in enumerate(self.payoffs):
            if set(table) != profiles:
                raise DimensionError(f"payoff table of player {j + 1} does not match {counts}")
            tables.append({k: to_fraction(v) for k, v in table.items()})
        object.__setattr__(self, "strategy_counts", counts)
        object.__setattr__(self, "payoffs", tuple(tables))

    @property
    def S(self) -> int:
        return len(self.strategy_counts)

    @classmethod
    def from_nested(cls, strategy_counts: Sequence[int], nested: Sequence) -> "PayoffTensor":
        counts = tuple(int(m) for m in strategy_counts)
        tables = []
        for j, arr in enumerate(nested):
            table = {}
            for profile in itertools.product(*(range(m) for m in counts)):
                v = arr
                for depth, k in enumerate(profile):
                    if not isinstance(v, (list, tuple)) or len(v) != counts[depth]:
                        raise DimensionError(
                            f"payoffs of player {j + 1}: extent at depth {depth} "
                            f"must be {counts[depth]}")
                    v = v[k]
                if isinstance(v, (list, tuple)):
                    raise DimensionError(f"payoffs of player {j + 1} nest too deeply")
                table[profile] = v
            tables.append(table)
        return cls(counts, tuple(tables))

    def to_nested(self) -> list:
        def build(j, prefix):
            depth = len(prefix)
            if depth == self.S:
                return format_scalar(self.payoffs[j][prefix])
            return [build(j, prefix + (k,)) for k in range(self.strategy_counts[depth])]
        return [build(j, ()) for j in range(self.S)]


@dataclass(frozen=True)
class TMNESystem:
    """Dehomogenized payoff-difference equations, player-major order."""

    polynomials: tuple[SparsePolynomial, ...]
    block_sizes: tuple[int, ...]
    players: tuple[int, ...]

    @property
    def variables(self) -> tuple[str, ...]:
        return self.polynomials[0].variables if self.polynomials else ()


def tmne_variable(player: int, strategy: int) -> str:
    """Name of ``p^(player)_strategy`` (1-based)."""
    return f"p{player}_{strategy}"


def build_tmne_system(payoffs: PayoffTensor) -> TMNESystem:
    """One equation per player j and strategy i >= 2: payoff(i) - payoff(1).

    The last probability of every player is eliminated with the
    normalization ``p_m = 1 - (p_1 + ... + p_{m-1})``.
    """
    counts = payoffs.strategy_counts
    if any(m < 2 for m in counts):
        raise DomainError(f"every player needs at least two strategies, got {counts}")
    variables = tuple(tmne_variable(j + 1, i + 1)
                      for j, m in enumerate(counts) for i in range(m - 1))
    gens = dict(zip(variables, SparsePolynomial.gens(variables)))
    one = SparsePolynomial.constant(variables, 1)
    probs = []
    for j, m in enumerate(counts):
        own = [gens[tmne_variable(j + 1, i + 1)] for i in range(m - 1)]
        probs.append(own + [one - sum(own, SparsePolynomial(variables))])

    polys, players = [], []
    for j, m in enumerate(counts):
        others = [l for l in range(payoffs.S) if l != j]
        table = payoffs.payoffs[j]
        for i in range(1, m):
            poly = SparsePolynomial(variables)
            for rest in itertools.product(*(range(counts[l]) for l in others)):
                prof_i, prof_1 = list(rest), list(rest)
                prof_i.insert(j, i)
                prof_1.insert(j, 0)
                diff = table[tuple(prof_i)] - table[tuple(prof_1)]
                if not diff:
                    continue
                term = SparsePolynomial.constant(variables, diff)
                for l, k in zip(others, rest):
                    term = term * probs[l][k]
                poly = poly + term
            polys.append(poly)
            players.append(j + 1)
    return TMNESystem(tuple(polys), tuple(m - 1 for m in counts), tuple(players))


@dataclass(frozen=True)
class BilinearTriple:
    """The twelve coefficients of the 2x2x2 bilinear system, row-major per equation."""

    a: tuple[Fraction, ...]
    b: tuple[Fraction, ...]
    c: tuple[Fraction, ...]

    def __post_init__(self):
        for name in "abc":
            vals = tuple(to_fraction(v) for v in getattr(self, name))
            if len(vals) != 4:
                raise DimensionError(f"{name} needs four coefficients")
            if not any(vals):
                raise DomainError(f"all coefficients of {name} are zero")
            object.__setattr__(self, name, vals)

    @classmethod
    def from_payoffs(cls, payoffs: PayoffTensor) -> "BilinearTriple":
        """Payoff differences (strategy 2 minus strategy 1) of a 3-player 2x2x2 game."""
        if payoffs.strategy_counts != (2, 2, 2):
            raise DimensionError("a bilinear triple needs a 2x2x2 game")
        p1, p2, p3 = payoffs.payoffs
        a = [p1[1, k2, k3] - p1[0, k2, k3] for k2 in (0, 1) for k3 in (0, 1)]
        b = [p2[k1, 1, k3] - p2[k1, 0, k3] for k1 in (0, 1) for k3 in (0, 1)]
        c = [p3[k1, k2, 1] - p3[k1, k2, 0] for k1 in (0, 1) for k2 in (0, 1)]
        return cls(tuple(a), tuple(b), tuple(c))

    def values(self) -> dict[str, Fraction]:
        return {f"{name}{k}": getattr(self, name)[k] for name in "abc" for k in range(4)}

    def matrices(self):
        """``A`` (y by z), ``B`` (x by z), ``C`` (x by y) as nested lists."""
        return tuple([[v[0], v[1]], [v[2], v[3]]] for v in (self.a, self.b, self.c))

    def polynomials(self) -> tuple[SparsePolynomial, ...]:
        x1, x0, y1, y0, z1, z0 = SparsePolynomial.gens(HOMOGENEOUS_VARIABLES)
        a, b, c = self.a, self.b, self.c
        return (
            a[0] * y1 * z1 + a[1] * y1 * z0 + a[2] * y0 * z1 + a[3] * y0 * z0,
            b[0] * x1 * z1 + b[1] * x1 * z0 + b[2] * x0 * z1 + b[3] * x0 * z0,
            c[0] * x1 * y1 + c[1] * x1 * y0 + c[2] * x0 * y1 + c[3] * x0 * y0,
        )

    def scaled(self, la=1, lb=1, lc=1) -> "BilinearTriple":
        return BilinearTriple(tuple(v * la for v in self.a), tuple(v * lb for v in self.b),
                              tuple(v * lc for v in self.c))

    def to_json(self) -> dict:
        return {name: [format_scalar(v) for v in getattr(self, name)] for name in "abc"}


def discriminant_matrix(t: BilinearTriple) -> ExactMatrix:
    vals = t.values()
    return ExactMatrix.from_rows([[vals.get(s, 0) for s in row] for row in DISCRIMINANT_LAYOUT])


def discriminant_2x2x2(t: BilinearTriple) -> Fraction:
    """Mixed discriminant of the 2x2x2 bilinear system as a 6x6 determinant."""
    return det_fraction_free(discriminant_matrix(t))


def _linear(coeffs, var_pair: Sequence[SparsePolynomial]) -> SparsePolynomial:
    return coeffs[0] * var_pair[0] + coeffs[1] * var_pair[1]


def eliminant(t: BilinearTriple) -> tuple[Fraction, Fraction, Fraction]:
    """``(alpha, beta, gamma)`` of the quadratic in ``(x1:x0)``.

    Fixed order: G(x, y) = Res_z(F1, F2), then Res_y(G, F3). Both steps are
    resultants of two linear forms, i.e. 2x2 determinants.
    """
    xs = ("x1", "x0")
    x1, x0 = SparsePolynomial.gens(xs)
    A, B, C = t.matrices()
    # F2 = w1 z1 + w0 z0 and F3 = v1 y1 + v0 y0 with w, v linear in x.
    w = [_linear((B[0][k], B[1][k]), (x1, x0)) for k in (0, 1)]
    v = [_linear((C[0][k], C[1][k]), (x1, x0)) for k in (0, 1)]
    # F1 = (A[0][0] y1 + A[1][0] y0) z1 + (A[0][1] y1 + A[1][1] y0) z0, so
    # Res_z(F1, F2) = g1 y1 + g0 y0 with coefficients linear in x.
    g1 = A[0][0] * w[1] - A[0][1] * w[0]
    g0 = A[1][0] * w[1] - A[1][1] * w[0]
    q = g1 * v[1] - g0 * v[0]
    return q.coeff((2, 0)), q.coeff((1, 1)), q.coeff((0, 2))


def quadratic_discriminant_oracle(t: BilinearTriple) -> Fraction:
    """``beta^2 - 4 alpha gamma`` of the eliminant.

    Raises DegenerateSystemError when the eliminant vanishes identically and
    InconclusiveError when ``alpha = 0`` (a root escapes to ``x0 = 0``).
    """
    alpha, beta, gamma = eliminant(t)
    if not (alpha or beta or gamma):
        raise DegenerateSystemError("eliminant vanishes identically: positive-dimensional solutions")
    if not alpha:
        raise InconclusiveError("leading coefficient vanishes: root at infinity in the x factor")
    return beta * beta - 4 * alpha * gamma


@dataclass(frozen=True)
class ProjectiveRootTriple:
    """Point of P^1 x P^1 x P^1; each ratio scaled so its second coordinate is 1 when nonzero."""

    x: tuple[Fraction, Fraction]
    y: tuple[Fraction, Fraction]
    z: tuple[Fraction, Fraction]
    multiplicity: int = 1

    def __post_init__(self):
        for name in "xyz":
            object.__setattr__(self, name, _canonical(getattr(self, name)))

    @property
    def coordinates(self) -> tuple[Fraction, ...]:
        return self.x + self.y + self.z

    @property
    def at_infinity(self) -> bool:
        return any(not p[1] for p in (self.x, self.y, self.z))

    @property
    def on_coordinate_hyperplane(self) -> bool:
        return any(not v for v in self.coordinates)

    def to_json(self) -> dict:
        return {"x": [format_scalar(v) for v in self.x], "y": [format_scalar(v) for v in self.y],
                "z": [format_scalar(v) for v in self.z], "multiplicity": self.multiplicity,
                "on_coordinate_hyperplane": self.on_coordinate_hyperplane}


def _canonical(pair) -> tuple[Fraction, Fraction]:
    u, v = (to_fraction(e) for e in pair)
    if not (u or v):
        raise DomainError("projective point (0:0)")
    return (u / v, Fraction(1)) if v else (Fraction(1), Fraction(0))


@dataclass(frozen=True)
class SolveResult:
    """Exact solutions of a 2x2x2 system.

    ``roots`` holds the rational solutions with multiplicities. When the
    eliminated quadratic has no rational roots, ``algebraic`` is
    ``"real-irrational"`` or ``"complex"`` and the two conjugate solutions
    are represented by ``eliminant`` alone.
    """

    eliminant: tuple[Fraction, Fraction, Fraction]
    discriminant: Fraction
    roots: tuple[ProjectiveRootTriple, ...]
    algebraic: str | None = None

    @property
    def root_count(self) -> int:
        return sum(r.multiplicity for r in self.roots) + (2 if self.algebraic else 0)

    @property
    def has_multiple_root(self) -> bool:
        return any(r.multiplicity > 1 for r in self.roots)

    def to_json(self) -> dict:
        return {
            "eliminant": [format_scalar(v) for v in self.eliminant],
            "eliminant_discriminant": format_scalar(self.discriminant),
            "roots": [r.to_json() for r in self.roots],
            "algebraic": self.algebraic,
            "root_count": self.root_count,
        }


def _rational_sqrt(q: Fraction) -> Fraction | None:
    if q < 0:
        return None
    n, d = math.isqrt(q.numerator), math.isqrt(q.denominator)
    if n * n == q.numerator and d * d == q.denominator:
        return Fraction(n, d)
    return None


def _back_substitute(t: BilinearTriple, x: tuple[Fraction, Fraction],
                     multiplicity: int) -> ProjectiveRootTriple:
    A, B, C = t.matrices()
    # y from F3(x, y) = 0, z from F2(x, z) = 0.
    v = [C[0][k] * x[0] + C[1][k] * x[1] for k in (0, 1)]
    w = [B[0][k] * x[0] + B[1][k] * x[1] for k in (0, 1)]
    y = (v[1], -v[0]) if any(v) else None
    z = (w[1], -w[0]) if any(w) else None
    # When F3 (or F2) vanishes identically at x, F1 fixes the missing factor.
    if y is None and z is not None:
        u = [A[k][0] * z[0] + A[k][1] * z[1] for k in (0, 1)]
        y = (u[1], -u[0]) if any(u) else None
    elif z is None and y is not None:
        s = [A[0][k] * y[0] + A[1][k] * y[1] for k in (0, 1)]
        z = (s[1], -s[0]) if any(s) else None
    if y is None or z is None:
        raise DegenerateSystemError(
            f"back-substitution is undetermined at x = {x}: a whole line of solutions")
    root = ProjectiveRootTriple(x, y, z, multiplicity)
    values = dict(zip(HOMOGENEOUS_VARIABLES, root.coordinates))
    for f in t.polynomials():
        if f(*(values[s] for s in HOMOGENEOUS_VARIABLES)):
            raise AssertionError("back-substituted point does not solve the system")
    return root


def solve_2x2x2(t: BilinearTriple) -> SolveResult:
    """Eliminate z then y, solve the quadratic in ``(x1:x0)`` exactly, back-substitute."""
    alpha, beta, gamma = eliminant(t)
    if not (alpha or beta or gamma):
        raise DegenerateSystemError("eliminant vanishes identically: positive-dimensional solutions")
    disc = beta * beta - 4 * alpha * gamma
    xs: list[tuple[tuple[Fraction, Fraction], int]] = []
    algebraic = None
    if not alpha:
        # x0 divides the form: one root at x0 = 0, the other from beta x1 + gamma x0.
        if beta:
            xs = [((Fraction(1), Fraction(0)), 1), ((-gamma, beta), 1)]
        else:
            xs = [((Fraction(1), Fraction(0)), 2)]
    elif not disc:
        xs = [((-beta, 2 * alpha), 2)]
    else:
        r = _rational_sqrt(disc)
        if r is None:
            algebraic = "complex" if disc < 0 else "real-irrational"
        else:
            xs = [((-beta + r, 2 * alpha), 1), ((-beta - r, 2 * alpha), 1)]
    roots = tuple(_back_substitute(t, x, m) for x, m in xs)
    return SolveResult((alpha, beta, gamma), disc, roots, algebraic)


def _small_rational(rng: random.Random, bound: int = 5) -> Fraction:
    while True:
        q = Fraction(rng.randint(-bound, bound), rng.randint(1, 3))
        if q:
            return q


def _integer_primitive(vals: Sequence[Fraction]) -> tuple[Fraction, ...]:
    den = math.lcm(*(v.denominator for v in vals))
    ints = [int(v * den) for v in vals]
    g = math.gcd(*ints) or 1
    return tuple(Fraction(i, g) for i in ints)


def _fit_equation(rng: random.Random, p: Fraction, q: Fraction,
                  dp: Fraction, dq: Fraction) -> tuple[Fraction, ...]:
    """Coefficients of ``k0 PQ + k1 P + k2 Q + k3`` vanishing at (p, q) with given partials."""
    lead = _small_rational(rng)
    conditions = ExactMatrix.from_rows([
        [p * q, p, q, 1],     # value
        [q, 1, 0, 0],         # d/dP
        [p, 0, 1, 0],         # d/dQ
        [1, 0, 0, 0],         # fix the free parameter
    ])
    return tuple(solve(conditions, [0, dp, dq, lead]))


def construct_double_root(seed: int = 0, max_tries: int = 100) -> BilinearTriple:
    """Random integer triple with a multiple root at a point with nonzero coordinates."""
    return double_root_instance(seed, max_tries)[0]


def double_root_instance(seed: int = 0, max_tries: int = 100):
    """``(triple, (X, Y, Z))`` where the triple has a multiple root at ``(X:1), (Y:1), (Z:1)``.

    Picks the root ``(X:1), (Y:1), (Z:1)`` and the six nonzero partial
    derivatives of the affine system there so that the Jacobian determinant
    ``dF1/dY dF2/dZ dF3/dX + dF1/dZ dF2/dX dF3/dY`` vanishes, then solves the
    linear conditions on each equation's coefficients.
    """
    rng = random.Random(seed)
    for _ in range(max_tries):
        X, Y, Z = (_small_rational(rng) for _ in range(3))
        f1y, f1z, f2x, f2z, f3x = (_small_rational(rng) for _ in range(5))
        f3y = -f1y * f2z * f3x / (f1z * f2x)
        a = _fit_equation(rng, Y, Z, f1y, f1z)
        b = _fit_equation(rng, X, Z, f2x, f2z)
        c = _fit_equation(rng, X, Y, f3x, f3y)
        if not (any(a) and any(b) and any(c)):
            continue
        t = BilinearTriple(_integer_primitive(a), _integer_primitive(b), _integer_primitive(c))
        if any(eliminant(t)):
            return t, (X, Y, Z)
    raise DegenerateSystemError(f"no nondegenerate double-root instance after {max_tries} tries")


def jacobian_determinant(t: BilinearTriple, X, Y, Z) -> Fraction:
    """Jacobian determinant of the affine system (x0 = y0 = z0 = 1) at (X, Y, Z)."""
    a, b, c = t.a, t.b, t.c
    X, Y, Z = (to_fraction(v) for v in (X, Y, Z))
    f1y, f1z = a[0] * Z + a[1], a[0] * Y + a[2]
    f2x, f2z = b[0] * Z + b[1], b[0] * X + b[2]
    f3x, f3y = c[0] * Y + c[1], c[0] * X + c[2]
    jac = ExactMatrix.from_rows([[0, f1y, f1z], [f2x, 0, f2z], [f3x, f3y, 0]])
    return det_fraction_free(jac)
