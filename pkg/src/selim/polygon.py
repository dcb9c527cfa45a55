"""Convex lattice polygons, Minkowski sums and the 2D mixed area."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DomainError

Point = tuple[int, int]


def _cross(o: Point, a: Point, b: Point) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def convex_hull(points: Iterable[Sequence[int]]) -> list[Point]:
    """Andrew's monotone chain; counterclockwise, collinear points removed.

    The hull of a single point is that point, of collinear points the two
    endpoints.
    """
    pts = sorted({(int(p[0]), int(p[1])) for p in points})
    if len(pts) <= 2:
        return pts

    def half(seq):
        chain: list[Point] = []
        for p in seq:
            while len(chain) >= 2 and _cross(chain[-2], chain[-1], p) <= 0:
                chain.pop()
            chain.append(p)
        return chain

    lower, upper = half(pts), half(reversed(pts))
    hull = lower[:-1] + upper[:-1]
    return hull if len(hull) > 1 else hull[:1]


def _start_lowest(vertices: list[Point]) -> list[Point]:
    k = min(range(len(vertices)), key=lambda i: (vertices[i][1], vertices[i][0]))
    return vertices[k:] + vertices[:k]


@dataclass(frozen=True)
class ConvexPolygon:
    """Counterclockwise vertex list of a convex lattice polygon.

    Degenerate hulls are allowed: a segment has two vertices and a point
    one. Vertices are stored starting from the lowest (then leftmost) one.
    """

    vertices: tuple[Point, ...]

    def __post_init__(self):
        verts = [(int(x), int(y)) for x, y in self.vertices]
        if not verts:
            raise DomainError("a polygon needs at least one vertex")
        n = len(verts)
        if len(set(verts)) != n:
            raise DomainError(f"repeated vertices in {verts}")
        if n >= 3:
            for i in range(n):
                if _cross(verts[i], verts[(i + 1) % n], verts[(i + 2) % n]) <= 0:
                    raise DomainError(
                        "vertices must be strictly convex and counterclockwise")
        object.__setattr__(self, "vertices", tuple(_start_lowest(verts)))

    @classmethod
    def hull(cls, points: Iterable[Sequence[int]]) -> "ConvexPolygon":
        return cls(tuple(convex_hull(points)))

    @classmethod
    def rectangle(cls, width: int, height: int) -> "ConvexPolygon":
        """Axis-parallel box ``[0, width] x [0, height]`` (possibly degenerate)."""
        return cls.hull([(0, 0), (width, 0), (0, height), (width, height)])

    def edges(self) -> list[Point]:
        v = self.vertices
        if len(v) == 1:
            return []
        return [(v[(i + 1) % len(v)][0] - v[i][0], v[(i + 1) % len(v)][1] - v[i][1])
                for i in range(len(v))]

    def twice_area(self) -> int:
        v = self.vertices
        return sum(v[i][0] * v[(i + 1) % len(v)][1] - v[(i + 1) % len(v)][0] * v[i][1]
                   for i in range(len(v)))

    def area(self) -> Fraction:
        return Fraction(self.twice_area(), 2)

    def translate(self, dx: int, dy: int) -> "ConvexPolygon":
        return ConvexPolygon(tuple((x + dx, y + dy) for x, y in self.vertices))

    def to_json(self) -> list[list[int]]:
        return [list(p) for p in self.vertices]


def _angle_half(v: Point) -> int:
    return 0 if v[1] > 0 or (v[1] == 0 and v[0] > 0) else 1


def minkowski_sum(p: ConvexPolygon, q: ConvexPolygon) -> ConvexPolygon:
    """Merge the two edge sequences by polar angle, starting from the lowest vertices."""
    ep, eq = p.edges(), q.edges()
    x, y = p.vertices[0][0] + q.vertices[0][0], p.vertices[0][1] + q.vertices[0][1]
    out = [(x, y)]
    i = j = 0
    while i < len(ep) or j < len(eq):
        if j == len(eq):
            take_p = True
        elif i == len(ep):
            take_p = False
        else:
            a, b = ep[i], eq[j]
            ha, hb = _angle_half(a), _angle_half(b)
            take_p = ha < hb or (ha == hb and a[0] * b[1] - a[1] * b[0] >= 0)
        if take_p:
            dx, dy = ep[i]
            i += 1
        else:
            dx, dy = eq[j]
            j += 1
        x, y = x + dx, y + dy
        out.append((x, y))
    return ConvexPolygon.hull(out)


def mixed_area_2d(p: ConvexPolygon, q: ConvexPolygon) -> int:
    """Mixed area ``area(p + q) - area(p) - area(q)`` (Euclidean areas).

    For lattice polygons this is an integer; two unit segments along the
    axes give 1.
    """
    if not isinstance(p, ConvexPolygon):
        p = ConvexPolygon.hull(p)
    if not isinstance(q, ConvexPolygon):
        q = ConvexPolygon.hull(q)
    twice = minkowski_sum(p, q).twice_area() - p.twice_area() - q.twice_area()
    if twice % 2:
        raise AssertionError("mixed area of lattice polygons must be an integer")
    return twice // 2
