"""Exact rational plane-geometry kernel.

Every quantity is a :class:`fractions.Fraction`; points are affine, lines are
canonical integer coefficient triples, and circles carry a squared radius so
nothing ever needs a square root.  All objects are immutable and every
function here is pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from fractions import Fraction
from math import gcd, lcm
from typing import Sequence, Union

Scalar = Fraction
Number = Union[int, Fraction]


class GeometryError(ValueError):
    """Base class for degenerate or invalid geometric input."""


class IdenticalPoints(GeometryError):
    pass


class DegenerateTriangle(GeometryError):
    pass


class DuplicatePoint(GeometryError):
    pass


class NotCollinear(GeometryError):
    pass


class KnownPointNotOnCircles(GeometryError):
    pass


class IdenticalCircles(GeometryError):
    pass


class ZeroVector(GeometryError):
    pass


def scalar(value: Number | str) -> Fraction:
    return value if isinstance(value, Fraction) else Fraction(value)


def format_scalar(value: Fraction) -> str:
    """``"p/q"``, or ``"p"`` when the denominator is 1."""
    return str(value)


def _sign(value: Fraction) -> int:
    return (value > 0) - (value < 0)


@dataclass(frozen=True)
class Point:
    x: Fraction
    y: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "x", scalar(self.x))
        object.__setattr__(self, "y", scalar(self.y))

    def __add__(self, other: Point) -> Point:
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other: Point) -> Point:
        return Point(self.x - other.x, self.y - other.y)

    def __mul__(self, k: Number) -> Point:
        return Point(self.x * k, self.y * k)

    __rmul__ = __mul__

    def __neg__(self) -> Point:
        return Point(-self.x, -self.y)

    def __iter__(self):
        yield self.x
        yield self.y

    def __repr__(self) -> str:
        return f"Point({self.x}, {self.y})"

    def to_float(self) -> tuple[float, float]:
        return float(self.x), float(self.y)


def dot(u: Point, v: Point) -> Fraction:
    return u.x * v.x + u.y * v.y


def cross(u: Point, v: Point) -> Fraction:
    return u.x * v.y - u.y * v.x


def midpoint(P: Point, Q: Point) -> Point:
    return Point((P.x + Q.x) / 2, (P.y + Q.y) / 2)


def squared_distance(P: Point, Q: Point) -> Fraction:
    d = Q - P
    return dot(d, d)


def signed_area(P: Point, Q: Point, R: Point) -> Fraction:
    """Half the cross product of Q-P and R-P; positive iff P, Q, R turn counterclockwise."""
    return cross(Q - P, R - P) / 2


def collinear(P: Point, Q: Point, R: Point) -> bool:
    return signed_area(P, Q, R) == 0


def _primitive(values: Sequence[Fraction]) -> tuple[Fraction, ...]:
    """Scale a nonzero rational vector to coprime integers, first nonzero entry positive."""
    den = lcm(*(v.denominator for v in values))
    ints = [int(v * den) for v in values]
    g = 0
    for i in ints:
        g = gcd(g, i)
    ints = [i // g for i in ints]
    lead = next(i for i in ints if i != 0)
    if lead < 0:
        ints = [-i for i in ints]
    return tuple(Fraction(i) for i in ints)


def direction(v: Point) -> Point:
    """Canonical representative of the direction of a nonzero vector (up to sign)."""
    if v.x == 0 and v.y == 0:
        raise ZeroVector("zero vector has no direction")
    return Point(*_primitive((v.x, v.y)))


@dataclass(frozen=True)
class Line:
    """The locus ``l*x + m*y + n = 0``, stored in canonical form so equal lines compare equal."""

    l: Fraction
    m: Fraction
    n: Fraction

    def __post_init__(self) -> None:
        l, m, n = scalar(self.l), scalar(self.m), scalar(self.n)
        if l == 0 and m == 0:
            raise GeometryError("line needs l or m nonzero")
        l, m, n = _primitive((l, m, n))
        object.__setattr__(self, "l", l)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "n", n)

    def evaluate(self, P: Point) -> Fraction:
        return self.l * P.x + self.m * P.y + self.n

    def contains(self, P: Point) -> bool:
        return self.evaluate(P) == 0

    @property
    def normal(self) -> Point:
        return Point(self.l, self.m)

    @property
    def direction(self) -> Point:
        return direction(Point(self.m, -self.l))

    def coefficients(self) -> tuple[Fraction, Fraction, Fraction]:
        return self.l, self.m, self.n

    def __repr__(self) -> str:
        return f"Line({self.l}, {self.m}, {self.n})"


def line_through(P: Point, Q: Point) -> Line:
    if P == Q:
        raise IdenticalPoints(f"cannot draw a line through {P} twice")
    return Line(P.y - Q.y, Q.x - P.x, P.x * Q.y - Q.x * P.y)


def perpendicular_through(P: Point, L: Line) -> Line:
    # normal of the result is the direction of L
    l, m = L.m, -L.l
    return Line(l, m, -(l * P.x + m * P.y))


def parallel_through(P: Point, L: Line) -> Line:
    return Line(L.l, L.m, -(L.l * P.x + L.m * P.y))


def perpendicular_bisector(P: Point, Q: Point) -> Line:
    if P == Q:
        raise IdenticalPoints(f"no perpendicular bisector of {P} with itself")
    # |X-P|^2 = |X-Q|^2  <=>  2(Q-P).X + |P|^2 - |Q|^2 = 0
    d = Q - P
    return Line(2 * d.x, 2 * d.y, dot(P, P) - dot(Q, Q))


def foot_of_perpendicular(P: Point, L: Line) -> Point:
    k = L.evaluate(P) / (L.l * L.l + L.m * L.m)
    return Point(P.x - k * L.l, P.y - k * L.m)


def reflect(P: Point, L: Line) -> Point:
    F = foot_of_perpendicular(P, L)
    return 2 * F - P


# --- line intersection and concurrency outcomes ---------------------------


@dataclass(frozen=True)
class ConcurrentAt:
    point: Point


@dataclass(frozen=True)
class ConcurrentAtInfinity:
    direction: Point


@dataclass(frozen=True)
class NotConcurrent:
    pass


@dataclass(frozen=True)
class DegenerateInput:
    reason: str


ConcurrencyResult = Union[ConcurrentAt, ConcurrentAtInfinity, NotConcurrent, DegenerateInput]


@dataclass(frozen=True)
class Parallel:
    """Two distinct parallel lines; they meet only at infinity."""

    direction: Point


@dataclass(frozen=True)
class Identical:
    line: Line


def intersect_lines(L1: Line, L2: Line) -> Point | Parallel | Identical:
    if L1 == L2:
        return Identical(L1)
    den = L1.l * L2.m - L2.l * L1.m
    if den == 0:
        return Parallel(L1.direction)
    x = (L1.m * L2.n - L2.m * L1.n) / den
    y = (L2.l * L1.n - L1.l * L2.n) / den
    return Point(x, y)


def det3(rows: Sequence[Sequence[Fraction]]) -> Fraction:
    (a, b, c), (d, e, f), (g, h, i) = rows
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def concurrent(L1: Line, L2: Line, L3: Line) -> ConcurrencyResult:
    lines = (L1, L2, L3)
    if L1 == L2 or L2 == L3 or L1 == L3:
        return DegenerateInput("two of the lines coincide")
    if det3([L.coefficients() for L in lines]) != 0:
        return NotConcurrent()
    for i, j in ((0, 1), (0, 2), (1, 2)):
        X = intersect_lines(lines[i], lines[j])
        if isinstance(X, Point):
            # vanishing determinant forces the remaining line through X
            assert all(L.contains(X) for L in lines)
            return ConcurrentAt(X)
    return ConcurrentAtInfinity(L1.direction)


def concyclic(P1: Point, P2: Point, P3: Point, P4: Point) -> bool:
    pts = (P1, P2, P3, P4)
    if len(set(pts)) < 4:
        raise DuplicatePoint("concyclic needs four distinct points")
    # 4x4 determinant [x, y, x^2+y^2, 1] with P1 subtracted from the other rows
    rows = []
    for P in pts[1:]:
        d = P - P1
        rows.append((d.x, d.y, dot(P, P) - dot(P1, P1)))
    return det3(rows) == 0


# --- circles -----------------------------------------------------------------


@dataclass(frozen=True)
class Circle:
    center: Point
    r2: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "r2", scalar(self.r2))
        if self.r2 <= 0:
            raise GeometryError("circle needs a positive squared radius")

    def power(self, P: Point) -> Fraction:
        return squared_distance(self.center, P) - self.r2

    def contains(self, P: Point) -> bool:
        return self.power(P) == 0


def second_circle_intersection(C1: Circle, C2: Circle, known: Point) -> Point:
    """The intersection of two circles other than ``known``.

    Both intersection points are mirror images across the line of centers, so
    the other one is the reflection of ``known``; tangency returns ``known``.
    """
    if C1 == C2:
        raise IdenticalCircles("circles coincide")
    if not (C1.contains(known) and C2.contains(known)):
        raise KnownPointNotOnCircles(f"{known} is not on both circles")
    # distinct concentric circles cannot share a point, so the centers differ here
    return reflect(known, line_through(C1.center, C2.center))


def signed_ratio(P: Point, Q: Point, X: Point) -> Fraction:
    """The ratio r with X - P = r (Q - X); positive iff X lies strictly between P and Q."""
    if not collinear(P, Q, X):
        raise NotCollinear(f"{X} is not on line {P}{Q}")
    if X == Q:
        raise GeometryError("ratio undefined when X coincides with Q")
    u, v = X - P, Q - X
    return u.x / v.x if v.x != 0 else u.y / v.y


def angle_pair(vertex: Point, P: Point, Q: Point) -> tuple[Fraction, Fraction]:
    """(dot, cross) of the rays vertex->P and vertex->Q.

    cross/dot is the tangent of the signed angle turning from the first ray to
    the second; comparing pairs instead of tangents keeps right angles exact.
    """
    u, v = P - vertex, Q - vertex
    if u == Point(0, 0) or v == Point(0, 0):
        raise ZeroVector("angle with a zero-length ray")
    return dot(u, v), cross(u, v)


def same_angle(p1: tuple[Fraction, Fraction], p2: tuple[Fraction, Fraction]) -> bool:
    (d1, c1), (d2, c2) = p1, p2
    return d1 * c2 == d2 * c1 and _sign(d1) == _sign(d2) and _sign(c1) == _sign(c2)


# --- triangles ---------------------------------------------------------------


@dataclass(frozen=True)
class Triangle:
    A: Point
    B: Point
    C: Point

    def __post_init__(self) -> None:
        if signed_area(self.A, self.B, self.C) == 0:
            raise DegenerateTriangle(f"collinear vertices {self.A}, {self.B}, {self.C}")

    @classmethod
    def from_coords(cls, *coords: tuple[Number | str, Number | str]) -> Triangle:
        return cls(*(Point(scalar(x), scalar(y)) for x, y in coords))

    @property
    def vertices(self) -> tuple[Point, Point, Point]:
        return self.A, self.B, self.C

    @cached_property
    def a2(self) -> Fraction:
        return squared_distance(self.B, self.C)

    @cached_property
    def b2(self) -> Fraction:
        return squared_distance(self.C, self.A)

    @cached_property
    def c2(self) -> Fraction:
        return squared_distance(self.A, self.B)

    @cached_property
    def S(self) -> Fraction:
        """Signed area; positive for counterclockwise vertex order."""
        return signed_area(self.A, self.B, self.C)

    @property
    def area(self) -> Fraction:
        return abs(self.S)

    def side(self, i: int) -> Line:
        """Side line opposite vertex ``i`` (0 -> BC, 1 -> CA, 2 -> AB)."""
        V = self.vertices
        return line_through(V[(i + 1) % 3], V[(i + 2) % 3])

    def squared_sides(self) -> tuple[Fraction, Fraction, Fraction]:
        return self.a2, self.b2, self.c2

    def map(self, f) -> Triangle:
        return Triangle(f(self.A), f(self.B), f(self.C))


def circumcircle(T: Triangle) -> Circle:
    A, B, C = T.vertices
    D = 2 * cross(B - A, C - A)
    b, c = B - A, C - A
    bb, cc = dot(b, b), dot(c, c)
    center = A + Point((c.y * bb - b.y * cc) / D, (b.x * cc - c.x * bb) / D)
    return Circle(center, squared_distance(center, A))
