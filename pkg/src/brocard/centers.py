"""Named points, triangles and circles of a triangle, built with exact arithmetic.

Each construction uses the kernel's ruler-and-compass style primitives
(perpendiculars, feet, line and circle intersections).  Closed-form
barycentric formulas are kept out of here on purpose; the tests use them as
independent oracles.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .geom import (
    Circle,
    ConcurrentAt,
    GeometryError,
    Line,
    Point,
    Triangle,
    angle_pair,
    circumcircle,
    concurrent,
    intersect_lines,
    line_through,
    midpoint,
    parallel_through,
    perpendicular_bisector,
    perpendicular_through,
    foot_of_perpendicular,
    same_angle,
    second_circle_intersection,
    squared_distance,
)


class ConstructionDegenerate(GeometryError):
    pass


class DegenerateBrocardTriangle(GeometryError):
    pass


class InternalConcurrencyFailure(RuntimeError):
    """A concurrency that holds for every valid triangle failed; indicates a kernel bug."""


@dataclass(frozen=True)
class CenterSet:
    O: Point
    K: Point
    cot_omega: Fraction
    tan_omega: Fraction
    omega1: Point
    omega2: Point
    omega3: Point
    brocard_triangle: Triangle
    brocard_circle: Circle
    tarry: Point
    steiner: Point


def _point_from_ratio(P: Point, Q: Point, r: Fraction) -> Point:
    """The X on PQ with X - P = r (Q - X)."""
    return (P + r * Q) * (1 / (1 + r))


def _meet(L1: Line, L2: Line) -> Point:
    X = intersect_lines(L1, L2)
    if not isinstance(X, Point):
        raise ConstructionDegenerate(f"expected the lines {L1}, {L2} to cross")
    return X


def circumcenter(T: Triangle) -> Point:
    return _meet(perpendicular_bisector(T.B, T.C), perpendicular_bisector(T.C, T.A))


def symmedian_feet(T: Triangle) -> tuple[Point, Point, Point]:
    """Feet of the symmedians on BC, CA, AB.

    Each foot splits the opposite side in the ratio of the squared adjacent
    sides, e.g. AC2 : C2B = b^2 : a^2.
    """
    a2, b2, c2 = T.squared_sides()
    A2 = _point_from_ratio(T.B, T.C, c2 / b2)
    B2 = _point_from_ratio(T.C, T.A, a2 / c2)
    C2 = _point_from_ratio(T.A, T.B, b2 / a2)
    return A2, B2, C2


def symmedian_point(T: Triangle) -> Point:
    A2, B2, C2 = symmedian_feet(T)
    K = _meet(line_through(T.B, B2), line_through(T.C, C2))
    if not line_through(T.A, A2).contains(K):
        raise InternalConcurrencyFailure("third symmedian misses K")
    return K


def vertex_cotangents(T: Triangle) -> tuple[Fraction, Fraction, Fraction]:
    """cot A, cot B, cot C via the law of cosines over four times the area."""
    a2, b2, c2 = T.squared_sides()
    four_s = 4 * T.area
    return (b2 + c2 - a2) / four_s, (c2 + a2 - b2) / four_s, (a2 + b2 - c2) / four_s


def brocard_angle(T: Triangle) -> tuple[Fraction, Fraction]:
    """(cot w, tan w) for the Brocard angle w."""
    a2, b2, c2 = T.squared_sides()
    cot = (a2 + b2 + c2) / (4 * T.area)
    if cot != sum(vertex_cotangents(T)):
        raise InternalConcurrencyFailure("cotangent identity failed")
    return cot, 1 / cot


def tangent_circle(through: Point, touch: Point, tangent: Line) -> Circle:
    """Circle through ``through`` that touches ``tangent`` at ``touch``."""
    center = _meet(perpendicular_through(touch, tangent), perpendicular_bisector(through, touch))
    return Circle(center, squared_distance(center, touch))


def _orientation(T: Triangle) -> int:
    return 1 if T.S > 0 else -1


def brocard_angle_pairs(T: Triangle, P: Point, first: bool = True):
    """The three (dot, cross) pairs that must all equal the Brocard angle at P.

    Signed angles turning from AB to AP, BC to BP, CA to CP for the first
    Brocard point, and from AP to AC, BP to BA, CP to CB for the second.
    """
    A, B, C = T.vertices
    if first:
        return [angle_pair(A, B, P), angle_pair(B, C, P), angle_pair(C, A, P)]
    return [angle_pair(A, P, C), angle_pair(B, P, A), angle_pair(C, P, B)]


def _check_brocard(T: Triangle, P: Point, first: bool) -> None:
    _, tan = brocard_angle(T)
    target = (Fraction(1), _orientation(T) * tan)
    if not all(same_angle(pair, target) for pair in brocard_angle_pairs(T, P, first)):
        raise InternalConcurrencyFailure("Brocard angle check failed")


def first_brocard_point(T: Triangle) -> Point:
    A, B, C = T.vertices
    c1 = tangent_circle(A, B, line_through(B, C))
    c2 = tangent_circle(B, C, line_through(C, A))
    if c1 == c2:
        raise ConstructionDegenerate("tangent circles coincide")
    P = second_circle_intersection(c1, c2, B)
    if P == B:
        raise ConstructionDegenerate("tangent circles touch at B")
    _check_brocard(T, P, first=True)
    return P


def second_brocard_point(T: Triangle) -> Point:
    A, B, C = T.vertices
    c1 = tangent_circle(B, A, line_through(A, C))
    c2 = tangent_circle(C, B, line_through(B, A))
    if c1 == c2:
        raise ConstructionDegenerate("tangent circles coincide")
    P = second_circle_intersection(c1, c2, B)
    if P == B:
        raise ConstructionDegenerate("tangent circles touch at B")
    _check_brocard(T, P, first=False)
    return P


def first_brocard_triangle(T: Triangle) -> Triangle:
    O = circumcenter(T)
    K = symmedian_point(T)
    if K == O:
        raise DegenerateBrocardTriangle("symmedian point coincides with circumcenter")
    A, B, C = T.vertices
    try:
        return Triangle(
            foot_of_perpendicular(K, perpendicular_bisector(B, C)),
            foot_of_perpendicular(K, perpendicular_bisector(C, A)),
            foot_of_perpendicular(K, perpendicular_bisector(A, B)),
        )
    except GeometryError as exc:
        raise DegenerateBrocardTriangle(str(exc)) from exc


def _concurrency_point(lines, what: str) -> Point:
    result = concurrent(*lines)
    if not isinstance(result, ConcurrentAt):
        raise InternalConcurrencyFailure(f"{what}: {result}")
    return result.point


def third_brocard_point(T: Triangle, brocard: Triangle | None = None) -> Point:
    T1 = brocard or first_brocard_triangle(T)
    return _concurrency_point(
        [line_through(V, V1) for V, V1 in zip(T.vertices, T1.vertices)], "lines AA1, BB1, CC1"
    )


def brocard_circle(T: Triangle) -> Circle:
    O, K = circumcenter(T), symmedian_point(T)
    if O == K:
        raise DegenerateBrocardTriangle("no Brocard circle when K = O")
    return Circle(midpoint(O, K), squared_distance(O, K) / 4)


def tarry_lines(T: Triangle, brocard: Triangle) -> list[Line]:
    """Perpendiculars from A, B, C to B1C1, C1A1, A1B1."""
    return [perpendicular_through(V, brocard.side(i)) for i, V in enumerate(T.vertices)]


def steiner_lines(T: Triangle, brocard: Triangle) -> list[Line]:
    """Parallels through A, B, C to B1C1, C1A1, A1B1."""
    return [parallel_through(V, brocard.side(i)) for i, V in enumerate(T.vertices)]


def tarry_point(T: Triangle, brocard: Triangle | None = None) -> Point:
    T1 = brocard or first_brocard_triangle(T)
    P = _concurrency_point(tarry_lines(T, T1), "Tarry perpendiculars")
    if not circumcircle(T).contains(P):
        raise InternalConcurrencyFailure("Tarry point off the circumcircle")
    return P


def steiner_point(T: Triangle, brocard: Triangle | None = None) -> Point:
    T1 = brocard or first_brocard_triangle(T)
    P = _concurrency_point(steiner_lines(T, T1), "Steiner parallels")
    circle = circumcircle(T)
    if not circle.contains(P):
        raise InternalConcurrencyFailure("Steiner point off the circumcircle")
    if midpoint(P, tarry_point(T, T1)) != circle.center:
        raise InternalConcurrencyFailure("Steiner and Tarry points are not antipodal")
    return P


def brocard_cevian_feet(T: Triangle, omega: Point | None = None) -> tuple[Point, Point, Point]:
    """A'' = AW n BC, B'' = BW n CA, C'' = CW n AB for the first Brocard point W."""
    W = omega or first_brocard_point(T)
    A, B, C = T.vertices
    return (
        _meet(line_through(A, W), line_through(B, C)),
        _meet(line_through(B, W), line_through(C, A)),
        _meet(line_through(C, W), line_through(A, B)),
    )


def center_set(T: Triangle) -> CenterSet:
    O = circumcenter(T)
    K = symmedian_point(T)
    cot, tan = brocard_angle(T)
    T1 = first_brocard_triangle(T)
    tarry = tarry_point(T, T1)
    steiner = steiner_point(T, T1)
    return CenterSet(
        O=O,
        K=K,
        cot_omega=cot,
        tan_omega=tan,
        omega1=first_brocard_point(T),
        omega2=second_brocard_point(T),
        omega3=third_brocard_point(T, T1),
        brocard_triangle=T1,
        brocard_circle=Circle(midpoint(O, K), squared_distance(O, K) / 4),
        tarry=tarry,
        steiner=steiner,
    )
