from __future__ import annotations

from fractions import Fraction

from hypothesis import assume, strategies as st

from brocard.geom import Point, Triangle, signed_area


def rationals(bound: int = 10, max_den: int = 8):
    return st.builds(
        lambda d, n: Fraction(n, d),
        st.integers(1, max_den),
        st.integers(-bound * max_den, bound * max_den),
    )


def points(bound: int = 10, max_den: int = 8):
    return st.builds(Point, rationals(bound, max_den), rationals(bound, max_den))


@st.composite
def triangles(draw, bound: int = 10, max_den: int = 8) -> Triangle:
    A, B, C = (draw(points(bound, max_den)) for _ in range(3))
    assume(signed_area(A, B, C) != 0)
    return Triangle(A, B, C)
