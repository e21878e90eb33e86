"""Orthology and homology of triangle pairs, and exact checks of the Brocard claims."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Literal, Union

from . import centers as ctr
from .geom import (
    ConcurrencyResult,
    ConcurrentAt,
    DegenerateInput,
    GeometryError,
    Point,
    Triangle,
    angle_pair,
    dot as dot_product,
    circumcircle,
    collinear,
    concurrent,
    concyclic,
    line_through,
    midpoint,
    perpendicular_through,
    signed_ratio,
    squared_distance,
)

Pairing = tuple[int, int, int]

# vertex i of the first triangle -> side (orthology) or vertex (homology) p[i]
# of the second, in the order the six possibilities are usually listed
PAIRINGS: tuple[Pairing, ...] = (
    (0, 1, 2),
    (0, 2, 1),
    (1, 0, 2),
    (2, 0, 1),
    (2, 1, 0),
    (1, 2, 0),
)
IDENTITY: Pairing = PAIRINGS[0]

CLAIM_IDS = ("L1", "L2", "L3", "L4", "L5", "L6", "T1", "T2", "T3", "T4", "R4", "BCIR")
ClaimId = Literal["L1", "L2", "L3", "L4", "L5", "L6", "T1", "T2", "T3", "T4", "R4", "BCIR"]
Witness = Union[Point, Fraction]


def inverse(p: Pairing) -> Pairing:
    inv = [0, 0, 0]
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


def _is_pairing(p) -> bool:
    return sorted(p) == [0, 1, 2]


def orthology_check(T1: Triangle, T2: Triangle, p: Pairing = IDENTITY) -> ConcurrencyResult:
    """Concurrency of the perpendiculars from the vertices of T1 to the assigned sides of T2."""
    if not _is_pairing(p):
        raise ValueError(f"not a permutation of 0, 1, 2: {p}")
    lines = [perpendicular_through(V, T2.side(p[i])) for i, V in enumerate(T1.vertices)]
    return concurrent(*lines)


def homology_check(T1: Triangle, T2: Triangle, p: Pairing = IDENTITY) -> ConcurrencyResult:
    """Concurrency of the lines joining each vertex of T1 to its assigned vertex of T2."""
    if not _is_pairing(p):
        raise ValueError(f"not a permutation of 0, 1, 2: {p}")
    pairs = [(V, T2.vertices[p[i]]) for i, V in enumerate(T1.vertices)]
    if any(V == W for V, W in pairs):
        return DegenerateInput("a vertex coincides with its partner")
    return concurrent(*(line_through(V, W) for V, W in pairs))


@dataclass(frozen=True)
class RankProfile:
    orthology: tuple[ConcurrencyResult, ...]
    homology: tuple[ConcurrencyResult, ...]
    pairings: tuple[Pairing, ...] = PAIRINGS

    @property
    def ortho_rank(self) -> int:
        return sum(isinstance(r, ConcurrentAt) for r in self.orthology)

    @property
    def homo_rank(self) -> int:
        return sum(isinstance(r, ConcurrentAt) for r in self.homology)


def rank_profile(T1: Triangle, T2: Triangle) -> RankProfile:
    return RankProfile(
        orthology=tuple(orthology_check(T1, T2, p) for p in PAIRINGS),
        homology=tuple(homology_check(T1, T2, p) for p in PAIRINGS),
    )


class FootAtVertex(GeometryError):
    pass


class NotOnSideLine(GeometryError):
    pass


def ceva_product(T: Triangle, X: Point, Y: Point, Z: Point) -> Fraction:
    """(BX/XC) (CY/YA) (AZ/ZB) for feet X on BC, Y on CA, Z on AB, as signed ratios."""
    A, B, C = T.vertices
    product = Fraction(1)
    for P, Q, F in ((B, C, X), (C, A, Y), (A, B, Z)):
        if F in (P, Q):
            raise FootAtVertex(f"{F} is a vertex")
        if not collinear(P, Q, F):
            raise NotOnSideLine(f"{F} is not on line {P}{Q}")
        product *= signed_ratio(P, Q, F)
    return product


@dataclass(frozen=True)
class ClaimReport:
    claim_id: str
    passed: bool
    witnesses: dict[str, Witness] = field(default_factory=dict)
    detail: str = ""


class _Check:
    """Collects named exact equalities; the claim passes iff all of them hold."""

    def __init__(self) -> None:
        self.failures: list[str] = []
        self.witnesses: dict[str, Witness] = {}

    def __call__(self, ok: bool, what: str) -> None:
        if not ok:
            self.failures.append(what)

    def concurrent_at(self, result: ConcurrencyResult, what: str) -> Point | None:
        if isinstance(result, ConcurrentAt):
            return result.point
        self.failures.append(f"{what}: {result}")
        return None

    def report(self, claim_id: str, summary: str) -> ClaimReport:
        detail = summary if not self.failures else "failed: " + "; ".join(self.failures)
        return ClaimReport(claim_id, not self.failures, dict(self.witnesses), detail)


def _foot_on(T: Triangle, i: int, through: Point) -> Point:
    """Where the cevian from vertex i through ``through`` meets the opposite side."""
    return ctr._meet(line_through(T.vertices[i], through), T.side(i))


def _claim_l1(T: Triangle, cs: ctr.CenterSet, check: _Check) -> str:
    a2, b2, c2 = T.squared_sides()
    A2, B2, C2 = ctr.brocard_cevian_feet(T, cs.omega1)
    rA = signed_ratio(T.B, T.C, A2)
    rB = signed_ratio(T.C, T.A, B2)
    rC = signed_ratio(T.A, T.B, C2)
    check.witnesses.update({"A''": A2, "B''": B2, "C''": C2, "BA''/A''C": rA, "CB''/B''A": rB, "AC''/C''B": rC})
    check(rA == c2 / a2, "BA''/A''C = c^2/a^2")
    check(rB == a2 / b2, "CB''/B''A = a^2/b^2")
    check(rC == b2 / c2, "AC''/C''B = b^2/c^2")
    return "Brocard cevian feet split the sides in squared-side ratios"


def _claim_l2(T: Triangle, cs: ctr.CenterSet, check: _Check) -> str:
    A, B, C = T.vertices
    _, B2, _ = ctr.brocard_cevian_feet(T, cs.omega1)
    median_foot = midpoint(B, C)
    _, _, sym_foot = ctr.symmedian_feet(T)
    product = ceva_product(T, median_foot, B2, sym_foot)
    check.witnesses.update({"A'": median_foot, "B''": B2, "C2": sym_foot, "ceva_product": product})
    check(product == 1, "Ceva product = 1")
    check(line_through(C, sym_foot).contains(cs.K), "symmedian foot lies on CK")
    P = check.concurrent_at(
        concurrent(line_through(B, cs.omega1), line_through(C, cs.K), line_through(A, median_foot)),
        "BW, CK and median from A",
    )
    if P is not None:
        check.witnesses["concurrency"] = P
    return "Brocard cevian from B, symmedian from C and median from A concur"


def _claim_l3(T: Triangle, cs: ctr.CenterSet, check: _Check) -> str:
    cots = ctr.vertex_cotangents(T)
    check.witnesses.update({"cot_omega": cs.cot_omega, "cot_A": cots[0], "cot_B": cots[1], "cot_C": cots[2]})
    check(cs.cot_omega == sum(cots), "cot w = cot A + cot B + cot C")
    # the cotangent is also the one the Brocard point actually subtends
    dot, crs = angle_pair(T.A, T.B, cs.omega1)
    check(dot * (1 if T.S > 0 else -1) == cs.cot_omega * crs, "angle at the Brocard point has cotangent cot w")
    return "cotangent identity for the Brocard angle"


def _claim_l4(T: Triangle, cs: ctr.CenterSet, check: _Check) -> str:
    sides = T.squared_sides()
    total = sum(sides)
    S2 = T.area * T.area
    check.witnesses["tan_omega"] = cs.tan_omega
    check(cs.tan_omega == 4 * T.area / total, "tan w = 4S/(a^2+b^2+c^2)")
    for i, name in enumerate(("K1", "K2", "K3")):
        foot = ctr.foot_of_perpendicular(cs.K, T.side(i))
        d2 = squared_distance(cs.K, foot)
        check.witnesses[name] = foot
        check.witnesses[f"K{name}^2"] = d2
        # KKi / side = 2S / (a^2+b^2+c^2), squared to stay rational
        check(d2 * total * total == 4 * S2 * sides[i], f"{name}: KK^2 (a^2+b^2+c^2)^2 = 4S^2 side^2")
        check(4 * d2 == cs.tan_omega * cs.tan_omega * sides[i], f"{name}: KK/side = tan(w)/2")
    return "symmedian pedal distances are proportional to the sides"


def _claim_l5(T: Triangle, cs: ctr.CenterSet, check: _Check) -> str:
    T1 = cs.brocard_triangle
    sym_feet = ctr.symmedian_feet(T)
    for i, (V, V1) in enumerate(zip(T.vertices, T1.vertices)):
        foot = _foot_on(T, i, V1)
        P, Q = T.vertices[(i + 1) % 3], T.vertices[(i + 2) % 3]
        label = "ABC"[i]
        check.witnesses[f"{label}-isotomic-foot"] = foot
        check(foot + sym_feet[i] == P + Q, f"cevian {label}{label}1 is isotomic to the symmedian")
    notes = []
    for p, name in (((2, 0, 1), "AC1,BA1,CB1"), ((1, 2, 0), "AB1,BC1,CA1")):
        P = check.concurrent_at(homology_check(T, T1, p), name)
        if P is None:
            continue
        check.witnesses[name] = P
        if P == cs.omega1:
            notes.append(f"{name} meet at the first Brocard point")
        elif P == cs.omega2:
            notes.append(f"{name} meet at the second Brocard point")
        else:
            check(False, f"{name} perspector is not a Brocard point")
    P = check.concurrent_at(homology_check(T, T1, IDENTITY), "AA1,BB1,CC1")
    if P is not None:
        check.witnesses["AA1,BB1,CC1"] = P
        check(P == cs.omega3, "identity perspector is the third Brocard point")
    return "isotomic cevians; " + "; ".join(notes)


def _claim_l6(T: Triangle, cs: ctr.CenterSet, check: _Check) -> str:
    a2, b2, c2 = T.squared_sides()
    p2, q2, r2 = cs.brocard_triangle.squared_sides()
    ratio = p2 / a2
    check.witnesses["similarity_ratio_squared"] = ratio
    check(ratio == q2 / b2 == r2 / c2, "squared side ratios agree")
    # (K - V1).(O - V1) = 0 also covers V1 = K, which happens for isosceles triangles
    for i, V1 in enumerate(cs.brocard_triangle.vertices):
        check(dot_product(cs.K - V1, cs.O - V1) == 0, f"angle K{'ABC'[i]}1O is right")
    return "first Brocard triangle is similar to the triangle"


def _claim_t1(T: Triangle, cs: ctr.CenterSet, check: _Check) -> str:
    T1 = cs.brocard_triangle
    P = check.concurrent_at(orthology_check(T1, T, IDENTITY), "perpendiculars from A1, B1, C1")
    if P is not None:
        check.witnesses["orthology_center"] = P
        check(P == cs.O, "orthology center is the circumcenter")
    Q = check.concurrent_at(homology_check(T, T1, IDENTITY), "AA1, BB1, CC1")
    if Q is not None:
        check.witnesses["perspector"] = Q
    return "triangle and first Brocard triangle are ortho-homological"


def _claim_t2(T: Triangle, cs: ctr.CenterSet, check: _Check) -> str:
    P = check.concurrent_at(orthology_check(T, cs.brocard_triangle, IDENTITY), "Tarry perpendiculars")
    if P is not None:
        check.witnesses["T"] = P
        check(P == cs.tarry, "orthology center is the Tarry point")
        check(circumcircle(T).contains(P), "Tarry point on the circumcircle")
    return "Tarry point is an orthology center on the circumcircle"


def _claim_t3(T: Triangle, cs: ctr.CenterSet, check: _Check) -> str:
    P = check.concurrent_at(concurrent(*ctr.steiner_lines(T, cs.brocard_triangle)), "Steiner parallels")
    if P is not None:
        check.witnesses["S"] = P
        check(circumcircle(T).contains(P), "Steiner point on the circumcircle")
    return "parallels to the Brocard triangle sides meet on the circumcircle"


def _claim_r4(T: Triangle, cs: ctr.CenterSet, check: _Check) -> str:
    check.witnesses.update({"T": cs.tarry, "S": cs.steiner, "O": cs.O})
    check(midpoint(cs.tarry, cs.steiner) == cs.O, "midpoint(T, S) = O")
    return "Tarry and Steiner points are diametrically opposite"


def _claim_t4(T: Triangle, cs: ctr.CenterSet, check: _Check) -> str:
    check.witnesses.update({"T": cs.tarry, "O": cs.O, "Omega''": cs.omega3, "S": cs.steiner})
    check(collinear(cs.tarry, cs.O, cs.omega3), "T, O, W'' collinear")
    check(collinear(cs.tarry, cs.O, cs.steiner), "T, O, S collinear")
    return "T, O, W'' and S lie on one line"


def _claim_bcir(T: Triangle, cs: ctr.CenterSet, check: _Check) -> str:
    A1, B1, C1 = cs.brocard_triangle.vertices
    circle = cs.brocard_circle
    check.witnesses.update({"center": circle.center, "r2": circle.r2})
    check(concyclic(A1, B1, C1, cs.O), "A1, B1, C1, O concyclic")
    for name, P in (("A1", A1), ("B1", B1), ("C1", C1), ("O", cs.O), ("K", cs.K)):
        check(circle.contains(P), f"{name} on the circle with diameter OK")
    return "first Brocard triangle is inscribed in the Brocard circle"


_CLAIMS: dict[str, Callable[[Triangle, ctr.CenterSet, _Check], str]] = {
    "L1": _claim_l1,
    "L2": _claim_l2,
    "L3": _claim_l3,
    "L4": _claim_l4,
    "L5": _claim_l5,
    "L6": _claim_l6,
    "T1": _claim_t1,
    "T2": _claim_t2,
    "T3": _claim_t3,
    "T4": _claim_t4,
    "R4": _claim_r4,
    "BCIR": _claim_bcir,
}


def verify_claim(T: Triangle, claim: str, cs: ctr.CenterSet | None = None) -> ClaimReport:
    if claim not in _CLAIMS:
        raise KeyError(f"unknown claim {claim!r}; expected one of {', '.join(CLAIM_IDS)}")
    cs = cs or ctr.center_set(T)
    check = _Check()
    summary = _CLAIMS[claim](T, cs, check)
    return check.report(claim, summary)


def verify_all(T: Triangle) -> list[ClaimReport]:
    cs = ctr.center_set(T)
    return [verify_claim(T, claim, cs) for claim in CLAIM_IDS]
