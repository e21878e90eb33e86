"""Randomized search for triangle pairs of high orthology/homology rank.

The search runs in two phases.  Cheap floating-point residuals (normalized
3x3 concurrency determinants) screen and refine candidates; anything worth
reporting is then snapped to rationals and re-checked with the exact
kernel.  A finding's ranks always come from the exact profile.

Vertices move freely during refinement (no congruence or similarity
constraint), so a refined pair need not be a repositioned copy of its
starting pair.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Literal, Sequence

from .geom import (
    ConcurrentAt,
    GeometryError,
    Point,
    Triangle,
    intersect_lines,
    line_through,
    perpendicular_through,
)
from .relations import IDENTITY, PAIRINGS, Pairing, RankProfile, orthology_check, rank_profile

MASK64 = (1 << 64) - 1
MAX_RETRIES = 1000

Relation = Literal["ortho", "homo"]
FloatPoint = tuple[float, float]
FloatTriangle = tuple[FloatPoint, FloatPoint, FloatPoint]
FloatPair = tuple[FloatTriangle, FloatTriangle]

# order of the 12 residuals: six orthology pairings, then six homology pairings
RESIDUAL_KEYS: tuple[tuple[Relation, Pairing], ...] = tuple(
    (rel, p) for rel in ("ortho", "homo") for p in PAIRINGS
)


class ExhaustedRetries(RuntimeError):
    pass


class DegenerateAfterSnap(GeometryError):
    pass


class SplitMix64:
    """splitmix64 generator; ``next()`` returns an unsigned 64-bit integer."""

    def __init__(self, seed: int) -> None:
        self.state = seed & MASK64

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)


@dataclass(frozen=True)
class SearchConfig:
    seed: int = 0
    samples: int = 100
    coordinate_bound: int = 10
    denominator_bound: int = 8
    residual_threshold: float = 1e-7
    refine_steps: int = 0
    snap_denominator: int = 1000

    def __post_init__(self) -> None:
        if self.samples < 0 or self.refine_steps < 0:
            raise ValueError("samples and refine_steps must be non-negative")
        if self.coordinate_bound < 1 or self.denominator_bound < 1 or self.snap_denominator < 1:
            raise ValueError("bounds must be at least 1")
        if not self.residual_threshold > 0:
            raise ValueError("residual_threshold must be positive")


def random_scalar(rng: SplitMix64, cfg: SearchConfig) -> Fraction:
    """Draw d in [1, denominator_bound], then a numerator in [-bound*d, bound*d]."""
    d = 1 + rng.next() % cfg.denominator_bound
    span = cfg.coordinate_bound * d
    n = rng.next() % (2 * span + 1) - span
    return Fraction(n, d)


def random_point(rng: SplitMix64, cfg: SearchConfig) -> Point:
    x = random_scalar(rng, cfg)
    return Point(x, random_scalar(rng, cfg))


def random_rational_triangle(rng: SplitMix64, cfg: SearchConfig) -> Triangle:
    for _ in range(MAX_RETRIES):
        A, B, C = (random_point(rng, cfg) for _ in range(3))
        try:
            return Triangle(A, B, C)
        except GeometryError:
            continue
    raise ExhaustedRetries(f"{MAX_RETRIES} degenerate draws in a row")


def orthological_pair_generator(rng: SplitMix64, cfg: SearchConfig) -> tuple[Triangle, Triangle, Point]:
    """A random T1, a random center P and a T2 whose i-th side is perpendicular to V_i P.

    The perpendicular from each vertex of T1 to its side of T2 is then the
    line V_i P, so the identity orthology holds at P by construction.
    """
    for _ in range(MAX_RETRIES):
        T1 = random_rational_triangle(rng, cfg)
        P = random_point(rng, cfg)
        anchors = [random_point(rng, cfg) for _ in range(3)]
        try:
            sides = [perpendicular_through(Q, line_through(V, P)) for V, Q in zip(T1.vertices, anchors)]
            verts = []
            for j, k in ((1, 2), (2, 0), (0, 1)):
                X = _meet_or_none(sides[j], sides[k])
                if X is None:
                    raise GeometryError("parallel sides")
                verts.append(X)
            T2 = Triangle(*verts)
        except GeometryError:
            continue
        if orthology_check(T1, T2, IDENTITY) == ConcurrentAt(P):
            return T1, T2, P
    raise ExhaustedRetries("could not build an orthological pair")


def _meet_or_none(L1, L2):
    X = intersect_lines(L1, L2)
    return X if isinstance(X, Point) else None


# --- floating-point residuals -------------------------------------------------


def to_float_triangle(T: Triangle) -> FloatTriangle:
    return tuple(V.to_float() for V in T.vertices)  # type: ignore[return-value]


def _fline(P: FloatPoint, Q: FloatPoint) -> tuple[float, float, float]:
    return P[1] - Q[1], Q[0] - P[0], P[0] * Q[1] - Q[0] * P[1]


def _fperp(V: FloatPoint, line: tuple[float, float, float]) -> tuple[float, float, float]:
    l, m, _ = line
    return m, -l, -(m * V[0] - l * V[1])


def _relation_lines(T1: FloatTriangle, T2: FloatTriangle, p: Pairing, relation: Relation):
    if relation == "ortho":
        sides = [_fline(T2[(i + 1) % 3], T2[(i + 2) % 3]) for i in range(3)]
        return [_fperp(V, sides[p[i]]) for i, V in enumerate(T1)]
    return [_fline(V, T2[p[i]]) for i, V in enumerate(T1)]


def _scale(T1: FloatTriangle, T2: FloatTriangle) -> float:
    return max(1.0, max(abs(c) for V in (*T1, *T2) for c in V))


def _normalized(lines, scale: float):
    out = []
    for l, m, n in lines:
        normal = math.hypot(l, m)
        if not normal > 1e-12 * scale * scale or not math.isfinite(normal):
            return None
        norm = math.sqrt(l * l + m * m + n * n)
        out.append((l / norm, m / norm, n / norm))
    return out


def residual(T1: FloatTriangle, T2: FloatTriangle, p: Pairing, relation: Relation) -> float:
    """|det| of the three lines, each scaled to a unit coefficient vector; 0 means concurrent."""
    rows = _normalized(_relation_lines(T1, T2, p, relation), _scale(T1, T2))
    if rows is None:
        return math.inf
    (a, b, c), (d, e, f), (g, h, i) = rows
    return abs(a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g))


def _parallel_pencil(T1: FloatTriangle, T2: FloatTriangle, p: Pairing, relation: Relation, tol: float) -> bool:
    rows = _normalized(_relation_lines(T1, T2, p, relation), _scale(T1, T2))
    if rows is None:
        return False
    units = []
    for l, m, _ in rows:
        h = math.hypot(l, m)
        units.append((l / h, m / h))
    return all(abs(u[0] * v[1] - u[1] * v[0]) < tol for u, v in ((units[0], units[1]), (units[0], units[2])))


def float_residuals(pair: FloatPair) -> list[float]:
    T1, T2 = pair
    return [residual(T1, T2, p, rel) for rel, p in RESIDUAL_KEYS]


def claimed_keys(pair: FloatPair, threshold: float) -> list[tuple[Relation, Pairing]]:
    """Pairings whose residual is near zero at an affine point (parallel pencils excluded)."""
    T1, T2 = pair
    return [
        (rel, p)
        for (rel, p), r in zip(RESIDUAL_KEYS, float_residuals(pair))
        if r < threshold and not _parallel_pencil(T1, T2, p, rel, math.sqrt(threshold))
    ]


# --- exact certification ----------------------------------------------------------


@dataclass(frozen=True)
class PairFinding:
    T1: Triangle
    T2: Triangle
    profile: RankProfile
    certified: bool
    float_residuals: tuple[float, ...]
    claimed: tuple[tuple[Relation, Pairing], ...] = ()
    index: int = 0

    @property
    def rank(self) -> int:
        return self.profile.ortho_rank + self.profile.homo_rank


def _outcome(profile: RankProfile, relation: Relation, p: Pairing):
    i = PAIRINGS.index(p)
    return profile.orthology[i] if relation == "ortho" else profile.homology[i]


def certify(T1: Triangle, T2: Triangle, claimed, residuals, index: int = 0) -> PairFinding:
    profile = rank_profile(T1, T2)
    ok = all(isinstance(_outcome(profile, rel, p), ConcurrentAt) for rel, p in claimed)
    return PairFinding(T1, T2, profile, ok, tuple(residuals), tuple(claimed), index)


def snap_and_certify(
    pair: FloatPair, max_denominator: int, threshold: float = 1e-7, index: int = 0
) -> PairFinding:
    """Round every coordinate to its best rational approximation, then certify exactly."""
    if max_denominator < 1:
        raise ValueError("max_denominator must be at least 1")
    try:
        T1, T2 = (
            Triangle(*(Point(*(Fraction(c).limit_denominator(max_denominator) for c in V)) for V in tri))
            for tri in pair
        )
    except GeometryError as exc:
        raise DegenerateAfterSnap(str(exc)) from exc
    return certify(T1, T2, claimed_keys(pair, threshold), float_residuals(pair), index)


# --- local refinement -------------------------------------------------------------


def _objective(pair: FloatPair, target) -> float:
    T1, T2 = pair
    return sum(residual(T1, T2, p, rel) for p, rel in target)


def _flatten(pair: FloatPair) -> list[float]:
    return [c for tri in pair for V in tri for c in V]


def _unflatten(xs: Sequence[float]) -> FloatPair:
    pts = [(xs[k], xs[k + 1]) for k in range(0, 12, 2)]
    return (tuple(pts[:3]), tuple(pts[3:]))  # type: ignore[return-value]


def refine_candidate(pair: FloatPair, target: Iterable[tuple[Pairing, Relation]], steps: int) -> FloatPair:
    """Coordinate descent on the summed residuals of ``target``.

    Each step tries moving every coordinate by +/-h and keeps the first move
    that lowers the objective; a step with no improvement halves h.  The best
    objective therefore never increases.
    """
    target = sorted(set(target))
    xs = _flatten(pair)
    best = _objective(pair, target)
    h = 0.05 * max(max(xs) - min(xs), 1e-3)
    for _ in range(steps):
        improved = False
        for k in range(len(xs)):
            for delta in (h, -h):
                trial = list(xs)
                trial[k] += delta
                value = _objective(_unflatten(trial), target)
                if value < best:
                    xs, best, improved = trial, value, True
                    break
        if not improved:
            h /= 2
            if h < 1e-15:
                break
    return _unflatten(xs)


# --- scan -------------------------------------------------------------------------


def _sort_key(f: PairFinding):
    return (not f.certified, -f.rank, -max(f.profile.ortho_rank, f.profile.homo_rank), f.index)


def rank_scan(cfg: SearchConfig, inject: Iterable[tuple[Triangle, Triangle]] = ()) -> list[PairFinding]:
    """Sample random pairs and report the ones with several near-zero residuals.

    Injected pairs are examined first with negative indices.  A pair is kept
    when its near-zero count reaches 2 or beats every earlier pair.  With
    ``refine_steps`` set, pairs that fall short are pushed toward their two
    smallest residuals, snapped to ``snap_denominator`` and kept only if the
    exact profile certifies every near-zero residual.
    """
    rng = SplitMix64(cfg.seed)
    candidates: list[tuple[int, Triangle, Triangle]] = [
        (-1 - k, T1, T2) for k, (T1, T2) in enumerate(inject)
    ]
    for index in range(cfg.samples):
        candidates.append((index, random_rational_triangle(rng, cfg), random_rational_triangle(rng, cfg)))

    findings: list[PairFinding] = []
    best = 0
    for index, T1, T2 in candidates:
        pair = (to_float_triangle(T1), to_float_triangle(T2))
        claimed = claimed_keys(pair, cfg.residual_threshold)
        if len(claimed) < 2 and cfg.refine_steps > 0:
            finding = _refined(pair, cfg, index)
            # a refined pair only counts once the exact profile backs it
            if finding is not None and finding.certified and len(finding.claimed) > len(claimed):
                if len(finding.claimed) >= 2 or len(finding.claimed) > best:
                    best = max(best, len(finding.claimed))
                    findings.append(finding)
                continue
        if len(claimed) >= 2 or len(claimed) > best:
            best = max(best, len(claimed))
            findings.append(certify(T1, T2, claimed, float_residuals(pair), index))
    findings.sort(key=_sort_key)
    return findings


def _refined(pair: FloatPair, cfg: SearchConfig, index: int) -> PairFinding | None:
    residuals = float_residuals(pair)
    order = sorted(range(len(residuals)), key=lambda k: (residuals[k], k))[:2]
    target = [(RESIDUAL_KEYS[k][1], RESIDUAL_KEYS[k][0]) for k in order]
    refined = refine_candidate(pair, target, cfg.refine_steps)
    try:
        return snap_and_certify(refined, cfg.snap_denominator, cfg.residual_threshold, index)
    except GeometryError:
        return None
