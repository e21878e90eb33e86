"""JSON encoding of triangle specs, center sets, claim reports and findings.

Rationals always travel as strings (``"p/q"`` or ``"p"``); JSON numbers are
used only for counts, indices and float residuals.
"""

from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from . import __version__
from .centers import CenterSet
from .geom import (
    Circle,
    ConcurrencyResult,
    ConcurrentAt,
    ConcurrentAtInfinity,
    DegenerateInput,
    DegenerateTriangle,
    NotConcurrent,
    Point,
    Triangle,
    format_scalar,
)
from .relations import ClaimReport, RankProfile
from .search import PairFinding, SearchConfig

SCHEMA = "brocard-report/1"

# exponents are refused: "1e999999999" would build a gigantic integer
_RATIONAL = re.compile(r"[+-]?(\d+(/\d+)?|\d*\.\d+)")


class SpecError(ValueError):
    """Unusable triangle spec; ``field`` names the offending part of the input."""

    def __init__(self, field: str, message: str) -> None:
        super().__init__(f"{field}: {message}")
        self.field = field


class MalformedJson(SpecError):
    pass


class DegenerateSpec(SpecError):
    pass


class IrrationalPlacement(SpecError):
    pass


# --- triangle specs ------------------------------------------------------------


def parse_scalar(value: Any, where: str) -> Fraction:
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise MalformedJson(where, f"expected a rational string or integer, got {type(value).__name__}")
    if isinstance(value, str):
        value = value.strip()
        if not _RATIONAL.fullmatch(value):
            raise MalformedJson(where, f"not a rational number: {value!r}")
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError) as exc:
        raise MalformedJson(where, f"not a rational number: {value!r}") from exc


def _rational_sqrt(q: Fraction) -> Fraction | None:
    if q < 0:
        return None
    n, d = math.isqrt(q.numerator), math.isqrt(q.denominator)
    if n * n != q.numerator or d * d != q.denominator:
        return None
    return Fraction(n, d)


@dataclass(frozen=True)
class TriangleSpec:
    """Vertices given directly, or squared sides placed with B at the origin and C on the x-axis."""

    vertices: tuple[Point, Point, Point] | None = None
    sides_squared: tuple[Fraction, Fraction, Fraction] | None = None

    def triangle(self) -> Triangle:
        if self.vertices is not None:
            try:
                return Triangle(*self.vertices)
            except DegenerateTriangle as exc:
                raise DegenerateSpec("vertices", str(exc)) from exc
        a2, b2, c2 = self.sides_squared
        if min(a2, b2, c2) <= 0:
            raise DegenerateSpec("sides_squared", "squared sides must be positive")
        a = _rational_sqrt(a2)
        if a is None:
            raise IrrationalPlacement("sides_squared[0]", f"a^2 = {a2} is not the square of a rational")
        x = (a2 + c2 - b2) / (2 * a)
        h2 = c2 - x * x
        if h2 <= 0:
            raise DegenerateSpec("sides_squared", "squared sides violate the strict triangle inequality")
        y = _rational_sqrt(h2)
        if y is None:
            raise IrrationalPlacement("sides_squared", f"apex height^2 = {h2} is not the square of a rational")
        return Triangle(Point(x, y), Point(0, 0), Point(a, 0))

    def to_json(self) -> dict:
        if self.vertices is not None:
            return {"vertices": [point_to_json(P) for P in self.vertices]}
        return {"sides_squared": [format_scalar(s) for s in self.sides_squared]}


def parse_triangle_spec(text: str | bytes) -> TriangleSpec:
    """Parse and validate a JSON triangle spec; raises a SpecError subclass on any bad input."""
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise MalformedJson("document", "not valid UTF-8") from exc
    try:
        doc = json.loads(text)
    except (ValueError, RecursionError) as exc:
        raise MalformedJson("document", f"invalid JSON: {exc}") from exc
    return spec_from_json(doc)


def spec_from_json(doc: Any) -> TriangleSpec:
    if not isinstance(doc, dict):
        raise MalformedJson("document", "expected a JSON object")
    keys = {"vertices", "sides_squared"} & set(doc)
    if len(keys) != 1:
        raise MalformedJson("document", "expected exactly one of 'vertices' or 'sides_squared'")
    if "vertices" in doc:
        raw = doc["vertices"]
        if not isinstance(raw, list) or len(raw) != 3:
            raise MalformedJson("vertices", "expected a list of three points")
        pts = []
        for i, item in enumerate(raw):
            if not isinstance(item, list) or len(item) != 2:
                raise MalformedJson(f"vertices[{i}]", "expected a coordinate pair")
            pts.append(Point(parse_scalar(item[0], f"vertices[{i}][0]"), parse_scalar(item[1], f"vertices[{i}][1]")))
        spec = TriangleSpec(vertices=tuple(pts))
    else:
        raw = doc["sides_squared"]
        if not isinstance(raw, list) or len(raw) != 3:
            raise MalformedJson("sides_squared", "expected a list of three squared lengths")
        spec = TriangleSpec(sides_squared=tuple(parse_scalar(v, f"sides_squared[{i}]") for i, v in enumerate(raw)))
    spec.triangle()
    return spec


# --- value encoders --------------------------------------------------------------


def point_to_json(P: Point) -> list[str]:
    return [format_scalar(P.x), format_scalar(P.y)]


def point_from_json(raw) -> Point:
    return Point(Fraction(raw[0]), Fraction(raw[1]))


def triangle_to_json(T: Triangle) -> list[list[str]]:
    return [point_to_json(V) for V in T.vertices]


def triangle_from_json(raw) -> Triangle:
    return Triangle(*(point_from_json(V) for V in raw))


def outcome_to_json(r: ConcurrencyResult) -> dict:
    if isinstance(r, ConcurrentAt):
        return {"kind": "concurrent", "point": point_to_json(r.point)}
    if isinstance(r, ConcurrentAtInfinity):
        return {"kind": "at_infinity", "direction": point_to_json(r.direction)}
    if isinstance(r, DegenerateInput):
        return {"kind": "degenerate", "reason": r.reason}
    return {"kind": "not_concurrent"}


def outcome_from_json(raw: dict) -> ConcurrencyResult:
    kind = raw["kind"]
    if kind == "concurrent":
        return ConcurrentAt(point_from_json(raw["point"]))
    if kind == "at_infinity":
        return ConcurrentAtInfinity(point_from_json(raw["direction"]))
    if kind == "degenerate":
        return DegenerateInput(raw["reason"])
    if kind == "not_concurrent":
        return NotConcurrent()
    raise ValueError(f"unknown outcome kind {kind!r}")


def centers_to_json(cs: CenterSet) -> dict:
    return {
        "O": point_to_json(cs.O),
        "K": point_to_json(cs.K),
        "cot_omega": format_scalar(cs.cot_omega),
        "tan_omega": format_scalar(cs.tan_omega),
        "omega1": point_to_json(cs.omega1),
        "omega2": point_to_json(cs.omega2),
        "omega3": point_to_json(cs.omega3),
        "brocard_triangle": triangle_to_json(cs.brocard_triangle),
        "brocard_circle": {
            "center": point_to_json(cs.brocard_circle.center),
            "r2": format_scalar(cs.brocard_circle.r2),
        },
        "tarry": point_to_json(cs.tarry),
        "steiner": point_to_json(cs.steiner),
    }


def centers_from_json(raw: dict) -> CenterSet:
    circle = raw["brocard_circle"]
    return CenterSet(
        O=point_from_json(raw["O"]),
        K=point_from_json(raw["K"]),
        cot_omega=Fraction(raw["cot_omega"]),
        tan_omega=Fraction(raw["tan_omega"]),
        omega1=point_from_json(raw["omega1"]),
        omega2=point_from_json(raw["omega2"]),
        omega3=point_from_json(raw["omega3"]),
        brocard_triangle=triangle_from_json(raw["brocard_triangle"]),
        brocard_circle=Circle(point_from_json(circle["center"]), Fraction(circle["r2"])),
        tarry=point_from_json(raw["tarry"]),
        steiner=point_from_json(raw["steiner"]),
    )


def claim_to_json(r: ClaimReport) -> dict:
    witnesses = {
        k: point_to_json(v) if isinstance(v, Point) else format_scalar(v) for k, v in r.witnesses.items()
    }
    return {"claim_id": r.claim_id, "passed": r.passed, "witnesses": witnesses, "detail": r.detail}


def claim_from_json(raw: dict) -> ClaimReport:
    witnesses = {
        k: point_from_json(v) if isinstance(v, list) else Fraction(v) for k, v in raw["witnesses"].items()
    }
    return ClaimReport(raw["claim_id"], raw["passed"], witnesses, raw["detail"])


def profile_to_json(p: RankProfile) -> dict:
    return {
        "pairings": [list(q) for q in p.pairings],
        "orthology": [outcome_to_json(r) for r in p.orthology],
        "homology": [outcome_to_json(r) for r in p.homology],
        "ortho_rank": p.ortho_rank,
        "homo_rank": p.homo_rank,
    }


def profile_from_json(raw: dict) -> RankProfile:
    profile = RankProfile(
        orthology=tuple(outcome_from_json(r) for r in raw["orthology"]),
        homology=tuple(outcome_from_json(r) for r in raw["homology"]),
        pairings=tuple(tuple(q) for q in raw["pairings"]),
    )
    if (profile.ortho_rank, profile.homo_rank) != (raw["ortho_rank"], raw["homo_rank"]):
        raise ValueError("rank fields disagree with the recorded outcomes")
    return profile


def _float_to_json(x: float):
    return x if math.isfinite(x) else ("inf" if x > 0 else "-inf")


def _float_from_json(x) -> float:
    return float(x)


def finding_to_json(f: PairFinding) -> dict:
    return {
        "index": f.index,
        "triangles": [triangle_to_json(f.T1), triangle_to_json(f.T2)],
        "certified": f.certified,
        "claimed": [[rel, list(p)] for rel, p in f.claimed],
        "float_residuals": [_float_to_json(r) for r in f.float_residuals],
        "profile": profile_to_json(f.profile),
    }


def finding_from_json(raw: dict) -> PairFinding:
    T1, T2 = (triangle_from_json(t) for t in raw["triangles"])
    return PairFinding(
        T1=T1,
        T2=T2,
        profile=profile_from_json(raw["profile"]),
        certified=raw["certified"],
        float_residuals=tuple(_float_from_json(r) for r in raw["float_residuals"]),
        claimed=tuple((rel, tuple(p)) for rel, p in raw["claimed"]),
        index=raw["index"],
    )


def config_to_json(cfg: SearchConfig) -> dict:
    return {
        "seed": cfg.seed,
        "samples": cfg.samples,
        "coordinate_bound": cfg.coordinate_bound,
        "denominator_bound": cfg.denominator_bound,
        "residual_threshold": cfg.residual_threshold,
        "refine_steps": cfg.refine_steps,
        "snap_denominator": cfg.snap_denominator,
    }


# --- the document --------------------------------------------------------------


@dataclass(frozen=True)
class ReportDocument:
    command: str
    input: Any = None
    centers: CenterSet | None = None
    claims: tuple[ClaimReport, ...] = ()
    rank_profiles: tuple[RankProfile, ...] = ()
    findings: tuple[PairFinding, ...] = ()
    config: SearchConfig | None = None
    seeds: tuple[int, ...] = ()
    tool_version: str = __version__

    def to_json(self) -> dict:
        return {
            "schema": SCHEMA,
            "tool_version": self.tool_version,
            "command": self.command,
            "input": self.input,
            "seeds": list(self.seeds),
            "config": None if self.config is None else config_to_json(self.config),
            "centers": None if self.centers is None else centers_to_json(self.centers),
            "claims": [claim_to_json(c) for c in self.claims],
            "rank_profiles": [profile_to_json(p) for p in self.rank_profiles],
            "findings": [finding_to_json(f) for f in self.findings],
        }

    def dumps(self, pretty: bool = False) -> str:
        return json.dumps(self.to_json(), indent=2 if pretty else None, ensure_ascii=False)

    @classmethod
    def from_json(cls, raw: dict) -> ReportDocument:
        if raw.get("schema") != SCHEMA:
            raise ValueError(f"unsupported schema {raw.get('schema')!r}")
        return cls(
            command=raw["command"],
            input=raw["input"],
            centers=None if raw["centers"] is None else centers_from_json(raw["centers"]),
            claims=tuple(claim_from_json(c) for c in raw["claims"]),
            rank_profiles=tuple(profile_from_json(p) for p in raw["rank_profiles"]),
            findings=tuple(finding_from_json(f) for f in raw["findings"]),
            config=None if raw["config"] is None else SearchConfig(**raw["config"]),
            seeds=tuple(raw["seeds"]),
            tool_version=raw["tool_version"],
        )

    @classmethod
    def loads(cls, text: str) -> ReportDocument:
        return cls.from_json(json.loads(text))
