import json
import math
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from brocard import centers as ctr
from brocard.geom import ConcurrentAt, ConcurrentAtInfinity, DegenerateInput, NotConcurrent, Point, Triangle
from brocard.relations import rank_profile, verify_all
from brocard.report import (
    SCHEMA,
    DegenerateSpec,
    IrrationalPlacement,
    MalformedJson,
    ReportDocument,
    SpecError,
    TriangleSpec,
    outcome_from_json,
    outcome_to_json,
    parse_scalar,
    parse_triangle_spec,
)
from brocard.search import SearchConfig, rank_scan, snap_and_certify, to_float_triangle

from strategies import triangles

P = Point
V345 = '{"vertices": [[0, 0], [4, 0], [0, 3]]}'


def test_parse_vertices():
    spec = parse_triangle_spec(V345)
    assert spec.triangle() == Triangle.from_coords((0, 0), (4, 0), (0, 3))
    spec = parse_triangle_spec('{"vertices": [["1/2", "-3"], ["0.25", 0], [0, "7"]]}')
    assert spec.triangle().A == P(F(1, 2), -3)
    assert spec.triangle().B == P(F(1, 4), 0)


def test_parse_sides_squared():
    T = parse_triangle_spec('{"sides_squared": [25, 9, 16]}').triangle()
    assert T == Triangle.from_coords((F(16, 5), F(12, 5)), (0, 0), (5, 0))
    assert T.squared_sides() == (25, 9, 16)


@pytest.mark.parametrize(
    "text, error",
    [
        ("not json", MalformedJson),
        ("[1, 2, 3]", MalformedJson),
        ("{}", MalformedJson),
        ('{"vertices": [[0, 0], [1, 0]]}', MalformedJson),
        ('{"vertices": [[0, 0], [1, 0], [0, 1]], "sides_squared": [1, 1, 1]}', MalformedJson),
        ('{"vertices": [[0, 0], [1, 0], [0, 1.5]]}', SpecError),
        ('{"vertices": [[0, 0], [1, 0], [0, "1/0"]]}', SpecError),
        ('{"vertices": [[0, 0], [1, 0], [0, "1e999999999"]]}', SpecError),
        ('{"vertices": [[0, 0], [1, 1], [2, 2]]}', DegenerateSpec),
        ('{"vertices": [[0, 0], [0, 0], [2, 2]]}', DegenerateSpec),
        ('{"sides_squared": [1, 4, 9]}', DegenerateSpec),
        ('{"sides_squared": [0, 4, 9]}', DegenerateSpec),
        ('{"sides_squared": [2, 1, 1]}', IrrationalPlacement),
        ('{"sides_squared": [4, 4, 4]}', IrrationalPlacement),
    ],
)
def test_parse_errors(text, error):
    with pytest.raises(error):
        parse_triangle_spec(text)


def test_parse_scalar():
    assert parse_scalar("-7/21", "x") == F(-1, 3)
    assert parse_scalar(5, "x") == 5
    for bad in (True, None, 1.5, "1/2/3", "", "1 /2", [1]):
        with pytest.raises(SpecError):
            parse_scalar(bad, "x")


json_values = st.recursive(
    st.none() | st.booleans() | st.integers() | st.floats(allow_nan=False) | st.text(max_size=8),
    lambda kids: st.lists(kids, max_size=4) | st.dictionaries(st.sampled_from(["vertices", "sides_squared", "x"]), kids, max_size=3),
    max_leaves=20,
)


def _accepts_or_spec_error(data):
    try:
        spec = parse_triangle_spec(data)
    except SpecError:
        return
    assert isinstance(spec, TriangleSpec)
    spec.triangle()


@settings(max_examples=300)
@given(st.binary(max_size=64))
def test_fuzz_bytes(data):
    _accepts_or_spec_error(data)


@settings(max_examples=300)
@given(st.text(max_size=64))
def test_fuzz_text(data):
    _accepts_or_spec_error(data)


@settings(max_examples=300)
@given(json_values)
def test_fuzz_json_documents(doc):
    _accepts_or_spec_error(json.dumps(doc))


scalars = st.integers(-20, 20) | st.from_regex(r"-?[0-9]{1,3}/[0-9]{1,3}", fullmatch=True)


@settings(max_examples=300)
@given(st.lists(st.lists(scalars, min_size=2, max_size=2), min_size=3, max_size=3))
def test_fuzz_well_shaped_vertices(pts):
    _accepts_or_spec_error(json.dumps({"vertices": pts}))


@settings(max_examples=300)
@given(st.lists(scalars, min_size=3, max_size=3))
def test_fuzz_sides_squared(sides):
    _accepts_or_spec_error(json.dumps({"sides_squared": sides}))


@given(triangles())
def test_spec_round_trip(T):
    spec = TriangleSpec(vertices=T.vertices)
    assert parse_triangle_spec(json.dumps(spec.to_json())).triangle() == T


@pytest.mark.parametrize(
    "outcome",
    [ConcurrentAt(P(F(1, 3), -2)), ConcurrentAtInfinity(P(1, 1)), NotConcurrent(), DegenerateInput("two lines coincide")],
)
def test_outcome_round_trip(outcome):
    assert outcome_from_json(json.loads(json.dumps(outcome_to_json(outcome)))) == outcome


def test_document_round_trip_centers_and_claims(t345):
    doc = ReportDocument("verify", input={"vertices": [["0", "0"], ["4", "0"], ["0", "3"]]},
                         centers=ctr.center_set(t345), claims=tuple(verify_all(t345)))
    text = doc.dumps()
    assert json.loads(text)["schema"] == SCHEMA
    assert ReportDocument.loads(text) == doc
    assert ReportDocument.loads(doc.dumps(pretty=True)) == doc


def test_document_round_trip_profiles_and_findings(t345):
    T1 = ctr.first_brocard_triangle(t345)
    cfg = SearchConfig(seed=3, samples=30)
    same = snap_and_certify((to_float_triangle(t345), to_float_triangle(t345)), 10)
    assert math.isinf(same.float_residuals[6])
    findings = (*rank_scan(cfg, inject=[(t345, T1)]), same)
    doc = ReportDocument("search", config=cfg, seeds=(3,), findings=findings,
                         rank_profiles=(rank_profile(t345, T1),))
    assert ReportDocument.loads(doc.dumps()) == doc


def test_document_rejects_unknown_schema():
    with pytest.raises(ValueError):
        ReportDocument.from_json({"schema": "other/9"})
