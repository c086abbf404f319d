import json
import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from repst import serialization as ser
from repst.combinatorics import enumerate_partitions
from repst.diagrams import ORBIT, DiagramMorphism, all_diagrams, to_orbit_basis
from repst.exact_arith import AlgebraicNumber, Poly, T
from repst.interp import generator_power_report, reproduce_section7
from repst.superlinear import dual_numbers, exterior_one, random_supercommutative_algebra, split_algebra

rationals = st.fractions(max_denominator=50)
polys = st.lists(rationals, max_size=5).map(Poly)


def via_text(obj):
    return json.loads(json.dumps(obj))


@given(rationals)
def test_rational_round_trip(x):
    assert ser.rational_from_json(via_text(ser.rational_to_json(x))) == x


@pytest.mark.parametrize("bad", ["1/0", "abc", True, None, 1.5])
def test_rational_rejects(bad):
    with pytest.raises(ser.SchemaError):
        ser.rational_from_json(bad)


@given(polys)
def test_poly_round_trip(p):
    assert ser.poly_from_json(via_text(ser.poly_to_json(p))) == p


@given(polys)
def test_algnum_round_trip(p):
    a = AlgebraicNumber(Poly([15, -7, 1]), p)
    assert ser.algnum_from_json(via_text(ser.algnum_to_json(a))) == a


@pytest.mark.parametrize("n", range(6))
def test_partition_round_trip(n):
    for lam in enumerate_partitions(n):
        assert ser.partition_from_json(via_text(ser.partition_to_json(lam))) == lam


@pytest.mark.parametrize("bad", [[1, 2], [2, 0], "2,1", [1.0], [True]])
def test_partition_rejects(bad):
    with pytest.raises(ser.SchemaError):
        ser.partition_from_json(bad)


@pytest.mark.parametrize("shape", [(0, 0), (1, 0), (1, 1), (2, 1), (2, 2)])
def test_diagram_round_trip(shape):
    for d in all_diagrams(*shape):
        assert ser.diagram_from_json(via_text(ser.diagram_to_json(d))) == d


@pytest.mark.parametrize("bad", [
    {"top": 1, "bottom": 1, "blocks": [["t1"]]},
    {"top": 1, "bottom": 1, "blocks": [["t1", "b1"], ["b1"]]},
    {"top": 1, "bottom": 1, "blocks": [["t1", "x3"], ["b1"]]},
    {"top": -1, "bottom": 0, "blocks": []},
    {"top": 1, "blocks": [["t1"]]},
])
def test_diagram_rejects(bad):
    with pytest.raises(ser.SchemaError):
        ser.diagram_from_json(bad)


@given(st.data())
def test_morphism_round_trip(data):
    ds = data.draw(st.lists(st.sampled_from(all_diagrams(2, 1)), max_size=4, unique=True))
    f = DiagramMorphism(2, 1, {d: data.draw(polys) for d in ds})
    for g in (f, to_orbit_basis(f)):
        assert ser.morphism_from_json(via_text(ser.morphism_to_json(g))) == g


def test_bare_diagram_reads_as_morphism():
    d = all_diagrams(1, 1)[0]
    assert ser.morphism_from_json(ser.diagram_to_json(d)) == DiagramMorphism.of(d)


def test_morphism_accepts_rational_coefficients_and_checks_shape():
    d1, d2 = all_diagrams(1, 1)
    f = ser.morphism_from_json({"terms": [{"diagram": ser.diagram_to_json(d1), "coeff": "1/2"},
                                          {"diagram": ser.diagram_to_json(d2), "coeff": 3}],
                                "basis": ORBIT})
    assert f == DiagramMorphism(1, 1, {d1: Fraction(1, 2), d2: 3}, ORBIT)
    with pytest.raises(ser.SchemaError):
        ser.morphism_from_json({"top": 2, "bottom": 1, "terms": [{"diagram": ser.diagram_to_json(d1), "coeff": 1}]})
    with pytest.raises(ser.SchemaError):
        ser.morphism_from_json({"terms": [], "basis": "weird", "top": 1, "bottom": 1})
    with pytest.raises(ser.SchemaError):
        ser.morphism_from_json({"terms": []})


def test_multiplicities_round_trip():
    m = {(): 2, (1,): 3, (2,): 1, (1, 1): 1}
    assert ser.multiplicities_from_json(via_text(ser.multiplicities_to_json(m))) == m
    with pytest.raises(ser.SchemaError):
        ser.multiplicities_from_json([{"partition": [1], "mult": -1}])


def test_superalgebra_round_trip():
    rng = random.Random(1)
    algs = [split_algebra(), dual_numbers(), exterior_one()] + [random_supercommutative_algebra(rng) for _ in range(5)]
    for a in algs:
        assert ser.superalgebra_from_json(via_text(ser.superalgebra_to_json(a))) == a


def test_superalgebra_rejects_bad_shape():
    with pytest.raises(ser.SchemaError):
        ser.superalgebra_from_json({"p": 1, "q": 0, "unit": ["1"]})


def test_reports_are_plain_json():
    for rep in (reproduce_section7(), generator_power_report(3)):
        doc = ser.report_to_json(rep)
        assert via_text(doc) == doc
        assert all(set(s) == {"name", "value", "paper_anchor"} for s in doc["steps"])


def test_to_plain_converts_nested_values():
    doc = ser.to_plain({"p": T + 1, "x": [Fraction(1, 3)], "a": AlgebraicNumber.rational(2)})
    assert doc == {"p": {"coeffs": ["1", "1"]}, "x": ["1/3"],
                   "a": {"modulus": {"coeffs": ["-2", "1"]}, "rep": {"coeffs": ["2"]}}}
