import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import bell_triangle, schur_weyl_trace, stirling_falling
from repst.characters import induction_multiplicity
from repst.combinatorics import enumerate_partitions, partitions_up_to, size
from repst.diagrams import DiagramMorphism, identity_diagram, permutation_diagram
from repst.exact_arith import AlgebraicNumber, Poly, T, content_polynomial, q_polynomial, reduce_mod
from repst.interp import (
    TAU_MODULUS,
    Counterexample,
    InterpolationPoint,
    NaturalParameterError,
    ReproductionError,
    VirtualObject,
    chi_schur_both_ways,
    euler_char,
    euler_char_simple,
    generator_power_report,
    idempotency_check,
    idempotent_sum,
    is_integral_type,
    is_zero_in_partition_algebra,
    reproduce_section7,
    schur_idempotent,
    schur_idempotent_trace,
    search_counterexample,
    tensor_decompose,
    top_degree_layer,
)
from repst.superlinear import SuperDim, schur_vanishes_super

TAU = AlgebraicNumber.root_of(TAU_MODULUS)
small = st.integers(0, 3).flatmap(lambda n: st.sampled_from(enumerate_partitions(n)))


# ---------------------------------------------------------------- interpolation points


@pytest.mark.parametrize("t,natural,integer", [(-1, False, True), (0, True, True), (3, True, True),
                                               (Fraction(1, 2), False, False)])
def test_interpolation_point_flags(t, natural, integer):
    pt = InterpolationPoint.of(t)
    assert pt.is_natural == natural and pt.is_rational_integer == integer


def test_irrational_point_is_never_natural():
    pt = InterpolationPoint.of(TAU)
    assert not pt.is_rational and not pt.is_natural and not pt.is_rational_integer


def test_virtual_object_validation():
    with pytest.raises(ValueError):
        VirtualObject({(1,): -1})
    x = VirtualObject({(1,): 0, (2, 1): 2})
    assert x.terms == {(2, 1): 2} and x.length() == 2


# ---------------------------------------------------------------- Euler characteristics


def test_euler_char_examples():
    assert euler_char_simple((2, 1), -1) == -5
    chi = euler_char_simple((3, 2, 1), TAU)
    assert chi.rep == 3 * T - 24 and chi.modulus == TAU_MODULUS
    for t in (-1, Fraction(7, 3), TAU):
        assert euler_char_simple((), t) == 1


@pytest.mark.parametrize("t", [0, 1, 5])
def test_natural_parameter_is_refused(t):
    with pytest.raises(NaturalParameterError):
        euler_char_simple((1,), t)
    with pytest.raises(NaturalParameterError):
        is_integral_type(VirtualObject.simple((1,)), t)


def test_euler_char_is_additive():
    x = VirtualObject({(): 2, (2, 1): 1})
    assert euler_char(x, -1) == 2 - 5


# ---------------------------------------------------------------- Schur functors, two formulas


def test_chi_schur_examples():
    assert chi_schur_both_ways((2,)) == (T * (T + 1) / 2,) * 2
    assert chi_schur_both_ways((1,)) == (T, T)
    falling = Poly(stirling_falling(3)) / 6
    assert chi_schur_both_ways((1, 1, 1)) == (falling, falling)


@pytest.mark.parametrize("lam", partitions_up_to(6))
def test_chi_schur_formulas_agree(lam):
    a, b = chi_schur_both_ways(lam)
    assert a == b


def test_chi_schur_at_algebraic_value():
    a, b = chi_schur_both_ways((2, 1), TAU)
    assert a == b


@pytest.mark.parametrize("lam", partitions_up_to(4))
def test_three_way_trace_agreement(lam):
    tr = schur_idempotent_trace(lam)
    assert tr == chi_schur_both_ways(lam)[0]
    for N in range(1, 5):
        assert tr(N) == schur_weyl_trace(lam, N)


# ---------------------------------------------------------------- Schur idempotents


def test_schur_idempotent_examples():
    ident, swap = identity_diagram(2), permutation_diagram([1, 0])
    half = Fraction(1, 2)
    assert schur_idempotent((1, 1)) == DiagramMorphism(2, 2, {ident: half, swap: -half})
    assert schur_idempotent((2,)) == DiagramMorphism(2, 2, {ident: half, swap: half})
    assert schur_idempotent_trace((1, 1)) == (T**2 - T) / 2
    assert schur_idempotent_trace((2,)) == (T**2 + T) / 2


def test_schur_idempotents_never_vanish():
    parts = [lam for lam in partitions_up_to(5) if lam]
    assert len(parts) == 18
    assert not any(is_zero_in_partition_algebra(lam) for lam in parts)


def test_schur_idempotent_bound():
    with pytest.raises(ValueError):
        schur_idempotent((6,))


@pytest.mark.parametrize("n", range(1, 5))
def test_idempotents_are_orthogonal_and_complete(n):
    parts = enumerate_partitions(n)
    for lam in parts:
        assert idempotency_check(lam)
        for mu in parts:
            if mu != lam:
                assert idempotency_check(lam, mu)
    assert idempotent_sum(n) == DiagramMorphism.identity(n)


def test_idempotency_examples_and_limits():
    assert idempotency_check((2,))
    assert idempotency_check((1, 1), (2,))
    with pytest.raises(ValueError):
        idempotency_check((5,))
    with pytest.raises(ValueError):
        idempotency_check((2,), (1,))


# ---------------------------------------------------------------- tensor products


def test_tensor_decompose_examples():
    x = VirtualObject.simple((2, 1))
    assert tensor_decompose(x, x)[(3, 2, 1)] == 2
    unit = VirtualObject.simple(())
    y = VirtualObject({(1,): 2, (2, 1): 1})
    assert tensor_decompose(unit, y) == y == tensor_decompose(y, unit)
    g = VirtualObject.simple((1,))
    assert tensor_decompose(g, g) == VirtualObject({(): 1, (1,): 1, (2,): 1, (1, 1): 1})


@given(small, small)
def test_tensor_decompose_is_multiplicative_on_euler_characteristics(lam, mu):
    # chi is a ring map, so the generic decomposition must reproduce Q_lam * Q_mu as polynomials
    prod = tensor_decompose(VirtualObject.simple(lam), VirtualObject.simple(mu))
    total = Poly()
    for nu, k in prod:
        total = total + q_polynomial(nu) * k
    assert total == q_polynomial(lam) * q_polynomial(mu)


@given(small, small)
def test_tensor_decompose_is_commutative(lam, mu):
    x, y = VirtualObject.simple(lam), VirtualObject.simple(mu)
    assert tensor_decompose(x, y) == tensor_decompose(y, x)


@pytest.mark.parametrize("n", range(7))
def test_top_degree_layer_is_induction(n):
    for a in range(n + 1):
        for lam in enumerate_partitions(a):
            for mu in enumerate_partitions(n - a):
                prod = tensor_decompose(VirtualObject.simple(lam), VirtualObject.simple(mu))
                assert max(size(nu) for nu, _ in prod) == n
                top = top_degree_layer(prod, n)
                expected = {nu: induction_multiplicity(lam, mu, nu) for nu in enumerate_partitions(n)}
                assert top == VirtualObject(expected)


# ---------------------------------------------------------------- integral type


def test_integral_type_examples():
    x = VirtualObject.simple((2, 1))
    assert is_integral_type(x, TAU) == (True, None)
    ok, w = is_integral_type(tensor_decompose(x, x), TAU)
    assert not ok and w.partition == (3, 2, 1) and w.chi.rep == 3 * T - 24
    for t in (-1, TAU, Fraction(-7, 2)):
        assert is_integral_type(VirtualObject.simple((), 4), t)[0]


@pytest.mark.parametrize("t", [-1, -2, -3, -7])
def test_simple_objects_are_integral_at_negative_integers(t):
    for lam in partitions_up_to(6):
        assert is_integral_type(VirtualObject.simple(lam), t) == (True, None)


def test_half_integer_point_is_not_integral():
    ok, w = is_integral_type(VirtualObject.simple((1,)), Fraction(1, 2))
    assert not ok and w.chi == Fraction(-1, 2)


# ---------------------------------------------------------------- super vanishing vs content roots


@pytest.mark.parametrize("p,q", [(p, q) for p in range(4) for q in range(4) if p + q <= 3])
def test_super_vanishing_forces_content_root(p, q):
    for lam in partitions_up_to(6):
        if lam and schur_vanishes_super(lam, SuperDim(p, q)):
            assert content_polynomial(lam)(p - q) == 0


# ---------------------------------------------------------------- reproduction of the counterexample


def test_counterexample_report():
    rep = reproduce_section7()
    names = [s["name"] for s in rep.steps]
    assert names == ["Q_(2,1)", "Q_(2,1)(-1)", "Q_(2,1)(T) + 5", "modulus", "chi([(2,1)]_tau)",
                     "multiplicity of (3,2,1)", "remainder", "integrality"]
    assert rep["Q_(2,1)"]["factored"] == "(1/3)*(T - 4)*(T - 2)*T"
    assert rep["Q_(2,1)(-1)"] == -5
    assert rep["Q_(2,1)(T) + 5"] == "(1/3)*(T + 1)*(T^2 - 7*T + 15)"
    assert rep["modulus"] == "T^2 - 7*T + 15"
    assert rep["multiplicity of (3,2,1)"] == 2
    assert rep["remainder"] == {"reduced": "3*T - 24", "unsimplified": "(1/45)*(135*T - 1080)"}
    assert rep["integrality"]["tensor square"] is False
    assert rep.verdict == "counterexample confirmed"
    assert all(s["paper_anchor"] for s in rep.steps)


def test_counterexample_report_fails_loudly_on_a_deviation(monkeypatch):
    import repst.interp as interp

    monkeypatch.setattr(interp, "induction_multiplicity", lambda *a: 1)
    with pytest.raises(ReproductionError):
        interp.reproduce_section7()


def test_search_reproduces_the_known_counterexample():
    cx = search_counterexample((2, 1), -5)
    assert isinstance(cx, Counterexample)
    assert cx.modulus == TAU_MODULUS and cx.witness == (3, 2, 1)
    assert cx.chi.rep == 3 * T - 24


@pytest.mark.parametrize("target", range(-5, 6))
def test_search_on_a_single_strand_finds_nothing(target):
    assert search_counterexample((1,), target) is None


@pytest.mark.parametrize("target", [2, 3, -4, 7])
def test_search_on_two_row_partition_is_consistent(target):
    out = search_counterexample((2,), target)
    if isinstance(out, Counterexample):
        t = InterpolationPoint(AlgebraicNumber.root_of(out.modulus))
        x = VirtualObject.simple((2,))
        assert euler_char_simple((2,), t) == target
        assert is_integral_type(x, t)[0]
        ok, w = is_integral_type(tensor_decompose(x, x), t)
        assert not ok and w.partition == out.witness
        assert reduce_mod(q_polynomial(out.witness), out.modulus) == out.chi
    else:
        assert out is None


def test_search_limits_and_undecided():
    with pytest.raises(ValueError):
        search_counterexample((5,), 0)
    for lam in partitions_up_to(4):
        for target in (-3, 1):
            out = search_counterexample(lam, target)
            assert out is None or out == "undecided" or isinstance(out, Counterexample)


# ---------------------------------------------------------------- generator powers


@pytest.mark.parametrize("n", range(1, 6))
def test_generator_power_report(n):
    rep = generator_power_report(n)
    mults = {tuple(m["partition"]): m["mult"] for m in rep["multiplicities"]}
    assert rep["dim End"] == bell_triangle(2 * n)
    assert rep["length"] == sum(mults.values())
    assert rep["length"] ** 2 >= math.factorial(n)
    # invariants of S_m on [m]^n: one per set partition of the n positions
    assert mults[()] == bell_triangle(n)


def test_generator_power_examples():
    assert generator_power_report(1)["length"] == 2
    rep = generator_power_report(2)
    assert (rep["length"], rep["dim End"]) == (7, 15)


def test_generator_power_limit():
    with pytest.raises(ValueError):
        generator_power_report(6)
