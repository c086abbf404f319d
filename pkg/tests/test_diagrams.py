import itertools
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import bell_triangle, diagram_matrix, morphism_matrix
from repst.combinatorics import cycle_type
from repst.diagrams import (
    DIAGRAM,
    ORBIT,
    BudgetExceeded,
    DiagramMorphism,
    PartitionDiagram,
    all_diagrams,
    compose,
    compose_diagrams,
    compose_orbit,
    discrete_diagram,
    end_dimension,
    factors_over_naturals,
    from_orbit_basis,
    gram_det,
    gram_matrix,
    identity_diagram,
    join_diagram,
    permutation_diagram,
    tensor,
    tensor_diagrams,
    to_orbit_basis,
    trace,
)
from repst.exact_arith import Poly, T, factor_rational_roots, rank

M = DiagramMorphism.of


def diagrams(top, bottom):
    return st.sampled_from(all_diagrams(top, bottom))


coeffs = st.lists(st.integers(-3, 3), min_size=1, max_size=3).map(Poly)


@st.composite
def morphisms(draw, top, bottom, max_terms=4):
    ds = draw(st.lists(diagrams(top, bottom), min_size=1, max_size=max_terms, unique=True))
    return DiagramMorphism(top, bottom, {d: draw(coeffs) for d in ds})


shapes = st.tuples(st.integers(0, 2), st.integers(0, 2), st.integers(0, 2))


# ---------------------------------------------------------------- composition


def test_composition_examples_on_one_strand():
    disc, join, ident = discrete_diagram(1), join_diagram(1), identity_diagram(1)
    assert join == ident
    assert compose(M(disc), M(disc)) == DiagramMorphism.of(disc, T)
    assert compose(M(join), M(disc)) == M(disc)


@given(morphisms(2, 2))
def test_identity_is_neutral(f):
    ident = DiagramMorphism.identity(2)
    assert compose(ident, f) == f == compose(f, ident)


def test_compose_rejects_shape_and_basis_mismatch():
    with pytest.raises(ValueError):
        compose(M(identity_diagram(2)), M(identity_diagram(1)))
    with pytest.raises(ValueError):
        compose(to_orbit_basis(M(identity_diagram(1))), M(identity_diagram(1)))


@given(st.data(), shapes, st.integers(0, 2))
def test_composition_matches_matrix_product(data, shape, n3):
    a, b, c = shape
    f = data.draw(diagrams(a, b))
    g = data.draw(diagrams(b, n3))
    k, h = compose_diagrams(g, f)
    for N in (1, 2, 3):
        lhs = diagram_matrix(g.top, g.bottom, g.blocks, N) @ diagram_matrix(f.top, f.bottom, f.blocks, N)
        rhs = diagram_matrix(h.top, h.bottom, h.blocks, N) * N**k
        assert np.array_equal(lhs, rhs)


@given(st.data())
def test_composition_is_associative(data):
    n = data.draw(st.integers(0, 3))
    f, g, h = (data.draw(morphisms(n, n, 2)) for _ in range(3))
    assert compose(h, compose(g, f)) == compose(compose(h, g), f)


# ---------------------------------------------------------------- tensor product


def test_tensor_examples():
    assert tensor(M(identity_diagram(1)), M(identity_diagram(1))) == M(identity_diagram(2))
    d = tensor_diagrams(discrete_diagram(1), join_diagram(1))
    assert d == PartitionDiagram.from_labels(2, 2, [["t1"], ["b1"], ["t2", "b2"]])


@given(st.data())
def test_tensor_is_associative(data):
    f, g, h = (data.draw(morphisms(*data.draw(st.tuples(st.integers(0, 2), st.integers(0, 2))), 2))
               for _ in range(3))
    assert tensor(f, tensor(g, h)) == tensor(tensor(f, g), h)


@given(st.data())
def test_tensor_matches_kronecker_product(data):
    d1 = data.draw(diagrams(1, 2))
    d2 = data.draw(diagrams(2, 1))
    d = tensor_diagrams(d1, d2)
    for N in (2, 3):
        lhs = diagram_matrix(d.top, d.bottom, d.blocks, N)
        rhs = np.kron(diagram_matrix(1, 2, d1.blocks, N), diagram_matrix(2, 1, d2.blocks, N))
        assert np.array_equal(lhs, rhs)


def test_tensor_basis_mismatch():
    with pytest.raises(ValueError):
        tensor(M(identity_diagram(1)), to_orbit_basis(M(identity_diagram(1))))


# ---------------------------------------------------------------- trace


def test_trace_examples():
    assert trace(M(identity_diagram(2))) == T**2
    assert trace(M(permutation_diagram([1, 0]))) == T
    assert trace(M(discrete_diagram(1))) == T
    with pytest.raises(ValueError):
        trace(M(discrete_diagram(1, 2)))


@pytest.mark.parametrize("n", range(6))
def test_trace_of_every_permutation(n):
    for sigma in itertools.permutations(range(n)):
        assert trace(M(permutation_diagram(sigma))) == T ** len(cycle_type(sigma))


@given(st.data())
def test_trace_matches_matrix_trace(data):
    n = data.draw(st.integers(0, 3))
    f = data.draw(morphisms(n, n))
    for N in (1, 2, 3):
        assert trace(f)(N) == np.trace(morphism_matrix(f, N)) if n else trace(f)(N) == morphism_matrix(f, N)[0, 0]


@given(st.data())
def test_trace_is_cyclic(data):
    a, b = data.draw(st.integers(0, 2)), data.draw(st.integers(0, 2))
    f = data.draw(morphisms(a, b))
    g = data.draw(morphisms(b, a))
    assert trace(compose(g, f)) == trace(compose(f, g))


@given(st.data())
def test_trace_is_multiplicative(data):
    f = data.draw(morphisms(1, 1))
    g = data.draw(morphisms(2, 2))
    assert trace(tensor(f, g)) == trace(f) * trace(g)


def test_trace_accepts_orbit_input():
    f = M(discrete_diagram(2))
    assert trace(to_orbit_basis(f)) == trace(f)


# ---------------------------------------------------------------- permutations


def test_permutation_examples():
    assert permutation_diagram([0, 1, 2]) == identity_diagram(3)
    cyc = permutation_diagram([1, 2, 0])
    assert cyc == PartitionDiagram.from_labels(3, 3, [["t1", "b2"], ["t2", "b3"], ["t3", "b1"]])
    assert trace(M(cyc)) == T
    with pytest.raises(ValueError):
        permutation_diagram([0, 0])


@given(st.permutations(list(range(4))), st.permutations(list(range(4))))
def test_permutation_product_law(s, r):
    composite = [s[r[i]] for i in range(4)]
    k, d = compose_diagrams(permutation_diagram(s), permutation_diagram(r))
    assert k == 0 and d == permutation_diagram(composite)


# ---------------------------------------------------------------- orbit basis


def test_orbit_basis_on_one_strand():
    disc, join = discrete_diagram(1), join_diagram(1)
    assert to_orbit_basis(M(disc)) == DiagramMorphism(1, 1, {disc: 1, join: 1}, ORBIT)
    assert to_orbit_basis(M(join)) == DiagramMorphism(1, 1, {join: 1}, ORBIT)


def test_orbit_products_on_one_strand():
    disc, join = discrete_diagram(1), join_diagram(1)
    xd = DiagramMorphism(1, 1, {disc: 1}, ORBIT)
    xj = DiagramMorphism(1, 1, {join: 1}, ORBIT)
    # x_disc = J - I and x_join = I as N x N matrices: (J - I)^2 = (N - 2)(J - I) + (N - 1) I
    assert compose_orbit(xd, xd) == DiagramMorphism(1, 1, {disc: T - 2, join: T - 1}, ORBIT)
    assert compose_orbit(xj, xj) == xj


@given(st.data())
def test_orbit_round_trip(data):
    n = data.draw(st.integers(0, 3))
    f = data.draw(morphisms(n, n))
    assert from_orbit_basis(to_orbit_basis(f)) == f
    x = DiagramMorphism(n, n, dict(f.terms), ORBIT)
    assert to_orbit_basis(from_orbit_basis(x)) == x


@pytest.mark.parametrize("N", [1, 2, 3])
def test_orbit_elements_are_injective_labellings(N):
    # x_pi has entry 1 exactly where the labelling is constant on blocks of pi and distinct across blocks
    for d in all_diagrams(1, 2):
        mat = morphism_matrix(from_orbit_basis(DiagramMorphism(1, 2, {d: 1}, ORBIT)), N)
        for a, ins in enumerate(itertools.product(range(N), repeat=1)):
            for b, outs in enumerate(itertools.product(range(N), repeat=2)):
                lab = list(ins) + list(outs)
                values = [lab[blk[0]] for blk in d.blocks]
                exact = all(len({lab[x] for x in blk}) == 1 for blk in d.blocks) and len(set(values)) == len(values)
                assert mat[b, a] == int(exact)


@pytest.mark.parametrize("n", [1, 2])
def test_orbit_structure_constants_factor_over_naturals(n):
    basis = all_diagrams(n, n)
    count = 0
    for a in basis:
        for b in basis:
            prod = compose_orbit(DiagramMorphism(n, n, {a: 1}, ORBIT), DiagramMorphism(n, n, {b: 1}, ORBIT))
            assert all(factors_over_naturals(c) for c in prod.terms.values())
            count += 1
    assert count == len(basis) ** 2


def test_factors_over_naturals():
    assert factors_over_naturals(Fraction(1, 45) * (T - 8) * T)
    assert not factors_over_naturals(T + 1)
    assert not factors_over_naturals(T**2 + 1)
    assert factors_over_naturals(Poly.const(3))


# ---------------------------------------------------------------- Gram forms


def test_gram_one_strand():
    assert gram_matrix(1) == [[T, T], [T, T**2]]
    assert gram_det(1) == T**2 * (T - 1)
    assert gram_det(0) == Poly.const(1)


def test_gram_two_strands_has_natural_roots():
    d = gram_det(2)
    fac = factor_rational_roots(d)
    assert fac.cofactor.is_constant()
    assert all(r.denominator == 1 and r >= 0 for r, _ in fac.roots)
    assert d == T**15 * (T - 1) ** 14 * (T - 2) ** 7 * (T - 3)


def test_gram_interpolation_path_agrees_with_exact():
    assert gram_det(2, exact_max=1) == gram_det(2)
    assert gram_det(1, exact_max=0) == gram_det(1)


def test_gram_budget():
    with pytest.raises(BudgetExceeded):
        gram_det(4)
    with pytest.raises(BudgetExceeded):
        gram_det(3, point_budget=100)


@pytest.mark.parametrize("n", [1, 2])
@pytest.mark.parametrize("t", [Fraction(-1), Fraction(-2), Fraction(1, 2)])
def test_gram_full_rank_off_the_naturals(n, t):
    g = [[p(t) for p in row] for row in gram_matrix(n)]
    assert rank(g) == len(g)


@pytest.mark.parametrize("n,t", [(1, 0), (1, 1), (2, 0), (2, 1), (2, 2), (2, 3)])
def test_gram_degenerate_at_roots(n, t):
    g = [[p(t) for p in row] for row in gram_matrix(n)]
    assert rank(g) < len(g)


@pytest.mark.parametrize("n", range(4))
def test_end_dimension(n):
    assert end_dimension(n) == bell_triangle(2 * n)


def test_end_dimension_examples():
    assert [end_dimension(n) for n in (1, 2, 3)] == [2, 15, 203]


# ---------------------------------------------------------------- morphism plumbing


def test_morphism_validation():
    with pytest.raises(ValueError):
        DiagramMorphism(1, 1, {identity_diagram(2): 1})
    with pytest.raises(ValueError):
        DiagramMorphism(1, 1, {}, "weird")
    f = M(identity_diagram(1), 0)
    assert f.is_zero()


def test_labels_round_trip():
    d = PartitionDiagram.from_labels(2, 1, [["t2", "b1"], ["t1"]])
    assert d.labels() == [["t1"], ["t2", "b1"]]
    assert PartitionDiagram.from_labels(2, 1, d.labels()) == d
    assert d.propagating_number() == 1
    with pytest.raises(ValueError):
        PartitionDiagram.from_labels(1, 1, [["t1", "b2"]])


def test_specialize():
    f = DiagramMorphism.of(identity_diagram(1), T - 1)
    assert f.specialize(Fraction(3)) == {identity_diagram(1): 2}
    assert f.basis == DIAGRAM
