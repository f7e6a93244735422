import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import bp_text
from singlab import oracle
from singlab.errors import NonIsolated, NotSingular
from singlab.milnor import (GroebnerBasis, JacobianIdeal, MonomialOrder, groebner,
                            milnor_basis, milnor_orlik_check, milnor_orlik_number,
                            standard_monomials)
from singlab.parse import parse
from singlab.poly import Polynomial
from singlab.weights import WeightSystem, infer_weights

XYZ = ["x", "y", "z"]


def P(text, names=XYZ):
    return parse(text, names)


def s_polynomial(f, g, order):
    """Textbook S-polynomial, written independently of the engine."""
    a, b = order.leading_monomial(f), order.leading_monomial(g)
    lcm = tuple(max(i, j) for i, j in zip(a, b))
    ca, cb = f.coefficient(a), g.coefficient(b)
    ma = Polynomial.monomial(tuple(l - i for l, i in zip(lcm, a)), 1 / ca)
    mb = Polynomial.monomial(tuple(l - j for l, j in zip(lcm, b)), 1 / cb)
    return ma * f - mb * g


def divides(a, b):
    return all(i <= j for i, j in zip(a, b))


def assert_reduced_groebner(G: GroebnerBasis, generators):
    lms = G.leading_monomials
    for g, lm in zip(G.elements, lms):
        assert g.coefficient(lm) == 1
        for other, olm in zip(G.elements, lms):
            if other is not g:
                assert not any(divides(olm, t) for t in g.terms)
    for f, g in itertools.combinations(G.elements, 2):
        assert G.normal_form(s_polynomial(f, g, G.order)).is_zero()
    for gen in generators:
        assert G.normal_form(gen).is_zero()


class TestMonomialOrder:
    def test_weighted_then_lex(self):
        order = MonomialOrder.for_weights(WeightSystem((10, 6, 15), 30))
        assert order.key((1, 0, 0)) < order.key((0, 0, 1))
        assert order.leading_monomial(P("x^3+y^5+z^2")) == (3, 0, 0)

    def test_one_is_minimal(self):
        order = MonomialOrder.for_weights(WeightSystem((6, 4, 9), 18))
        assert all(order.key((0, 0, 0)) < order.key(a)
                   for a in itertools.product(range(3), repeat=3) if any(a))

    @given(st.lists(st.tuples(*[st.integers(0, 4)] * 3), min_size=3, max_size=3))
    def test_multiplicative(self, mons):
        a, b, c = mons
        order = MonomialOrder((2, 3, 5))
        if order.key(a) < order.key(b):
            add = lambda u, v: tuple(i + j for i, j in zip(u, v))
            assert order.key(add(a, c)) < order.key(add(b, c))


class TestGroebner:
    def test_a1(self):
        f = P("x^2+y^2+z^2")
        G = groebner(JacobianIdeal.of(f), MonomialOrder.for_weights(WeightSystem((1, 1, 1), 2)))
        assert set(G.elements) == {P("x"), P("y"), P("z")}

    def test_brieskorn_pham(self):
        f = P("x^3+y^5+z^2")
        G = groebner(JacobianIdeal.of(f), MonomialOrder.for_weights(infer_weights(f)))
        assert set(G.elements) == {P("x^2"), P("y^4"), P("z")}

    def test_deterministic(self):
        f = P("x^3+y^3+z^3+x*y*z")
        order = MonomialOrder.for_weights(infer_weights(f))
        assert groebner(JacobianIdeal.of(f), order) == groebner(JacobianIdeal.of(f), order)

    @pytest.mark.parametrize("text", ["x^3+y^3+z^3+x*y*z", "x^3+x*y^3+z^2",
                                      "x^2*y+y^3+z^2", "x^3+y^3+z^3-3*x*y*z+x^2*y"])
    def test_reduced_and_complete(self, text):
        f = P(text)
        ideal = JacobianIdeal.of(f)
        G = groebner(ideal, MonomialOrder.degree_lex(3))
        assert_reduced_groebner(G, ideal.generators)

    def test_generator_order_irrelevant(self):
        f = P("x^3+y^3+z^3+x*y*z")
        order = MonomialOrder.for_weights(WeightSystem((1, 1, 1), 3))
        gens = list(JacobianIdeal.of(f).generators)
        assert groebner(gens, order) == groebner(gens[::-1], order)


class TestStandardMonomials:
    def test_a1(self):
        f = P("x^2+y^2+z^2")
        _, basis = milnor_basis(f, WeightSystem((1, 1, 1), 2))
        assert basis.monomials == ((0, 0, 0),) and basis.mu == 1

    def test_staircase(self):
        G = GroebnerBasis((P("x^2"), P("y^4"), P("z")),
                          MonomialOrder.for_weights(WeightSystem((10, 6, 15), 30)))
        basis = standard_monomials(G)
        assert set(basis.monomials) == {(a, b, 0) for a in range(2) for b in range(4)}
        assert basis.mu == 8

    def test_nonisolated(self):
        f = P("x^2*y^2", ["x", "y"])
        with pytest.raises(NonIsolated):
            standard_monomials(groebner(JacobianIdeal.of(f), MonomialOrder.degree_lex(2)))

    def test_missing_variable_is_nonisolated(self):
        f = P("x^2+y^2")
        with pytest.raises(NonIsolated):
            standard_monomials(groebner(JacobianIdeal.of(f), MonomialOrder.degree_lex(3)))

    def test_smooth_point(self):
        f = P("x+y^2", ["x", "y"])
        with pytest.raises(NotSingular):
            standard_monomials(groebner(JacobianIdeal.of(f), MonomialOrder.degree_lex(2)))

    def test_constant_monomial_first_and_sorted(self):
        f = P("x^3+x*y^3+z^2")
        W = infer_weights(f)
        _, basis = milnor_basis(f, W)
        assert basis.monomials[0] == (0, 0, 0)
        degrees = [W.degree(a) for a in basis.monomials]
        assert degrees == sorted(degrees)

    def test_to_dict(self):
        _, basis = milnor_basis(P("x^2+y^3", ["x", "y"]), WeightSystem((3, 2), 6))
        assert basis.to_dict() == {"mu": 2, "monomials": [[0, 0], [0, 1]]}


class TestMilnorOrlik:
    @pytest.mark.parametrize("beta_i,beta,mu", [((1, 1, 1), 2, 1), ((10, 6, 15), 30, 8),
                                                ((1, 1, 1), 3, 8)])
    def test_examples(self, beta_i, beta, mu):
        assert milnor_orlik_check(WeightSystem(beta_i, beta), mu)

    def test_mismatch(self):
        assert not milnor_orlik_check(WeightSystem((1, 1, 1), 3), 7)

    def test_non_integer_product(self):
        W = WeightSystem((2, 3), 7)
        assert milnor_orlik_number(W) == Fraction(5, 2) * Fraction(4, 3)
        assert not milnor_orlik_check(W, 3)


class TestOracle:
    def test_poincare_series_e7(self):
        assert oracle.poincare_series(WeightSystem((6, 4, 9), 18)) == {
            0: 1, 4: 1, 6: 1, 8: 1, 10: 1, 12: 1, 16: 1}

    def test_hilbert_function_matches_poincare(self):
        f = P("x^3+y^3+z^3+x*y*z")
        W = infer_weights(f)
        hf = {d: k for d, k in oracle.hilbert_function(f, W).items() if k}
        assert hf == oracle.poincare_series(W)

    def test_nonisolated(self):
        f = P("x^2*y^2", ["x", "y"])
        with pytest.raises(NonIsolated):
            oracle.hilbert_function(f, WeightSystem((1, 1), 4))

    def test_monomials_of_degree(self):
        assert sorted(oracle.monomials_of_degree((1, 2), 4)) == [(0, 2), (2, 1), (4, 0)]


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(2, 7), min_size=2, max_size=3))
def test_brieskorn_pham_staircase(exps):
    names = XYZ[:len(exps)]
    f = parse(bp_text(exps, names), names)
    W = infer_weights(f)
    _, basis = milnor_basis(f, W)
    assert set(basis.monomials) == set(itertools.product(*(range(a - 1) for a in exps)))
    assert basis.mu == milnor_orlik_number(W)


@settings(max_examples=30, deadline=None)
@given(st.integers(-6, 6).filter(lambda c: c ** 3 != -27), st.integers(-3, 3), st.integers(-3, 3))
def test_cubic_family_matches_oracle(c, d, e):
    f = P(f"x^3+y^3+z^3+{c}*x*y*z+{d}*x^2*y+{e}*y*z^2")
    W = WeightSystem((1, 1, 1), 3)
    try:
        _, basis = milnor_basis(f, W)
    except NonIsolated:
        with pytest.raises(NonIsolated):
            oracle.milnor_number(f, W)
        return
    assert basis.mu == oracle.milnor_number(f, W) == 8
