import math
from collections import Counter
from fractions import Fraction as F

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import bp_text, random_bp_tuples
from singlab import oracle
from singlab.errors import IntegralityViolation, OrderViolation, SymmetryViolation
from singlab.milnor import MilnorBasis, milnor_basis
from singlab.parse import parse
from singlab.spectrum import (SpectralDatum, Spectrum, bracket, characteristic_polynomial,
                              check_symmetry, compute_spectrum, cyclotomic_exponents, l_of,
                              monodromy, variation_sign, variation_structure)
from singlab.weights import WeightSystem, infer_weights

XYZ = ["x", "y", "z"]
A1 = WeightSystem((1, 1, 1), 2)
BP352 = WeightSystem((10, 6, 15), 30)
BP333 = WeightSystem((1, 1, 1), 3)


def spectrum_of(text, names=XYZ, W=None):
    f = parse(text, names)
    W = W or infer_weights(f)
    _, basis = milnor_basis(f, W)
    return compute_spectrum(basis, W, len(names) - 1), W


def numpy_char_poly(eigenvalues):
    roots = np.exp(2j * np.pi * np.array([float(q) for q in eigenvalues]))
    coeffs = np.poly(roots)[::-1]
    assert np.allclose(coeffs.imag, 0, atol=1e-6)
    return [int(round(c)) for c in coeffs.real]


def sympy_char_poly(eigenvalues):
    sp = pytest.importorskip("sympy")
    T = sp.Symbol("T")
    counts = cyclotomic_exponents(eigenvalues)
    total = sp.Mul(*[sp.cyclotomic_poly(d, T) ** c for d, c in counts.items()])
    return [int(c) for c in reversed(sp.Poly(sp.expand(total), T).all_coeffs())]


class TestL:
    def test_a1_origin(self):
        assert l_of((0, 0, 0), A1) == F(3, 2)

    def test_bp352(self):
        assert l_of((1, 3, 0), BP352) == F(59, 30)

    def test_bp333_origin(self):
        assert l_of((0, 0, 0), BP333) == 1

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            l_of((0, 0), A1)

    def test_bracket_is_floor(self):
        assert bracket(F(3, 2)) == 1
        assert bracket(F(1)) == 1
        assert bracket(F(-1, 2)) == -1

    def test_sign(self):
        assert variation_sign(F(3, 2), 2) == -1
        assert variation_sign(F(1), 2) == -1
        assert variation_sign(F(2), 2) == 1


class TestSpectrum:
    def test_a1(self):
        sp, _ = spectrum_of("x^2+y^2+z^2")
        (d,) = sp.data
        assert sp.gammas == [F(1, 2)]
        assert d.eigenvalue == F(1, 2)
        assert d.sign == -1

    def test_bp352_minimum(self):
        sp, _ = spectrum_of("x^3+y^5+z^2")
        assert sp.minimum == F(1, 30)
        assert sp.data[0].alpha == (0, 0, 0)

    def test_bp333(self):
        sp, _ = spectrum_of("x^3+y^3+z^3")
        assert sp.multiset() == Counter({F(0): 1, F(1, 3): 3, F(2, 3): 3, F(1): 1})
        assert sp.mu == 8

    def test_datum_fields(self):
        d = SpectralDatum.build((1, 3, 0), BP352, 2)
        assert (d.l_value, d.gamma, d.eigenvalue, d.sign) == (F(59, 30), F(29, 30), F(29, 30), -1)

    def test_wrong_n(self):
        _, basis = milnor_basis(parse("x^2+y^2+z^2", XYZ), A1)
        with pytest.raises(ValueError):
            compute_spectrum(basis, A1, 3)

    def test_symmetry_violation_detected(self):
        bad = Spectrum(tuple(SpectralDatum.build(a, BP333, 2)
                             for a in [(0, 0, 0), (1, 0, 0)]), 2)
        with pytest.raises(SymmetryViolation):
            check_symmetry(bad)

    def test_corrupted_basis_raises(self):
        with pytest.raises(SymmetryViolation):
            compute_spectrum(MilnorBasis(((0, 0, 0), (1, 0, 0))), BP333, 2)

    def test_to_list(self):
        sp, _ = spectrum_of("x^2+y^3", ["x", "y"])
        assert sp.to_list() == ["-1/6", "1/6"]


class TestVariation:
    def test_a1(self):
        sp, _ = spectrum_of("x^2+y^2+z^2")
        assert [(v.eigenvalue, v.sign, v.multiplicity) for v in variation_structure(sp)] == [
            (F(1, 2), -1, 1)]

    def test_bp333_contains_eigenvalue_one(self):
        sp, _ = spectrum_of("x^3+y^3+z^3")
        vs = variation_structure(sp)
        assert any(v.eigenvalue == 0 and v.sign == -1 for v in vs)
        assert sum(v.multiplicity for v in vs) == sp.mu


class TestMonodromy:
    def test_a1(self):
        sp, W = spectrum_of("x^2+y^2+z^2")
        mono = monodromy(sp, W)
        assert mono.char_poly == (1, 1)
        assert mono.order == 2

    def test_bp333(self):
        sp, W = spectrum_of("x^3+y^3+z^3")
        mono = monodromy(sp, W)
        assert mono.order == 3
        assert mono.eigenvalues.count(0) >= 1

    def test_bp352(self):
        sp, W = spectrum_of("x^3+y^5+z^2")
        assert monodromy(sp, W).order == 30

    def test_order_violation(self):
        sp, _ = spectrum_of("x^3+y^5+z^2")
        with pytest.raises(OrderViolation):
            monodromy(sp, WeightSystem((1, 1, 1), 7))

    def test_unbalanced_roots_rejected(self):
        with pytest.raises(IntegralityViolation):
            characteristic_polynomial([F(1, 3)])

    def test_cyclotomic_grouping(self):
        assert cyclotomic_exponents([F(0), F(1, 2), F(1, 4), F(3, 4), F(1, 4), F(3, 4)]) == {
            1: 1, 2: 1, 4: 2}

    @pytest.mark.parametrize("qs", [[F(0)], [F(1, 2)], [F(1, 3), F(2, 3)],
                                    [F(k, 12) for k in range(12)],
                                    [F(1, 5), F(2, 5), F(3, 5), F(4, 5), F(1, 2), F(1, 2)]])
    def test_char_poly_numpy_oracle(self, qs):
        assert characteristic_polynomial(qs) == numpy_char_poly(qs)


def test_catalog_char_polys_match_sympy(catalog_analyses):
    for a in catalog_analyses.values():
        assert list(a.monodromy.char_poly) == sympy_char_poly(a.monodromy.eigenvalues)


def test_spectrum_matches_oracle(catalog_entries, catalog_analyses):
    for e in catalog_entries:
        if e.name in catalog_analyses:
            a = catalog_analyses[e.name]
            assert a.spectrum.multiset() == oracle.spectrum_multiset(a.polynomial, a.weights)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(2, 7), min_size=2, max_size=3), st.permutations(range(3)))
def test_permutation_invariance(exps, perm):
    names = XYZ[:len(exps)]
    perm = [p for p in perm if p < len(exps)]
    f = parse(bp_text(exps, names), names)
    g = f.permute_variables(perm)
    sp_f, W_f = spectrum_of(f.to_string(names), names)
    sp_g, W_g = spectrum_of(g.to_string(names), names)
    assert W_g == W_f.permuted(perm)
    assert sp_f.multiset() == sp_g.multiset()


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(2, 9), min_size=1, max_size=3))
def test_spectrum_properties_bp(exps):
    names = XYZ[:len(exps)]
    sp, W = spectrum_of(bp_text(exps, names), names)
    n = len(exps) - 1
    g = sp.gammas
    assert all(g[j] + g[-1 - j] == n - 1 for j in range(len(g)))
    assert all(-1 < x < n for x in g)
    mono = monodromy(sp, W)
    assert abs(mono.char_poly[0]) == 1 and mono.char_poly[-1] == 1
    assert len(mono.char_poly) - 1 == sp.mu
    assert W.beta % mono.order == 0
    assert sp.eigenvalue_one_multiplicity == sum(1 for d in sp.data if d.l_value.denominator == 1)


def test_random_tuples_char_poly_small_mu():
    for exps in random_bp_tuples(30, high=4):
        sp, W = spectrum_of(bp_text(exps))
        qs = monodromy(sp, W).eigenvalues
        assert characteristic_polynomial(qs) == numpy_char_poly(qs)
        assert math.prod(a - 1 for a in exps) == sp.mu
