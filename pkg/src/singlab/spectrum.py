"""Spectral numbers, monodromy eigenvalues and the variation structure.

For a quasihomogeneous germ with monomial Milnor basis ``Lambda`` every basis
monomial ``z^alpha`` contributes the shifted weighted degree
``l(alpha) = sum_k (alpha_k + 1) w_k``, the spectral number ``l(alpha) - 1``
and the monodromy eigenvalue ``exp(2 pi i l(alpha))``.  Eigenvalues are kept
as reduced fractions ``q = l mod 1`` so that all bookkeeping stays exact.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import IntegralityViolation, OrderViolation, SymmetryViolation
from .milnor import MilnorBasis
from .weights import WeightSystem


def l_of(alpha: Sequence[int], W: WeightSystem) -> Fraction:
    if len(alpha) != W.nvars:
        raise ValueError("monomial length does not match the weight system")
    return sum(((a + 1) * w for a, w in zip(alpha, W.w)), Fraction(0))


def bracket(l: Fraction) -> int:
    """Integer part used in the sign ``(-1)^([l] + n)``; plain floor."""
    return math.floor(l)


def variation_sign(l: Fraction, n: int) -> int:
    return -1 if (bracket(l) + n) % 2 else 1


@dataclass(frozen=True)
class SpectralDatum:
    alpha: tuple
    l_value: Fraction
    gamma: Fraction
    eigenvalue: Fraction  # q in [0, 1), eigenvalue exp(2 pi i q)
    sign: int

    @classmethod
    def build(cls, alpha, W: WeightSystem, n: int) -> "SpectralDatum":
        l = l_of(alpha, W)
        return cls(tuple(alpha), l, l - 1, l - math.floor(l), variation_sign(l, n))


@dataclass(frozen=True)
class Spectrum:
    data: tuple
    n: int

    @property
    def mu(self) -> int:
        return len(self.data)

    @property
    def gammas(self) -> list:
        return [d.gamma for d in self.data]

    @property
    def minimum(self) -> Fraction:
        return self.data[0].gamma

    def multiset(self) -> Counter:
        return Counter(self.gammas)

    @property
    def eigenvalue_one_multiplicity(self) -> int:
        return sum(1 for d in self.data if d.eigenvalue == 0)

    def to_list(self) -> list:
        return [str(g) for g in self.gammas]


def check_symmetry(spectrum: Spectrum) -> None:
    g = spectrum.gammas
    n = spectrum.n
    for j in range(len(g)):
        if g[j] + g[-1 - j] != n - 1:
            raise SymmetryViolation(
                f"gamma[{j}] + gamma[{len(g) - 1 - j}] = {g[j] + g[-1 - j]} != {n - 1}")
        if not -1 < g[j] < n:
            raise SymmetryViolation(f"spectral number {g[j]} outside (-1, {n})")


def compute_spectrum(basis: MilnorBasis, W: WeightSystem, n: int) -> Spectrum:
    if n != W.nvars - 1:
        raise ValueError(f"n must be {W.nvars - 1} for {W.nvars} variables")
    data = sorted((SpectralDatum.build(a, W, n) for a in basis.monomials),
                  key=lambda d: (d.gamma, d.alpha))
    spectrum = Spectrum(tuple(data), n)
    check_symmetry(spectrum)
    return spectrum


@dataclass(frozen=True)
class VariationSummand:
    eigenvalue: Fraction
    sign: int
    multiplicity: int

    def to_dict(self) -> dict:
        return {"eigenvalue": str(self.eigenvalue), "sign": self.sign,
                "multiplicity": self.multiplicity}


def variation_structure(spectrum: Spectrum) -> list:
    counts = Counter((d.eigenvalue, d.sign) for d in spectrum.data)
    return [VariationSummand(q, s, m) for (q, s), m in sorted(counts.items())]


# Integer polynomials are coefficient lists, constant term first.

def _mobius(k: int) -> int:
    result = 1
    p = 2
    while p * p <= k:
        if k % p == 0:
            k //= p
            if k % p == 0:
                return 0
            result = -result
        p += 1
    return -result if k > 1 else result


def _divisors(d: int) -> list:
    return [e for e in range(1, d + 1) if d % e == 0]


def _mul_binomial(p: list, d: int) -> list:
    """Multiply by ``T^d - 1``."""
    out = [0] * (len(p) + d)
    for i, c in enumerate(p):
        out[i + d] += c
        out[i] -= c
    return out


def _div_binomial(p: list, d: int) -> list:
    """Exact division by ``T^d - 1``; raises if there is a remainder."""
    deg = len(p) - 1
    if deg < d:
        raise IntegralityViolation("characteristic polynomial division failed")
    q = [0] * (deg - d + 1)
    for i in range(len(q)):
        q[i] = (q[i - d] if i >= d else 0) - p[i]
    for i in range(len(q), deg + 1):
        if p[i] != (q[i - d] if i - d >= 0 else 0):
            raise IntegralityViolation("characteristic polynomial division left a remainder")
    return q


def cyclotomic_exponents(eigenvalues: Sequence[Fraction]) -> dict:
    """Group eigenvalue fractions into cyclotomic factors ``{d: multiplicity}``.

    Every primitive ``d``-th root must occur equally often, otherwise the
    product of ``T - lambda`` would not have integer coefficients.
    """
    by_den = {}
    for q in eigenvalues:
        by_den.setdefault(q.denominator, Counter())[q] += 1
    result = {}
    for d, counts in sorted(by_den.items()):
        prim = [Fraction(k, d) for k in range(d) if math.gcd(k, d) == 1]
        mults = {counts.get(q, 0) for q in prim}
        if len(mults) != 1 or 0 in mults:
            raise IntegralityViolation(
                f"primitive {d}-th roots of unity occur with unequal multiplicities")
        result[d] = mults.pop()
    return result


def characteristic_polynomial(eigenvalues: Sequence[Fraction]) -> list:
    """Expand ``prod (T - exp(2 pi i q))`` over the integers.

    Uses ``Phi_d = prod_{e | d} (T^e - 1)^mobius(d/e)``, so only
    multiplications and exact divisions by binomials are needed.
    """
    binomial_exp = Counter()
    for d, c in cyclotomic_exponents(eigenvalues).items():
        for e in _divisors(d):
            binomial_exp[e] += c * _mobius(d // e)
    poly = [1]
    for e, k in sorted(binomial_exp.items()):
        for _ in range(max(k, 0)):
            poly = _mul_binomial(poly, e)
    for e, k in sorted(binomial_exp.items()):
        for _ in range(max(-k, 0)):
            poly = _div_binomial(poly, e)
    if len(poly) - 1 != len(eigenvalues):
        raise IntegralityViolation("characteristic polynomial has the wrong degree")
    return poly


@dataclass(frozen=True)
class MonodromyData:
    eigenvalues: tuple
    char_poly: tuple
    order: int

    def to_dict(self) -> dict:
        return {"eigenvalues": [str(q) for q in self.eigenvalues],
                "char_poly": list(self.char_poly), "order": self.order}


def monodromy(spectrum: Spectrum, W: WeightSystem) -> MonodromyData:
    eigenvalues = tuple(sorted(d.eigenvalue for d in spectrum.data))
    order = math.lcm(*(q.denominator for q in eigenvalues)) if eigenvalues else 1
    if W.beta % order:
        raise OrderViolation(f"monodromy order {order} does not divide beta = {W.beta}")
    return MonodromyData(eigenvalues, tuple(characteristic_polynomial(eigenvalues)), order)
