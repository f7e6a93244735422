"""Jacobian ideal, Groebner bases and the monomial basis of the Milnor algebra.

Buchberger's algorithm runs on plain ``{exponent tuple: Fraction}`` dicts for
speed; the public types wrap results in :class:`~singlab.poly.Polynomial`.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import NonIsolated, NotSingular
from .poly import Polynomial
from .weights import WeightSystem


@dataclass(frozen=True)
class MonomialOrder:
    """Weighted degree with lexicographic tiebreak (``x > y > z > ...``)."""

    weights: tuple

    @classmethod
    def for_weights(cls, W: WeightSystem) -> "MonomialOrder":
        return cls(tuple(W.beta_i))

    @classmethod
    def degree_lex(cls, nvars: int) -> "MonomialOrder":
        return cls((1,) * nvars)

    @property
    def kind(self) -> str:
        return "weighted-degree-then-lexicographic"

    def key(self, alpha: Sequence[int]):
        return (sum(a * b for a, b in zip(alpha, self.weights)), tuple(alpha))

    def leading_monomial(self, p: Polynomial):
        if p.is_zero():
            raise ValueError("zero polynomial has no leading monomial")
        return max(p.terms, key=self.key)


@dataclass(frozen=True)
class JacobianIdeal:
    generators: tuple

    @classmethod
    def of(cls, f: Polynomial) -> "JacobianIdeal":
        return cls(tuple(f.gradient()))


@dataclass(frozen=True)
class GroebnerBasis:
    elements: tuple
    order: MonomialOrder

    @property
    def leading_monomials(self) -> list:
        return [self.order.leading_monomial(g) for g in self.elements]

    def normal_form(self, p: Polynomial) -> Polynomial:
        basis = [(self.order.leading_monomial(g), dict(g.terms)) for g in self.elements]
        return Polynomial(p.nvars, _reduce(dict(p.terms), basis, self.order.key))


@dataclass(frozen=True)
class MilnorBasis:
    """Standard monomials of the Milnor algebra, sorted by the order key."""

    monomials: tuple

    @property
    def mu(self) -> int:
        return len(self.monomials)

    def to_dict(self) -> dict:
        return {"mu": self.mu, "monomials": [list(a) for a in self.monomials]}


def _divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _reduce(p: dict, basis: list, key) -> dict:
    """Full normal form of ``p`` modulo monic ``basis = [(lm, poly), ...]``."""
    p = dict(p)
    rem = {}
    while p:
        lt = max(p, key=key)
        c = p[lt]
        for g_lm, g in basis:
            if _divides(g_lm, lt):
                shift = tuple(x - y for x, y in zip(lt, g_lm))
                for a, d in g.items():
                    m = tuple(x + y for x, y in zip(a, shift))
                    v = p.get(m, 0) - c * d
                    if v:
                        p[m] = v
                    else:
                        p.pop(m, None)
                break
        else:
            rem[lt] = c
            del p[lt]
    return rem


def _monic(p: dict, key):
    lm = max(p, key=key)
    inv = 1 / p[lm]
    return lm, {a: c * inv for a, c in p.items()}


def _spoly(f, g):
    (lf, pf), (lg, pg) = f, g
    lcm = _lcm(lf, lg)
    sf = tuple(x - y for x, y in zip(lcm, lf))
    sg = tuple(x - y for x, y in zip(lcm, lg))
    out = {}
    for a, c in pf.items():
        out[tuple(x + y for x, y in zip(a, sf))] = c
    for a, c in pg.items():
        m = tuple(x + y for x, y in zip(a, sg))
        v = out.get(m, 0) - c
        if v:
            out[m] = v
        else:
            out.pop(m, None)
    return out


def groebner(ideal: JacobianIdeal | Sequence[Polynomial], order: MonomialOrder) -> GroebnerBasis:
    """Reduced Groebner basis by Buchberger's algorithm.

    Pairs are taken in normal-strategy order and pruned by the coprime
    leading-monomial criterion and the chain criterion.
    """
    gens = ideal.generators if isinstance(ideal, JacobianIdeal) else tuple(ideal)
    if not gens:
        raise ValueError("empty generator list")
    nvars = gens[0].nvars
    key = order.key
    G = [_monic(dict(g.terms), key) for g in gens if not g.is_zero()]
    pairs = {(i, j) for j in range(len(G)) for i in range(j)}

    def pair_key(pair):
        i, j = pair
        return (key(_lcm(G[i][0], G[j][0])), i, j)

    while pairs:
        pair = min(pairs, key=pair_key)
        pairs.discard(pair)
        i, j = pair
        li, lj = G[i][0], G[j][0]
        if all(not (x and y) for x, y in zip(li, lj)):
            continue
        lcm = _lcm(li, lj)
        if any(k != i and k != j and _divides(G[k][0], lcm)
               and (min(i, k), max(i, k)) not in pairs
               and (min(j, k), max(j, k)) not in pairs
               for k in range(len(G))):
            continue
        h = _reduce(_spoly(G[i], G[j]), G, key)
        if h:
            G.append(_monic(h, key))
            new = len(G) - 1
            pairs.update((k, new) for k in range(new))

    # minimal basis, then interreduce
    G.sort(key=lambda g: key(g[0]))
    minimal = []
    for lm, g in G:
        if not any(_divides(m, lm) for m, _ in minimal):
            minimal.append((lm, g))
    reduced = []
    for idx, (lm, g) in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1:]
        reduced.append(_monic(_reduce(g, others, key), key))
    reduced.sort(key=lambda g: key(g[0]))
    return GroebnerBasis(tuple(Polynomial(nvars, g) for _, g in reduced), order)


def standard_monomials(G: GroebnerBasis) -> MilnorBasis:
    """Monomials outside the leading-term ideal of ``G``.

    Raises :class:`NonIsolated` when some variable has no pure power among the
    leading monomials, i.e. the quotient is infinite-dimensional.
    """
    lms = G.leading_monomials
    nvars = G.elements[0].nvars if G.elements else len(G.order.weights)
    if any(not any(lm) for lm in lms):
        raise NotSingular("the Jacobian ideal is the unit ideal; the origin is a smooth point")
    bounds = []
    for i in range(nvars):
        powers = [lm[i] for lm in lms if all(a == 0 for k, a in enumerate(lm) if k != i)]
        if not powers:
            raise NonIsolated(
                f"no pure power of variable {i} is a leading monomial; "
                "the singularity is not isolated")
        bounds.append(min(powers))
    basis = [alpha for alpha in itertools.product(*(range(b) for b in bounds))
             if not any(_divides(lm, alpha) for lm in lms)]
    basis.sort(key=G.order.key)
    return MilnorBasis(tuple(basis))


def milnor_basis(f: Polynomial, W: WeightSystem) -> tuple[GroebnerBasis, MilnorBasis]:
    G = groebner(JacobianIdeal.of(f), MonomialOrder.for_weights(W))
    return G, standard_monomials(G)


def milnor_orlik_number(W: WeightSystem) -> Fraction:
    """The product of (1/w_i - 1)."""
    return math.prod((1 / w - 1 for w in W.w), start=Fraction(1))


def milnor_orlik_check(W: WeightSystem, mu: int) -> bool:
    value = milnor_orlik_number(W)
    return value.denominator == 1 and value > 0 and value == mu
