"""Sparse multivariate polynomials with exact rational coefficients."""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from numbers import Rational
from types import MappingProxyType
from typing import Mapping, Sequence

Monomial = tuple  # tuple[int, ...], one exponent per variable

DEFAULT_VARIABLES = ("x", "y", "z", "w")


def default_variables(count: int) -> list[str]:
    """``x, y, z, w`` then ``z4, z5, ...``."""
    names = list(DEFAULT_VARIABLES[:count])
    names.extend(f"z{i}" for i in range(len(names), count))
    return names


def weighted_degree(alpha: Sequence[int], weights: Sequence) -> object:
    return sum(a * b for a, b in zip(alpha, weights))


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, Rational)) and not isinstance(c, bool):
        return Fraction(c)
    raise TypeError(f"exact rational coefficient expected, got {type(c).__name__}")


class Polynomial:
    """Immutable polynomial in ``nvars`` variables over the rationals.

    ``terms`` maps exponent tuples to nonzero :class:`~fractions.Fraction`
    coefficients.  Zero coefficients are never stored, so two polynomials are
    equal exactly when their term maps are equal.
    """

    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Sequence[int], object] | None = None):
        if nvars < 0:
            raise ValueError("nvars must be non-negative")
        clean = {}
        for alpha, c in (terms or {}).items():
            alpha = tuple(int(a) for a in alpha)
            if len(alpha) != nvars:
                raise ValueError(f"monomial {alpha} does not have {nvars} exponents")
            if any(a < 0 for a in alpha):
                raise ValueError(f"negative exponent in {alpha}")
            c = _as_fraction(c)
            if c:
                clean[alpha] = clean.get(alpha, 0) + c
                if not clean[alpha]:
                    del clean[alpha]
        self.nvars = nvars
        self._terms = clean
        self._hash = None

    # construction helpers

    @classmethod
    def zero(cls, nvars: int) -> "Polynomial":
        return cls(nvars)

    @classmethod
    def constant(cls, nvars: int, c) -> "Polynomial":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, nvars: int, i: int) -> "Polynomial":
        if not 0 <= i < nvars:
            raise IndexError(f"variable index {i} out of range for {nvars} variables")
        alpha = [0] * nvars
        alpha[i] = 1
        return cls(nvars, {tuple(alpha): 1})

    @classmethod
    def monomial(cls, alpha: Sequence[int], c=1) -> "Polynomial":
        return cls(len(alpha), {tuple(alpha): c})

    @classmethod
    def _from_clean(cls, nvars, terms):
        p = cls.__new__(cls)
        p.nvars = nvars
        p._terms = terms
        p._hash = None
        return p

    # container protocol

    @property
    def terms(self) -> Mapping[Monomial, Fraction]:
        return MappingProxyType(self._terms)

    @property
    def support(self) -> list[Monomial]:
        return sorted(self._terms)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, alpha: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(alpha), Fraction(0))

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.nvars == other.nvars and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == Polynomial.constant(self.nvars, other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    # ring operations

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.nvars != self.nvars:
                raise ValueError(
                    f"variable count mismatch: {self.nvars} vs {other.nvars}")
            return other
        return Polynomial.constant(self.nvars, _as_fraction(other))

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self._terms)
        for alpha, c in other._terms.items():
            s = out.get(alpha, 0) + c
            if s:
                out[alpha] = s
            else:
                out.pop(alpha, None)
        return Polynomial._from_clean(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._from_clean(self.nvars, {a: -c for a, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def scalar_mul(self, c) -> "Polynomial":
        c = _as_fraction(c)
        if not c:
            return Polynomial.zero(self.nvars)
        return Polynomial._from_clean(self.nvars, {a: c * v for a, v in self._terms.items()})

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            try:
                return self.scalar_mul(other)
            except TypeError:
                return NotImplemented
        other = self._coerce(other)
        out = defaultdict(Fraction)
        for a, c in self._terms.items():
            for b, d in other._terms.items():
                out[tuple(x + y for x, y in zip(a, b))] += c * d
        return Polynomial._from_clean(self.nvars, {k: v for k, v in out.items() if v})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = Polynomial.constant(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # calculus and evaluation

    def partial_derivative(self, i: int) -> "Polynomial":
        if not 0 <= i < self.nvars:
            raise IndexError(f"variable index {i} out of range for {self.nvars} variables")
        out = {}
        for alpha, c in self._terms.items():
            if alpha[i]:
                beta = list(alpha)
                beta[i] -= 1
                out[tuple(beta)] = c * alpha[i]
        return Polynomial._from_clean(self.nvars, out)

    def gradient(self) -> list["Polynomial"]:
        return [self.partial_derivative(i) for i in range(self.nvars)]

    def evaluate_complex(self, point: Sequence[complex]) -> complex:
        """Evaluate at a complex point by nested Horner schemes."""
        if len(point) != self.nvars:
            raise ValueError(f"point has length {len(point)}, expected {self.nvars}")
        items = [(a, float(c)) for a, c in self._terms.items()]
        if not items:
            return 0j
        return complex(_horner(items, 0, [complex(z) for z in point]))

    def total_degree(self) -> int:
        return max((sum(a) for a in self._terms), default=-1)

    def permute_variables(self, perm: Sequence[int]) -> "Polynomial":
        """Return the polynomial with old variable ``i`` renamed to ``perm[i]``."""
        out = {}
        for alpha, c in self._terms.items():
            beta = [0] * self.nvars
            for i, a in enumerate(alpha):
                beta[perm[i]] = a
            out[tuple(beta)] = c
        return Polynomial._from_clean(self.nvars, out)

    # printing

    def to_string(self, variables: Sequence[str] | None = None,
                  weights: Sequence | None = None) -> str:
        """Canonical text form, re-parseable by :func:`singlab.parse.parse`.

        Terms are ordered by descending weighted degree (total degree when no
        weights are given), then by descending lexicographic exponent order.
        """
        if variables is None:
            variables = default_variables(self.nvars)
        if len(variables) != self.nvars:
            raise ValueError("wrong number of variable names")
        if weights is None:
            weights = [1] * self.nvars
        if not self._terms:
            return "0"
        order = sorted(self._terms,
                       key=lambda a: (weighted_degree(a, weights), a), reverse=True)
        out = []
        for k, alpha in enumerate(order):
            text = _format_term(self._terms[alpha], alpha, variables)
            if k == 0:
                out.append(text)
            elif text.startswith("-"):
                out.append(" - " + text[1:])
            else:
                out.append(" + " + text)
        return "".join(out)

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return f"Polynomial({self.nvars}, {self.to_string()!r})"


def _format_term(c: Fraction, alpha: Monomial, variables: Sequence[str]) -> str:
    factors = []
    for name, a in zip(variables, alpha):
        if a == 1:
            factors.append(name)
        elif a > 1:
            factors.append(f"{name}^{a}")
    mono = "*".join(factors)
    if not mono:
        return str(c)
    if c == 1:
        return mono
    if c == -1:
        return "-" + mono
    return f"{c}*{mono}"


def _horner(items, k, point):
    if k == len(point):
        return sum(c for _, c in items)
    groups = defaultdict(list)
    for alpha, c in items:
        groups[alpha[k]].append((alpha, c))
    z = point[k]
    acc = 0j
    for d in range(max(groups), -1, -1):
        acc = acc * z
        if d in groups:
            acc += _horner(groups[d], k + 1, point)
    return acc


def add(p: Polynomial, q: Polynomial) -> Polynomial:
    return p + q


def mul(p: Polynomial, q: Polynomial) -> Polynomial:
    return p * q


def scalar_mul(p: Polynomial, c) -> Polynomial:
    return p.scalar_mul(c)


def partial_derivative(p: Polynomial, i: int) -> Polynomial:
    return p.partial_derivative(i)


def evaluate_complex(p: Polynomial, point: Sequence[complex]) -> complex:
    return p.evaluate_complex(point)

