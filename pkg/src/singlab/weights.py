"""Quasihomogeneous weight systems: inference and verification."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import NonPositive, NonUnique, NoSolution
from .poly import Polynomial, weighted_degree


@dataclass(frozen=True)
class WeightSystem:
    """Integer weights ``beta_i`` of the variables and degree ``beta``.

    Stored in primitive form: the constructor divides out the common gcd, so
    ``WeightSystem((2, 2), 4) == WeightSystem((1, 1), 2)``.
    """

    beta_i: tuple
    beta: int

    def __post_init__(self):
        beta_i = tuple(int(b) for b in self.beta_i)
        beta = int(self.beta)
        if not beta_i:
            raise ValueError("at least one variable weight required")
        if beta < 1 or any(b < 1 for b in beta_i):
            raise ValueError("weights and degree must be positive integers")
        g = math.gcd(beta, *beta_i)
        object.__setattr__(self, "beta_i", tuple(b // g for b in beta_i))
        object.__setattr__(self, "beta", beta // g)

    @classmethod
    def from_rationals(cls, w: Sequence) -> "WeightSystem":
        """Build from normalized weights ``w_i = beta_i / beta``."""
        w = [Fraction(x) for x in w]
        if any(x <= 0 for x in w):
            raise ValueError("normalized weights must be positive")
        beta = math.lcm(*(x.denominator for x in w))
        return cls(tuple(int(x * beta) for x in w), beta)

    @classmethod
    def parse(cls, text: str) -> "WeightSystem":
        """Parse the CLI form ``"b0,b1,...:beta"``."""
        try:
            left, right = text.split(":")
            return cls(tuple(int(s) for s in left.split(",")), int(right))
        except ValueError as exc:
            raise ValueError(f"weights must look like 'b0,b1,...:beta', got {text!r}") from exc

    @property
    def nvars(self) -> int:
        return len(self.beta_i)

    @property
    def w(self) -> tuple:
        return tuple(Fraction(b, self.beta) for b in self.beta_i)

    @property
    def sum_beta(self) -> int:
        return sum(self.beta_i)

    def degree(self, alpha: Sequence[int]) -> int:
        """Integer weighted degree sum(alpha_j * beta_j)."""
        return weighted_degree(alpha, self.beta_i)

    def permuted(self, perm: Sequence[int]) -> "WeightSystem":
        beta_i = [0] * self.nvars
        for i, b in enumerate(self.beta_i):
            beta_i[perm[i]] = b
        return WeightSystem(tuple(beta_i), self.beta)

    def to_dict(self) -> dict:
        return {"beta_i": list(self.beta_i), "beta": self.beta,
                "w_i": [str(x) for x in self.w]}

    def __str__(self):
        return f"({','.join(map(str, self.beta_i))}; {self.beta})"


def verify_quasihomogeneous(f: Polynomial, W: WeightSystem) -> bool:
    if f.nvars != W.nvars:
        raise ValueError(f"polynomial has {f.nvars} variables, weights have {W.nvars}")
    return all(W.degree(alpha) == W.beta for alpha in f.terms)


def _solve_exact(rows: list[list[Fraction]], rhs: list[Fraction], ncols: int):
    """Gauss-Jordan elimination. Returns (solution or None, rank, consistent)."""
    m = [list(r) + [b] for r, b in zip(rows, rhs)]
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                factor = m[i][c]
                m[i] = [a - factor * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    consistent = all(row[-1] == 0 for row in m[r:])
    if not consistent or r < ncols:
        return None, r, consistent
    x = [Fraction(0)] * ncols
    for i, c in enumerate(pivots):
        x[c] = m[i][-1]
    return x, r, consistent


def infer_weights(f: Polynomial) -> WeightSystem:
    """Solve ``sum_j alpha_j w_j = 1`` over the support of ``f``.

    Raises :class:`NoSolution` if the system is inconsistent,
    :class:`NonUnique` if it is underdetermined and :class:`NonPositive` if
    the unique solution has a weight outside ``(0, 1)``.
    """
    if f.is_zero():
        raise ValueError("cannot infer weights of the zero polynomial")
    rows = [[Fraction(a) for a in alpha] for alpha in f.support]
    x, rank, consistent = _solve_exact(rows, [Fraction(1)] * len(rows), f.nvars)
    if not consistent:
        raise NoSolution("f is not quasihomogeneous: the weight equations are inconsistent")
    if x is None:
        raise NonUnique(
            f"weight equations have rank {rank} < {f.nvars}; the weight system is not unique",
            hint="pass explicit weights, e.g. --weights 1,1,1:2")
    if any(not 0 < w < 1 for w in x):
        raise NonPositive(
            "the unique weight solution has weights outside (0, 1): "
            + ", ".join(map(str, x)))
    return WeightSystem.from_rationals(x)
