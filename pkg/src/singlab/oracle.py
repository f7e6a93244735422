"""Brute-force Milnor algebra by dense linear algebra, degree by degree.

Shares nothing with the Groebner route beyond the polynomial type.  For a
weighted homogeneous ``f`` the Jacobian ideal ``J`` is graded, so

    dim (Q[z]/J)_d = #{monomials of degree d} - rank{m * df/dz_i in degree d}.

The Hilbert function is computed until it vanishes on a window of
``max(beta_i)`` consecutive degrees; after such a window every monomial of
higher degree is a multiple of a monomial in the window, so the quotient is
zero from there on.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction

from .errors import NonIsolated
from .poly import Polynomial
from .weights import WeightSystem


def monomials_of_degree(beta_i, d: int) -> list:
    """All exponent vectors with ``sum(alpha_i * beta_i) == d``."""
    out = []

    def rec(i, remaining, prefix):
        if i == len(beta_i) - 1:
            if remaining % beta_i[i] == 0:
                out.append(tuple(prefix) + (remaining // beta_i[i],))
            return
        for a in range(remaining // beta_i[i] + 1):
            rec(i + 1, remaining - a * beta_i[i], prefix + [a])

    if d >= 0:
        rec(0, d, [])
    return out


def _rank(rows) -> int:
    pivots = {}
    for row in rows:
        r = dict(row)
        while r:
            c = min(r)
            if c in pivots:
                factor = r[c]
                for k, v in pivots[c].items():
                    nv = r.get(k, 0) - factor * v
                    if nv:
                        r[k] = nv
                    else:
                        r.pop(k, None)
            else:
                inv = 1 / r[c]
                pivots[c] = {k: v * inv for k, v in r.items()}
                break
    return len(pivots)


def hilbert_function(f: Polynomial, W: WeightSystem) -> dict:
    """Dimensions of the graded pieces of ``Q[z] / (df/dz_0, ..., df/dz_n)``."""
    partials = []
    for i in range(f.nvars):
        p = f.partial_derivative(i)
        if p.is_zero():
            continue
        degs = {W.degree(a) for a in p.terms}
        if len(degs) != 1:
            raise ValueError("f is not weighted homogeneous for the given weights")
        partials.append((degs.pop(), p))
    window = max(W.beta_i)
    cap = (f.nvars + 1) * W.beta + window
    h = {}
    d = 0
    zero_run = 0
    while zero_run < window:
        if d > cap:
            raise NonIsolated("Hilbert function of the Jacobian quotient does not vanish")
        cols = {m: k for k, m in enumerate(sorted(monomials_of_degree(W.beta_i, d)))}
        rows = []
        for deg, p in partials:
            for m in monomials_of_degree(W.beta_i, d - deg):
                rows.append({cols[tuple(x + y for x, y in zip(a, m))]: c
                             for a, c in p.terms.items()})
        dim = len(cols) - _rank(rows)
        if dim:
            h[d] = dim
            zero_run = 0
        elif d > 0:
            zero_run += 1
        d += 1
    return h


def milnor_number(f: Polynomial, W: WeightSystem) -> int:
    return sum(hilbert_function(f, W).values())


def spectrum_multiset(f: Polynomial, W: WeightSystem) -> Counter:
    """Spectral numbers read off the Hilbert function.

    A basis monomial of weighted degree ``d`` has ``l = (d + sum beta_i)/beta``.
    """
    out = Counter()
    for d, dim in hilbert_function(f, W).items():
        out[Fraction(d + W.sum_beta, W.beta) - 1] += dim
    return out


def poincare_series(W: WeightSystem) -> dict:
    """Coefficients of ``prod_i (1 - t^(beta - beta_i)) / (1 - t^beta_i)``.

    Classical closed form of the Hilbert series of the Milnor algebra of an
    isolated quasihomogeneous singularity.  Raises ``ValueError`` when the
    quotient is not a polynomial (the weights admit no isolated singularity).
    """
    p = [1]
    for b in W.beta_i:
        top = W.beta - b
        nxt = [0] * (len(p) + top)
        for k, c in enumerate(p):
            nxt[k] += c
            nxt[k + top] -= c
        p = nxt
    for b in W.beta_i:
        deg = len(p) - 1 - b
        if deg < 0:
            raise ValueError(f"weights {W} do not give a polynomial Poincare series")
        q = [0] * (deg + 1)
        for k in range(deg + 1):
            q[k] = p[k] + (q[k - b] if k >= b else 0)
        for k in range(deg + 1, len(p)):
            if p[k] + (q[k - b] if k - b >= 0 else 0) != 0:
                raise ValueError(f"weights {W} do not give a polynomial Poincare series")
        p = q
    return {d: c for d, c in enumerate(p) if c}
