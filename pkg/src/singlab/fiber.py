"""Numerical Milnor fibres, the geometric section and its winding.

Everything here is double precision and works on the unperturbed fibres
``f^{-1}(u)`` inside the ball of radius 0.5, where the standard Kaehler
structure of C^{n+1} restricts to the fibre symplectic structure.

The geometric section on a fibre is evaluated on a frame ``(X_f, E_1..E_n)``
with ``df(X_f) = 1`` and ``E`` spanning ``ker df``; its value is
``det[X_f, E_1, ..., E_n]``.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import (ConvergenceBudgetExceeded, DriftExceeded, NumericError,
                     PhaseStepTooLarge, SingularPoint)
from .poly import Polynomial
from .weights import WeightSystem

NEWTON_TOL = 1e-12
FRAME_TOL = 1e-10
GRADIENT_FLOOR = 1e-8
DRIFT_TOL = 1e-8
PHASE_GUARD = math.pi / 2


class _Compiled:
    """Vectorized evaluation of a polynomial and its gradient."""

    def __init__(self, f: Polynomial):
        self.nvars = f.nvars
        self.value_terms = self._pack(f)
        self.grad_terms = [self._pack(f.partial_derivative(i)) for i in range(f.nvars)]

    def _pack(self, p):
        if p.is_zero():
            return np.zeros((0, self.nvars), dtype=np.int64), np.zeros(0, dtype=complex)
        exps = np.array(list(p.terms.keys()), dtype=np.int64)
        coeffs = np.array([float(c) for c in p.terms.values()], dtype=complex)
        return exps, coeffs

    @staticmethod
    def _eval(packed, Z):
        exps, coeffs = packed
        if not len(coeffs):
            return np.zeros(Z.shape[:-1], dtype=complex)
        return np.prod(Z[..., None, :] ** exps, axis=-1) @ coeffs

    def value(self, Z):
        return self._eval(self.value_terms, np.asarray(Z, dtype=complex))

    def gradient(self, Z):
        Z = np.asarray(Z, dtype=complex)
        return np.stack([self._eval(g, Z) for g in self.grad_terms], axis=-1)


@functools.lru_cache(maxsize=64)
def _compiled(f: Polynomial) -> _Compiled:
    return _Compiled(f)


@dataclass(frozen=True)
class FiberPoint:
    coords: np.ndarray
    fiber_value: complex
    residual: float

    @classmethod
    def on(cls, f: Polynomial, coords, u: complex) -> "FiberPoint":
        coords = np.asarray(coords, dtype=complex)
        return cls(coords, complex(u), float(abs(_compiled(f).value(coords) - u)))

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.coords))


@dataclass(frozen=True)
class TangentFrame:
    X_f: np.ndarray
    E: np.ndarray  # shape (n+1, n), columns span ker df

    def matrix(self) -> np.ndarray:
        return np.column_stack([self.X_f, self.E])


@dataclass(frozen=True)
class WindingResult:
    samples: int
    unwrapped_phase_delta: float
    winding: int
    max_step_phase: float

    def to_dict(self) -> dict:
        return {"samples": self.samples,
                "unwrapped_phase_delta": self.unwrapped_phase_delta,
                "winding": self.winding, "max_step_phase": self.max_step_phase}


def newton_project(f: Polynomial, z, u: complex, tol: float = NEWTON_TOL,
                   max_iter: int = 50):
    """Minimal-norm Newton steps ``z -= (f(z) - u) conj(grad) / |grad|^2``.

    Returns ``(z, residual)``; the residual is above ``tol`` on failure.
    """
    cf = _compiled(f)
    z = np.array(z, dtype=complex)
    res = abs(cf.value(z) - u)
    for _ in range(max_iter):
        if res <= tol:
            break
        g = cf.gradient(z)
        gn = float(np.vdot(g, g).real)
        if gn < GRADIENT_FLOOR ** 2:
            break
        z = z - (cf.value(z) - u) * np.conj(g) / gn
        res = abs(cf.value(z) - u)
    return z, float(res)


def _random_ball_point(rng, dim: int, radius: float):
    v = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    v /= np.linalg.norm(v)
    return v * radius * rng.random() ** (1.0 / (2 * dim))


def sample_fiber(f: Polynomial, u: complex, count: int, seed: int,
                 radius: float = 0.5) -> list:
    """Seeded random points of ``f^{-1}(u)`` inside the ball of ``radius``.

    Starting points are uniform in the ball and pushed onto the fibre by
    Newton's method; only converged regular points inside the ball are kept.
    """
    if count <= 0:
        return []
    if u == 0:
        raise ValueError("fiber value u must be nonzero")
    rng = np.random.default_rng(seed)
    cf = _compiled(f)
    points = []
    budget = 100 * count
    for _ in range(budget):
        z0 = _random_ball_point(rng, f.nvars, radius)
        z, res = newton_project(f, z0, u)
        if res > NEWTON_TOL or np.linalg.norm(z) > radius:
            continue
        if np.linalg.norm(cf.gradient(z)) <= GRADIENT_FLOOR:
            continue
        points.append(FiberPoint(z, complex(u), res))
        if len(points) == count:
            return points
    raise ConvergenceBudgetExceeded(
        f"only {len(points)} of {count} fibre points converged in {budget} attempts")


def frame_at(f: Polynomial, p: FiberPoint) -> TangentFrame:
    """``X_f = conj(grad f)/|grad f|^2`` and an orthonormal basis of ``ker df``."""
    g = _compiled(f).gradient(p.coords)
    norm = float(np.linalg.norm(g))
    if norm <= GRADIENT_FLOOR:
        raise SingularPoint(f"gradient norm {norm:.3g} at {p.coords}")
    X_f = np.conj(g) / norm ** 2
    q, _ = np.linalg.qr(np.conj(g)[:, None], mode="complete")
    E = q[:, 1:]
    if abs(g @ X_f - 1) > FRAME_TOL or np.max(np.abs(g @ E), initial=0.0) > FRAME_TOL:
        raise NumericError("tangent frame fails df(X_f) = 1 or df(E) = 0")
    if E.shape[1] and np.linalg.svd(E, compute_uv=False).min() <= 1e-8:
        raise NumericError("kernel frame is degenerate")
    return TangentFrame(X_f, E)


def section_eval(f: Polynomial, p: FiberPoint, fr: TangentFrame) -> complex:
    """Value of the geometric section on the fibre frame ``fr.E``."""
    g = _compiled(f).gradient(p.coords)
    if abs(g @ fr.X_f - 1) > FRAME_TOL:
        raise NumericError("frame does not belong to this point")
    return complex(np.linalg.det(fr.matrix()))


def act(W: WeightSystem, tau, coords) -> np.ndarray:
    """Weighted circle action ``sigma(exp(2 pi i tau))`` on ``coords``.

    ``tau`` may be an array, giving one row per value.
    """
    tau = np.asarray(tau, dtype=float)
    phases = np.exp(2j * np.pi * np.multiply.outer(tau, np.asarray(W.beta_i, dtype=float)))
    return phases * np.asarray(coords, dtype=complex)


def push_frame(f: Polynomial, W: WeightSystem, tau: float, fr: TangentFrame,
               q: FiberPoint) -> TangentFrame:
    """Push ``fr.E`` by the differential of the action; renormalize ``X_f`` at ``q``."""
    d = np.exp(2j * np.pi * tau * np.asarray(W.beta_i, dtype=float))
    g = _compiled(f).gradient(q.coords)
    return TangentFrame(np.conj(g) / float(np.vdot(g, g).real), d[:, None] * fr.E)


def circle_winding(f: Polynomial, W: WeightSystem, m: int, p: FiberPoint,
                   steps: int | None = None) -> WindingResult:
    """Winding of the section along ``tau -> sigma(exp(2 pi i tau)) p``, ``tau in [0, m]``.

    The base point ``f = u`` travels ``m * beta`` times around the origin.  The
    kernel frame is pushed forward by ``diag(t^beta_j)``; ``X_f`` is recomputed
    at every image point.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    minimum = 64 * m * W.beta
    if steps is None:
        steps = minimum
    if steps < minimum:
        raise ValueError(f"steps must be at least 64*m*beta = {minimum}")
    fr = frame_at(f, p)
    tau = np.linspace(0.0, float(m), steps + 1)
    d = np.exp(2j * np.pi * np.multiply.outer(tau, np.asarray(W.beta_i, dtype=float)))
    Z = d * p.coords
    G = _compiled(f).gradient(Z)
    gn = np.einsum("ij,ij->i", G, np.conj(G)).real
    if np.sqrt(gn.min()) <= GRADIENT_FLOOR:
        raise SingularPoint("orbit passes through a critical point")
    X = np.conj(G) / gn[:, None]
    M = np.concatenate([X[:, :, None], d[:, :, None] * fr.E[None, :, :]], axis=2)
    vals = np.linalg.det(M)
    if np.abs(vals).min() <= 1e-12:
        raise NumericError("section vanishes along the orbit")
    steps_phase = np.angle(vals[1:] / vals[:-1])
    max_step = float(np.abs(steps_phase).max())
    if max_step >= PHASE_GUARD:
        raise PhaseStepTooLarge(
            f"phase step {max_step:.3f} rad >= pi/2; increase steps (now {steps})")
    delta = float(steps_phase.sum())
    turns = delta / (2 * math.pi)
    winding = int(round(turns))
    if abs(turns - winding) > 0.05:
        raise NumericError(f"accumulated phase {turns:.4f} turns is not an integer")
    return WindingResult(steps + 1, delta, winding, max_step)


@dataclass(frozen=True)
class BasePath:
    """A path ``u(t)``, ``t in [0, 1]``, in the punctured base with its derivative."""

    value: Callable[[float], complex]
    derivative: Callable[[float], complex]

    @classmethod
    def circle(cls, u0: complex, turns: int = 1) -> "BasePath":
        w = 2j * math.pi * turns
        return cls(lambda t: u0 * np.exp(w * t), lambda t: w * u0 * np.exp(w * t))

    @classmethod
    def constant(cls, u0: complex) -> "BasePath":
        return cls(lambda t: u0, lambda t: 0j)


def transport_trajectory(f: Polynomial, p: FiberPoint, path: BasePath,
                         steps: int = 400):
    """Horizontal lift of ``path`` starting at ``p``.

    Integrates ``z' = u'(t) conj(grad f)/|grad f|^2`` with classical RK4 and
    re-projects onto the fibre over ``u(t)`` by Newton after every step.
    Returns ``(points, residuals)`` arrays of length ``steps + 1``.
    """
    cf = _compiled(f)
    if abs(path.value(0.0) - p.fiber_value) > DRIFT_TOL:
        raise ValueError("start point is not on the fibre over u(0)")

    def field(t, z):
        g = cf.gradient(z)
        gn = float(np.vdot(g, g).real)
        if math.sqrt(gn) <= GRADIENT_FLOOR:
            raise SingularPoint(f"transport reached a critical point at t={t:.4f}")
        return path.derivative(t) * np.conj(g) / gn

    h = 1.0 / steps
    z = np.array(p.coords, dtype=complex)
    points = [z]
    residuals = [p.residual]
    for k in range(steps):
        t = k * h
        k1 = field(t, z)
        k2 = field(t + h / 2, z + h / 2 * k1)
        k3 = field(t + h / 2, z + h / 2 * k2)
        k4 = field(t + h, z + h * k3)
        z = z + h / 6 * (k1 + 2 * k2 + 2 * k3 + k4)
        z, res = newton_project(f, z, path.value(t + h), tol=1e-14, max_iter=5)
        points.append(z)
        residuals.append(res)
    return np.array(points), np.array(residuals)


def parallel_transport(f: Polynomial, p: FiberPoint, path: BasePath,
                       steps: int = 400) -> FiberPoint:
    points, residuals = transport_trajectory(f, p, path, steps)
    if residuals.max() > DRIFT_TOL:
        raise DriftExceeded(f"fibre residual {residuals.max():.3g} exceeds {DRIFT_TOL}")
    return FiberPoint(points[-1], complex(path.value(1.0)), float(residuals[-1]))


def h_order_check(W: WeightSystem, p: FiberPoint, tol: float = 1e-12) -> bool:
    """Apply ``h = sigma(exp(2 pi i / beta))`` ``beta`` times and compare."""
    step = np.exp(2j * np.pi * np.asarray(W.beta_i, dtype=float) / W.beta)
    z = np.array(p.coords, dtype=complex)
    for _ in range(W.beta):
        z = step * z
    return bool(np.max(np.abs(z - p.coords)) <= tol)


def evaluate(f: Polynomial, Z) -> np.ndarray:
    """Vectorized ``f`` over the last axis of ``Z``."""
    return _compiled(f).value(Z)
