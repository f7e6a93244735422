"""End-to-end analysis of a quasihomogeneous isolated singularity."""

from __future__ import annotations

import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import fiber
from .errors import (InternalConsistencyError, NonPositive, NonUnique, NoSolution,
                     NumericError)
from .milnor import (GroebnerBasis, JacobianIdeal, MilnorBasis, MonomialOrder,
                     groebner, milnor_basis, milnor_orlik_check, standard_monomials)
from .parse import detect_variables, parse
from .poly import Polynomial, default_variables
from .spectrum import (MonodromyData, Spectrum, compute_spectrum, monodromy,
                       variation_structure)
from .verdict import (ConditionReport, Equivalence, build_report, compare_invariants,
                      winding_prediction)
from .weights import WeightSystem, infer_weights, verify_quasihomogeneous


def worker_count() -> int:
    """Thread cap from ``SINGLAB_THREADS`` (default 1)."""
    try:
        return max(1, int(os.environ.get("SINGLAB_THREADS", "1")))
    except ValueError:
        return 1


def parallel_map(fn, items) -> list:
    """Map preserving input order, fanned out over ``worker_count()`` threads."""
    items = list(items)
    workers = min(worker_count(), len(items))
    if workers <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def parse_input(text: str, variables: Sequence[str] | None = None):
    if variables is None:
        variables = detect_variables(text) or default_variables(1)
    variables = list(variables)
    return parse(text, variables), variables


def resolve_weights(f: Polynomial, weights: WeightSystem | None = None) -> WeightSystem:
    """Supplied weights are verified; otherwise they are inferred.

    When inference finds the weights underdetermined, isolatedness is probed
    first with a degree order, so that non-isolated input is reported as such.
    """
    if weights is not None:
        if weights.nvars != f.nvars:
            raise NoSolution(f"{weights.nvars} weights given for {f.nvars} variables")
        if not verify_quasihomogeneous(f, weights):
            raise NoSolution(f"f is not quasihomogeneous for the weights {weights}")
        if any(w >= 1 for w in weights.w):
            raise NonPositive(f"weights {weights} have some w_i >= 1")
        return weights
    try:
        return infer_weights(f)
    except NonUnique:
        standard_monomials(groebner(JacobianIdeal.of(f), MonomialOrder.degree_lex(f.nvars)))
        raise


@dataclass(frozen=True)
class Analysis:
    polynomial: Polynomial
    variables: tuple
    weights: WeightSystem
    weights_source: str
    groebner: GroebnerBasis
    basis: MilnorBasis
    spectrum: Spectrum
    variation: tuple
    monodromy: MonodromyData
    report: ConditionReport
    milnor_orlik: bool
    seconds: float

    @property
    def n(self) -> int:
        return self.polynomial.nvars - 1

    def to_dict(self, text: str | None = None, timing: bool = True) -> dict:
        d = {
            "input": {"polynomial": text if text is not None else self.canonical(),
                      "variables": list(self.variables)},
            "canonical": self.canonical(),
            "n": self.n,
            "weights": {**self.weights.to_dict(), "source": self.weights_source},
            "milnor_basis": self.basis.to_dict(),
            "milnor_orlik": self.milnor_orlik,
            "spectrum": self.spectrum.to_list(),
            "variation_structure": [v.to_dict() for v in self.variation],
            "monodromy": self.monodromy.to_dict(),
            "report": self.report.to_dict(),
        }
        if timing:
            d["timing"] = {"seconds": round(self.seconds, 6)}
        return d

    def canonical(self) -> str:
        return self.polynomial.to_string(self.variables, self.weights.beta_i)


def analyze(f: Polynomial, variables: Sequence[str] | None = None,
            weights: WeightSystem | None = None) -> Analysis:
    start = time.perf_counter()
    if variables is None:
        variables = default_variables(f.nvars)
    W = resolve_weights(f, weights)
    G, basis = milnor_basis(f, W)
    mo = milnor_orlik_check(W, basis.mu)
    if not mo:
        raise InternalConsistencyError(
            f"mu = {basis.mu} disagrees with the Milnor-Orlik product for {W}")
    n = f.nvars - 1
    sp = compute_spectrum(basis, W, n)
    mono = monodromy(sp, W)
    report = build_report(W, sp, n)
    if (mono.eigenvalues.count(0) == 0) != report.qhs_link:
        raise InternalConsistencyError("eigenvalue-1 multiplicity disagrees with qhs_link")
    return Analysis(f, tuple(variables), W, "supplied" if weights else "inferred", G,
                    basis, sp, tuple(variation_structure(sp)), mono, report, mo,
                    time.perf_counter() - start)


def analyze_text(text: str, variables: Sequence[str] | None = None,
                 weights: WeightSystem | None = None) -> Analysis:
    f, variables = parse_input(text, variables)
    return analyze(f, variables, weights)


def compare(f: Polynomial, g: Polynomial, weights_f: WeightSystem | None = None,
            weights_g: WeightSystem | None = None) -> Equivalence:
    a = analyze(f, weights=weights_f)
    b = analyze(g, weights=weights_g)
    return compare_invariants(a.weights, a.spectrum, b.weights, b.spectrum)


def _stats(values) -> dict:
    values = np.asarray(values, dtype=float)
    return {"max": float(values.max()), "mean": float(values.mean())} if len(values) else {}


def verify_winding(f: Polynomial, W: WeightSystem, m: int, points: int,
                   steps: int | None = None, seed: int = 0, u: complex = 0.01) -> dict:
    """Measure the circle winding at ``points`` sampled fibre points.

    Passes iff every measured winding equals ``m * (sum(beta_i) - beta)``.
    """
    start = time.perf_counter()
    pred = winding_prediction(W, m)
    steps = steps if steps is not None else 64 * m * W.beta
    samples = fiber.sample_fiber(f, u, points, seed)

    def run(p):
        try:
            r = fiber.circle_winding(f, W, m, p, steps)
            return {"winding": r.winding, "max_step_phase": r.max_step_phase,
                    "unwrapped_phase_delta": r.unwrapped_phase_delta,
                    "h_order_ok": fiber.h_order_check(W, p), "error": None}
        except (NumericError, ValueError) as exc:
            return {"winding": None, "error": getattr(exc, "kind", type(exc).__name__),
                    "message": str(exc)}

    results = parallel_map(run, samples)
    for p, r in zip(samples, results):
        r["coords"] = [[z.real, z.imag] for z in p.coords.tolist()]
        r["residual"] = p.residual
    passed = all(r["error"] is None and r["winding"] == pred.gamma and r["h_order_ok"]
                 for r in results)
    return {
        "polynomial": f.to_string(weights=W.beta_i),
        "weights": W.to_dict(),
        "u": [complex(u).real, complex(u).imag],
        "seed": seed,
        "steps": steps,
        "prediction": pred.to_dict(),
        "points": results,
        "residuals": _stats([p.residual for p in samples]),
        "pass": passed,
        "timing": {"seconds": round(time.perf_counter() - start, 6)},
    }


def transport_check(f: Polynomial, points: int, seed: int = 0, u: complex = 0.01,
                    steps: int = 400, turns: int = 1) -> dict:
    """Transport sampled points once around ``|u|`` and measure fibre drift."""
    start = time.perf_counter()
    samples = fiber.sample_fiber(f, u, points, seed)
    path = fiber.BasePath.circle(u, turns)

    def run(p):
        try:
            traj, residuals = fiber.transport_trajectory(f, p, path, steps)
            modulus = np.abs(fiber.evaluate(f, traj))
            return {"max_residual": float(residuals.max()),
                    "modulus_spread": float(modulus.max() - modulus.min()),
                    "end_displacement": float(np.linalg.norm(traj[-1] - traj[0])),
                    "error": None}
        except NumericError as exc:
            return {"error": exc.kind, "message": str(exc)}

    results = parallel_map(run, samples)
    passed = all(r["error"] is None and r["max_residual"] <= fiber.DRIFT_TOL
                 and r["modulus_spread"] <= fiber.DRIFT_TOL for r in results)
    return {"polynomial": f.to_string(), "seed": seed, "steps": steps, "turns": turns,
            "points": results, "pass": passed,
            "timing": {"seconds": round(time.perf_counter() - start, 6)}}
