"""Decision layer: Seidel's condition, the section condition and the verdict.

``m_f = sum(beta_i) - beta`` and ``gamma1 = l(0) - 1 = m_f / beta``.  The
section condition is ``gamma1 not in Z``; when it holds and ``n >= 2`` the
symplectic monodromy has infinite order.  Nothing is ever concluded about
finite order.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .errors import ConsistencyViolation, InternalConsistencyError
from .spectrum import Spectrum
from .weights import WeightSystem


class Verdict(str, enum.Enum):
    INFINITE_ORDER = "InfiniteOrderSymp"
    INCONCLUSIVE = "InconclusiveUnderPaper"
    NOT_APPLICABLE = "NotApplicable"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class ConditionReport:
    m_f: int
    seidel_ok: bool
    gamma1: Fraction
    section_condition_ok: bool
    qhs_link: bool
    n: int
    verdict: Verdict

    def to_dict(self) -> dict:
        return {"m_f": self.m_f, "seidel_ok": self.seidel_ok, "gamma1": str(self.gamma1),
                "section_condition_ok": self.section_condition_ok,
                "qhs_link": self.qhs_link, "n": self.n, "verdict": self.verdict.value}


def check_implications(report: ConditionReport) -> None:
    if report.qhs_link and not report.section_condition_ok:
        raise InternalConsistencyError("rational homology sphere link without section condition")
    if report.section_condition_ok and not report.seidel_ok:
        raise InternalConsistencyError("section condition holds but m(f) = 0")
    if report.seidel_ok != (report.m_f != 0):
        raise InternalConsistencyError("seidel_ok disagrees with m(f)")


def build_report(W: WeightSystem, spectrum: Spectrum, n: int) -> ConditionReport:
    m_f = W.sum_beta - W.beta
    gamma1 = Fraction(m_f, W.beta)
    if spectrum.minimum != gamma1:
        raise InternalConsistencyError(
            f"minimal spectral number {spectrum.minimum} differs from l(0) - 1 = {gamma1}")
    section_ok = gamma1.denominator != 1
    qhs = spectrum.eigenvalue_one_multiplicity == 0
    if n < 2:
        verdict = Verdict.NOT_APPLICABLE
    elif section_ok:
        verdict = Verdict.INFINITE_ORDER
    else:
        verdict = Verdict.INCONCLUSIVE
    report = ConditionReport(m_f, m_f != 0, gamma1, section_ok, qhs, n, verdict)
    check_implications(report)
    return report


@dataclass(frozen=True)
class WindingPrediction:
    m: int
    k: int
    gamma: int

    def to_dict(self) -> dict:
        return {"m": self.m, "k": self.k, "gamma": self.gamma}


def winding_prediction(W: WeightSystem, m: int) -> WindingPrediction:
    """Expected winding ``m * (sum(beta_i) - beta)`` over the ``m*beta``-fold cover."""
    if m < 1:
        raise ValueError("covering multiplier m must be >= 1")
    return WindingPrediction(m, m * W.beta, m * (W.sum_beta - W.beta))


@dataclass(frozen=True)
class Equivalence:
    same_weights: bool
    same_spectrum: bool

    @property
    def equivalent(self) -> bool:
        return self.same_weights and self.same_spectrum

    def to_dict(self) -> dict:
        return {"same_weights": self.same_weights, "same_spectrum": self.same_spectrum,
                "equivalent": self.equivalent}


def compare_invariants(W_f: WeightSystem, sp_f: Spectrum,
                       W_g: WeightSystem, sp_g: Spectrum) -> Equivalence:
    """Weights and spectra must agree or disagree together.

    A mismatch would contradict the equivalence of "same weights" and "same
    spectrum" for quasihomogeneous isolated singularities, so it raises
    :class:`ConsistencyViolation`.
    """
    same_weights = sorted(W_f.w) == sorted(W_g.w)
    same_spectrum = sp_f.multiset() == sp_g.multiset() and sp_f.n == sp_g.n
    if same_weights != same_spectrum:
        raise ConsistencyViolation(
            f"same_weights={same_weights} but same_spectrum={same_spectrum}")
    return Equivalence(same_weights, same_spectrum)
