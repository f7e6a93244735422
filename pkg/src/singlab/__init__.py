"""Exact invariants of quasihomogeneous isolated hypersurface singularities,
with a numerical check of the winding of the geometric section."""

from .errors import (InternalConsistencyError, MathematicalRejection, NonIsolated,
                     NonPositive, NonUnique, NoSolution, NotSingular, NumericError,
                     ParseError, SinglabError)
from .milnor import groebner, milnor_basis, standard_monomials
from .parse import parse
from .pipeline import Analysis, analyze, analyze_text, compare
from .poly import Polynomial
from .spectrum import Spectrum, characteristic_polynomial, compute_spectrum, monodromy
from .verdict import Verdict, build_report, winding_prediction
from .weights import WeightSystem, infer_weights

__version__ = "0.1.0"

__all__ = [
    "Analysis", "InternalConsistencyError", "MathematicalRejection", "NoSolution",
    "NonIsolated", "NonPositive", "NonUnique", "NotSingular", "NumericError",
    "ParseError", "Polynomial", "SinglabError", "Spectrum", "Verdict", "WeightSystem",
    "analyze", "analyze_text", "build_report", "characteristic_polynomial", "compare",
    "compute_spectrum", "groebner", "infer_weights", "milnor_basis", "monodromy",
    "parse", "standard_monomials", "winding_prediction",
]
