#!/usr/bin/env python3
"""Regenerate src/singlab/data/catalog.json from independent routes.

* weights: sympy ``linsolve`` on the exponent equations (or the listed override)
* mu and spectrum: dense linear algebra on the graded Jacobian quotient
  (``singlab.oracle``), never the Groebner route
* m_f and verdict: direct arithmetic on the oracle weights and spectrum
* expected errors: sympy (parametric weight solutions, positive-dimensional
  Groebner basis, inconsistent weight equations)

Usage: python scripts/generate_catalog.py [--check]
"""

import argparse
import json
import math
import sys
from fractions import Fraction
from pathlib import Path

import sympy as sp

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "src"))

from singlab import oracle  # noqa: E402
from singlab.parse import parse  # noqa: E402
from singlab.weights import WeightSystem  # noqa: E402

OUT = ROOT / "src" / "singlab" / "data" / "catalog.json"

DEFINITIONS = [
    ("A1_n2", "x^2+y^2+z^2", "xyz", None),
    ("A1_n3", "x^2+y^2+z^2+w^2", "xyzw", None),
    ("BP_333", "x^3+y^3+z^3", "xyz", None),
    ("BP_352", "x^3+y^5+z^2", "xyz", None),
    ("BP_235", "x^2+y^3+z^5", "xyz", None),
    ("BP_237", "x^2+y^3+z^7", "xyz", None),
    ("BP_444", "x^4+y^4+z^4", "xyz", None),
    ("E7", "x^3+x*y^3+z^2", "xyz", None),
    ("D4", "x^2*y+y^3+z^2", "xyz", None),
    ("T333_xyz", "x^3+y^3+z^3+x*y*z", "xyz", None),
    ("A2_n1", "x^2+y^3", "xy", None),
    ("A1_xy", "x*y+z^2", "xyz", "1,1,1:2"),
    ("nonisolated", "x^2*y^2", "xy", None),
    ("nonunique", "x*y", "xy", None),
    ("not_quasihomogeneous", "x^2+y^3+x*y", "xy", None),
]


def sympy_weights(text, names):
    syms = sp.symbols(names)
    poly = sp.Poly(sp.sympify(text.replace("^", "**")), *syms)
    ws = sp.symbols(f"w0:{len(names)}")
    eqs = [sum(a * w for a, w in zip(mon, ws)) - 1 for mon in poly.monoms()]
    sol = sp.linsolve(eqs, ws)
    if sol == sp.S.EmptySet:
        return "NoSolution"
    (vec,) = list(sol)
    if any(v.free_symbols for v in vec):
        return "NonUnique"
    return [Fraction(int(sp.fraction(v)[0]), int(sp.fraction(v)[1])) for v in vec]


def sympy_isolated(text, names):
    syms = sp.symbols(names)
    f = sp.sympify(text.replace("^", "**"))
    G = sp.groebner([sp.diff(f, s) for s in syms], *syms, order="grevlex")
    return G.is_zero_dimensional


def entry(name, text, names, override):
    names = list(names)
    rec = {"name": name, "polynomial": text, "variables": names, "n": len(names) - 1,
           "weights": override}
    if override is None:
        w = sympy_weights(text, names)
        if isinstance(w, str):
            if w == "NonUnique" and not sympy_isolated(text, names):
                w = "NonIsolated"
            rec["expected_error"] = {"value": w, "provenance": "DERIVED: sympy linsolve/groebner"}
            return rec
        beta = math.lcm(*(x.denominator for x in w))
        W = WeightSystem(tuple(int(x * beta) for x in w), beta)
        wprov = "DERIVED: sympy linsolve on exponent equations"
    else:
        W = WeightSystem.parse(override)
        wprov = "TRIVIAL: supplied weights"
    f = parse(text, names)
    counts = oracle.spectrum_multiset(f, W)
    gammas = sorted(counts.elements())
    mu = len(gammas)
    m_f = W.sum_beta - W.beta
    gamma1 = Fraction(m_f, W.beta)
    n = len(names) - 1
    if n < 2:
        verdict = "NotApplicable"
    elif gamma1.denominator != 1:
        verdict = "InfiniteOrderSymp"
    else:
        verdict = "InconclusiveUnderPaper"
    oracle_tag = "DERIVED: dense linear algebra Hilbert function of the Jacobian quotient"
    rec["expected"] = {
        "weights": {"value": {"beta_i": list(W.beta_i), "beta": W.beta}, "provenance": wprov},
        "mu": {"value": mu, "provenance": oracle_tag},
        "spectrum": {"value": [str(g) for g in gammas], "provenance": oracle_tag},
        "m_f": {"value": m_f, "provenance": "DERIVED: sum(beta_i) - beta on oracle weights"},
        "verdict": {"value": verdict,
                    "provenance": "DERIVED: n >= 2 and (sum(beta_i) - beta)/beta not an integer"},
    }
    return rec


def build():
    return {"format": 1, "generator": "scripts/generate_catalog.py",
            "entries": [entry(*d) for d in DEFINITIONS]}


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--check", action="store_true",
                    help="compare against the committed file instead of writing")
    args = ap.parse_args()
    text = json.dumps(build(), indent=2) + "\n"
    if args.check:
        same = OUT.read_text() == text
        print("catalog up to date" if same else "catalog differs from generator output")
        return 0 if same else 1
    OUT.write_text(text)
    print(f"wrote {OUT}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
