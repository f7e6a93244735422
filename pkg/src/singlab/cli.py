"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 mathematical rejection,
3 numeric verification failure or catalog mismatch, 4 internal consistency
failure.  Errors are reported as JSON on stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from importlib import resources

from . import catalog as catalog_mod
from .errors import (InternalConsistencyError, MathematicalRejection, NumericError,
                     ParseError, SinglabError)
from .pipeline import analyze_text, parse_input, transport_check, verify_winding
from .verdict import compare_invariants
from .weights import WeightSystem

EXIT_OK, EXIT_USAGE, EXIT_REJECTED, EXIT_NUMERIC, EXIT_INTERNAL = 0, 1, 2, 3, 4


def load_schema(name: str) -> dict:
    """Committed JSON schema: ``analysis``, ``winding`` or ``error``."""
    return json.loads(resources.files("singlab").joinpath(f"data/schema/{name}.json").read_text())


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _weights(text):
    if text is None:
        return None
    try:
        return WeightSystem.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _vars(text):
    return [v.strip() for v in text.split(",")] if text else None


def _emit(obj, fmt="json", table=None):
    if fmt == "table" and table is not None:
        print(table(obj))
    else:
        print(json.dumps(obj, indent=2))


def _analysis_table(d):
    rows = [
        ("polynomial", d["canonical"]),
        ("weights", f"beta_i={d['weights']['beta_i']} beta={d['weights']['beta']}"),
        ("mu", d["milnor_basis"]["mu"]),
        ("spectrum", " ".join(d["spectrum"])),
        ("char_poly", d["monodromy"]["char_poly"]),
        ("order", d["monodromy"]["order"]),
    ]
    rows += [(k, v) for k, v in d["report"].items()]
    width = max(len(k) for k, _ in rows)
    return "\n".join(f"{k:<{width}}  {v}" for k, v in rows)


def cmd_analyze(args):
    a = analyze_text(args.poly, _vars(args.vars), _weights(args.weights))
    _emit(a.to_dict(args.poly), args.format, _analysis_table)
    return EXIT_OK


def cmd_spectrum(args):
    a = analyze_text(args.poly, _vars(args.vars), _weights(args.weights))
    d = {"polynomial": a.canonical(), "mu": a.basis.mu, "n": a.n,
         "spectrum": a.spectrum.to_list()}
    _emit(d, args.format, lambda d: " ".join(d["spectrum"]))
    return EXIT_OK


def cmd_compare(args):
    sides = {}
    for side, text, w in (("left", args.f, args.weights_left),
                          ("right", args.g, args.weights_right)):
        try:
            sides[side] = analyze_text(text, _vars(args.vars), _weights(w))
        except SinglabError as exc:
            exc.side = side
            raise
    a, b = sides["left"], sides["right"]
    eq = compare_invariants(a.weights, a.spectrum, b.weights, b.spectrum)
    d = {"left": a.canonical(), "right": b.canonical(), **eq.to_dict(),
         "verdict": ("mu-constant / topologically constant deformation equivalent"
                     if eq.equivalent else "not equivalent")}
    _emit(d, args.format, lambda d: "\n".join(f"{k}: {v}" for k, v in d.items()))
    return EXIT_OK


def cmd_verify_winding(args):
    if args.m < 1:
        raise UsageError("--m must be a positive integer")
    if args.points < 1:
        raise UsageError("--points must be positive")
    a = analyze_text(args.poly, _vars(args.vars), _weights(args.weights))
    minimum = 64 * args.m * a.weights.beta
    if args.steps is not None and args.steps < minimum:
        raise UsageError(f"--steps must be at least 64*m*beta = {minimum}")
    report = verify_winding(a.polynomial, a.weights, args.m, args.points, args.steps,
                            args.seed, args.u)
    _emit(report, args.format, lambda d: "\n".join(
        [f"prediction: {d['prediction']['gamma']}"]
        + [f"point {i}: winding {p['winding']}" for i, p in enumerate(d["points"])]
        + [f"pass: {d['pass']}"]))
    return EXIT_OK if report["pass"] else EXIT_NUMERIC


def cmd_transport_check(args):
    if args.points < 1 or args.steps < 1 or args.turns < 1:
        raise UsageError("--points, --steps and --turns must be positive")
    f, _ = parse_input(args.poly, _vars(args.vars))
    report = transport_check(f, args.points, args.seed, args.u, args.steps, args.turns)
    _emit(report, args.format, lambda d: "\n".join(
        [f"point {i}: max residual {p.get('max_residual')}" for i, p in enumerate(d["points"])]
        + [f"pass: {d['pass']}"]))
    return EXIT_OK if report["pass"] else EXIT_NUMERIC


def cmd_catalog(args):
    items = catalog_mod.entries(args.catalog_file)
    if not args.run:
        listing = [e.summary() for e in items]
        _emit(listing, args.format, lambda rows: "\n".join(
            f"{r['name']:<22} {r['polynomial']:<24} "
            f"{r.get('expected_error') or 'mu=%s %s' % (r['mu'], r['verdict'])}"
            for r in rows))
        return EXIT_OK
    results = catalog_mod.run_catalog(items)
    d = {"entries": [r.to_dict() for r in results],
         "passed": sum(r.ok for r in results), "total": len(results)}
    _emit(d, args.format, lambda d: "\n".join(
        [f"{'PASS' if r['ok'] else 'FAIL'} {r['name']}" + "".join(f"\n    {x}" for x in r["diffs"])
         for r in d["entries"]] + [f"{d['passed']}/{d['total']} passed"]))
    return EXIT_OK if all(r.ok for r in results) else EXIT_NUMERIC


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="singlab", description="Invariants of quasihomogeneous isolated "
                "hypersurface singularities and the symplectic monodromy verdict.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    def common(sp, weights=True):
        sp.add_argument("--vars", help="comma-separated variable names, in order")
        if weights:
            sp.add_argument("--weights", help="weights as b0,b1,...:beta")
        sp.add_argument("--format", choices=("json", "table"), default="json")

    sp = sub.add_parser("analyze", help="full invariant pipeline")
    sp.add_argument("poly")
    common(sp)
    sp.set_defaults(func=cmd_analyze)

    sp = sub.add_parser("spectrum", help="spectral numbers only")
    sp.add_argument("poly")
    common(sp)
    sp.set_defaults(func=cmd_spectrum)

    sp = sub.add_parser("compare", help="same weights / same spectrum comparator")
    sp.add_argument("f")
    sp.add_argument("g")
    common(sp, weights=False)
    sp.add_argument("--weights-left")
    sp.add_argument("--weights-right")
    sp.set_defaults(func=cmd_compare)

    sp = sub.add_parser("verify-winding", help="numerical winding of the geometric section")
    sp.add_argument("poly")
    common(sp)
    sp.add_argument("--m", type=int, default=1)
    sp.add_argument("--points", type=int, default=4)
    sp.add_argument("--steps", type=int, default=None)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--u", type=float, default=0.01, help="fibre value (real, nonzero)")
    sp.set_defaults(func=cmd_verify_winding)

    sp = sub.add_parser("transport-check", help="fibre drift of symplectic parallel transport")
    sp.add_argument("poly")
    common(sp, weights=False)
    sp.add_argument("--points", type=int, default=4)
    sp.add_argument("--steps", type=int, default=400)
    sp.add_argument("--turns", type=int, default=1)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--u", type=float, default=0.01)
    sp.set_defaults(func=cmd_transport_check)

    sp = sub.add_parser("catalog", help="list or run the reference catalog")
    sp.add_argument("--run", action="store_true")
    sp.add_argument("--catalog-file", help="alternative catalog JSON")
    sp.add_argument("--format", choices=("json", "table"), default="json")
    sp.set_defaults(func=cmd_catalog)
    return p


def _fail(code, payload):
    print(json.dumps(payload), file=sys.stderr)
    return code


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if not getattr(args, "func", None):
            raise UsageError("a subcommand is required")
        return args.func(args)
    except UsageError as exc:
        return _fail(EXIT_USAGE, {"error": "UsageError", "message": str(exc),
                                  "usage": parser.format_usage().strip()})
    except SinglabError as exc:
        payload = exc.to_dict()
        if getattr(exc, "side", None):
            payload["side"] = exc.side
        if isinstance(exc, ParseError):
            return _fail(EXIT_USAGE, payload)
        if isinstance(exc, MathematicalRejection):
            return _fail(EXIT_REJECTED, payload)
        if isinstance(exc, NumericError):
            return _fail(EXIT_NUMERIC, payload)
        if isinstance(exc, InternalConsistencyError):
            return _fail(EXIT_INTERNAL, payload)
        return _fail(EXIT_INTERNAL, payload)


if __name__ == "__main__":
    sys.exit(main())
