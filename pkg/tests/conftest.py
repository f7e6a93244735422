import contextlib
import random
import time

import pytest
from hypothesis import strategies as st

from singlab import catalog
from singlab.pipeline import analyze_text
from singlab.poly import Polynomial

ACCEPTANCE = []


@contextlib.contextmanager
def criterion(number, title):
    """Record a pass/fail line for an acceptance criterion around the block."""
    detail = {}
    start = time.perf_counter()
    try:
        yield detail
    except BaseException as exc:
        ACCEPTANCE.append((number, title, False, f"{type(exc).__name__}: {exc}"[:200]))
        print(f"criterion {number}: FAIL {title}")
        raise
    extra = detail.get("summary", "")
    ACCEPTANCE.append((number, title, True, f"{extra} ({time.perf_counter() - start:.2f}s)"))
    print(f"criterion {number}: PASS {title} {extra}")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, ok, detail in sorted(ACCEPTANCE, key=lambda r: r[0]):
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {number}. {title}: {detail}")


@pytest.fixture(scope="session")
def catalog_entries():
    return catalog.entries()


@pytest.fixture(scope="session")
def catalog_analyses(catalog_entries):
    """Full analyses of every catalog entry that is expected to succeed."""
    return {e.name: analyze_text(e.polynomial, e.variables, e.weight_system)
            for e in catalog_entries if not e.expected_error}


def random_bp_tuples(count, low=2, high=9, nvars=3, seed=20240601):
    rng = random.Random(seed)
    return [tuple(rng.randint(low, high) for _ in range(nvars)) for _ in range(count)]


def bp_text(exponents, names=("x", "y", "z", "w")):
    return "+".join(f"{v}^{a}" for v, a in zip(names, exponents))


def polynomials(nvars=2, max_terms=4, max_exp=3):
    """Hypothesis strategy for small polynomials with rational coefficients."""
    coeff = st.fractions(min_value=-5, max_value=5, max_denominator=4)
    mono = st.tuples(*[st.integers(0, max_exp)] * nvars)
    return st.dictionaries(mono, coeff, max_size=max_terms).map(
        lambda d: Polynomial(nvars, d))
