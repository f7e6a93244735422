"""Reference singularities with independently derived expected invariants.

The data file ``data/catalog.json`` is produced by
``scripts/generate_catalog.py``; every expected value carries a provenance
tag naming the route that produced it.
"""

from __future__ import annotations

import json
import time
from collections import Counter
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .errors import SinglabError
from .pipeline import analyze_text, parallel_map
from .weights import WeightSystem


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    polynomial: str
    variables: tuple
    n: int
    weights: str | None = None
    expected: dict = field(default_factory=dict)
    expected_error: str | None = None

    @classmethod
    def from_dict(cls, d: dict) -> "CatalogEntry":
        err = d.get("expected_error")
        return cls(d["name"], d["polynomial"], tuple(d["variables"]), d["n"],
                   d.get("weights"),
                   {k: v["value"] for k, v in d.get("expected", {}).items()},
                   err["value"] if err else None)

    @property
    def weight_system(self) -> WeightSystem | None:
        return WeightSystem.parse(self.weights) if self.weights else None

    def summary(self) -> dict:
        d = {"name": self.name, "polynomial": self.polynomial, "n": self.n}
        if self.expected_error:
            d["expected_error"] = self.expected_error
        else:
            d["mu"] = self.expected.get("mu")
            d["verdict"] = self.expected.get("verdict")
        return d


def raw_catalog(path: str | Path | None = None) -> dict:
    if path is None:
        text = resources.files("singlab").joinpath("data/catalog.json").read_text()
    else:
        text = Path(path).read_text()
    return json.loads(text)


def entries(path: str | Path | None = None) -> list:
    return [CatalogEntry.from_dict(d) for d in raw_catalog(path)["entries"]]


def get(name: str) -> CatalogEntry:
    for e in entries():
        if e.name == name:
            return e
    raise KeyError(name)


@dataclass
class EntryResult:
    name: str
    diffs: list
    seconds: float

    @property
    def ok(self) -> bool:
        return not self.diffs

    def to_dict(self) -> dict:
        return {"name": self.name, "ok": self.ok, "diffs": self.diffs,
                "seconds": round(self.seconds, 6)}


def run_entry(entry: CatalogEntry) -> EntryResult:
    """Run the full pipeline on ``entry`` and list every mismatch."""
    start = time.perf_counter()
    diffs = []
    try:
        a = analyze_text(entry.polynomial, entry.variables, entry.weight_system)
    except SinglabError as exc:
        if exc.kind != entry.expected_error:
            diffs.append(f"error: expected {entry.expected_error}, got {exc.kind}: {exc}")
        return EntryResult(entry.name, diffs, time.perf_counter() - start)
    if entry.expected_error:
        diffs.append(f"error: expected {entry.expected_error}, pipeline succeeded")
        return EntryResult(entry.name, diffs, time.perf_counter() - start)
    exp = entry.expected
    got = {
        "weights": {"beta_i": list(a.weights.beta_i), "beta": a.weights.beta},
        "mu": a.basis.mu,
        "spectrum": a.spectrum.to_list(),
        "m_f": a.report.m_f,
        "verdict": a.report.verdict.value,
    }
    for key in ("weights", "mu", "m_f", "verdict"):
        if key in exp and exp[key] != got[key]:
            diffs.append(f"{key}: expected {exp[key]}, got {got[key]}")
    if "spectrum" in exp and Counter(exp["spectrum"]) != Counter(got["spectrum"]):
        diffs.append(f"spectrum: expected {exp['spectrum']}, got {got['spectrum']}")
    if a.n != entry.n:
        diffs.append(f"n: expected {entry.n}, got {a.n}")
    return EntryResult(entry.name, diffs, time.perf_counter() - start)


def run_catalog(items=None) -> list:
    return parallel_map(run_entry, entries() if items is None else items)
