"""Batch runs that emit one metrics record per (instance, method).

Records are written and flushed one at a time, so a crash loses at most the
record in progress. Wall time covers propagation only (no parsing, no
serialization).
"""

from __future__ import annotations

import csv
import json
import math
import time
from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Callable

from .errors import CostGccError, NegativeReducedCost, ParseError
from .generator import GeneratorSpec, generate_instance
from .instance import CostGccInstance
from .io import load_instance, load_tsp
from .landmarks import SelectionPolicy
from .propagator import propagate_landmarks, propagate_regin

FIELDS = (
    "instance_id",
    "method",
    "select",
    "k",
    "H",
    "min_cost",
    "consistent",
    "sp_count",
    "useless_sp_count",
    "landmark_sp_count",
    "removed_arcs",
    "scc_count",
    "cleared_components",
    "wall_time_us",
    "error",
)
TIMING_FIELDS = ("wall_time_us",)
METHODS = ("regin", "landmark")


@dataclass(frozen=True)
class RunConfig:
    methods: tuple[str, ...] = METHODS
    policy: SelectionPolicy = field(default_factory=SelectionPolicy)
    paths: tuple[str, ...] = ()
    generator: GeneratorSpec | None = None
    count: int = 0
    H: int | None = None
    h_multiplier: float | None = None
    format: str = "json"

    def __post_init__(self):
        for m in self.methods:
            if m not in METHODS:
                raise ValueError(f"unknown method {m!r}")
        if self.h_multiplier is not None and self.h_multiplier < 1.0:
            raise ValueError("h_multiplier must be >= 1.0")
        if self.format not in ("json", "csv"):
            raise ValueError(f"unknown format {self.format!r}")


def _sources(config: RunConfig) -> Iterator[tuple[str, Callable[[], CostGccInstance], bool]]:
    for p in config.paths:
        path = Path(p)
        if path.suffix in (".tsp", ".matrix", ".txt"):
            if config.H is None:
                def fail(path=path):
                    raise ParseError(None, f"{path.name}: distance matrices need --h")
                yield path.name, fail, False
            else:
                yield path.name, lambda path=path: load_tsp(path, config.H), False
        else:
            yield path.name, lambda path=path: load_instance(path), False
    if config.generator is not None:
        spec = config.generator
        if config.h_multiplier is not None:
            spec = replace(spec, h_multiplier=config.h_multiplier)
        for i in range(config.count):
            s = replace(spec, seed=spec.seed + i)
            yield f"gen-{s.seed}", lambda s=s: generate_instance(s), True


def _adjust_H(instance: CostGccInstance, config: RunConfig, generated: bool) -> CostGccInstance:
    if config.H is not None and not generated:
        return instance.with_H(config.H)
    if config.h_multiplier is not None and not generated:
        return instance.with_H(math.floor(config.h_multiplier * instance.H))
    return instance


def run_one(instance: CostGccInstance, method: str, policy: SelectionPolicy) -> dict:
    start = time.perf_counter()
    if method == "regin":
        report = propagate_regin(instance)
    else:
        report = propagate_landmarks(instance, policy)
    elapsed = time.perf_counter() - start
    landmark = method == "landmark"
    return {
        "method": method,
        "select": policy.method.value if landmark else "",
        "k": policy.k if landmark else 0,
        "H": instance.H,
        "min_cost": report.min_cost,
        "consistent": report.consistent,
        "sp_count": report.sp_count,
        "useless_sp_count": report.useless_sp_count,
        "landmark_sp_count": report.landmark_sp_count,
        "removed_arcs": len(report.removed),
        "scc_count": report.scc_count,
        "cleared_components": report.cleared_components,
        "wall_time_us": round(elapsed * 1e6),
        "error": "",
    }


def run_benchmark(config: RunConfig) -> Iterator[dict]:
    """Yield one record per instance and method, in input order."""
    for instance_id, load, generated in _sources(config):
        try:
            instance = _adjust_H(load(), config, generated)
        except (OSError, CostGccError) as exc:
            yield _error_record(instance_id, exc)
            continue
        for method in config.methods:
            try:
                record = run_one(instance, method, config.policy)
            except NegativeReducedCost as exc:
                yield _error_record(instance_id, exc, method)
                continue
            yield {"instance_id": instance_id, **record}


def _error_record(instance_id: str, exc: Exception, method: str = "") -> dict:
    record = {name: "" for name in FIELDS}
    record.update(instance_id=instance_id, method=method, error=f"{type(exc).__name__}: {exc}")
    return record


def error_kind(record: dict) -> int:
    """Exit-code class of a record: 0 fine, 2 input problem, 3 invariant breach."""
    err = record.get("error") or ""
    if not err:
        return 0
    return 3 if err.startswith(NegativeReducedCost.__name__) else 2


class ReportWriter:
    """Append-only JSON-lines or CSV writer that flushes after every record."""

    def __init__(self, stream, fmt: str = "json"):
        self.stream = stream
        self.fmt = fmt
        self._csv = None
        if fmt == "csv":
            self._csv = csv.DictWriter(stream, fieldnames=FIELDS, lineterminator="\n")
            self._csv.writeheader()
            stream.flush()

    def write(self, record: dict) -> None:
        if self._csv is not None:
            self._csv.writerow({k: record.get(k, "") for k in FIELDS})
        else:
            self.stream.write(json.dumps({k: record.get(k) for k in FIELDS}) + "\n")
        self.stream.flush()

    def write_all(self, records: Iterable[dict]) -> list[dict]:
        kept = []
        for r in records:
            self.write(r)
            kept.append(r)
        return kept


def strip_timing(record: dict) -> dict:
    return {k: v for k, v in record.items() if k not in TIMING_FIELDS}
