"""Seeded random costgcc instances for tests and benchmarks."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .errors import Infeasible
from .flow import min_cost_feasible_flow
from .instance import CostGccInstance, build_value_network

BOUND_STYLES = ("alldiff", "loose", "tight")


@dataclass(frozen=True)
class GeneratorSpec:
    n_variables: int = 20
    n_values: int = 10
    density: float = 0.5
    cost_min: int = 1
    cost_max: int = 10
    bounds: str = "loose"
    seed: int = 0
    # None: H is the min-cost flow value times h_multiplier ("regular H")
    H: int | None = None
    h_multiplier: float = 1.0

    def __post_init__(self):
        if self.n_variables < 1 or self.n_values < 1:
            raise ValueError("need at least one variable and one value")
        if not 0 < self.density <= 1:
            raise ValueError(f"density must be in (0, 1], got {self.density}")
        if not 0 <= self.cost_min <= self.cost_max:
            raise ValueError("cost range must satisfy 0 <= cost_min <= cost_max")
        if self.bounds not in BOUND_STYLES:
            raise ValueError(f"bounds style must be one of {BOUND_STYLES}")
        if self.h_multiplier < 1.0:
            raise ValueError("h_multiplier must be >= 1.0")


def _bounds(spec: GeneratorSpec, rng: random.Random) -> list[tuple[int, int]]:
    n, d = spec.n_variables, spec.n_values
    if spec.bounds == "alldiff":
        return [(0, 1)] * d
    share = n / d
    if spec.bounds == "loose":
        return [(0, max(1, math.ceil(2 * share)))] * d
    out = []
    for _ in range(d):
        lo = rng.randint(0, max(0, math.floor(share)))
        out.append((lo, lo + rng.randint(0, max(1, math.ceil(share)))))
    return out


def generate_instance(spec: GeneratorSpec) -> CostGccInstance:
    """Random domains and costs; deterministic under ``spec.seed``.

    When ``spec.H`` is None, H becomes ``floor(h_multiplier * min_cost)`` where
    min_cost is the cheapest feasible assignment, or 0 if none exists.
    """
    rng = random.Random(spec.seed)
    n, d = spec.n_variables, spec.n_values
    variables = tuple(f"x{i}" for i in range(n))
    values = tuple(f"v{i}" for i in range(d))
    domains = []
    cost = {}
    for x in range(n):
        dom = [a for a in range(d) if rng.random() < spec.density]
        if not dom:
            dom = [rng.randrange(d)]
        for a in dom:
            cost[(x, a)] = rng.randint(spec.cost_min, spec.cost_max)
        domains.append(tuple(dom))
    bounds = _bounds(spec, rng)
    instance = CostGccInstance(
        variables=variables,
        values=values,
        domains=tuple(domains),
        cost=cost,
        lower=tuple(b[0] for b in bounds),
        upper=tuple(b[1] for b in bounds),
        H=0 if spec.H is None else spec.H,
    )
    if spec.H is None:
        try:
            base = min_cost_feasible_flow(build_value_network(instance)).total_cost
        except Infeasible:
            base = 0
        instance = instance.with_H(math.floor(spec.h_multiplier * base))
    return instance
