"""Brute-force ground truth by enumerating every tuple of the domains.

Shares nothing with the flow code: it only reads the instance.
"""

from __future__ import annotations

import itertools
import math

from .errors import Infeasible, TooLarge
from .instance import CostGccInstance

GUARD = 10**7


def tuple_count(instance: CostGccInstance) -> int:
    return math.prod(len(dom) for dom in instance.domains)


def enumerate_tuples(instance: CostGccInstance):
    """Yield every cardinality-feasible tuple with its cost, lexicographic order."""
    size = tuple_count(instance)
    if size > GUARD:
        raise TooLarge(f"{size} tuples exceed the enumeration guard of {GUARD}")
    lower, upper, cost = instance.lower, instance.upper, instance.cost
    d = instance.d
    for tau in itertools.product(*instance.domains):
        counts = [0] * d
        for a in tau:
            counts[a] += 1
        if all(lo <= c <= up for lo, c, up in zip(lower, counts, upper)):
            yield tau, sum(cost[(x, a)] for x, a in enumerate(tau))


def oracle_pair_costs(instance: CostGccInstance) -> dict[tuple[int, int], int]:
    """Cheapest feasible tuple containing each pair (pairs in no feasible tuple are absent)."""
    best: dict[tuple[int, int], int] = {}
    for tau, total in enumerate_tuples(instance):
        for x, a in enumerate(tau):
            if best.get((x, a), total + 1) > total:
                best[(x, a)] = total
    return best


def oracle_min_cost(instance: CostGccInstance) -> int:
    """Cheapest cardinality-feasible tuple, ignoring H."""
    best = min((total for _, total in enumerate_tuples(instance)), default=None)
    if best is None:
        raise Infeasible("no tuple satisfies the cardinality bounds")
    return best


def oracle_consistent_pairs(instance: CostGccInstance) -> frozenset[tuple[int, int]]:
    """Pairs that appear in at least one feasible tuple of cost <= H."""
    return frozenset(p for p, c in oracle_pair_costs(instance).items() if c <= instance.H)
