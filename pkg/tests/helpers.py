"""Independent reference computations and random inputs for the test suite."""

from __future__ import annotations

import random

from hypothesis import strategies as st

from costgcc.errors import Infeasible
from costgcc.flow import ResidualArc, ResidualGraph
from costgcc.instance import CostGccInstance
from costgcc.oracle import oracle_min_cost


def bellman_ford(n_nodes, arcs, source):
    """Plain Bellman-Ford on (tail, head, cost) triples; None marks unreachable."""
    dist = [None] * n_nodes
    dist[source] = 0
    for _ in range(n_nodes):
        changed = False
        for u, v, c in arcs:
            if dist[u] is not None and (dist[v] is None or dist[u] + c < dist[v]):
                dist[v] = dist[u] + c
                changed = True
        if not changed:
            return dist
    raise AssertionError("negative cycle")


def residual_triples(residual: ResidualGraph):
    return [(u, r.head, r.cost) for u, r in residual.arcs()]


def reachability(n_nodes, edges):
    reach = [{v} for v in range(n_nodes)]
    for v in range(n_nodes):
        stack = [v]
        while stack:
            u = stack.pop()
            for a, b in edges:
                if a == u and b not in reach[v]:
                    reach[v].add(b)
                    stack.append(b)
    return reach


def graph_from_arcs(n_nodes, arcs) -> ResidualGraph:
    """Wrap (tail, head, cost) triples as a residual graph (capacity 1, no origin arc)."""
    adjacency = [[] for _ in range(n_nodes)]
    incoming = [[] for _ in range(n_nodes)]
    for i, (u, v, c) in enumerate(arcs):
        r = ResidualArc(v, 1, c, i, True)
        adjacency[u].append(r)
        incoming[v].append((u, r))
    return ResidualGraph(tuple(map(tuple, adjacency)), tuple(map(tuple, incoming)))


def random_potential_graph(rng: random.Random, n_nodes: int, density: float):
    """Random digraph with possibly negative costs but no negative cycle.

    Costs are ``w + h[u] - h[v]`` for nonnegative ``w``, so ``-h`` is a
    valid potential: returns (arcs, potentials).
    """
    h = [rng.randint(-5, 5) for _ in range(n_nodes)]
    arcs = []
    for u in range(n_nodes):
        for v in range(n_nodes):
            if u != v and rng.random() < density:
                arcs.append((u, v, rng.randint(0, 6) + h[u] - h[v]))
    return arcs, [-x for x in h]


def small_instance(seed: int, max_vars: int = 8, max_vals: int = 6) -> CostGccInstance:
    """Seeded random instance small enough for the tuple oracle.

    H is drawn around the optimum so that removals, full consistency and
    inconsistency all show up.
    """
    rng = random.Random(seed)
    n = rng.randint(1, max_vars)
    d = rng.randint(1, max_vals)
    domains, cost = [], {}
    for x in range(n):
        size = rng.randint(1, min(d, 4))
        dom = sorted(rng.sample(range(d), size))
        for a in dom:
            cost[(x, a)] = rng.randint(0, 9)
        domains.append(tuple(dom))
    lower, upper = [], []
    for _ in range(d):
        lo = rng.choice((0, 0, 0, 1, 1, 2))
        lower.append(lo)
        upper.append(lo + rng.randint(0, 3))
    inst = CostGccInstance(
        variables=tuple(f"x{i}" for i in range(n)),
        values=tuple(f"v{i}" for i in range(d)),
        domains=tuple(domains),
        cost=cost,
        lower=tuple(lower),
        upper=tuple(upper),
        H=0,
    )
    try:
        base = oracle_min_cost(inst)
    except Infeasible:
        return inst.with_H(rng.randint(0, 20))
    return inst.with_H(max(0, base + rng.choice((-1, 0, 1, 2, 3, 5, 8, 15))))


@st.composite
def instances(draw, max_vars=6, max_vals=5):
    n = draw(st.integers(1, max_vars))
    d = draw(st.integers(1, max_vals))
    domains, cost = [], {}
    for x in range(n):
        dom = draw(st.lists(st.integers(0, d - 1), min_size=1, max_size=min(d, 4), unique=True))
        dom.sort()
        for a in dom:
            cost[(x, a)] = draw(st.integers(0, 9))
        domains.append(tuple(dom))
    lower = [draw(st.integers(0, 2)) for _ in range(d)]
    upper = [lo + draw(st.integers(0, 3)) for lo in lower]
    inst = CostGccInstance(
        variables=tuple(f"x{i}" for i in range(n)),
        values=tuple(f"v{i}" for i in range(d)),
        domains=tuple(domains),
        cost=cost,
        lower=tuple(lower),
        upper=tuple(upper),
        H=0,
    )
    try:
        base = oracle_min_cost(inst)
    except Infeasible:
        base = 0
    return inst.with_H(max(0, base + draw(st.integers(-1, 12))))
