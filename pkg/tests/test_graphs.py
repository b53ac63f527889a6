import random

import pytest
from hypothesis import given, settings, strategies as st

from costgcc.flow import build_residual, min_cost_feasible_flow
from costgcc.graphs import (
    SpCounter,
    shortest_paths_from,
    shortest_paths_into,
    strongly_connected_components,
)
from costgcc.instance import build_value_network
from costgcc.io import workers_example

from helpers import bellman_ford, graph_from_arcs, random_potential_graph, reachability


@pytest.fixture(scope="module")
def example():
    inst = workers_example()
    net = build_value_network(inst)
    state = min_cost_feasible_flow(net)
    residual = build_residual(net, state)
    node = {n: net.variable_node(i) for i, n in enumerate(inst.variables)}
    node.update({n: net.value_node(i) for i, n in enumerate(inst.values)})
    node.update(s=0, t=1)
    return residual, state.potentials, node


def test_julia_reaches_e_through_s(example):
    residual, pi, node = example
    tree = shortest_paths_from(residual, pi, node["Julia"])
    assert tree[node["E"]] == -1
    assert tree[node["Julia"]] == 0
    assert tree.path_to(node["E"]) == [node["Julia"], node["D"], node["s"], node["E"]]


def test_distances_into_s(example):
    residual, pi, node = example
    into = shortest_paths_into(residual, pi, node["s"])
    assert into[node["D"]] == 0
    assert into[node["Julia"]] == -1
    assert into[node["E"]] == 0
    assert into[node["s"]] == 0
    assert into.path_to(node["E"]) == [node["E"], node["Julia"], node["D"], node["s"]]


def test_example_components(example):
    residual, _, node = example
    scc = strongly_connected_components(residual)
    names = {v: k for k, v in node.items()}
    comps = {frozenset(names[v] for v in c) for c in scc.components if len(c) > 1}
    assert comps == {
        frozenset({"Peter", "A", "Mary", "Paul", "B", "John"}),
        frozenset({"Julia", "D", "s", "E"}),
    }


def test_singleton_graph():
    g = graph_from_arcs(1, [])
    scc = strongly_connected_components(g)
    assert scc.components == ((0,),)
    assert shortest_paths_from(g, [0], 0).distances == (0,)
    assert shortest_paths_into(g, [0], 0).distances == (0,)


def test_counter_ticks_once_per_tree(example):
    residual, pi, node = example
    counter = SpCounter()
    shortest_paths_from(residual, pi, node["A"], counter)
    shortest_paths_into(residual, pi, node["A"], counter)
    shortest_paths_from(residual, pi, node["t"], counter)
    assert counter.total == 3


@pytest.mark.parametrize("seed", range(30))
def test_dijkstra_matches_bellman_ford(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 12)
    arcs, pi = random_potential_graph(rng, n, rng.choice((0.1, 0.25, 0.5)))
    g = graph_from_arcs(n, arcs)
    reversed_arcs = [(v, u, c) for u, v, c in arcs]
    for v in range(n):
        assert list(shortest_paths_from(g, pi, v).distances) == bellman_ford(n, arcs, v)
        # into-tree = forward search on the explicitly reversed graph
        assert list(shortest_paths_into(g, pi, v).distances) == bellman_ford(n, reversed_arcs, v)


@given(st.integers(0, 10**6))
@settings(max_examples=60, deadline=None)
def test_from_and_into_agree(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 9)
    arcs, pi = random_potential_graph(rng, n, 0.3)
    g = graph_from_arcs(n, arcs)
    frm = [shortest_paths_from(g, pi, u) for u in range(n)]
    into = [shortest_paths_into(g, pi, v) for v in range(n)]
    for u in range(n):
        for v in range(n):
            assert frm[u][v] == into[v][u]
            if frm[u].reachable(v):
                # tree slack on every arc
                for a, b, c in arcs:
                    if a == u or frm[u].reachable(a):
                        assert frm[u][b] <= frm[u][a] + c


@given(st.integers(0, 10**6))
@settings(max_examples=80, deadline=None)
def test_scc_matches_reachability(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 14)
    arcs, _ = random_potential_graph(rng, n, rng.choice((0.05, 0.15, 0.3)))
    g = graph_from_arcs(n, arcs)
    scc = strongly_connected_components(g)
    reach = reachability(n, [(u, v) for u, v, _ in arcs])
    for u in range(n):
        for v in range(n):
            assert scc.same(u, v) == (v in reach[u] and u in reach[v])
    mins = [c[0] for c in scc.components]
    assert mins == sorted(mins)
    assert all(list(c) == sorted(c) for c in scc.components)


def test_scc_distances_finite_inside(example):
    residual, pi, _ = example
    scc = strongly_connected_components(residual)
    for comp in scc.components:
        for u in comp:
            tree = shortest_paths_from(residual, pi, u)
            assert all(tree.reachable(v) for v in comp)


def test_deep_path_no_recursion_limit():
    n = 5000
    arcs = [(i, i + 1, 1) for i in range(n - 1)] + [(n - 1, 0, 1)]
    scc = strongly_connected_components(graph_from_arcs(n, arcs))
    assert len(scc) == 1
