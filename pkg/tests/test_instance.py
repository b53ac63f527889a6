import random

import pytest

from costgcc.errors import BadBounds, EmptyDomain, MissingCost, UnknownValue
from costgcc.instance import SINK, SOURCE, CostGccInstance, build_value_network, validate
from costgcc.io import workers_example

from helpers import small_instance


def tiny(**overrides):
    fields = dict(
        variables=("x",),
        values=("a",),
        domains=((0,),),
        cost={(0, 0): 0},
        lower=(1,),
        upper=(1,),
        H=0,
    )
    fields.update(overrides)
    return CostGccInstance(**fields)


def test_example_validates():
    inst = workers_example()
    validate(inst)
    assert inst.n == 7 and inst.d == 5 and inst.H == 11


def test_empty_domain_names_variable():
    with pytest.raises(EmptyDomain) as err:
        validate(tiny(domains=((),), cost={}))
    assert err.value.variable == "x"


def test_inverted_bounds_names_value():
    inst = workers_example()
    bad = CostGccInstance(
        inst.variables, inst.values, inst.domains, inst.cost,
        (3,) + inst.lower[1:], (2,) + inst.upper[1:], inst.H,
    )
    with pytest.raises(BadBounds) as err:
        validate(bad)
    assert err.value.value == "A"


@pytest.mark.parametrize(
    "cost",
    [{}, {(0, 0): -1}, {(0, 0): 1, (0, 1): 2}],
    ids=["missing", "negative", "outside-domain"],
)
def test_cost_map_must_match_domain(cost):
    with pytest.raises(MissingCost):
        validate(tiny(values=("a", "b"), lower=(1, 0), upper=(1, 1), cost=cost))


def test_unknown_value_in_table():
    with pytest.raises(UnknownValue):
        CostGccInstance.from_table({"x": {"zz": 1}}, {"a": (0, 1)}, 3)


def test_single_pair_network():
    net = build_value_network(tiny())
    assert net.n_nodes == 4
    assert len(net.arcs) == 4


def test_example_network_shape():
    inst = workers_example()
    net = build_value_network(inst)
    assert net.n_nodes == 14
    kinds = {"s": 0, "dom": 0, "t": 0, "ts": 0}
    for arc in net.arcs:
        if arc.tail == SOURCE:
            kinds["s"] += 1
        elif arc.head == SINK:
            kinds["t"] += 1
        elif arc.tail == SINK:
            kinds["ts"] += 1
        else:
            kinds["dom"] += 1
    assert kinds == {"s": 5, "dom": 12, "t": 7, "ts": 1}
    assert len(net.arcs) == 25


@pytest.mark.parametrize("seed", range(20))
def test_network_arcs_match_recount(seed):
    inst = small_instance(seed)
    net = build_value_network(inst)
    assert net.n_nodes == inst.n + inst.d + 2
    assert len(net.arcs) == sum(len(dom) for dom in inst.domains) + inst.d + inst.n + 1
    # independent traversal of the domains
    seen = set()
    for x, dom in enumerate(inst.domains):
        for a in dom:
            arc = net.arcs[net.domain_arc[(x, a)]]
            assert (arc.tail, arc.head) == (net.value_node(a), net.variable_node(x))
            assert (arc.lower, arc.upper, arc.cost) == (0, 1, inst.cost[(x, a)])
            seen.add((arc.tail, arc.head))
    assert len(seen) == len(net.domain_arc)
    for a in range(inst.d):
        arc = net.arcs[net.source_arc(a)]
        assert arc == (SOURCE, net.value_node(a), inst.lower[a], inst.upper[a], 0)
    for x in range(inst.n):
        assert net.arcs[net.sink_arc(x)] == (net.variable_node(x), SINK, 1, 1, 0)
    assert net.arcs[net.return_arc] == (SINK, SOURCE, inst.n, inst.n, 0)
    pairs = [(a.tail, a.head) for a in net.arcs]
    assert len(pairs) == len(set(pairs))


def test_network_is_deterministic():
    inst = small_instance(7)
    assert build_value_network(inst) == build_value_network(inst)


def test_unused_value_keeps_source_arc():
    inst = tiny(values=("a", "ghost"), lower=(1, 2), upper=(1, 3))
    net = build_value_network(inst)
    assert net.arcs[net.source_arc(1)].lower == 2
    assert not any(arc.tail == net.value_node(1) for arc in net.arcs)
