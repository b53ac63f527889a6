"""Arc consistency for costgcc: the shortest-path baseline and the landmark variant.

Both start from a min-cost flow ``f`` and its residual graph. A variable
``x`` assigned to ``b`` loses value ``a`` exactly when

    d(b, a) > H - cost(f) - rc(a, x) - rc(x, b)

with ``rc(a, x) = cost(x, a)`` and ``rc(x, b) = -cost(x, b)``. The baseline
computes one shortest-path tree per assigned value. The landmark variant
first tries to certify values through landmark upper bounds and only falls
back to explicit trees for what stays undecided.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field

from .errors import Infeasible
from .flow import FlowState, ResidualGraph, assignment, build_residual, min_cost_feasible_flow
from .graphs import SccPartition, SpCounter, shortest_paths_from, strongly_connected_components
from .instance import CostGccInstance, ValueNetwork, build_value_network
from .landmarks import Landmark, SelectionPolicy, iter_landmark_nodes, make_landmark


@dataclass(frozen=True)
class SccOutcome:
    component: int
    size: int
    undecided: int
    cleared_by_component_bound: bool
    landmarks_used: int
    explicit_paths: int


@dataclass(frozen=True)
class FilterReport:
    removed: frozenset[tuple[int, int]]
    consistent: bool
    sp_count: int = 0
    useless_sp_count: int = 0
    landmark_sp_count: int = 0
    infeasible: bool = False
    min_cost: int | None = None
    scc_count: int = 0
    scc_outcomes: tuple[SccOutcome, ...] = ()

    @property
    def cleared_components(self) -> int:
        return sum(o.cleared_by_component_bound for o in self.scc_outcomes)


@dataclass
class Context:
    """Everything both propagators derive from the min-cost flow."""

    instance: CostGccInstance
    network: ValueNetwork
    flow: FlowState
    residual: ResidualGraph
    scc: SccPartition
    assigned: list[int]
    # variables grouped under the value they are assigned to, value order
    by_value: dict[int, list[int]] = field(default_factory=dict)

    @property
    def margin(self) -> int:
        return self.instance.H - self.flow.total_cost

    def threshold(self, x: int, a: int) -> int:
        """Largest d(b, a) that keeps value ``a`` of ``x``."""
        cost = self.instance.cost
        return self.margin - cost[(x, a)] + cost[(x, self.assigned[x])]

    def candidates(self, x: int) -> list[int]:
        b = self.assigned[x]
        return [a for a in self.instance.domains[x] if a != b]


def prepare(instance: CostGccInstance) -> Context | FilterReport:
    """Solve the flow; return a failure report when the constraint is inconsistent."""
    network = build_value_network(instance)
    try:
        flow = min_cost_feasible_flow(network)
    except Infeasible:
        return FilterReport(removed=frozenset(), consistent=False, infeasible=True)
    if flow.total_cost > instance.H:
        return FilterReport(removed=frozenset(), consistent=False, min_cost=flow.total_cost)
    residual = build_residual(network, flow)
    ctx = Context(
        instance=instance,
        network=network,
        flow=flow,
        residual=residual,
        scc=strongly_connected_components(residual),
        assigned=assignment(network, flow),
    )
    for a in range(instance.d):
        if flow.flow[network.source_arc(a)] > 0:
            ctx.by_value[a] = []
    for x, b in enumerate(ctx.assigned):
        ctx.by_value[b].append(x)
    return ctx


def tree_removals(ctx: Context, b: int, pairs, counter: SpCounter) -> list[tuple[int, int]]:
    """One explicit tree from value ``b``; return the pairs of ``pairs`` it rejects."""
    net = ctx.network
    tree = shortest_paths_from(ctx.residual, ctx.flow.potentials, net.value_node(b), counter)
    out = []
    for x, a in pairs:
        d = tree[net.value_node(a)]
        if d is None or d > ctx.threshold(x, a):
            out.append((x, a))
    return out


def propagate_regin(instance: CostGccInstance) -> FilterReport:
    ctx = prepare(instance)
    if isinstance(ctx, FilterReport):
        return ctx
    counter = SpCounter()
    removed: list[tuple[int, int]] = []
    useless = 0
    for b, xs in ctx.by_value.items():
        pairs = [(x, a) for x in xs for a in ctx.candidates(x)]
        out = tree_removals(ctx, b, pairs, counter)
        if not out:
            useless += 1
        removed.extend(out)
    return FilterReport(
        removed=frozenset(removed),
        consistent=True,
        sp_count=counter.total,
        useless_sp_count=useless,
        min_cost=ctx.flow.total_cost,
        scc_count=len(ctx.scc),
    )


def component_rc_max(ctx: Context, pairs: Sequence[tuple[int, int]]) -> int | None:
    """Largest residual cost of a zero-flow value->variable arc among ``pairs``."""
    cost = ctx.instance.cost
    return max((cost[p] for p in pairs), default=None)


def component_cleared(
    landmark: Landmark, nodes: Sequence[int], rc_max: int, flow_cost: int, H: int
) -> bool:
    """Component-wide test: every value of every variable in ``nodes`` is consistent."""
    return landmark.max_into(nodes) + landmark.max_from(nodes) <= H - flow_cost - rc_max


def value_kept(
    ctx: Context, x: int, a: int, landmark: Landmark
) -> bool:
    """Landmark test for one value; True means consistent, False means undecided.

    Accepts either the bound through the variable (``d(x,p) + d(p,a)``) or
    through its assigned value (``d(b,p) + d(p,a)`` with the ``rc(x, b)`` term).
    """
    net = ctx.network
    cost = ctx.instance.cost
    b = ctx.assigned[x]
    xn, an, bn = net.variable_node(x), net.value_node(a), net.value_node(b)
    via_x = landmark.bound(xn, an)
    if via_x is not None and via_x <= ctx.margin - cost[(x, a)]:
        return True
    via_b = landmark.bound(bn, an)
    return via_b is not None and via_b <= ctx.threshold(x, a)


def propagate_landmarks(instance: CostGccInstance, policy: SelectionPolicy) -> FilterReport:
    ctx = prepare(instance)
    if isinstance(ctx, FilterReport):
        return ctx
    net, scc = ctx.network, ctx.scc
    counter = SpCounter()
    removed: list[tuple[int, int]] = []

    # A zero-flow arc a->x whose ends sit in different components admits no
    # alternating cycle, so its value is gone without any search.
    per_component: dict[int, list[tuple[int, int]]] = {}
    for x in range(instance.n):
        xn = net.variable_node(x)
        for a in ctx.candidates(x):
            if scc.same(xn, net.value_node(a)):
                per_component.setdefault(scc.component_of[xn], []).append((x, a))
            else:
                removed.append((x, a))

    landmark_sp = 0
    useless = 0
    outcomes = []
    for cid in sorted(per_component):
        pairs = per_component[cid]
        nodes = scc.components[cid]
        rc_max = component_rc_max(ctx, pairs)
        undecided = list(pairs)
        before = counter.total
        used = 0
        cleared = False
        for p in iter_landmark_nodes(
            ctx.residual, ctx.flow.potentials, nodes, cid, policy, counter
        ):
            lm = make_landmark(ctx.residual, ctx.flow.potentials, p, cid, counter)
            used += 1
            if component_cleared(lm, nodes, rc_max, ctx.flow.total_cost, instance.H):
                cleared = True
                undecided = []
                break
            undecided = [(x, a) for x, a in undecided if not value_kept(ctx, x, a, lm)]
            if not undecided:
                break
        landmark_sp += counter.total - before

        explicit = 0
        if undecided:
            groups: dict[int, list[tuple[int, int]]] = {}
            for x, a in undecided:
                groups.setdefault(ctx.assigned[x], []).append((x, a))
            for b in sorted(groups):
                out = tree_removals(ctx, b, groups[b], counter)
                explicit += 1
                if not out:
                    useless += 1
                removed.extend(out)
        outcomes.append(
            SccOutcome(
                component=cid,
                size=len(nodes),
                undecided=len(pairs),
                cleared_by_component_bound=cleared,
                landmarks_used=used,
                explicit_paths=explicit,
            )
        )

    return FilterReport(
        removed=frozenset(removed),
        consistent=True,
        sp_count=counter.total,
        useless_sp_count=useless + landmark_sp,
        landmark_sp_count=landmark_sp,
        min_cost=ctx.flow.total_cost,
        scc_count=len(scc),
        scc_outcomes=tuple(outcomes),
    )


def propagate(instance: CostGccInstance, method: str = "regin", policy: SelectionPolicy | None = None):
    if method == "regin":
        return propagate_regin(instance)
    if method == "landmark":
        return propagate_landmarks(instance, policy or SelectionPolicy())
    raise ValueError(f"unknown method {method!r}")
