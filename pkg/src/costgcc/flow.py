"""Feasible minimum-cost flow on a value network and its residual graph.

The flow starts at zero and lower-bound violations are repaired one arc at
a time: for a violated arc (x, y) a shortest path from y back to x is found
in the residual graph and the resulting cycle is saturated. Dijkstra runs on
reduced costs ``c + pi[u] - pi[v]``; the zero potential is valid at the start
because every input cost is nonnegative and only forward residual arcs exist.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import NamedTuple

from .errors import Infeasible, NegativeReducedCost
from .instance import ValueNetwork


@dataclass(frozen=True)
class FlowState:
    flow: tuple[int, ...]
    total_cost: int
    potentials: tuple[int, ...]


class ResidualArc(NamedTuple):
    head: int
    capacity: int
    cost: int
    arc: int  # index of the network arc it derives from
    forward: bool


@dataclass(frozen=True)
class ResidualGraph:
    """Residual arcs by tail (``adjacency``) and by head (``incoming``).

    ``incoming[v]`` holds ``(tail, arc)`` pairs so that shortest paths *into*
    a node can run over the reversed graph without rebuilding it.
    """

    adjacency: tuple[tuple[ResidualArc, ...], ...]
    incoming: tuple[tuple[tuple[int, ResidualArc], ...], ...]

    @property
    def n_nodes(self) -> int:
        return len(self.adjacency)

    def arcs(self):
        for u, out in enumerate(self.adjacency):
            for r in out:
                yield u, r

    def arc_count(self) -> int:
        return sum(len(out) for out in self.adjacency)

    def find(self, tail: int, head: int) -> ResidualArc | None:
        for r in self.adjacency[tail]:
            if r.head == head:
                return r
        return None


def reduced_cost(tail: int, arc: ResidualArc, potentials) -> int:
    value = arc.cost + potentials[tail] - potentials[arc.head]
    if value < 0:
        raise NegativeReducedCost(tail, arc.head, value)
    return value


def _incidence(network: ValueNetwork) -> tuple[list[list[int]], list[list[int]]]:
    out_arcs: list[list[int]] = [[] for _ in range(network.n_nodes)]
    in_arcs: list[list[int]] = [[] for _ in range(network.n_nodes)]
    for i, arc in enumerate(network.arcs):
        out_arcs[arc.tail].append(i)
        in_arcs[arc.head].append(i)
    return out_arcs, in_arcs


def min_cost_feasible_flow(network: ValueNetwork) -> FlowState:
    """Return a feasible flow of minimum cost, or raise :class:`Infeasible`.

    The violated arc with the lowest index is repaired first. The amount
    pushed is the smallest residual capacity on the cycle, additionally
    capped by the remaining violation ``l - f`` of the repaired arc, so the
    arc never overshoots its lower bound in one step. That cap keeps every
    reduced cost nonnegative after the potential update.
    """
    arcs = network.arcs
    n_nodes = network.n_nodes
    flow = [0] * len(arcs)
    pi = [0] * n_nodes
    out_arcs, in_arcs = _incidence(network)

    for i, arc in enumerate(arcs):
        while flow[i] < arc.lower:
            src, dst = arc.head, arc.tail
            dist: list[int | None] = [None] * n_nodes
            # predecessor as (arc index, forward?)
            pred: list[tuple[int, bool] | None] = [None] * n_nodes
            done = [False] * n_nodes
            dist[src] = 0
            heap = [(0, src)]
            while heap:
                du, u = heapq.heappop(heap)
                if done[u]:
                    continue
                done[u] = True
                pu = pi[u]
                for j in out_arcs[u]:
                    a = arcs[j]
                    if flow[j] < a.upper:
                        v = a.head
                        rc = a.cost + pu - pi[v]
                        if rc < 0:
                            raise NegativeReducedCost(u, v, rc)
                        nd = du + rc
                        if not done[v] and (dist[v] is None or nd < dist[v]):
                            dist[v] = nd
                            pred[v] = (j, True)
                            heapq.heappush(heap, (nd, v))
                for j in in_arcs[u]:
                    a = arcs[j]
                    if flow[j] > a.lower:
                        v = a.tail
                        rc = -a.cost + pu - pi[v]
                        if rc < 0:
                            raise NegativeReducedCost(u, v, rc)
                        nd = du + rc
                        if not done[v] and (dist[v] is None or nd < dist[v]):
                            dist[v] = nd
                            pred[v] = (j, False)
                            heapq.heappush(heap, (nd, v))
            reach = dist[dst]
            if reach is None:
                raise Infeasible(
                    f"no residual path to repair the lower bound of arc {arc.tail}->{arc.head}"
                )

            path = []
            amount = arc.lower - flow[i]
            v = dst
            while v != src:
                j, fwd = pred[v]
                path.append((j, fwd))
                if fwd:
                    amount = min(amount, arcs[j].upper - flow[j])
                    v = arcs[j].tail
                else:
                    amount = min(amount, flow[j] - arcs[j].lower)
                    v = arcs[j].head
            for j, fwd in path:
                flow[j] += amount if fwd else -amount
            flow[i] += amount

            for v in range(n_nodes):
                dv = dist[v]
                pi[v] += reach if dv is None or dv > reach else dv

    total = sum(f * a.cost for f, a in zip(flow, arcs))
    return FlowState(flow=tuple(flow), total_cost=total, potentials=tuple(pi))


def build_residual(network: ValueNetwork, state: FlowState) -> ResidualGraph:
    adjacency: list[list[ResidualArc]] = [[] for _ in range(network.n_nodes)]
    incoming: list[list[tuple[int, ResidualArc]]] = [[] for _ in range(network.n_nodes)]
    for i, arc in enumerate(network.arcs):
        f = state.flow[i]
        if f < arc.upper:
            r = ResidualArc(arc.head, arc.upper - f, arc.cost, i, True)
            adjacency[arc.tail].append(r)
            incoming[arc.head].append((arc.tail, r))
        if f > arc.lower:
            r = ResidualArc(arc.tail, f - arc.lower, -arc.cost, i, False)
            adjacency[arc.head].append(r)
            incoming[arc.tail].append((arc.head, r))
    return ResidualGraph(
        adjacency=tuple(tuple(out) for out in adjacency),
        incoming=tuple(tuple(inc) for inc in incoming),
    )


def assignment(network: ValueNetwork, state: FlowState) -> list[int]:
    """Value index carried by each variable under the flow."""
    assigned = [-1] * network.n_variables
    for (x, a), i in network.domain_arc.items():
        if state.flow[i]:
            assigned[x] = a
    return assigned
