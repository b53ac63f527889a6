"""Shortest-path trees and strongly connected components over residual graphs."""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .errors import NegativeReducedCost
from .flow import ResidualGraph

#: Distance of a node that cannot be reached. Never compare it numerically.
UNREACHABLE = None

FROM = "from"
INTO = "into"


@dataclass
class SpCounter:
    """Number of single-source shortest-path trees computed during one call."""

    total: int = 0

    def tick(self) -> None:
        self.total += 1


@dataclass(frozen=True)
class DistanceVector:
    """True residual-cost distances from ``root`` (direction ``from``) or to it (``into``).

    ``parent[v]`` is the tree neighbour of ``v`` on its shortest path: the
    predecessor for ``from`` trees, the successor for ``into`` trees.
    """

    root: int
    direction: str
    distances: tuple[int | None, ...]
    parent: tuple[int | None, ...]

    def __getitem__(self, node: int) -> int | None:
        return self.distances[node]

    def __len__(self) -> int:
        return len(self.distances)

    def reachable(self, node: int) -> bool:
        return self.distances[node] is not UNREACHABLE

    def path_to(self, node: int) -> list[int]:
        """Tree path between the root and ``node`` in travel order."""
        if not self.reachable(node):
            raise ValueError(f"node {node} is unreachable from {self.root}")
        walk = [node]
        while walk[-1] != self.root:
            walk.append(self.parent[walk[-1]])
        if self.direction == FROM:
            walk.reverse()
        return walk


def _dijkstra(n_nodes, root, neighbours, potentials, sign):
    # sign=+1: pi-shift for a forward search; -1 for a search on the reverse graph
    dist: list[int | None] = [None] * n_nodes
    parent: list[int | None] = [None] * n_nodes
    done = [False] * n_nodes
    dist[root] = 0
    heap = [(0, root)]
    while heap:
        du, u = heapq.heappop(heap)
        if done[u]:
            continue
        done[u] = True
        for v, cost in neighbours(u):
            if sign > 0:
                rc = cost + potentials[u] - potentials[v]
                if rc < 0:
                    raise NegativeReducedCost(u, v, rc)
            else:
                rc = cost + potentials[v] - potentials[u]
                if rc < 0:
                    raise NegativeReducedCost(v, u, rc)
            nd = du + rc
            if not done[v] and (dist[v] is None or nd < dist[v]):
                dist[v] = nd
                parent[v] = u
                heapq.heappush(heap, (nd, v))
    return dist, parent


def shortest_paths_from(
    residual: ResidualGraph, potentials, source: int, counter: SpCounter | None = None
) -> DistanceVector:
    """Shortest residual distances from ``source`` to every node."""
    adjacency = residual.adjacency

    def neighbours(u):
        return ((r.head, r.cost) for r in adjacency[u])

    red, parent = _dijkstra(residual.n_nodes, source, neighbours, potentials, +1)
    base = potentials[source]
    dist = tuple(None if d is None else d - base + potentials[v] for v, d in enumerate(red))
    if counter is not None:
        counter.tick()
    return DistanceVector(source, FROM, dist, tuple(parent))


def shortest_paths_into(
    residual: ResidualGraph, potentials, sink: int, counter: SpCounter | None = None
) -> DistanceVector:
    """Shortest residual distances from every node to ``sink`` (reverse-graph search)."""
    incoming = residual.incoming

    def neighbours(v):
        return ((u, r.cost) for u, r in incoming[v])

    red, parent = _dijkstra(residual.n_nodes, sink, neighbours, potentials, -1)
    top = potentials[sink]
    dist = tuple(None if d is None else d - potentials[u] + top for u, d in enumerate(red))
    if counter is not None:
        counter.tick()
    return DistanceVector(sink, INTO, dist, tuple(parent))


@dataclass(frozen=True)
class SccPartition:
    component_of: tuple[int, ...]
    components: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.components)

    def same(self, u: int, v: int) -> bool:
        return self.component_of[u] == self.component_of[v]


def strongly_connected_components(residual: ResidualGraph) -> SccPartition:
    """Iterative Tarjan. Components are numbered by their smallest node."""
    n = residual.n_nodes
    adjacency = residual.adjacency
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    found: list[list[int]] = []
    counter = 0

    for root in range(n):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        while work:
            v, i = work[-1]
            out = adjacency[v]
            if i < len(out):
                work[-1] = (v, i + 1)
                w = out[i].head
                if index[w] == -1:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, 0))
                elif on_stack[w]:
                    low[v] = min(low[v], index[w])
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                found.append(sorted(comp))

    found.sort(key=lambda c: c[0])
    component_of = [0] * n
    for cid, comp in enumerate(found):
        for v in comp:
            component_of[v] = cid
    return SccPartition(tuple(component_of), tuple(tuple(c) for c in found))
