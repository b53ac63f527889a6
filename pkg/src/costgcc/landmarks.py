"""Landmark selection inside one strongly connected component.

A landmark ``p`` gives the bound ``d(x, p) + d(p, y) >= d(x, y)`` for every
pair of nodes of its component. Five strategies choose the landmarks:
random, outline (approximate diameter pair), center (midpoint of an outline
path), outline-center (both) and degree (largest ``(in+out) * min(in, out)``).
"""

from __future__ import annotations

import enum
import random
from collections.abc import Iterator, Sequence
from dataclasses import dataclass

from .flow import ResidualGraph
from .graphs import DistanceVector, SpCounter, shortest_paths_from, shortest_paths_into


class Method(str, enum.Enum):
    RANDOM = "random"
    OUTLINE = "outline"
    CENTER = "center"
    OUTLINE_CENTER = "outline-center"
    DEGREE = "degree"


@dataclass(frozen=True)
class SelectionPolicy:
    method: Method = Method.DEGREE
    k: int = 4
    seed: int = 0

    def __post_init__(self):
        object.__setattr__(self, "method", Method(self.method))
        if self.k < 1:
            raise ValueError(f"landmark count must be >= 1, got {self.k}")


@dataclass(frozen=True)
class Landmark:
    node: int
    component: int
    dist_from: DistanceVector  # p -> every node
    dist_into: DistanceVector  # every node -> p

    def max_into(self, nodes: Sequence[int]) -> int:
        return max(self.dist_into[v] for v in nodes)

    def max_from(self, nodes: Sequence[int]) -> int:
        return max(self.dist_from[v] for v in nodes)

    def bound(self, x: int, y: int) -> int | None:
        """Upper bound on d(x, y) through this landmark, None if unusable."""
        a, b = self.dist_into[x], self.dist_from[y]
        if a is None or b is None:
            return None
        return a + b


def make_landmark(
    residual: ResidualGraph, potentials, node: int, component: int, counter: SpCounter | None = None
) -> Landmark:
    """Compute both distance vectors of ``node`` (two shortest-path trees)."""
    return Landmark(
        node=node,
        component=component,
        dist_from=shortest_paths_from(residual, potentials, node, counter),
        dist_into=shortest_paths_into(residual, potentials, node, counter),
    )


def degree_score(residual: ResidualGraph, nodes: Sequence[int]) -> dict[int, int]:
    """``(deg+ + deg-) * min(deg+, deg-)`` counting only arcs inside ``nodes``."""
    inside = set(nodes)
    score = {}
    for v in nodes:
        out_deg = sum(1 for r in residual.adjacency[v] if r.head in inside)
        in_deg = sum(1 for u, _ in residual.incoming[v] if u in inside)
        score[v] = (out_deg + in_deg) * min(out_deg, in_deg)
    return score


def _furthest(tree: DistanceVector, nodes: Sequence[int], exclude=()) -> int | None:
    """Farthest reachable node other than the root and ``exclude``; ties: lowest index."""
    best = None
    for v in nodes:
        d = tree[v]
        if d is None or v == tree.root or v in exclude:
            continue
        if best is None or d > tree[best]:
            best = v
    return best


def outline_pair(
    residual: ResidualGraph,
    potentials,
    component: Sequence[int],
    start: int | None = None,
    counter: SpCounter | None = None,
    exclude=(),
) -> tuple[int, int, DistanceVector | None]:
    """Approximate outline ``(y, z)``: y furthest from ``start``, z furthest from y.

    Nodes in ``exclude`` are never picked (used to spread later rounds of
    landmarks). Also returns the shortest-path tree rooted at ``y``, or None
    when there is no second node to search for.
    """
    nodes = sorted(component)
    if start is None:
        start = nodes[0]
    if len(nodes) == 1:
        return start, start, None
    y = _furthest(shortest_paths_from(residual, potentials, start, counter), nodes, exclude)
    if y is None:
        y = start
    y_tree = shortest_paths_from(residual, potentials, y, counter)
    z = _furthest(y_tree, nodes, exclude)
    if z is None:
        return y, y, None
    return y, z, y_tree


def midpoint(y_tree: DistanceVector, z: int, exclude=()) -> int | None:
    """Node of the tree path y -> z whose distance from y is nearest half the path cost.

    Ties prefer the node at or below the half (floor split), then the lowest index.
    """
    total = y_tree[z]
    path = [v for v in y_tree.path_to(z) if v not in exclude]
    if not path:
        return None
    return min(
        path,
        key=lambda v: (abs(2 * y_tree[v] - total), 0 if 2 * y_tree[v] <= total else 1, v),
    )


def center_node(
    residual: ResidualGraph,
    potentials,
    component: Sequence[int],
    start: int | None = None,
    counter: SpCounter | None = None,
) -> int:
    y, z, y_tree = outline_pair(residual, potentials, component, start, counter)
    if y_tree is None:
        return y
    return midpoint(y_tree, z)


def iter_landmark_nodes(
    residual: ResidualGraph,
    potentials,
    component: Sequence[int],
    component_id: int,
    policy: SelectionPolicy,
    counter: SpCounter | None = None,
) -> Iterator[int]:
    """Yield up to ``min(k, |component|)`` distinct landmark nodes, lazily.

    Probe searches needed by outline-based methods only run when the
    consumer asks for the next node, so unused landmarks cost nothing.
    """
    nodes = sorted(component)
    limit = min(policy.k, len(nodes))
    method = policy.method

    if method is Method.RANDOM:
        rng = random.Random(policy.seed * 1_000_003 + component_id)
        yield from rng.sample(nodes, limit)
        return

    if method is Method.DEGREE:
        score = degree_score(residual, nodes)
        yield from sorted(nodes, key=lambda v: (-score[v], v))[:limit]
        return

    chosen: list[int] = []
    tried: set[int] = set()
    while len(chosen) < limit:
        start = next((v for v in nodes if v not in chosen and v not in tried), None)
        if start is None:
            break
        tried.add(start)
        taken = set(chosen)
        y, z, y_tree = outline_pair(residual, potentials, nodes, start, counter, taken)
        mid = midpoint(y_tree, z, taken) if y_tree is not None else y
        if method is Method.OUTLINE:
            batch = [y, z]
        elif method is Method.CENTER:
            batch = [mid]
        else:
            batch = [y, z, mid]
        for v in batch:
            if v is not None and v not in chosen:
                chosen.append(v)
                yield v
                if len(chosen) == limit:
                    return
    # every start node tried: fill up in index order
    for v in nodes:
        if len(chosen) == limit:
            return
        if v not in chosen:
            chosen.append(v)
            yield v


def select_landmarks(
    residual: ResidualGraph,
    potentials,
    component: Sequence[int],
    component_id: int,
    policy: SelectionPolicy,
    counter: SpCounter | None = None,
) -> list[Landmark]:
    """Eagerly select and populate every landmark of one component."""
    return [
        make_landmark(residual, potentials, p, component_id, counter)
        for p in iter_landmark_nodes(residual, potentials, component, component_id, policy, counter)
    ]
