"""costgcc instance model and the value network built from it.

Node layout of a value network with ``d`` values and ``n`` variables::

    0            source s
    1            sink t
    2 .. d+1     one node per value
    d+2 .. d+n+1 one node per variable

Arc order: the ``d`` s->value arcs, then the domain arcs (value->variable,
by variable index then domain order), then the ``n`` variable->t arcs and
finally the single t->s arc.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass, field
from typing import NamedTuple

from .errors import BadBounds, EmptyDomain, MissingCost, UnknownValue, ValidationError

SOURCE = 0
SINK = 1


@dataclass(frozen=True)
class CostGccInstance:
    """A global cardinality constraint with assignment costs.

    ``domains[x]`` lists the value indices currently allowed for variable
    ``x`` and ``cost[(x, a)]`` is the price of assigning value ``a`` to
    ``x``. Value ``i`` must be used between ``lower[i]`` and ``upper[i]``
    times and the summed cost of an assignment may not exceed ``H``.
    """

    variables: tuple[str, ...]
    values: tuple[str, ...]
    domains: tuple[tuple[int, ...], ...]
    cost: Mapping[tuple[int, int], int]
    lower: tuple[int, ...]
    upper: tuple[int, ...]
    H: int

    @classmethod
    def from_table(
        cls,
        table: Mapping[str, Mapping[str, int]],
        bounds: Mapping[str, tuple[int, int]],
        H: int,
        *,
        variables: Sequence[str] | None = None,
        values: Sequence[str] | None = None,
    ) -> CostGccInstance:
        """Build an instance from ``{variable: {value: cost}}`` and ``{value: (l, u)}``.

        Variable and value order default to the mapping order. Unknown value
        names raise :class:`UnknownValue`.
        """
        variables = tuple(variables if variables is not None else table)
        values = tuple(values if values is not None else bounds)
        index = {name: i for i, name in enumerate(values)}
        domains = []
        cost: dict[tuple[int, int], int] = {}
        for x, var in enumerate(variables):
            dom = []
            for val, c in table.get(var, {}).items():
                if val not in index:
                    raise UnknownValue(var, val)
                dom.append(index[val])
                cost[(x, index[val])] = c
            domains.append(tuple(dom))
        return cls(
            variables=variables,
            values=values,
            domains=tuple(domains),
            cost=cost,
            lower=tuple(bounds[v][0] for v in values),
            upper=tuple(bounds[v][1] for v in values),
            H=H,
        )

    @property
    def n(self) -> int:
        return len(self.variables)

    @property
    def d(self) -> int:
        return len(self.values)

    def pairs(self) -> Iterator[tuple[int, int]]:
        """All (variable, value) domain pairs in variable-then-domain order."""
        for x, dom in enumerate(self.domains):
            for a in dom:
                yield (x, a)

    def with_H(self, H: int) -> CostGccInstance:
        return CostGccInstance(
            self.variables, self.values, self.domains, self.cost, self.lower, self.upper, H
        )

    def pair_names(self, pairs: Iterable[tuple[int, int]]) -> set[tuple[str, str]]:
        return {(self.variables[x], self.values[a]) for x, a in pairs}


def validate(instance: CostGccInstance) -> None:
    """Raise a :class:`ValidationError` subclass naming the first broken invariant."""
    n, d = instance.n, instance.d
    if len(instance.domains) != n:
        raise ValidationError(f"{len(instance.domains)} domains for {n} variables")
    if len(instance.lower) != d or len(instance.upper) != d:
        raise ValidationError("bounds must have one entry per value")
    for i, (lo, up) in enumerate(zip(instance.lower, instance.upper)):
        if not (0 <= lo <= up):
            raise BadBounds(instance.values[i], lo, up)
    if instance.H < 0:
        raise ValidationError(f"H must be nonnegative, got {instance.H}")
    expected = set()
    for x, dom in enumerate(instance.domains):
        name = instance.variables[x]
        if not dom:
            raise EmptyDomain(name)
        if len(set(dom)) != len(dom):
            raise ValidationError(f"variable {name!r} lists a value twice")
        for a in dom:
            if not 0 <= a < d:
                raise UnknownValue(name, a)
            c = instance.cost.get((x, a))
            if c is None:
                raise MissingCost(name, instance.values[a])
            if c < 0:
                raise MissingCost(name, instance.values[a], f"negative cost {c}")
            expected.add((x, a))
    extra = set(instance.cost) - expected
    if extra:
        x, a = min(extra)
        var = instance.variables[x] if 0 <= x < n else str(x)
        val = instance.values[a] if 0 <= a < d else str(a)
        raise MissingCost(var, val, "cost given for a pair outside the domain")


class Arc(NamedTuple):
    tail: int
    head: int
    lower: int
    upper: int
    cost: int


@dataclass(frozen=True)
class ValueNetwork:
    n_values: int
    n_variables: int
    arcs: tuple[Arc, ...]
    # (variable, value) -> index of the value->variable arc
    domain_arc: Mapping[tuple[int, int], int] = field(repr=False)

    @property
    def n_nodes(self) -> int:
        return self.n_values + self.n_variables + 2

    def value_node(self, a: int) -> int:
        return 2 + a

    def variable_node(self, x: int) -> int:
        return 2 + self.n_values + x

    def is_value(self, node: int) -> bool:
        return 2 <= node < 2 + self.n_values

    def is_variable(self, node: int) -> bool:
        return 2 + self.n_values <= node < self.n_nodes

    def value_of(self, node: int) -> int:
        return node - 2

    def variable_of(self, node: int) -> int:
        return node - 2 - self.n_values

    def source_arc(self, a: int) -> int:
        return a

    def sink_arc(self, x: int) -> int:
        return self.n_values + len(self.domain_arc) + x

    @property
    def return_arc(self) -> int:
        return len(self.arcs) - 1

    def node_name(self, node: int, instance: CostGccInstance) -> str:
        if node == SOURCE:
            return "s"
        if node == SINK:
            return "t"
        if self.is_value(node):
            return instance.values[self.value_of(node)]
        return instance.variables[self.variable_of(node)]


def build_value_network(instance: CostGccInstance) -> ValueNetwork:
    validate(instance)
    n, d = instance.n, instance.d
    arcs: list[Arc] = []
    for a in range(d):
        arcs.append(Arc(SOURCE, 2 + a, instance.lower[a], instance.upper[a], 0))
    domain_arc = {}
    for x, a in instance.pairs():
        domain_arc[(x, a)] = len(arcs)
        arcs.append(Arc(2 + a, 2 + d + x, 0, 1, instance.cost[(x, a)]))
    for x in range(n):
        arcs.append(Arc(2 + d + x, SINK, 1, 1, 0))
    arcs.append(Arc(SINK, SOURCE, n, n, 0))
    return ValueNetwork(n_values=d, n_variables=n, arcs=tuple(arcs), domain_arc=domain_arc)
