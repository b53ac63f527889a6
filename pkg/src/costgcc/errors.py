"""Exception hierarchy shared by every costgcc module."""

from __future__ import annotations


class CostGccError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(CostGccError, ValueError):
    """An instance breaks one of the model invariants."""


class EmptyDomain(ValidationError):
    def __init__(self, variable: str):
        super().__init__(f"variable {variable!r} has an empty domain")
        self.variable = variable


class MissingCost(ValidationError):
    def __init__(self, variable: str, value: str, reason: str = "no cost given"):
        super().__init__(f"pair ({variable!r}, {value!r}): {reason}")
        self.variable = variable
        self.value = value


class BadBounds(ValidationError):
    def __init__(self, value: str, lower: int, upper: int):
        super().__init__(f"value {value!r} has invalid bounds [{lower}, {upper}]")
        self.value = value
        self.lower = lower
        self.upper = upper


class UnknownValue(ValidationError):
    def __init__(self, variable: str, value: object):
        super().__init__(f"variable {variable!r} refers to unknown value {value!r}")
        self.variable = variable
        self.value = value


class Infeasible(CostGccError):
    """No flow satisfies the capacity bounds (equivalently no gcc solution exists)."""


class NegativeReducedCost(CostGccError, ArithmeticError):
    """A residual arc has a negative reduced cost: the potentials are stale or wrong."""

    def __init__(self, tail: int, head: int, value: int):
        super().__init__(f"reduced cost of residual arc {tail}->{head} is {value} < 0")
        self.tail = tail
        self.head = head
        self.value = value


class TooLarge(CostGccError):
    """The brute-force oracle refuses instances above its enumeration guard."""


class ParseError(CostGccError):
    def __init__(self, line: int | None, reason: str):
        where = f"line {line}: " if line is not None else ""
        super().__init__(f"{where}{reason}")
        self.line = line
        self.reason = reason
