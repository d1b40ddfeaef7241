"""Shared value types: the negative-infinity invariant and error classes."""

from __future__ import annotations

from typing import Iterable, Union


class NegInfinity:
    """The value of an invariant whose defining set is empty.

    Compares strictly below every integer, absorbs integer addition, and is
    the identity for ``max``. There is exactly one instance, ``NEG_INFINITY``.
    """

    _instance: "NegInfinity | None" = None

    def __new__(cls) -> "NegInfinity":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "NEG_INFINITY"

    def __str__(self) -> str:
        return "-inf"

    def __reduce__(self):
        return (NegInfinity, ())

    def __hash__(self) -> int:
        return hash("NEG_INFINITY")

    def __eq__(self, other: object) -> bool:
        return other is self

    def __lt__(self, other: object) -> bool:
        if isinstance(other, NegInfinity):
            return False
        if isinstance(other, int):
            return True
        return NotImplemented

    def __le__(self, other: object) -> bool:
        if isinstance(other, (int, NegInfinity)):
            return True
        return NotImplemented

    def __gt__(self, other: object) -> bool:
        if isinstance(other, (int, NegInfinity)):
            return False
        return NotImplemented

    def __ge__(self, other: object) -> bool:
        if isinstance(other, NegInfinity):
            return True
        if isinstance(other, int):
            return False
        return NotImplemented

    def __add__(self, other: object) -> "NegInfinity":
        if isinstance(other, int):
            return self
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other: object) -> "NegInfinity":
        if isinstance(other, int):
            return self
        return NotImplemented


NEG_INFINITY = NegInfinity()

InvariantValue = Union[int, NegInfinity]


def vmax(values: Iterable[InvariantValue]) -> InvariantValue:
    """``max`` with NEG_INFINITY as the value of the empty maximum."""
    best: InvariantValue = NEG_INFINITY
    for v in values:
        if v > best:
            best = v
    return best


def format_value(v: InvariantValue | None) -> str:
    if v is None:
        return "N/A"
    if v is NEG_INFINITY:
        return "-inf"
    return str(v)


def parse_value(text: str) -> InvariantValue:
    if text.strip() == "-inf":
        return NEG_INFINITY
    return int(text)


class InputError(ValueError):
    """Malformed or out-of-domain input."""


class PreconditionError(InputError):
    """A method was called outside the hypotheses it is valid under."""


class FormulaInapplicable(InputError):
    """A closed-form formula does not cover the requested case."""
