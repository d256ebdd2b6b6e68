"""Voter classification (veto, dummy, dictator, clique) and desirability."""

from __future__ import annotations

import enum
from typing import Iterable

from .boolean_core import (
    Literal,
    Polarity,
    Product,
    SwitchingFunction,
    is_monotone,
    polarity,
    quotient,
    swap_variables,
)
from .voting import NotMonotoneError


class Desirability(enum.Enum):
    EQUIVALENT = "equivalent"
    FIRST_MORE_DESIRABLE = "first"
    SECOND_MORE_DESIRABLE = "second"
    INCOMPARABLE = "incomparable"


def compare_desirability(f: SwitchingFunction, i: int, j: int) -> Desirability:
    """Compare voters i and j by substituting one for the other in every coalition.

    ``f/X_i`` is set against ``f/X_j`` with X_i renamed to X_j; both are then
    functions of the voters other than X_i and are compared pointwise.
    """
    if i == j:
        raise ValueError("desirability compares two distinct voters")
    if not is_monotone(f):
        raise NotMonotoneError("desirability is only defined for monotone decision functions")
    a_i = quotient(f, Literal(i, True))
    a_j = swap_variables(quotient(f, Literal(j, True)), i, j)
    ge = a_j <= a_i
    le = a_i <= a_j
    if ge and le:
        return Desirability.EQUIVALENT
    if ge:
        return Desirability.FIRST_MORE_DESIRABLE
    if le:
        return Desirability.SECOND_MORE_DESIRABLE
    return Desirability.INCOMPARABLE


def at_least_as_desirable(f: SwitchingFunction, i: int, j: int) -> bool:
    return compare_desirability(f, i, j) in (
        Desirability.EQUIVALENT, Desirability.FIRST_MORE_DESIRABLE)


def is_veto(f: SwitchingFunction, m: int) -> bool:
    return quotient(f, Literal(m, False)).table == 0


def is_dummy(f: SwitchingFunction, m: int) -> bool:
    return polarity(f, m) is Polarity.INDEPENDENT


def is_dictator(f: SwitchingFunction, m: int) -> bool:
    return f == SwitchingFunction.variable(m, f.n)


def is_clique(f: SwitchingFunction, members: Iterable[int]) -> bool:
    members = list(members)
    if not members:
        raise ValueError("a clique needs at least one member")
    return f.table == Product.positive(members).table(f.n)
