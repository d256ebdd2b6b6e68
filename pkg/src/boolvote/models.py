"""Decision functions of a few structured systems built from symmetric blocks."""

from __future__ import annotations

import math

from .boolean_core import Literal, Product, SwitchingFunction, check_arity, var_mask
from .symmetric import SymmetricFunction, sym_to_function


def federal_function(senators: int = 5, representatives: int = 9) -> SwitchingFunction:
    """Scaled-down presidential system: voters ``P, V, S1..Ss, H1..Hr``.

    Without the President a two-thirds override is needed in both chambers;
    with the President a strict majority suffices, and the Vice-President's
    support lowers the Senate threshold by one (the tie-break vote).
    """
    n = 2 + senators + representatives
    check_arity(n)
    p, v = 0, 1
    senate = tuple(range(2, 2 + senators))
    house = tuple(range(2 + senators, n))

    def block(k_senate, k_house):
        return (sym_to_function(SymmetricFunction.at_least(k_senate, senate), n)
                & sym_to_function(SymmetricFunction.at_least(k_house, house), n))

    def lit(k, positive=True):
        return SwitchingFunction(n, Product.of([Literal(k, positive)]).table(n))

    senate_pass = senators // 2 + 1
    house_pass = representatives // 2 + 1
    senate_override = math.ceil(2 * senators / 3)
    house_override = math.ceil(2 * representatives / 3)
    return (
        (lit(p, False) & block(senate_override, house_override))
        | (lit(p) & lit(v, False) & block(senate_pass, house_pass))
        | (lit(p) & lit(v) & block(senate_pass - 1, house_pass))
    )


def veto_council(permanent: int = 3, elected: int = 4, quota: int = 2) -> SwitchingFunction:
    """``P1..Pp AND Sy(e; {quota..e}; N)``: every permanent member holds a veto."""
    n = permanent + elected
    check_arity(n)
    table = sym_to_function(SymmetricFunction.at_least(quota, range(permanent, n)), n).table
    for k in range(permanent):
        table &= var_mask(n, k)
    return SwitchingFunction(n, table)
