"""Symmetric switching functions ``Sy(n; A; X)`` and the k-out-of-n family.

``Sy(n; A; X)`` is true iff the number of true variables among ``X`` lies in
the characteristic set ``A``.  Each instance names the voters it ranges over,
so blocks like ``X1 X2 Sy(4; {1..4}; X4..X7)`` compose with plain products
inside a larger system.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .boolean_core import (
    Literal,
    SwitchingFunction,
    check_arity,
    full_mask,
    var_mask,
)


def binom(n: int, k: int) -> int:
    """``c(n, k)``, zero outside ``0 <= k <= n``."""
    if n < 0 or k < 0 or k > n:
        return 0
    return math.comb(n, k)


def cumulative_binom(n: int, k: int) -> int:
    """``C(n, k) = sum of c(n, m) for m = k..n``."""
    return sum(binom(n, m) for m in range(max(k, 0), n + 1))


@dataclass(frozen=True)
class SymmetricFunction:
    charset: frozenset
    vars: tuple

    def __post_init__(self):
        object.__setattr__(self, "charset", frozenset(self.charset))
        object.__setattr__(self, "vars", tuple(self.vars))
        if len(set(self.vars)) != len(self.vars):
            raise ValueError(f"duplicate variables {self.vars}")
        bad = [a for a in self.charset if not 0 <= a <= self.arity]
        if bad:
            raise ValueError(
                f"characteristic set entries {sorted(bad)} outside 0..{self.arity}"
            )

    @classmethod
    def at_least(cls, k: int, variables: Sequence[int]) -> SymmetricFunction:
        """The k-out-of-n function over ``variables``."""
        n = len(variables)
        return cls(frozenset(range(max(k, 0), n + 1)), tuple(variables))

    @property
    def arity(self) -> int:
        return len(self.vars)

    @property
    def is_up_set(self) -> bool:
        if not self.charset:
            return True
        k = min(self.charset)
        return self.charset == frozenset(range(k, self.arity + 1))

    def complement(self) -> SymmetricFunction:
        return SymmetricFunction(
            frozenset(range(self.arity + 1)) - self.charset, self.vars
        )

    def __str__(self):
        names = ", ".join(f"X{v + 1}" for v in self.vars)
        return f"Sy({self.arity}; {_format_charset(self.charset)}; {names})"


def _format_charset(charset: Iterable[int]) -> str:
    values = sorted(charset)
    if not values:
        return "{}"
    if len(values) > 1 and values == list(range(values[0], values[-1] + 1)):
        return f"{{{values[0]}..{values[-1]}}}"
    return "{" + ", ".join(map(str, values)) + "}"


def count_tables(variables: Sequence[int], n: int) -> list[int]:
    """Tables of "exactly c of ``variables`` are true", for c = 0..len."""
    tables = [full_mask(n)]
    for v in variables:
        x = var_mask(n, v)
        nx = ~x & full_mask(n)
        nxt = [t & nx for t in tables] + [0]
        for c, t in enumerate(tables):
            nxt[c + 1] |= t & x
        tables = nxt
    return tables


def sym_to_function(s: SymmetricFunction, ambient_n: int, max_n: int | None = None) -> SwitchingFunction:
    check_arity(ambient_n, max_n)
    for v in s.vars:
        if not 0 <= v < ambient_n:
            raise IndexError(f"variable X{v + 1} out of range for n={ambient_n}")
    tables = count_tables(s.vars, ambient_n)
    table = 0
    for a in s.charset:
        table |= tables[a]
    return SwitchingFunction(ambient_n, table)


def sym_quotient(s: SymmetricFunction, lit: Literal) -> SymmetricFunction:
    if lit.var not in s.vars:
        raise ValueError(f"X{lit.var + 1} is not among the variables of {s}")
    rest = tuple(v for v in s.vars if v != lit.var)
    if lit.positive:
        charset = {a - 1 for a in s.charset if a >= 1}
    else:
        charset = {a for a in s.charset if a <= len(rest)}
    return SymmetricFunction(frozenset(charset), rest)


def sym_difference(s: SymmetricFunction, m: int) -> SymmetricFunction:
    """Boolean difference w.r.t. X_m, again symmetric over the other variables.

    For the k-out-of-n function this is the single level ``{k-1}``.  Any other
    characteristic set falls back to the symmetric difference of the two
    cofactor sets, which is exact for all symmetric functions.
    """
    if s.is_up_set and s.charset:
        if m not in s.vars:
            raise ValueError(f"X{m + 1} is not among the variables of {s}")
        k = min(s.charset)
        rest = tuple(v for v in s.vars if v != m)
        return SymmetricFunction(frozenset({k - 1}) if k >= 1 else frozenset(), rest)
    hi = sym_quotient(s, Literal(m, True))
    lo = sym_quotient(s, Literal(m, False))
    return SymmetricFunction(hi.charset ^ lo.charset, hi.vars)


def sym_weight(s: SymmetricFunction) -> int:
    """Weight counted over the function's own variables."""
    return sum(binom(s.arity, a) for a in s.charset)
