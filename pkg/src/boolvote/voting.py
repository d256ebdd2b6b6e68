"""Weighted yes-no voting systems and coalition restrictions."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .boolean_core import (
    Literal,
    Product,
    SwitchingFunction,
    boole_shannon_expand,
    check_arity,
    from_products,
    full_mask,
    full_products,
    is_monotone,
    polarity,
    quotient,
    recombine,
    var_mask,
    Polarity,
)


class NotMonotoneError(ValueError):
    pass


@dataclass(frozen=True)
class WeightRow:
    weights: tuple
    quota: int

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
        if self.quota < 1:
            raise ValueError(f"quota must be a positive integer, got {self.quota}")
        if any(w < 0 for w in self.weights):
            raise ValueError(f"weights must be non-negative, got {list(self.weights)}")

    def __str__(self):
        return f"[{self.quota}; {', '.join(map(str, self.weights))}]"


@dataclass(frozen=True)
class ForbiddenCoalition:
    members: frozenset

    def __post_init__(self):
        object.__setattr__(self, "members", frozenset(self.members))
        if len(self.members) < 2:
            raise ValueError("a forbidden coalition needs at least two distinct voters")
        if any(m < 0 for m in self.members):
            raise IndexError(f"negative voter index in {sorted(self.members)}")

    @property
    def product(self) -> Product:
        return Product.positive(self.members)

    def __str__(self):
        return "{" + ", ".join(f"X{m + 1}" for m in sorted(self.members)) + "}"


@dataclass(frozen=True)
class VotingSystem:
    """Voters plus either weight rows or an explicit list of minimal winning coalitions.

    Several rows model vector-weighted (e.g. bicameral) systems: a motion
    passes only if it reaches the quota in every row.
    """

    voters: tuple
    rows: tuple = ()
    forbidden: tuple = ()
    winning: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "voters", tuple(self.voters))
        object.__setattr__(self, "rows", tuple(self.rows))
        object.__setattr__(
            self, "forbidden",
            tuple(c if isinstance(c, ForbiddenCoalition) else ForbiddenCoalition(c)
                  for c in self.forbidden),
        )
        object.__setattr__(self, "winning", tuple(frozenset(w) for w in self.winning))
        n = len(self.voters)
        if bool(self.rows) == bool(self.winning):
            raise ValueError("give exactly one of weight rows or explicit winning coalitions")
        for row in self.rows:
            if len(row.weights) != n:
                raise ValueError(f"row {row} has {len(row.weights)} weights for {n} voters")
        for c in self.forbidden:
            if max(c.members) >= n:
                raise IndexError(f"forbidden coalition {c} names a voter beyond X{n}")
        for w in self.winning:
            if not w or max(w) >= n or min(w) < 0:
                raise IndexError(f"winning coalition {sorted(w)} is empty or out of range")

    @property
    def n(self) -> int:
        return len(self.voters)

    @classmethod
    def weighted(cls, quota: int, weights: Sequence[int], voters=None, forbidden=()) -> VotingSystem:
        voters = voters or [f"X{i + 1}" for i in range(len(weights))]
        return cls(tuple(voters), (WeightRow(tuple(weights), quota),), tuple(forbidden))

    @classmethod
    def from_notation(cls, text: str, voters=None, forbidden=()) -> VotingSystem:
        """Parse the bracket notation ``[q; w1, w2, ...]``."""
        m = re.fullmatch(r"\s*\[\s*(\d+)\s*;\s*([\d\s,]+?)\s*\]\s*", text)
        if not m:
            raise ValueError(f"expected '[quota; w1, w2, ...]', got {text!r}")
        weights = [int(w) for w in m.group(2).split(",")]
        return cls.weighted(int(m.group(1)), weights, voters, forbidden)

    @classmethod
    def k_out_of_n(cls, k: int, n: int, forbidden=()) -> VotingSystem:
        return cls.weighted(k, [1] * n, forbidden=forbidden)

    def with_forbidden(self, forbidden: Iterable) -> VotingSystem:
        return VotingSystem(self.voters, self.rows, tuple(forbidden), self.winning)


@dataclass(frozen=True)
class RestrictedSystem:
    base: SwitchingFunction
    restricted: SwitchingFunction
    restricted_vars: frozenset = field(default_factory=frozenset)
    forbidden: tuple = ()

    @property
    def is_restricted(self) -> bool:
        return bool(self.forbidden)


def decision_function(sys: VotingSystem, max_n: int | None = None) -> SwitchingFunction:
    n = sys.n
    check_arity(n, max_n)
    if sys.winning:
        return from_products(n, (Product.positive(w) for w in sorted(sys.winning, key=sorted)), max_n)
    index = np.arange(1 << n, dtype=np.int64)
    bits = ((index[:, None] >> np.arange(n)) & 1) if n else np.zeros((1, 0), dtype=np.int64)
    passed = np.ones(1 << n, dtype=bool)
    for row in sys.rows:
        passed &= bits @ np.asarray(row.weights, dtype=np.int64) >= row.quota
    return SwitchingFunction(n, _pack(passed))


def _pack(values: np.ndarray) -> int:
    packed = np.packbits(values.astype(np.uint8), bitorder="little")
    return int.from_bytes(packed.tobytes(), "little") & full_mask(len(values).bit_length() - 1)


def minimal_true_points(f: SwitchingFunction) -> int:
    """Table of true points from which removing any single yes-vote loses."""
    n = f.n
    t = f.table
    for k in range(n):
        below = quotient(f, Literal(k, False)).table
        t &= ~var_mask(n, k) | ~below
    return t & full_mask(n)


def minimal_winning_coalitions(f: SwitchingFunction) -> list[Product]:
    if not is_monotone(f):
        raise NotMonotoneError(
            "minimal winning coalitions are defined for monotone decision functions only"
        )
    points = minimal_true_points(f)
    out = []
    while points:
        low = points & -points
        out.append(Product(low.bit_length() - 1))
        points ^= low
    return sorted(out, key=lambda p: p.members)


def _coalitions(forbidden: Iterable) -> list[ForbiddenCoalition]:
    return [c if isinstance(c, ForbiddenCoalition) else ForbiddenCoalition(c) for c in forbidden]


def restrict_by_mask(f: SwitchingFunction, forbidden: Iterable) -> SwitchingFunction:
    """Zero every row in which all members of some forbidden coalition vote yes."""
    banned = 0
    for c in _coalitions(forbidden):
        banned |= c.product.table(f.n)
    return SwitchingFunction(f.n, f.table & ~banned & full_mask(f.n))


def nullified_keys(forbidden: Iterable, variables: Sequence[int] | None = None) -> list[Product]:
    """Expansion keys over the restricted variables that subsume a forbidden coalition."""
    coalitions = _coalitions(forbidden)
    if variables is None:
        variables = sorted(set().union(*(c.members for c in coalitions)))
    keys = []
    for key in full_products(variables):
        if any(key.subsumes(c.product) for c in coalitions):
            keys.append(key)
    return keys


def restrict_by_expansion(f: SwitchingFunction, forbidden: Iterable) -> SwitchingFunction:
    """Expand over every restricted variable and nullify the subsuming quotients."""
    coalitions = _coalitions(forbidden)
    if not coalitions:
        return f
    variables = sorted(set().union(*(c.members for c in coalitions)))
    expansion = boole_shannon_expand(f, variables)
    dead = set(nullified_keys(coalitions, variables))
    zero = SwitchingFunction.constant(False, f.n)
    return recombine({k: (zero if k in dead else v) for k, v in expansion.items()}, f.n)


def apply_restrictions(f: SwitchingFunction, forbidden: Iterable) -> RestrictedSystem:
    coalitions = _coalitions(forbidden)
    if not coalitions:
        return RestrictedSystem(f, f, frozenset(), ())
    for c in coalitions:
        if max(c.members) >= f.n:
            raise IndexError(f"forbidden coalition {c} names a voter beyond X{f.n}")
    if not is_monotone(f):
        raise NotMonotoneError("restrictions apply to monotone decision functions")
    g = restrict_by_expansion(f, coalitions)
    restricted_vars = frozenset().union(*(c.members for c in coalitions))
    return RestrictedSystem(f, g, restricted_vars, tuple(coalitions))


def filter_mwcs(mwcs: Iterable[Product], forbidden: Iterable) -> list[Product]:
    coalitions = _coalitions(forbidden)
    return [p for p in mwcs if not any(p.subsumes(c.product) for c in coalitions)]


def restricted_polarities(rs: RestrictedSystem) -> list[Polarity]:
    return [polarity(rs.restricted, m) for m in range(rs.restricted.n)]
