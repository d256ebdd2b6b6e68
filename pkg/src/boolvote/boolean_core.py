"""Switching functions over a fixed set of voters, stored as dense truth tables.

A truth table is a Python ``int`` used as a bit vector: bit ``i`` holds the
function value at assignment ``i``, and bit ``k`` of ``i`` holds the value of
voter ``X_{k+1}`` (so ``X1`` is the least significant bit).  Voters are
0-based internally and displayed 1-based.

Boolean quotients keep the ambient arity: ``f/X1`` is still a function of
``n`` variables, it simply no longer depends on ``X1``.  Weights "over the
remaining variables" are therefore full-arity popcounts divided by
``2**len(excluded)``.
"""

from __future__ import annotations

import enum
import itertools
import re
from dataclasses import dataclass, field
from functools import lru_cache, reduce
from typing import Iterable, Mapping, Sequence

MAX_VARS = 24


class CapacityError(ValueError):
    """Raised when a function would exceed the truth-table size cap."""


class DependencyError(ValueError):
    """Raised when a weight is requested over variables the function uses."""


def check_arity(n: int, max_n: int | None = None) -> None:
    cap = MAX_VARS if max_n is None else max_n
    if n < 0:
        raise ValueError(f"variable count must be non-negative, got {n}")
    if n > cap:
        raise CapacityError(
            f"{n} variables exceed the truth-table cap of {cap} "
            f"(raise it explicitly with max_n)"
        )


@lru_cache(maxsize=None)
def full_mask(n: int) -> int:
    return (1 << (1 << n)) - 1


@lru_cache(maxsize=None)
def var_mask(n: int, k: int) -> int:
    """Table of the positive literal X_{k+1} over ``n`` variables."""
    if not 0 <= k < n:
        raise IndexError(f"variable X{k + 1} out of range for n={n}")
    half = 1 << k
    block = ((1 << half) - 1) << half
    length = 2 * half
    total = 1 << n
    mask = block
    while length < total:
        mask |= mask << length
        length *= 2
    return mask


@dataclass(frozen=True, order=True)
class Literal:
    var: int
    positive: bool = True

    def __post_init__(self):
        if self.var < 0:
            raise IndexError(f"negative variable index {self.var}")

    def __invert__(self) -> Literal:
        return Literal(self.var, not self.positive)

    def __str__(self):
        return f"X{self.var + 1}" if self.positive else f"~X{self.var + 1}"


@dataclass(frozen=True)
class Product:
    """Conjunction of literals, each variable at most once.

    Stored as two bit masks over variable indices.  The empty product is the
    constant 1; the constant 0 is deliberately not representable.
    """

    pos: int = 0
    neg: int = 0

    def __post_init__(self):
        if self.pos < 0 or self.neg < 0:
            raise ValueError("literal masks must be non-negative")
        if self.pos & self.neg:
            clash = (self.pos & self.neg).bit_length() - 1
            raise ValueError(f"variable X{clash + 1} appears twice in a product")

    @classmethod
    def of(cls, literals: Iterable[Literal]) -> Product:
        pos = neg = 0
        for lit in literals:
            bit = 1 << lit.var
            if (pos | neg) & bit:
                raise ValueError(f"variable X{lit.var + 1} appears twice in a product")
            if lit.positive:
                pos |= bit
            else:
                neg |= bit
        return cls(pos, neg)

    @classmethod
    def positive(cls, members: Iterable[int]) -> Product:
        return cls.of(Literal(m) for m in members)

    @classmethod
    def parse(cls, text: str) -> Product:
        """Parse ``"X1 ~X2 X3"`` (also accepts ``X1X2``, ``!X2``, ``1``)."""
        text = text.strip()
        if text in ("", "1"):
            return cls()
        tokens = re.findall(r"([~!]?)\s*X(\d+)", text)
        if not tokens or re.sub(r"[~!]?\s*X\d+|\s+", "", text):
            raise ValueError(f"cannot parse product {text!r}")
        return cls.of(Literal(int(v) - 1, not neg) for neg, v in tokens)

    @property
    def support(self) -> int:
        return self.pos | self.neg

    @property
    def literals(self) -> tuple[Literal, ...]:
        return tuple(
            Literal(k, bool(self.pos >> k & 1))
            for k in range(self.support.bit_length())
            if self.support >> k & 1
        )

    @property
    def members(self) -> tuple[int, ...]:
        """Indices of the uncomplemented literals."""
        return tuple(k for k in range(self.pos.bit_length()) if self.pos >> k & 1)

    def __len__(self):
        return self.support.bit_count()

    def clashes(self, other: Product) -> bool:
        """True iff ``self AND other`` is identically 0."""
        return bool(self.pos & other.neg or self.neg & other.pos)

    def __and__(self, other: Product) -> Product:
        if self.clashes(other):
            raise ValueError(f"{self} AND {other} is 0, which is not a product")
        return Product(self.pos | other.pos, self.neg | other.neg)

    def subsumes(self, other: Product) -> bool:
        """True iff every literal of ``other`` also appears in ``self``."""
        return (other.pos & ~self.pos) == 0 and (other.neg & ~self.neg) == 0

    def table(self, n: int) -> int:
        if self.support >> n:
            raise IndexError(f"product {self} uses variables beyond n={n}")
        t = full_mask(n)
        for lit in self.literals:
            m = var_mask(n, lit.var)
            t &= m if lit.positive else ~m
        return t & full_mask(n)

    def __str__(self):
        return " ".join(str(lit) for lit in self.literals) or "1"


@dataclass(frozen=True)
class SopForm:
    n: int
    products: tuple[Product, ...] = ()
    disjoint: bool = False

    def __post_init__(self):
        object.__setattr__(self, "products", tuple(self.products))
        for p in self.products:
            if p.support >> self.n:
                raise IndexError(f"product {p} uses variables beyond n={self.n}")
        if self.disjoint:
            for a, b in itertools.combinations(self.products, 2):
                if not a.clashes(b):
                    raise ValueError(f"products {a} and {b} are not disjoint")

    def table(self) -> int:
        t = 0
        for p in self.products:
            t |= p.table(self.n)
        return t

    def to_function(self) -> SwitchingFunction:
        return SwitchingFunction(self.n, self.table(), self)

    def weight(self) -> int:
        """Sum of ``2**(n - len(D))`` over the products; needs a disjoint form."""
        if not self.disjoint:
            raise ValueError("weight by product lengths requires a disjoint form")
        return sum(1 << (self.n - len(p)) for p in self.products)

    def quotient(self, t: Product) -> SopForm:
        kept = []
        for p in self.products:
            if p.clashes(t):
                continue
            kept.append(Product(p.pos & ~t.pos, p.neg & ~t.neg))
        return SopForm(self.n, tuple(kept), self.disjoint)

    def __str__(self):
        joiner = " + " if self.disjoint else " | "
        return joiner.join(str(p) for p in self.products) or "0"


@dataclass(frozen=True)
class SwitchingFunction:
    n: int
    table: int
    sop: SopForm | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        check_arity(self.n, max(self.n, MAX_VARS))
        if self.table < 0 or self.table >> (1 << self.n):
            raise ValueError(f"table does not fit {1 << self.n} entries")
        if self.sop is not None:
            if self.sop.n != self.n or self.sop.table() != self.table:
                raise ValueError("attached sum-of-products does not reproduce the table")

    @classmethod
    def constant(cls, value: bool, n: int) -> SwitchingFunction:
        return cls(n, full_mask(n) if value else 0)

    @classmethod
    def variable(cls, k: int, n: int) -> SwitchingFunction:
        return cls(n, var_mask(n, k))

    @classmethod
    def from_bits(cls, bits: Sequence[int] | str, n: int | None = None) -> SwitchingFunction:
        """Build from values listed in assignment-index order."""
        bits = [int(b) for b in bits]
        if n is None:
            n = max(len(bits) - 1, 0).bit_length()
        if len(bits) != 1 << n:
            raise ValueError(f"expected {1 << n} values, got {len(bits)}")
        return cls(n, sum(b << i for i, b in enumerate(bits) if b))

    def __call__(self, *values) -> int:
        if len(values) != self.n:
            raise ValueError(f"expected {self.n} values, got {len(values)}")
        index = sum(int(bool(v)) << k for k, v in enumerate(values))
        return self.table >> index & 1

    def at(self, index: int) -> int:
        return self.table >> index & 1

    def bits(self) -> str:
        """Table as a '0'/'1' string in assignment-index order."""
        size = 1 << self.n
        return format(self.table, f"0{size}b")[::-1] if size else ""

    def popcount(self) -> int:
        return self.table.bit_count()

    def depends_on(self, k: int) -> bool:
        return quotient(self, Literal(k, True)) != quotient(self, Literal(k, False))

    def __invert__(self):
        return complement(self)

    def __and__(self, other):
        return combine(self, other, "AND")

    def __or__(self, other):
        return combine(self, other, "OR")

    def __xor__(self, other):
        return combine(self, other, "XOR")

    def __le__(self, other: SwitchingFunction) -> bool:
        _same_arity(self, other)
        return self.table & ~other.table == 0

    def __ge__(self, other: SwitchingFunction) -> bool:
        return other <= self

    def __str__(self):
        if self.sop is not None:
            return str(self.sop)
        return f"<{self.n}-variable function, weight {self.popcount()}>"


class Polarity(enum.Enum):
    MONOFORM_POSITIVE = "+"
    MONOFORM_NEGATIVE = "-"
    INDEPENDENT = "0"
    BIFORM = "*"


def _same_arity(f: SwitchingFunction, g: SwitchingFunction) -> None:
    if f.n != g.n:
        raise ValueError(f"arity mismatch: {f.n} vs {g.n} variables")


def from_products(
    n: int, products: Iterable[Product], max_n: int | None = None
) -> SwitchingFunction:
    check_arity(n, max_n)
    return SopForm(n, tuple(products)).to_function()


def quotient(f: SwitchingFunction, t: Product | Literal) -> SwitchingFunction:
    """Impose ``t = 1`` on ``f``; the result no longer depends on t's variables."""
    if isinstance(t, Literal):
        t = Product.of([t])
    if t.support >> f.n:
        raise IndexError(f"term {t} uses variables beyond n={f.n}")
    table = f.table
    for lit in t.literals:
        shift = 1 << lit.var
        m = var_mask(f.n, lit.var)
        if lit.positive:
            table &= m
            table |= table >> shift
        else:
            table &= ~m & full_mask(f.n)
            table |= table << shift
    sop = f.sop.quotient(t) if f.sop is not None else None
    return SwitchingFunction(f.n, table, sop)


def complement(f: SwitchingFunction) -> SwitchingFunction:
    return SwitchingFunction(f.n, ~f.table & full_mask(f.n))


_OPS = {
    "AND": lambda a, b: a & b,
    "OR": lambda a, b: a | b,
    "XOR": lambda a, b: a ^ b,
}


def combine(f: SwitchingFunction, g: SwitchingFunction, op: str) -> SwitchingFunction:
    _same_arity(f, g)
    try:
        fn = _OPS[op.upper()]
    except KeyError:
        raise ValueError(f"unknown operator {op!r}; expected AND, OR or XOR") from None
    return SwitchingFunction(f.n, fn(f.table, g.table))


def full_products(variables: Sequence[int]) -> list[Product]:
    """All products with every variable present, first variable varying slowest."""
    out = []
    for values in itertools.product((False, True), repeat=len(variables)):
        out.append(Product.of(Literal(v, val) for v, val in zip(variables, values)))
    return out


def boole_shannon_expand(
    f: SwitchingFunction, variables: Sequence[int]
) -> dict[Product, SwitchingFunction]:
    if len(set(variables)) != len(variables):
        raise ValueError(f"duplicate variables in expansion set {list(variables)}")
    for v in variables:
        if not 0 <= v < f.n:
            raise IndexError(f"variable X{v + 1} out of range for n={f.n}")
    return {key: quotient(f, key) for key in full_products(variables)}


def recombine(expansion: Mapping[Product, SwitchingFunction], n: int) -> SwitchingFunction:
    """OR together ``key AND value`` over an expansion."""
    table = 0
    for key, sub in expansion.items():
        table |= key.table(n) & sub.table
    return SwitchingFunction(n, table)


def boolean_difference(f: SwitchingFunction, m: int) -> SwitchingFunction:
    return combine(quotient(f, Literal(m, True)), quotient(f, Literal(m, False)), "XOR")


def weight(f: SwitchingFunction, excluding: Iterable[int] = ()) -> int:
    """Number of true rows counted over the variables not in ``excluding``."""
    excluding = set(excluding)
    for k in excluding:
        if not 0 <= k < f.n:
            raise IndexError(f"variable X{k + 1} out of range for n={f.n}")
        if f.depends_on(k):
            raise DependencyError(f"function depends on excluded variable X{k + 1}")
    return f.popcount() >> len(excluding)


def make_disjoint(s: SopForm) -> SopForm:
    """Rewrite a sum of products as a sum of pairwise-disjoint products.

    Each product is sharpened against every earlier input product: a candidate
    that overlaps an earlier product ``l1 l2 ... lr`` (literals missing from the
    candidate) is split into ``c ~l1``, ``c l1 ~l2``, ..., ``c l1..l(r-1) ~lr``.
    """
    if s.disjoint:
        return s
    emitted: list[Product] = []
    for i, p in enumerate(s.products):
        candidates = [p]
        for q in s.products[:i]:
            nxt = []
            for c in candidates:
                if c.clashes(q):
                    nxt.append(c)
                    continue
                missing = [lit for lit in q.literals if not c.support >> lit.var & 1]
                prefix = c
                for lit in missing:
                    nxt.append(prefix & Product.of([~lit]))
                    prefix = prefix & Product.of([lit])
            candidates = nxt
        emitted.extend(candidates)
    return SopForm(s.n, tuple(emitted), disjoint=True)


def polarity(f: SwitchingFunction, m: int) -> Polarity:
    if not 0 <= m < f.n:
        raise IndexError(f"variable X{m + 1} out of range for n={f.n}")
    hi = quotient(f, Literal(m, True)).table
    lo = quotient(f, Literal(m, False)).table
    if hi == lo:
        return Polarity.INDEPENDENT
    if lo & ~hi == 0:
        return Polarity.MONOFORM_POSITIVE
    if hi & ~lo == 0:
        return Polarity.MONOFORM_NEGATIVE
    return Polarity.BIFORM


def is_monotone(f: SwitchingFunction) -> bool:
    ok = {Polarity.MONOFORM_POSITIVE, Polarity.INDEPENDENT}
    return all(polarity(f, m) in ok for m in range(f.n))


def swap_variables(f: SwitchingFunction, i: int, j: int) -> SwitchingFunction:
    """Exchange the roles of X_i and X_j in ``f``."""
    if i == j:
        return f
    n = f.n
    out = 0
    for a, b in itertools.product((False, True), repeat=2):
        region = Product.of([Literal(i, a), Literal(j, b)])
        source = Product.of([Literal(i, b), Literal(j, a)])
        out |= region.table(n) & quotient(f, source).table
    return SwitchingFunction(n, out)


def conjunction(functions: Iterable[SwitchingFunction]) -> SwitchingFunction:
    return reduce(lambda a, b: a & b, functions)


# Text dump used for fixture diffs: ``n=<n>`` then 64 table characters per line.

DUMP_WIDTH = 64


def dump_table(f: SwitchingFunction) -> str:
    bits = f.bits()
    lines = [f"n={f.n}"]
    lines += [bits[i:i + DUMP_WIDTH] for i in range(0, len(bits), DUMP_WIDTH)]
    return "\n".join(lines) + "\n"


def parse_dump(text: str) -> SwitchingFunction:
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("n="):
        raise ValueError("truth-table dump must start with 'n=<n>'")
    n = int(lines[0][2:])
    bits = "".join(lines[1:])
    if set(bits) - {"0", "1"}:
        raise ValueError("truth-table dump may only contain '0' and '1'")
    return SwitchingFunction.from_bits(bits, n)
