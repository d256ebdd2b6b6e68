"""Banzhaf-family power indices, satisfaction indices and the Public Good Index.

Every count is an exact integer and every probability an exact
:class:`fractions.Fraction`.  Restricted systems are evaluated on the full
``2**n`` map with the forbidden region zero-filled, so the Banzhaf
denominator stays ``2**(n-1)``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction

from .boolean_core import (
    Literal,
    Polarity,
    SwitchingFunction,
    boolean_difference,
    complement,
    polarity,
    quotient,
    weight,
)
from .voting import (
    RestrictedSystem,
    VotingSystem,
    apply_restrictions,
    decision_function,
    filter_mwcs,
    minimal_winning_coalitions,
)


class TbpFormula(enum.Enum):
    """Which swing-count formula produced a Banzhaf value.

    ``PIVOTAL`` and ``PIVOTAL_COMPLEMENT`` hold for any decision function.
    The others assume the function is non-decreasing in the voter and give
    wrong counts otherwise.
    """

    PIVOTAL = "pivotal"                         # wt(f/X AND ~f/~X)
    PIVOTAL_COMPLEMENT = "pivotal_complement"   # 2^(n-1) - wt(~f/X OR f/~X)
    DIFFERENCE = "difference"                   # wt(df/dX)
    HIGH_VS_PASSES = "high_vs_passes"           # 2 wt(f/X) - wt(f)
    LOW_VS_PASSES = "low_vs_passes"             # wt(f) - 2 wt(f/~X)
    COFACTOR_GAP = "cofactor_gap"               # wt(f/X) - wt(f/~X)
    HIGH_VS_FAILS = "high_vs_fails"             # wt(~f) - 2 wt(~f/X)
    LOW_VS_FAILS = "low_vs_fails"               # 2 wt(~f/~X) - wt(~f)
    FAIL_COFACTOR_GAP = "fail_cofactor_gap"     # wt(~f/~X) - wt(~f/X)
    AUTO = "auto"

    @property
    def general(self) -> bool:
        return self in (TbpFormula.PIVOTAL, TbpFormula.PIVOTAL_COMPLEMENT)


MONOTONE_FORMULAS = tuple(f for f in TbpFormula if not f.general and f is not TbpFormula.AUTO)
SAFE_POLARITIES = (Polarity.MONOFORM_POSITIVE, Polarity.INDEPENDENT)


class NonMonotoneFormulaError(ValueError):
    """A monotone-only formula was requested for a voter the function is not monotone in."""


class UndefinedIndexError(ZeroDivisionError):
    """A conditional index was requested for a constant decision function."""


def _w(h: SwitchingFunction, m: int) -> int:
    return weight(h, (m,))


def _cofactors(f: SwitchingFunction, m: int):
    return quotient(f, Literal(m, True)), quotient(f, Literal(m, False))


def swing_function(f: SwitchingFunction, m: int) -> SwitchingFunction:
    """Indicator of X_m being pivotal: ``(f/X_m) AND (~f/~X_m)``."""
    hi, lo = _cofactors(f, m)
    return hi & ~lo


def resolve_formula(f: SwitchingFunction, m: int, formula: TbpFormula) -> TbpFormula:
    if formula is not TbpFormula.AUTO:
        return formula
    return TbpFormula.COFACTOR_GAP if polarity(f, m) in SAFE_POLARITIES else TbpFormula.PIVOTAL


def tbp(
    f: SwitchingFunction,
    m: int,
    formula: TbpFormula = TbpFormula.AUTO,
    check: bool = True,
) -> int:
    """Total Banzhaf power of voter ``m`` (0-based) by the chosen formula.

    With ``check=False`` the monotone-only formulas are evaluated even when
    they do not apply; that exists to show what the guard prevents.
    """
    if not 0 <= m < f.n:
        raise IndexError(f"voter X{m + 1} out of range for n={f.n}")
    formula = resolve_formula(f, m, formula)
    if check and not formula.general:
        pol = polarity(f, m)
        if pol not in SAFE_POLARITIES:
            raise NonMonotoneFormulaError(
                f"{formula.name} assumes a non-decreasing decision function, "
                f"but it is {pol.name.lower()} in X{m + 1}; use PIVOTAL or PIVOTAL_COMPLEMENT"
            )
    n = f.n
    hi, lo = _cofactors(f, m)
    nhi, nlo = complement(hi), complement(lo)
    if formula is TbpFormula.PIVOTAL:
        return _w(hi & nlo, m)
    if formula is TbpFormula.PIVOTAL_COMPLEMENT:
        return (1 << (n - 1)) - _w(nhi | lo, m)
    if formula is TbpFormula.DIFFERENCE:
        return _w(boolean_difference(f, m), m)
    wf = f.popcount()
    wfbar = (1 << n) - wf
    if formula is TbpFormula.HIGH_VS_PASSES:
        return 2 * _w(hi, m) - wf
    if formula is TbpFormula.LOW_VS_PASSES:
        return wf - 2 * _w(lo, m)
    if formula is TbpFormula.COFACTOR_GAP:
        return _w(hi, m) - _w(lo, m)
    if formula is TbpFormula.HIGH_VS_FAILS:
        return wfbar - 2 * _w(nhi, m)
    if formula is TbpFormula.LOW_VS_FAILS:
        return 2 * _w(nlo, m) - wfbar
    if formula is TbpFormula.FAIL_COFACTOR_GAP:
        return _w(nlo, m) - _w(nhi, m)
    raise ValueError(f"unsupported formula {formula}")


class InconsistentCountError(AssertionError):
    pass


def tbp_restricted(rs: RestrictedSystem, m: int) -> tuple[int, TbpFormula]:
    g = rs.restricted
    pivotal = tbp(g, m, TbpFormula.PIVOTAL)
    complemented = tbp(g, m, TbpFormula.PIVOTAL_COMPLEMENT)
    if pivotal != complemented:
        raise InconsistentCountError(f"PIVOTAL={pivotal} but PIVOTAL_COMPLEMENT={complemented} for X{m + 1}")
    if m in rs.restricted_vars:
        return pivotal, TbpFormula.PIVOTAL
    formula = resolve_formula(g, m, TbpFormula.AUTO)
    return tbp(g, m, formula), formula


def pbp(swings: int, n: int) -> Fraction:
    return Fraction(swings, 1 << (n - 1))


def _ratio(num: int, den: int, what: str) -> Fraction:
    if den == 0:
        raise UndefinedIndexError(f"{what} is undefined for a constant decision function")
    return Fraction(num, den)


def pii(f: SwitchingFunction, m: int) -> Fraction:
    """Power to initiate: pivotality given that the motion fails."""
    return _ratio(_w(swing_function(f, m), m), (1 << f.n) - f.popcount(), "PII")


def ppi(f: SwitchingFunction, m: int) -> Fraction:
    """Power to prevent: pivotality given that the motion passes."""
    return _ratio(_w(swing_function(f, m), m), f.popcount(), "PPI")


def sat(f: SwitchingFunction, m: int) -> Fraction:
    hi, lo = _cofactors(f, m)
    return Fraction(_w(hi, m) + _w(complement(lo), m), 1 << f.n)


def nsat(f: SwitchingFunction, m: int) -> Fraction:
    lo = quotient(f, Literal(m, False))
    return _ratio(_w(complement(lo), m), (1 << f.n) - f.popcount(), "NSAT")


def psat(f: SwitchingFunction, m: int) -> Fraction:
    hi = quotient(f, Literal(m, True))
    return _ratio(_w(hi, m), f.popcount(), "PSAT")


def _or_none(fn, *args):
    try:
        return fn(*args)
    except UndefinedIndexError:
        return None


def pgi_counts(mwcs, n: int) -> list[int]:
    counts = [0] * n
    for p in mwcs:
        for k in p.members:
            counts[k] += 1
    return counts


def pgi(sys: VotingSystem, max_n: int | None = None) -> list[int]:
    """Per-voter count of minimal winning coalitions, after dropping forbidden ones."""
    f = decision_function(sys, max_n)
    return pgi_counts(filter_mwcs(minimal_winning_coalitions(f), sys.forbidden), sys.n)


@dataclass(frozen=True)
class VoterIndices:
    voter: str
    tbp: int
    pbp: Fraction
    pii: Fraction | None
    ppi: Fraction | None
    sat: Fraction
    nsat: Fraction | None
    psat: Fraction | None
    pgi: int
    formula_used: TbpFormula | None = field(default=None, compare=False)

    def values(self) -> tuple:
        return (self.voter, self.tbp, self.pbp, self.pii, self.ppi,
                self.sat, self.nsat, self.psat, self.pgi)


@dataclass(frozen=True)
class IndexReport:
    system: VotingSystem
    voters: tuple
    weight: int
    restricted: bool = False
    notes: tuple = ()

    def column(self, name: str) -> list:
        return [getattr(v, name) for v in self.voters]

    def values(self) -> tuple:
        """Every number in the report, without formula provenance."""
        return (self.weight,) + tuple(v.values() for v in self.voters)


RESTRICTED_NOTE = (
    "conditional and satisfaction indices are evaluated on the zero-filled "
    "full map; their probabilistic reading assumes independent voters"
)


def full_report(sys: VotingSystem, max_n: int | None = None) -> IndexReport:
    f = decision_function(sys, max_n)
    rs = apply_restrictions(f, sys.forbidden)
    g = rs.restricted
    mwcs = filter_mwcs(minimal_winning_coalitions(f), sys.forbidden)
    pgis = pgi_counts(mwcs, sys.n)
    rows = []
    for m, name in enumerate(sys.voters):
        if rs.is_restricted:
            count, formula = tbp_restricted(rs, m)
        else:
            formula = resolve_formula(g, m, TbpFormula.AUTO)
            count = tbp(g, m, formula)
        rows.append(VoterIndices(
            voter=name,
            tbp=count,
            pbp=pbp(count, sys.n),
            pii=_or_none(pii, g, m),
            ppi=_or_none(ppi, g, m),
            sat=sat(g, m),
            nsat=_or_none(nsat, g, m),
            psat=_or_none(psat, g, m),
            pgi=pgis[m],
            formula_used=formula,
        ))
    notes = (RESTRICTED_NOTE,) if rs.is_restricted else ()
    return IndexReport(sys, tuple(rows), g.popcount(), rs.is_restricted, notes)
