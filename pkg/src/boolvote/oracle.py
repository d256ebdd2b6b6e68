"""Brute-force reference computations.

Nothing here touches quotients, expansions or symmetric functions: every
number comes from enumerating coalitions and evaluating the outcome twice.
Slow by design; it exists to catch mistakes in the algebraic path.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .boolean_core import Product, SwitchingFunction, check_arity
from .indices import IndexReport, VoterIndices
from .voting import VotingSystem

ORACLE_MAX_VARS = 20


def oracle_tbp(f: SwitchingFunction, m: int) -> int:
    """Count profiles of the others where f(X_m=1) = 1 and f(X_m=0) = 0."""
    check_arity(f.n, ORACLE_MAX_VARS)
    bit = 1 << m
    swings = 0
    for i in range(1 << f.n):
        if i & bit and f.at(i) and not f.at(i ^ bit):
            swings += 1
    return swings


def _membership(n: int) -> np.ndarray:
    coalitions = np.arange(1 << n, dtype=np.int64)
    return ((coalitions[:, None] >> np.arange(n)) & 1).astype(bool)


def _outcomes(sys: VotingSystem, members: np.ndarray, restricted: bool) -> np.ndarray:
    if sys.rows:
        win = np.ones(len(members), dtype=bool)
        for row in sys.rows:
            totals = (members * np.asarray(row.weights, dtype=np.int64)).sum(axis=1)
            win &= totals >= row.quota
    else:
        win = np.zeros(len(members), dtype=bool)
        for coalition in sys.winning:
            win |= members[:, sorted(coalition)].all(axis=1)
    if restricted:
        for c in sys.forbidden:
            win &= ~members[:, sorted(c.members)].all(axis=1)
    return win


def _minimal_winning(win: np.ndarray, n: int) -> list[int]:
    # A winning set is minimal iff no smaller minimal winning set sits inside it.
    order = sorted(np.flatnonzero(win).tolist(), key=lambda c: (bin(c).count("1"), c))
    minimal: list[int] = []
    for c in order:
        if not any(m & ~c == 0 for m in minimal):
            minimal.append(c)
    return minimal


def oracle_mwcs(sys: VotingSystem) -> list[Product]:
    check_arity(sys.n, ORACLE_MAX_VARS)
    win = _outcomes(sys, _membership(sys.n), restricted=False)
    return sorted((Product(c) for c in _minimal_winning(win, sys.n)), key=lambda p: p.members)


def _frac_or_none(num: int, den: int):
    return Fraction(num, den) if den else None


def oracle_report(sys: VotingSystem) -> IndexReport:
    n = sys.n
    check_arity(n, ORACLE_MAX_VARS)
    members = _membership(n)
    win = _outcomes(sys, members, restricted=True)
    passes = int(win.sum())
    fails = (1 << n) - passes

    base = _outcomes(sys, members, restricted=False)
    mwcs = [
        c for c in _minimal_winning(base, n)
        if not any(all(c >> k & 1 for k in fc.members) for fc in sys.forbidden)
    ]

    index = np.arange(1 << n)
    rows = []
    for m, name in enumerate(sys.voters):
        yes = members[:, m]
        flipped = win[index ^ (1 << m)]
        swings = int((yes & win & ~flipped).sum())
        agree_yes = int((yes & win).sum())
        agree_no = int((~yes & ~win).sum())
        rows.append(VoterIndices(
            voter=name,
            tbp=swings,
            pbp=Fraction(swings, 1 << (n - 1)),
            pii=_frac_or_none(int((~win & ~yes & flipped).sum()), fails),
            ppi=_frac_or_none(int((win & yes & ~flipped).sum()), passes),
            sat=Fraction(agree_yes + agree_no, 1 << n),
            nsat=_frac_or_none(agree_no, fails),
            psat=_frac_or_none(agree_yes, passes),
            pgi=sum(1 for c in mwcs if c >> m & 1),
        ))
    return IndexReport(sys, tuple(rows), passes, bool(sys.forbidden))
