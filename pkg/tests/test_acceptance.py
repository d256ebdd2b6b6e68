"""End-to-end acceptance checks; a PASS/FAIL line per check is printed in the summary."""

import itertools
import random
import time

from boolvote.boolean_core import (
    Literal,
    Product,
    SwitchingFunction,
    boole_shannon_expand,
    complement,
    quotient,
    weight,
)
from boolvote.desirability import Desirability, compare_desirability
from boolvote.indices import (
    MONOTONE_FORMULAS,
    NonMonotoneFormulaError,
    TbpFormula,
    full_report,
    pbp,
    pii,
    ppi,
    sat,
    swing_function,
    tbp,
)
from boolvote.models import federal_function
from boolvote.oracle import oracle_report
from boolvote.loader import FIXTURES, load_system
from boolvote.symmetric import SymmetricFunction, binom, sym_to_function
from boolvote.voting import (
    VotingSystem,
    apply_restrictions,
    decision_function,
    restrict_by_expansion,
    restrict_by_mask,
)

from conftest import random_monotone_system, random_weighted

ALL_FORMULAS = [f for f in TbpFormula if f is not TbpFormula.AUTO]


def restricted(sys, *pairs):
    return full_report(sys.with_forbidden(pairs))


def test_ac1_two_of_three():
    sys = VotingSystem.k_out_of_n(2, 3)
    f = decision_function(sys)
    assert {formula: tbp(f, 0, formula) for formula in ALL_FORMULAS} == dict.fromkeys(ALL_FORMULAS, 2)
    free = full_report(sys)
    assert free.column("tbp") == [2, 2, 2] and free.column("pgi") == [2, 2, 2]

    g = apply_restrictions(f, [{0, 1}]).restricted
    assert [tbp(g, m, TbpFormula.PIVOTAL) for m in range(3)] == [1, 1, 2]
    assert [tbp(g, m, TbpFormula.PIVOTAL_COMPLEMENT) for m in range(3)] == [1, 1, 2]
    tied = restricted(sys, {0, 1})
    assert tied.column("tbp") == [1, 1, 2] and tied.column("pgi") == [1, 1, 2]


def test_ac2_scottish_2007():
    sys = load_system("scottish2007.json")
    free = full_report(sys)
    assert free.column("tbp") == [9, 7, 5, 3, 3]
    assert free.column("pgi") == [4, 3, 4, 3, 3]
    tied = restricted(sys, {0, 1})
    assert tied.column("tbp") == [4, 3, 5, 3, 3]
    assert tied.column("pgi") == [3, 2, 4, 3, 3]
    f = decision_function(sys)
    assert weight(quotient(f, Literal(0)), [0]) == 12
    assert weight(quotient(f, Literal(0, False)), [0]) == 3


def _sy(low, high, variables, n=7):
    return sym_to_function(SymmetricFunction(frozenset(range(low, high + 1)), variables), n)


def _term(text, n=7):
    return SwitchingFunction(n, Product.parse(text).table(n))


def test_ac3_seven_voters():
    sys = load_system("seven_voters.json")
    free = full_report(sys)
    assert free.column("tbp") == [46, 16, 8, 8, 8, 8, 8]
    assert free.column("pgi") == [15, 6, 8, 8, 8, 8, 8]
    tied = restricted(sys, {1, 2})
    assert tied.column("tbp") == [31, 10, 6, 7, 7, 7, 7]
    assert tied.column("pgi") == [14, 4, 6, 7, 7, 7, 7]

    f = decision_function(sys)
    g = apply_restrictions(f, [{1, 2}]).restricted
    low4 = (3, 4, 5, 6)
    x1 = _term("X1")

    expansion = boole_shannon_expand(f, [1, 2])
    assert expansion[Product.parse("~X2 ~X3")] == x1 & _sy(3, 4, low4)
    assert expansion[Product.parse("~X2 X3")] == x1 & _sy(2, 4, low4)
    assert expansion[Product.parse("X2 ~X3")] == x1 & _sy(1, 4, low4)
    assert expansion[Product.parse("X2 X3")] == x1 | _sy(4, 4, low4)
    assert g == (_term("X1 X2 ~X3") & _sy(1, 4, low4)) | (_term("X1 ~X2") & _sy(3, 5, (2,) + low4))

    swing2 = swing_function(g, 1)
    assert swing2 == _term("X1 ~X3") & _sy(1, 2, low4)
    assert weight(swing2, [1]) == 10
    swing3 = swing_function(g, 2)
    assert swing3 == _term("X1 ~X2") & _sy(2, 2, low4)
    assert weight(swing3, [2]) == 6
    assert weight(quotient(g, Literal(0)), [0]) == 31
    assert weight(quotient(g, Literal(0, False)), [0]) == 0
    assert tbp(g, 3, TbpFormula.DIFFERENCE) == 7


def test_ac4_five_of_eight():
    sys = load_system("five_of_eight.json")
    free = full_report(sys)
    assert free.column("tbp") == [35] * 8 and free.column("pgi") == [35] * 8
    tied = restricted(sys, {0, 1})
    assert tied.column("tbp") == [15, 15] + [25] * 6
    assert tied.column("pgi") == tied.column("tbp")


def test_ac5_closed_form_sweep():
    start = time.perf_counter()
    for n in range(3, 13):
        for k in range(2, n + 1):
            free = full_report(VotingSystem.k_out_of_n(k, n))
            assert free.column("tbp") == [binom(n - 1, k - 1)] * n, (n, k)
            assert free.column("pgi") == free.column("tbp"), (n, k)
            tied = full_report(VotingSystem.k_out_of_n(k, n, forbidden=[{0, 1}]))
            members = binom(n - 2, k - 1)
            others = binom(n - 3, k - 1) + 2 * binom(n - 3, k - 2)
            assert tied.column("tbp") == [members] * 2 + [others] * (n - 2), (n, k)
            assert tied.column("pgi") == tied.column("tbp"), (n, k)
    elapsed = time.perf_counter() - start
    assert elapsed < 5.0, f"sweep took {elapsed:.2f}s"


def test_ac6_oracle_equivalence():
    rng = random.Random(200)
    for _ in range(200):
        sys = random_weighted(rng, 3, 12)
        assert full_report(sys).values() == oracle_report(sys).values(), sys
        tied = sys.with_forbidden([rng.sample(range(sys.n), 2)])
        assert full_report(tied).values() == oracle_report(tied).values(), tied


def _identity_corpus():
    rng = random.Random(7)
    systems = [load_system(name) for name in FIXTURES]
    systems += [random_weighted(rng, 3, 9) for _ in range(40)]
    systems += [random_monotone_system(rng) for _ in range(40)]
    return systems


def test_ac7_identities():
    rng = random.Random(77)
    for sys in _identity_corpus():
        f = decision_function(sys)
        pair = rng.sample(range(sys.n), 2)
        g = apply_restrictions(f, [pair]).restricted
        for h in (f, g):
            for m in range(sys.n):
                assert tbp(h, m, TbpFormula.PIVOTAL) == tbp(h, m, TbpFormula.PIVOTAL_COMPLEMENT)
        for m in range(sys.n):
            # a yes from X_m can never be needed to block the motion
            lo = quotient(f, Literal(m, False))
            nhi = quotient(complement(f), Literal(m, True))
            assert (lo & nhi).table == 0
        assert restrict_by_mask(f, [pair]) == restrict_by_expansion(f, [pair])

    for name in FIXTURES:
        f = decision_function(load_system(name))
        for m in range(f.n):
            swings = tbp(f, m)
            assert 1 / pii(f, m) + 1 / ppi(f, m) == 2 / pbp(swings, f.n)
            assert sat(f, m) == (1 + pbp(swings, f.n)) / 2

    bans = [{0, 1}, {0, 4}, {4, 5}]
    for _ in range(30):
        f = decision_function(VotingSystem.weighted(
            rng.randint(4, 30), [rng.randint(1, 9) for _ in range(8)]))
        assert restrict_by_mask(f, bans) == restrict_by_expansion(f, bans)
        g = apply_restrictions(f, bans).restricted
        for m in range(8):
            assert tbp(g, m, TbpFormula.PIVOTAL) == tbp(g, m, TbpFormula.PIVOTAL_COMPLEMENT)


def test_ac8_desirability():
    bicameral = decision_function(VotingSystem(
        tuple("ABCDE"), winning=[{0, 2}, {1, 2}, {0, 3, 4}, {1, 3, 4}]))
    assert compare_desirability(bicameral, 0, 1) is Desirability.EQUIVALENT
    assert compare_desirability(bicameral, 2, 3) is Desirability.FIRST_MORE_DESIRABLE
    assert compare_desirability(bicameral, 3, 4) is Desirability.EQUIVALENT
    assert compare_desirability(bicameral, 0, 2) is Desirability.INCOMPARABLE

    president, vice, senator = 0, 1, 2
    f = federal_function()
    assert compare_desirability(f, senator, vice) is Desirability.FIRST_MORE_DESIRABLE
    assert compare_desirability(f, president, senator) is Desirability.FIRST_MORE_DESIRABLE
    assert compare_desirability(f, president, vice) is Desirability.FIRST_MORE_DESIRABLE

    rng = random.Random(8)
    for _ in range(100):
        h = decision_function(random_monotone_system(rng, n_max=8))
        geq = {}
        for a, b in itertools.permutations(range(h.n), 2):
            rel = compare_desirability(h, a, b)
            geq[a, b] = rel in (Desirability.EQUIVALENT, Desirability.FIRST_MORE_DESIRABLE)
        for a, b, c in itertools.permutations(range(h.n), 3):
            if geq[a, b] and geq[b, c]:
                assert geq[a, c]


def test_ac9_guard_rejects_biform():
    g = apply_restrictions(decision_function(VotingSystem.k_out_of_n(2, 3)), [{0, 1}]).restricted
    for formula in MONOTONE_FORMULAS:
        try:
            tbp(g, 0, formula)
        except NonMonotoneFormulaError:
            continue
        raise AssertionError(f"{formula.name} was accepted for a biform voter")
    # Without the guard the pivotal-set formula double counts: 2 instead of the true 1.
    assert tbp(g, 0, TbpFormula.DIFFERENCE, check=False) == 2
    assert tbp(g, 0, TbpFormula.COFACTOR_GAP, check=False) == 0
    assert tbp(g, 0, TbpFormula.PIVOTAL) == 1
