import random

import pytest

from boolvote.boolean_core import CapacityError
from boolvote.indices import full_report
from boolvote.oracle import oracle_mwcs, oracle_report
from boolvote.voting import VotingSystem, WeightRow, decision_function, minimal_winning_coalitions

from conftest import random_monotone_system, random_weighted


def test_oracle_mwcs_match_prime_implicants():
    rng = random.Random(11)
    for _ in range(40):
        sys = random_weighted(rng, n_max=9)
        assert oracle_mwcs(sys) == minimal_winning_coalitions(decision_function(sys))


def test_oracle_on_explicit_winning_lists():
    rng = random.Random(12)
    for _ in range(30):
        sys = random_monotone_system(rng)
        assert oracle_report(sys).values() == full_report(sys).values()


def test_oracle_on_multi_row_system():
    sys = VotingSystem(tuple("ABCDE"), (WeightRow((3, 2, 2, 1, 1), 5), WeightRow((1, 1, 1, 1, 1), 3)),
                       forbidden=[{0, 3}])
    assert oracle_report(sys).values() == full_report(sys).values()


def test_oracle_reports_no_formula():
    rep = oracle_report(VotingSystem.k_out_of_n(2, 3))
    assert all(v.formula_used is None for v in rep.voters)


def test_oracle_capacity():
    with pytest.raises(CapacityError):
        oracle_report(VotingSystem.k_out_of_n(2, 21))
