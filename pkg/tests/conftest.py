import random

import pytest
from hypothesis import strategies as st

from boolvote.boolean_core import Product, SwitchingFunction, from_products
from boolvote.voting import VotingSystem

ACCEPTANCE_TITLES = {
    "test_ac1_two_of_three": "AC1 golden 2-out-of-3",
    "test_ac2_scottish_2007": "AC2 golden Scottish 2007",
    "test_ac3_seven_voters": "AC3 golden [7;4,2,1,1,1,1,1]",
    "test_ac4_five_of_eight": "AC4 golden 5-out-of-8",
    "test_ac5_closed_form_sweep": "AC5 k-out-of-n closed forms",
    "test_ac6_oracle_equivalence": "AC6 oracle equivalence",
    "test_ac7_identities": "AC7 identity suite",
    "test_ac8_desirability": "AC8 desirability",
    "test_ac9_guard_rejects_biform": "AC9 monotone-formula guard",
}

_outcomes: dict[str, str] = {}


def pytest_runtest_logreport(report):
    name = report.nodeid.rsplit("::", 1)[-1]
    if name not in ACCEPTANCE_TITLES:
        return
    if report.when == "call" or report.outcome != "passed":
        _outcomes.setdefault(name, "PASS" if report.passed else "FAIL")
        if report.failed:
            _outcomes[name] = "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for name, title in ACCEPTANCE_TITLES.items():
        if name in _outcomes:
            terminalreporter.write_line(f"{_outcomes[name]}  {title}")


@st.composite
def functions(draw, min_n=1, max_n=6):
    n = draw(st.integers(min_n, max_n))
    table = draw(st.integers(0, (1 << (1 << n)) - 1))
    return SwitchingFunction(n, table)


@st.composite
def monotone_functions(draw, min_n=2, max_n=7):
    n = draw(st.integers(min_n, max_n))
    sets = draw(st.lists(st.sets(st.integers(0, n - 1), min_size=1), min_size=1, max_size=6))
    return from_products(n, [Product.positive(s) for s in sets])


def random_weighted(rng: random.Random, n_min=3, n_max=12) -> VotingSystem:
    n = rng.randint(n_min, n_max)
    weights = [rng.randint(1, 99) for _ in range(n)]
    total = sum(weights)
    majority = (total + 2) // 2
    quota = majority if rng.random() < 0.5 else rng.randint(majority, total)
    return VotingSystem.weighted(quota, weights)


def random_monotone_system(rng: random.Random, n_max=8) -> VotingSystem:
    n = rng.randint(2, n_max)
    winning = []
    for _ in range(rng.randint(1, 5)):
        size = rng.randint(1, n)
        winning.append(frozenset(rng.sample(range(n), size)))
    return VotingSystem(tuple(f"X{i + 1}" for i in range(n)), winning=winning)


@pytest.fixture
def rng():
    return random.Random(20070503)
