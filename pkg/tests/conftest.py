from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings

from wlsolve import FuzzyRelation, load_problem
from wlsolve.lattice import product
from wlsolve.problem import fixture_path

settings.register_profile(
    "default", max_examples=200, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

# acceptance results collected here and printed in the terminal summary
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def F(text: str) -> Fraction:
    return Fraction(text)


def rel(lattice, rows, universe=None) -> FuzzyRelation:
    return FuzzyRelation.from_rows(lattice, rows, universe)


@pytest.fixture(scope="session")
def six_node():
    return load_problem(fixture_path("six_node_network"))


@pytest.fixture(scope="session")
def three_node():
    return load_problem(fixture_path("three_node_counterexample"))


@pytest.fixture
def P():
    return product()
