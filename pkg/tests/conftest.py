from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb

import pytest
from hypothesis import settings

from fglcalc.exact import CPoly

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")

# PASS/FAIL lines from the acceptance suite, repeated in the terminal summary
CRITERION_LINES: list = []


def pytest_terminal_summary(terminalreporter):
    if CRITERION_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(CRITERION_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)


@lru_cache(maxsize=None)
def classical_bernoulli_numbers(n_max: int) -> tuple:
    """B_0..B_n_max from sum_{k<=n} C(n+1, k) B_k = 0 (so B_1 = -1/2)."""
    b = [Fraction(1)]
    for n in range(1, n_max + 1):
        b.append(-sum(comb(n + 1, k) * b[k] for k in range(n)) / (n + 1))
    return tuple(b)


def classical_bernoulli_poly(n: int) -> CPoly:
    b = classical_bernoulli_numbers(n)
    return CPoly({(n - k,): comb(n, k) * b[k] for k in range(n + 1)})


def x_poly(*coeffs) -> CPoly:
    """Polynomial in x from ascending coefficients."""
    return CPoly.from_univariate([Fraction(c) for c in coeffs])


@pytest.fixture
def chi4():
    from fglcalc.zeta import DirichletCharacter

    return DirichletCharacter.quadratic(4, [1, 0, -1, 0])


@pytest.fixture
def chi3():
    from fglcalc.zeta import DirichletCharacter

    return DirichletCharacter.quadratic(3, [1, -1, 0])
