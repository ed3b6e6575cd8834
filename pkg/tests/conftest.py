"""Shared fixtures: per-n companion data is expensive, so build it once per session."""

from __future__ import annotations

from functools import lru_cache

import pytest

from binomial_companion import companion, idealfamily

# filled by test_acceptance, printed once at the end of the run
ACCEPTANCE_LINES: dict[int, str] = {}


@lru_cache(maxsize=None)
def _perms(n: int):
    return tuple(companion.all_reduced_permutations(n))


@lru_cache(maxsize=None)
def _mats(n: int):
    return tuple(companion.all_full_matrices(n))


@pytest.fixture(scope="session")
def perms_for():
    """``perms_for(n)`` -> tuple of reduced permutations P_1..P_n (canonical order)."""
    return _perms


@pytest.fixture(scope="session")
def mats_for():
    return _mats


@pytest.fixture(scope="session")
def gb_for():
    return lru_cache(maxsize=None)(idealfamily.groebner_basis)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[k])
