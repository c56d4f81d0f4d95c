import sys
from functools import lru_cache
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

import pytest

from xxz_efp.qkz import GENERIC_Q, OMEGA, solve_qkz


@lru_cache(maxsize=None)
def _solution(mu, N, ring):
    ctx = GENERIC_Q if ring == "generic" else OMEGA
    return solve_qkz(mu, N, ctx)


@pytest.fixture
def qkz_solution():
    """Memoized access to exchange-equation solutions across the test run."""
    return _solution
