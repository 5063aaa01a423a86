import pytest

from chordenum import oracle

SWEEP_MAX = 6


@pytest.fixture(scope="session")
def sweeps():
    """Oracle full sweeps for n = 1..6, shared across the whole run."""
    return {n: oracle.full_sweep(n) for n in range(1, SWEEP_MAX + 1)}
