import pytest

from gauss_steer.quantifier import SolverConfig


@pytest.fixture
def sweep_cfg() -> SolverConfig:
    """Reduced solver budget for bulk sweeps; verdicts stay witness-backed."""
    return SolverConfig(starts=8, samples=4000, max_iters=300, seed=11)
