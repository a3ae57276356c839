import numpy as np
import pytest

from screened_susy import oracle


@pytest.fixture(scope="session", autouse=True)
def warm_numerov_kernel():
    # trigger the JIT compile once so per-test timings measure physics only
    prob = oracle.RadialProblem(potential=lambda r: -1.0 / r, l=0,
                                grid=oracle.RadialGrid(1e-4, 30.0, 2000))
    oracle.numerov_sweep(prob, -0.5)
