import pytest

from glfrac import FodeModel, simulate, unit_step

BENCH_TERMS = [(0.8, 2.23), (0.5, 0.88), (1.0, 0.0)]
BENCH_TRUTH = [0.8, 0.5, 1.0]


@pytest.fixture(scope="session")
def bench_model():
    return FodeModel(BENCH_TERMS)


@pytest.fixture(scope="session")
def step_10s():
    return unit_step(10.0, 1e-3)


@pytest.fixture(scope="session")
def bench_response(bench_model, step_10s):
    return simulate(bench_model, step_10s)
