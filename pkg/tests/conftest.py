import numpy as np
import pytest

from aafre import Instance
from aafre.oracle import GeneratorConfig, generate_feasible

EXAMPLE1_A = [
    [0.1347, 0.0955, 0.0716, 0, 0.8463, 0.0162, 0.0115, 0.1236],
    [0.4505, 0.1091, 0.2857, 0.4505, 0.8606, 0.4425, 0.3448, 0.6419],
    [0, 0.5548, 0.0081, 0.5723, 0.9391, 0.6595, 0.6430, 0.9200],
    [0.7920, 0.8793, 0.7979, 0, 0.6802, 0.2948, 0.4479, 0.3001],
    [0.4197, 0.2656, 0.1975, 0.4197, 0.9174, 0.9741, 0.2847, 0.0400],
    [0.5325, 0.8505, 0.4725, 0.5325, 0.2567, 0.9504, 0.0982, 0.7674],
]
EXAMPLE1_B = [0.1347, 0.4505, 0.5723, 0.792, 0.4197, 0.5325]
EXAMPLE1_C = [-7.6648, 4.9208, 6.1958, 4.9047, -3.2571, 1.6865, -0.6209, -8.2547]
# not printed with the example; recovered by fit_lambda (see test_oracle)
EXAMPLE1_LAMBDA = 3.0

EXAMPLE1_XBAR = [1, 0.5344, 0.8999, 1, 0.1347, 0.4197, 0.6413, 0.4729]


@pytest.fixture
def example1():
    return Instance(EXAMPLE1_A, EXAMPLE1_B, EXAMPLE1_C, EXAMPLE1_LAMBDA)


def generated_instances(count, seed=0, max_m=4, max_n=5, lam_range=(0.3, 6.0)):
    """Deterministic stream of small feasible instances."""
    rng = np.random.default_rng(seed)
    out = []
    for k in range(count):
        cfg = GeneratorConfig(
            m=int(rng.integers(1, max_m + 1)),
            n=int(rng.integers(1, max_n + 1)),
            density=float(rng.uniform(0.4, 1.0)),
            lam=float(rng.uniform(*lam_range)),
            seed=int(rng.integers(2**31)),
        )
        out.append(generate_feasible(cfg))
    return out


@pytest.fixture(scope="session")
def small_instances():
    return generated_instances(60, seed=7)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
