import numpy as np
import pytest

from twosquares.source import ArraySource

# filled by the acceptance module, printed once at the end of the run
ACCEPTANCE_LINES: list[str] = []


def random_instance(rng: np.random.Generator, lo: int, hi: int, span: int = 100) -> np.ndarray:
    n = int(rng.integers(lo, hi + 1))
    return rng.integers(0, span + 1, (n, 4)).astype(float)


def seeded_instances(seed: int, count: int, lo: int, hi: int, span: int = 100):
    rng = np.random.default_rng(seed)
    return [random_instance(rng, lo, hi, span) for _ in range(count)]


@pytest.fixture
def two_diagonal():
    return np.array([[0, 0, 4, 4], [6, 0, 10, 4]], dtype=float)


@pytest.fixture
def h_instance():
    return np.array([[0, 0, 0, 10], [10, 0, 10, 10], [3, 5, 7, 5]], dtype=float)


@pytest.fixture
def source_of():
    return ArraySource


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
