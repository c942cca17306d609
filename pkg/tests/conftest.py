import numpy as np
import pytest

from gaussframes.gaussians import CLASSICAL_HBAR

ACCEPTANCE_LINES = {}


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture(params=[CLASSICAL_HBAR, 1.0], ids=["hbar=1/2pi", "hbar=1"])
def hbar(request):
    return request.param


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[k])
