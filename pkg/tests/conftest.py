import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from kegraph.generators import gnp  # noqa: E402


def random_graphs(count, n_min, n_max, densities=(0.1, 0.3, 0.5, 0.8), seed=0):
    rng = random.Random(seed)
    for i in range(count):
        n = rng.randint(n_min, n_max)
        yield gnp(n, densities[i % len(densities)], seed=rng.getrandbits(32))


@pytest.fixture
def rgraphs():
    return random_graphs


# one line per acceptance criterion, collected by tests/test_acceptance.py
ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE):
        terminalreporter.write_line(ACCEPTANCE[key])
