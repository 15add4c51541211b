import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))


@pytest.fixture
def rng():
    return np.random.default_rng(20260824)


ACCEPTANCE_LINES = []


def record_acceptance(number, ok, description):
    """Register one acceptance-criterion verdict for the terminal summary."""
    line = f"criterion {number:2d}: {'PASS' if ok else 'FAIL'} - {description}"
    ACCEPTANCE_LINES.append(line)
    return line


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
