import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from infodist.machine import StepBound  # noqa: E402


@pytest.fixture
def bound():
    return StepBound(8, 1, 16)


@pytest.fixture(scope="session")
def synth_corpus():
    from infodist.corpus import synthetic_corpus
    return synthetic_corpus()


@pytest.fixture(scope="session")
def synth_matrix(synth_corpus):
    from infodist.ncd import matrix
    return matrix(synth_corpus)


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)
