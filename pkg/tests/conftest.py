from pathlib import Path

import pytest

from scoreseq.bfile import parse_bfile
from scoreseq.model import ClassKind

DATA = Path(__file__).parent / "data"

# Published tables, n = 0..100 (self-complementary, strong, strong self-complementary)
GOLDEN_FILES = {
    ClassKind.SELF_COMPLEMENTARY: DATA / "sc_0_100.txt",
    ClassKind.STRONG: DATA / "strong_0_100.txt",
    ClassKind.STRONG_SELF_COMPLEMENTARY: DATA / "ssc_0_100.txt",
}

# Plain score-sequence counts n = 0..10
KNOWN_ALL = [1, 1, 1, 2, 4, 9, 22, 59, 167, 490, 1486]


def load_golden(kind):
    with open(GOLDEN_FILES[kind]) as fh:
        return [e.value for e in parse_bfile(fh)]


@pytest.fixture(scope="session")
def golden():
    return {kind: load_golden(kind) for kind in GOLDEN_FILES}


def pytest_terminal_summary(terminalreporter):
    from tests import test_acceptance
    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.RESULTS.values():
            terminalreporter.write_line(line)
