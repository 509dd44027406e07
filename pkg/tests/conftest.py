import pytest

from helpers import gr


@pytest.fixture
def z12_antipodal():
    return gr(12, 1, 3, [(i, i + 6) for i in range(6)])


@pytest.fixture
def z12_mixed():
    return gr(12, 1, 3, [(0, 4), (1, 5), (2, 6), (3, 7), (8, 10), (9, 11)])


@pytest.fixture
def z4z2_degenerate():
    return gr((4, 2), (1, 0), (1, 1), [((a, 0), (a, 1)) for a in range(4)])


@pytest.fixture
def z4z4_degenerate():
    return gr((4, 4), (1, 0), (1, 2), [((a, b), (a, b + 1)) for a in range(4) for b in (0, 2)])


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod and mod.VERDICTS:
        terminalreporter.section("acceptance criteria")
        for line in mod.VERDICTS:
            terminalreporter.write_line(line)
