import random

import pytest

_CRITERIA = []


@pytest.fixture
def rng():
    return random.Random(20261014)


@pytest.fixture
def criterion():
    """Record one acceptance criterion result for the end-of-run summary."""
    def record(name, ok, detail=""):
        _CRITERIA.append((name, bool(ok), detail))
        line = f"{'PASS' if ok else 'FAIL'} {name}" + (f" ({detail})" if detail else "")
        print(line)
        assert ok, line
    return record


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in _CRITERIA:
        terminalreporter.write_line(
            f"{'PASS' if ok else 'FAIL'} {name}" + (f" ({detail})" if detail else ""))
