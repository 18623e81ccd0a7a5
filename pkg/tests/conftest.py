import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

_LINES = {}


@pytest.fixture
def acceptance_line():
    """Store the one-line verdict of an acceptance criterion for the terminal summary."""

    def record(number: int, ok: bool, text: str):
        _LINES[number] = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {text}"
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if not _LINES:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_LINES):
        terminalreporter.write_line(_LINES[number])
