from __future__ import annotations

import pytest

from blockecc.lab.fixtures import fixture


@pytest.fixture
def fx():
    """Fresh named fixture graphs: ``fx("HEX")``."""
    return fixture


_ACCEPTANCE_LINES: list[str] = []


def record_acceptance(line: str) -> None:
    _ACCEPTANCE_LINES.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
