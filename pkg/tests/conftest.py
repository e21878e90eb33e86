from __future__ import annotations

import pytest

from brocard.geom import Triangle

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def t345() -> Triangle:
    return Triangle.from_coords((0, 0), (4, 0), (0, 3))


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
