"""Shared test plumbing: the acceptance-criteria report.

Each acceptance test records exactly one PASS/FAIL line; the lines are
echoed in a terminal section at the end of the run so they are visible
even with output capture on.
"""

from __future__ import annotations

import pytest

acceptance_lines: list[str] = []


@pytest.fixture(scope="session")
def record_criterion():
    return record


def record(num: int, ok: bool, detail: str) -> bool:
    line = f"[criterion {num:2d}] {'PASS' if ok else 'FAIL'}: {detail}"
    acceptance_lines.append(line)
    print(line)
    return ok


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in acceptance_lines:
            terminalreporter.write_line(line)
