"""Shared fixtures; collects acceptance verdicts for the summary block."""

import pytest

_VERDICTS = []


@pytest.fixture
def verdict():
    """Record one acceptance-criterion outcome before its assert fires."""

    def record(number: int, label: str, passed: bool, note: str = "") -> None:
        _VERDICTS.append((number, label, passed, note))

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _VERDICTS:
        return
    terminalreporter.section("acceptance criteria")
    for number, label, passed, note in sorted(_VERDICTS):
        status = "PASS" if passed else "FAIL"
        line = f"criterion {number:02d} {label}: {status}"
        if note:
            line += f" ({note})"
        terminalreporter.write_line(line)
