"""Test configuration: acceptance-criteria reporting.

Acceptance tests register one line per criterion through the `acceptance`
fixture; a terminal-summary hook prints them so every run shows an explicit
PASS or FAIL per criterion.
"""

import pytest

_ACCEPTANCE: dict[int, tuple[str, bool, str]] = {}


@pytest.fixture
def acceptance():
    def record(number: int, name: str, passed: bool, detail: str = "") -> None:
        _ACCEPTANCE[number] = (name, passed, detail)

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        name, passed, detail = _ACCEPTANCE[number]
        status = "PASS" if passed else "FAIL"
        line = f"{status}  criterion {number}: {name}"
        if detail and not passed:
            line += f" ({detail})"
        terminalreporter.write_line(line)
