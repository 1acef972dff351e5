import re

import pytest

_CRITERIA: dict[int, tuple[str, str]] = {}


def pytest_runtest_logreport(report):
    m = re.search(r"test_acceptance\.py::test_criterion_(\d+)_(\w+)", report.nodeid)
    if not m:
        return
    num, name = int(m.group(1)), m.group(2)
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        outcome = "PASS" if report.outcome == "passed" else "FAIL"
        _CRITERIA[num] = (outcome, name.replace("_", " "))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_CRITERIA):
        outcome, name = _CRITERIA[num]
        terminalreporter.write_line(f"{outcome} criterion {num:2d}: {name}")


@pytest.fixture
def small_primes():
    return [5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47]
