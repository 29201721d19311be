"""Shared fixtures and the acceptance-criteria summary hook.

test_acceptance.py records one PASS/FAIL line per criterion; the hook
reprints them in a dedicated section at the end of the run so they stay
visible under pytest's output capture.
"""

import contextlib

import pytest

_ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def criterion_log():
    return _ACCEPTANCE_LINES


@contextlib.contextmanager
def criterion(log, number, label):
    """Record 'PASS criterion N: label' or the FAIL twin, then re-raise."""
    try:
        yield
    except BaseException:
        line = f"FAIL criterion {number}: {label}"
        log.append(line)
        print(line)
        raise
    line = f"PASS criterion {number}: {label}"
    log.append(line)
    print(line)


def _criterion_number(line):
    return int(line.partition("criterion ")[2].partition(":")[0])


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(_ACCEPTANCE_LINES, key=_criterion_number):
        terminalreporter.write_line(line)
