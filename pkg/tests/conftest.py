import time

import pytest

SUITE_BUDGET_SECONDS = 120

_ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def report():
    """Record one PASS/FAIL line for the acceptance summary."""

    def _record(number: int, passed: bool, detail: str) -> None:
        line = f"[{'PASS' if passed else 'FAIL'}] criterion {number:>2}: {detail}"
        _ACCEPTANCE_LINES.append(line)
        print(line)

    return _record


def pytest_sessionstart(session):
    session.config._suite_t0 = time.perf_counter()


def pytest_terminal_summary(terminalreporter, config):
    if not _ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(_ACCEPTANCE_LINES, key=lambda s: int(s.split("criterion")[1].split(":")[0])):
        terminalreporter.write_line(line)
    elapsed = time.perf_counter() - config._suite_t0
    ok = elapsed < SUITE_BUDGET_SECONDS
    terminalreporter.write_line(
        f"[{'PASS' if ok else 'FAIL'}] criterion 10: full suite ran in {elapsed:.1f}s "
        f"(budget {SUITE_BUDGET_SECONDS}s)")
