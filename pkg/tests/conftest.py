import time
from contextlib import contextmanager

import pytest

_ACCEPTANCE = {}


@pytest.fixture
def criterion():
    """Record the outcome and wall time of one acceptance criterion."""

    @contextmanager
    def record(number, title, budget=None):
        start = time.perf_counter()
        ok = False
        try:
            yield
            ok = True
        finally:
            elapsed = time.perf_counter() - start
            over = budget is not None and elapsed > budget
            _ACCEPTANCE[number] = (title, ok and not over, elapsed, budget)
            line = _line(number)
            print(line)
            if ok and over:
                pytest.fail(f"{title}: took {elapsed:.2f}s, budget {budget}s")

    return record


def _line(number):
    title, ok, elapsed, budget = _ACCEPTANCE[number]
    limit = f" (budget {budget:g}s)" if budget is not None else ""
    return f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {title}  [{elapsed:.2f}s{limit}]"


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        terminalreporter.write_line(_line(number))
