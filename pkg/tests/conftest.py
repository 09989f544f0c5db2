import time
from contextlib import contextmanager

import pytest

_LINES: list[str] = []


@pytest.fixture
def criterion():
    """Context manager that records one PASS/FAIL line per acceptance criterion."""

    @contextmanager
    def run(number, title, limit):
        t0 = time.perf_counter()
        try:
            yield
            elapsed = time.perf_counter() - t0
            assert elapsed < limit, f"took {elapsed:.2f}s, limit {limit}s"
        except BaseException as exc:
            elapsed = time.perf_counter() - t0
            _LINES.append(f"FAIL criterion {number} ({title}) in {elapsed:.2f}s: {exc}")
            raise
        _LINES.append(f"PASS criterion {number} ({title}) in {elapsed:.2f}s")

    return run


def pytest_terminal_summary(terminalreporter):
    if not _LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(_LINES, key=lambda s: int(s.split()[2])):
        terminalreporter.write_line(line)
