import time
from contextlib import contextmanager

import pytest

_criteria: list[str] = []


@pytest.fixture
def criterion():
    """Context manager recording one PASS/FAIL line per acceptance criterion, with a runtime limit."""

    @contextmanager
    def run(number, title, max_seconds=None):
        start = time.perf_counter()
        try:
            yield
            elapsed = time.perf_counter() - start
            if max_seconds is not None and elapsed >= max_seconds:
                raise AssertionError(f"took {elapsed:.2f} s, limit {max_seconds} s")
        except BaseException as exc:
            elapsed = time.perf_counter() - start
            line = f"FAIL  criterion {number}: {title} ({elapsed:.2f} s) -- {str(exc).splitlines()[0] if str(exc) else type(exc).__name__}"
            _criteria.append(line)
            print("\n" + line)
            raise
        line = f"PASS  criterion {number}: {title} ({elapsed:.2f} s)"
        _criteria.append(line)
        print("\n" + line)

    return run


def pytest_terminal_summary(terminalreporter):
    if _criteria:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_criteria, key=lambda s: int(s.split("criterion ")[1].split(":")[0])):
            terminalreporter.write_line(line)
