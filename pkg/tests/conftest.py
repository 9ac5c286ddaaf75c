import pytest

from swanbounds.arith import is_square_free, primes_between

GRID_D = [d for d in range(2, 51) if d != 3 and is_square_free(d)]
GRID_P = primes_between(3, 97)

_criteria: list[tuple[str, bool, str]] = []


@pytest.fixture
def record_criterion():
    def record(name: str, ok: bool, detail: str = "") -> None:
        _criteria.append((name, ok, detail))

    return record


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in _criteria:
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {name}  {detail}")
