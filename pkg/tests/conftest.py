import pytest

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def criterion():
    """Record a PASS/FAIL line for an acceptance criterion."""
    def record(label: str, ok: bool):
        ACCEPTANCE_LINES.append(f"[{'PASS' if ok else 'FAIL'}] {label}")
        assert ok, label
    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
