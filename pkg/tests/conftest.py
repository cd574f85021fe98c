import pytest

_LINES: list[str] = []


@pytest.fixture(scope="session")
def acceptance():
    """Recorder for acceptance lines; they are echoed in the terminal summary."""
    def record(line: str):
        print(line)
        _LINES.append(line)
    return record


def pytest_terminal_summary(terminalreporter):
    if _LINES:
        terminalreporter.section("acceptance criteria")
        for line in _LINES:
            terminalreporter.write_line(line)
