import pytest

_VERDICTS: list[str] = []


@pytest.fixture
def verdict(request):
    """Record and print one PASS/FAIL line for an acceptance criterion."""

    def record(ok: bool, detail: str) -> None:
        title = request.node.function.__doc__.strip().splitlines()[0]
        line = f"{'PASS' if ok else 'FAIL'}  {title} ({detail})"
        _VERDICTS.append(line)
        print(line)

    return record


def pytest_terminal_summary(terminalreporter):
    if _VERDICTS:
        terminalreporter.section("acceptance criteria")
        for line in _VERDICTS:
            terminalreporter.write_line(line)
