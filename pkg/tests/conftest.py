import pytest

_CRITERIA = []


@pytest.fixture
def criterion(request):
    """Record one pass/fail line per acceptance criterion."""

    def record(label, ok, detail=""):
        _CRITERIA.append((label, bool(ok), detail))
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for label, ok, detail in _CRITERIA:
        line = f"{'PASS' if ok else 'FAIL'}  {label}"
        terminalreporter.write_line(f"{line}  ({detail})" if detail else line)
