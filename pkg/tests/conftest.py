import pytest

ACCEPTANCE_LINES = []


@pytest.fixture
def criterion():
    def report(number, ok, detail):
        ACCEPTANCE_LINES.append("criterion %d: %s  %s" % (number, "PASS" if ok else "FAIL", detail))
        return ok
    return report


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
