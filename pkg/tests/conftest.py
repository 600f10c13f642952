import pytest

# acceptance outcomes: criterion number -> (passed, message)
ACCEPTANCE = {}


@pytest.fixture
def acceptance():
    def record(number, passed, message):
        ACCEPTANCE[number] = (bool(passed), message)
    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        passed, message = ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if passed else 'FAIL'} - {message}")
