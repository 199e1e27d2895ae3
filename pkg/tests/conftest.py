import sys

import pytest

from dyckstat import oracle


@pytest.fixture(autouse=True)
def _reset_bounds():
    oracle.set_bounds()
    yield
    oracle.set_bounds()


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in module.RESULTS:
        terminalreporter.write_line(line)
