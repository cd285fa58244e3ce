import os
import sys

sys.path.insert(0, os.path.dirname(__file__))

import pytest

_verdicts: dict = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    n = mark.args[0]
    failed = rep.failed or (rep.when == "call" and rep.skipped)
    _verdicts[n] = _verdicts.get(n, True) and not failed


def pytest_terminal_summary(terminalreporter):
    if not _verdicts:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_verdicts):
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if _verdicts[n] else 'FAIL'}")
