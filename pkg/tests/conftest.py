"""Acceptance reporting: tests marked ``criterion(n, title)`` are rolled up
into one PASS/FAIL line per criterion at the end of the run."""

from collections import defaultdict

import pytest

_results = defaultdict(list)
_titles = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion this test checks")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    number, title = mark.args
    _titles[number] = title
    if report.when == "call" or (report.when == "setup" and not report.passed):
        _results[number].append((item.name, report.passed, report.skipped))


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for number in sorted(_results):
        checks = _results[number]
        failed = [name for name, ok, skipped in checks if not ok and not skipped]
        skipped = [name for name, ok, sk in checks if sk]
        status = "FAIL" if failed else ("SKIP" if len(skipped) == len(checks) else "PASS")
        ran = len(checks) - len(skipped)
        tr.write_line(
            f"ACCEPTANCE criterion {number} ({_titles[number]}): {status} "
            f"[{ran - len(failed)}/{ran} checks passed]"
        )
        for name in failed:
            tr.write_line(f"    failed: {name}")
