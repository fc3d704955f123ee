"""Collects the acceptance-criterion outcomes and prints one line per criterion."""

import pytest

_results: dict[str, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    label, title = mark.args
    if rep.failed or (rep.when == "call" and label not in _results):
        _results[label] = ("FAIL" if rep.failed else "PASS", title)


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_results, key=lambda s: int(s[2:])):
        status, title = _results[label]
        terminalreporter.write_line(f"{label} {status}  {title}")
