from __future__ import annotations

import re

import pytest

_RESULTS: dict[str, tuple[str, float, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance: acceptance criteria with time limits")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    m = re.match(r"test_criterion_(\d+)_", item.name)
    if m is None:
        return
    doc = (item.function.__doc__ or "").strip().splitlines()[0] if item.function.__doc__ else item.name
    key = m.group(1)
    if report.when == "call" or (report.when == "setup" and report.failed):
        status = "PASS" if report.passed else ("SKIP" if report.skipped else "FAIL")
        _RESULTS[key] = (status, report.duration, doc)


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(_RESULTS, key=int):
        status, duration, doc = _RESULTS[key]
        terminalreporter.write_line(f"criterion {key}: {status} ({duration:.1f}s) {doc}")
