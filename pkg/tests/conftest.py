import os
import sys

sys.path.insert(0, os.path.dirname(__file__))

_criteria: dict[str, tuple[str, str, float]] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    label = dict(report.user_properties).get("criterion")
    if label is None:
        return
    if report.when == "call" or report.failed:
        prev = _criteria.get(report.nodeid)
        outcome = "FAIL" if report.failed or (prev and prev[1] == "FAIL") else "PASS"
        _criteria[report.nodeid] = (label, outcome, report.duration)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for label, outcome, secs in sorted(_criteria.values()):
        terminalreporter.write_line(f"{outcome} criterion {label} ({secs:.1f}s)")
