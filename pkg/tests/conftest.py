import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

_criteria = {}


def pytest_runtest_logreport(report):
    name = report.nodeid.split("::")[-1]
    if "test_acceptance" not in report.nodeid or not name.startswith("test_criterion_"):
        return
    number = int(name.split("_")[2])
    if report.when == "call" or report.outcome != "passed":
        ok = _criteria.get(number, True) and report.outcome == "passed"
        _criteria[number] = ok


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        terminalreporter.write_line(
            f"criterion {number}: {'PASS' if _criteria[number] else 'FAIL'}"
        )



def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", help="run the long law sweeps")


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: long-running sweep, needs --runslow")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)
