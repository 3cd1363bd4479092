import re

import pytest

from windtalk import fixtures
from windtalk.cryptanalysis import load_wordlist

_criteria = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_collection_modifyitems(items):
    for item in items:
        marker = item.get_closest_marker("criterion")
        if marker:
            item.user_properties.append(("criterion", marker.args))


def pytest_runtest_logreport(report):
    crit = dict(report.user_properties).get("criterion")
    if crit is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        key = crit
        ok = report.outcome == "passed"
        _criteria[key] = _criteria.get(key, True) and ok


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for (number, title), ok in sorted(_criteria.items(), key=_order):
        terminalreporter.write_line(f"AC-{number:<4} {'PASS' if ok else 'FAIL'}  {title}")


def _order(item):
    number = str(item[0][0])
    digits, suffix = re.match(r"(\d+)(.*)", number).groups()
    return int(digits), suffix


@pytest.fixture(scope="session")
def pangram():
    return fixtures.PANGRAM


@pytest.fixture(scope="session")
def abstract():
    return fixtures.abstract_text()


@pytest.fixture(scope="session")
def corpus():
    return fixtures.corpus_text()


@pytest.fixture(scope="session")
def words():
    return load_wordlist()
