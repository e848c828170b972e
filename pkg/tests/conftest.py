import functools
import os
import sys

import pytest
from hypothesis import settings

from codomin import catalog
from codomin.scalars import parse_field_spec, prime_field, rationals

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

FIELDS = ("Q", "F2", "F5")
EXTENSIONS = {"F2": "t^2+t+1", "F5": "t^2+2", "Q": "t^2+1"}


@functools.lru_cache(maxsize=None)
def corpus_of(spec):
    return catalog.corpus(parse_field_spec(spec))


@pytest.fixture(scope="session")
def Q():
    return rationals()


@pytest.fixture(scope="session")
def F2():
    return prime_field(2)


@pytest.fixture(scope="session")
def F5():
    return prime_field(5)


@pytest.fixture(scope="session", params=FIELDS)
def corpus(request):
    return corpus_of(request.param)


# --------------------------------------------------------------------------
# one summary line per acceptance criterion

_CRITERIA = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion number and title")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or rep.when != "call" and not rep.failed:
        return
    n, title = mark.args
    ok = _CRITERIA.get(n, (title, True))[1] and not rep.failed
    _CRITERIA[n] = (title, ok)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_CRITERIA):
        title, ok = _CRITERIA[n]
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {title}")
