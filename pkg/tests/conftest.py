from __future__ import annotations

import pytest
from hypothesis import HealthCheck, settings

from contiguous_gallery import fixtures

settings.register_profile(
    "default",
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


@pytest.fixture
def square():
    return fixtures.square()


@pytest.fixture
def comb():
    return fixtures.comb()


@pytest.fixture
def l_shape():
    return fixtures.l_shape()


@pytest.fixture(scope="session")
def two_guard_room():
    return fixtures.two_guard_room()


@pytest.fixture(scope="session")
def four_guard_cross():
    return fixtures.four_guard_cross()


@pytest.fixture(scope="session")
def six_guard_pinwheel():
    return fixtures.six_guard_pinwheel()


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("test_acceptance")
    results = getattr(module, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(results):
        terminalreporter.write_line(results[num])
