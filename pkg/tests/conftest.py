from __future__ import annotations

import pytest
from hypothesis import HealthCheck, settings

from comodec.builders import corpus_coalgebras, corpus_comodules, regular_comodule, running_example

settings.register_profile(
    "default", max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


@pytest.fixture(scope="session")
def path():
    return running_example()


@pytest.fixture(scope="session")
def path_regular(path):
    return regular_comodule(path)


@pytest.fixture(scope="session")
def coalgebras():
    return corpus_coalgebras()


@pytest.fixture(scope="session")
def comodules():
    return corpus_comodules()


def pytest_terminal_summary(terminalreporter):
    from . import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.RESULTS:
            terminalreporter.write_line(line)
