import pytest

from factforest.green import compute_green
from factforest.zoo import zoo

ZOO = zoo()
GREEN = {name: compute_green(phi.semigroup) for name, phi in ZOO.items()}


@pytest.fixture(params=list(ZOO))
def zoo_entry(request):
    name = request.param
    return name, ZOO[name], GREEN[name]


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
