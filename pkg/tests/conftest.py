import pytest

from cylindric_rr.cylindric import CylindricPartition, Profile


@pytest.fixture
def worked_example():
    return Profile((2, 2, 0)), CylindricPartition(((3, 2, 1, 1), (4, 3, 3, 1), (4, 1, 1)))


def pytest_terminal_summary(terminalreporter):
    from . import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.RESULTS:
            terminalreporter.write_line(line)
