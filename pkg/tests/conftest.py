import pytest

from petitalg import make_finite_extension, make_quadratic_extension

ACCEPTANCE = []


@pytest.fixture(scope="session")
def gf4():
    return make_finite_extension(2, 1, 2)


@pytest.fixture(scope="session")
def gf8():
    return make_finite_extension(2, 1, 3)


@pytest.fixture(scope="session")
def gf9():
    return make_finite_extension(3, 1, 2)


@pytest.fixture(scope="session")
def q3():
    return make_quadratic_extension("Q(i)", -3)


@pytest.fixture(scope="session")
def q12():
    return make_quadratic_extension("Q(i)", "-1/12")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(ACCEPTANCE):
        terminalreporter.write_line(line[1])
