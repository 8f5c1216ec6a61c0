import pytest

from sigma_lab.setfam import discrete, indiscrete, sierpinski, witness_w


@pytest.fixture
def S():
    return sierpinski()


@pytest.fixture
def W():
    return witness_w()


@pytest.fixture
def D2():
    return discrete(2)


@pytest.fixture
def I2():
    return indiscrete(2)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in range(1, 8):
        terminalreporter.write_line(mod.RESULTS.get(num, f"[FAIL] {num}. did not complete"))
