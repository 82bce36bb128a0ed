import pytest

from lr3sym.chamber import load_complex


@pytest.fixture(scope="session")
def cc():
    return load_complex()


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for key in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[key])
