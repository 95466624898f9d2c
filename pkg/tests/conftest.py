import pytest

from quandlekit.group import symmetric_group

ACCEPTANCE_RESULTS = {}


@pytest.fixture(scope="session")
def S3():
    return symmetric_group(3)


@pytest.fixture(scope="session")
def s3_transposition(S3):
    return S3.element_of_perm((1, 0, 2))


@pytest.fixture(scope="session")
def s3_three_cycle(S3):
    return S3.element_of_perm((1, 2, 0))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_RESULTS):
        ok, detail = ACCEPTANCE_RESULTS[key]
        terminalreporter.write_line(f"criterion {key}: {'PASS' if ok else 'FAIL'}  {detail}")
