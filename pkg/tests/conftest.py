import warnings

import pytest

from addrepair.field import FieldSpec, make_field
from addrepair.matrix import MatrixGF

# Reference [12, 6] generator over F_13 with addition repair on groups of four.
REF_G12 = [
    [1, 0, 0, 12, 0, 0, 0, 0, 7, 8, 10, 1],
    [0, 1, 0, 12, 0, 0, 0, 0, 8, 2, 5, 11],
    [0, 0, 1, 12, 0, 0, 0, 0, 5, 3, 12, 6],
    [0, 0, 0, 0, 1, 0, 0, 12, 1, 6, 2, 4],
    [0, 0, 0, 0, 0, 1, 0, 12, 5, 7, 8, 6],
    [0, 0, 0, 0, 0, 0, 1, 12, 7, 11, 9, 12],
]

# Reference parity-check matrix for (n, k, r, q) = (12, 6, 3, 13), w = 2.
REF_H12 = [
    [1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1],
    [1, 8, 12, 5, 2, 3, 11, 10, 4, 6, 9, 7],
    [1, 12, 1, 12, 4, 9, 4, 9, 3, 10, 3, 10],
    [1, 5, 12, 8, 8, 1, 5, 12, 12, 8, 1, 5],
]

# [7, 4, 4] MDS code over F_7 and its naive re-encoding.
NAIVE_MDS = [
    [1, 0, 0, 0, 1, 1, 4],
    [0, 1, 0, 0, 1, 2, 3],
    [0, 0, 1, 0, 2, 1, 3],
    [0, 0, 0, 1, 2, 6, 5],
]
NAIVE_REENCODED = [
    [1, 0, 6, 0, 0, 0, 1, 1, 4, 1],
    [0, 1, 6, 0, 0, 0, 1, 2, 3, 1],
    [0, 0, 0, 1, 0, 6, 2, 1, 3, 1],
    [0, 0, 0, 0, 1, 6, 2, 6, 5, 1],
]

# Reference [11, 6] generator; illustrative only (fails the root condition).
REF_G11 = [
    [1, 0, 0, 12, 0, 0, 0, 0, 9, 10, 7],
    [0, 1, 0, 12, 0, 0, 0, 0, 12, 4, 10],
    [0, 0, 1, 12, 0, 0, 0, 0, 10, 4, 12],
    [0, 0, 0, 0, 1, 0, 0, 12, 11, 2, 0],
    [0, 0, 0, 0, 0, 1, 0, 12, 9, 7, 10],
    [0, 0, 0, 0, 0, 0, 1, 12, 11, 8, 7],
]


@pytest.fixture(scope="session")
def f13():
    return make_field(FieldSpec.prime(13))


@pytest.fixture(scope="session")
def f7():
    return make_field(FieldSpec.prime(7))


@pytest.fixture(scope="session")
def f2():
    return make_field(FieldSpec.prime(2))


@pytest.fixture(scope="session")
def ref_g12(f13):
    return MatrixGF.from_rows(f13, REF_G12)


@pytest.fixture(scope="session")
def ref_h12(f13):
    return MatrixGF.from_rows(f13, REF_H12)


@pytest.fixture(autouse=True)
def _quiet_ell_zero():
    with warnings.catch_warnings():
        warnings.filterwarnings("ignore", message="l = 0")
        yield


_acceptance = []


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        _acceptance.append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance:
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")
