import random
import re
import warnings

import pytest
from hypothesis import HealthCheck, settings

from coxtrop.coxgen import GenericityWarning
from coxtrop.laurent import LaurentPoly
from coxtrop.pluecker import PointMatrix, genericity_report

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def signed_monomial(rows):
    """Matrix from rows of (sign, exponent) pairs."""
    return PointMatrix(tuple(tuple(LaurentPoly.monomial(e, s) for s, e in row) for row in rows))


def random_generic_monomial_matrix(rng: random.Random, r=3, n=6, lo=0, hi=12):
    while True:
        rows = [[(rng.choice((1, -1)), rng.randint(lo, hi)) for _ in range(n)] for _ in range(r)]
        M = signed_monomial(rows)
        if r == 2 or genericity_report(M).all():
            return M


@pytest.fixture
def rng():
    return random.Random(20261014)


@pytest.fixture(autouse=True)
def _quiet_genericity():
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", GenericityWarning)
        yield


# -- acceptance summary ---------------------------------------------------------

_ACCEPTANCE = {}
_CRITERION = re.compile(r"test_criterion_(\d+)_(\w+)")


def pytest_runtest_logreport(report):
    m = _CRITERION.search(report.nodeid)
    if not m or "test_acceptance" not in report.nodeid:
        return
    key = (int(m.group(1)), m.group(2))
    if report.when == "call" or report.outcome != "passed":
        prev = _ACCEPTANCE.get(key, True)
        _ACCEPTANCE[key] = prev and report.outcome == "passed"


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for (num, name), ok in sorted(_ACCEPTANCE.items()):
        terminalreporter.write_line(f"criterion {num:2d} {name.replace('_', ' ')}: {'PASS' if ok else 'FAIL'}")
