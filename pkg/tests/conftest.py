import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from freiman.borel import BorelSpec, closure  # noqa: E402
from freiman.monomial import parse_monomial, parse_monomial_list  # noqa: E402


def mono(text, n=None):
    return parse_monomial(text, n)


def ideal(text, k=None, n=None):
    return closure(BorelSpec(tuple(parse_monomial_list(text, n)), k=k, n=n))


@pytest.fixture
def example23():
    return ideal("x1*x3^2,x2^2*x4")


_CRITERIA: dict[str, str] = {}


@pytest.fixture
def criterion(request):
    """Record one acceptance line; the test outcome decides PASS or FAIL."""
    info = {"detail": ""}
    yield info
    rep = getattr(request.node, "rep_call", None)
    ok = rep is not None and rep.passed
    _CRITERIA[info["name"]] = f"{'PASS' if ok else 'FAIL'}  {info['name']}  {info['detail']}"


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(_CRITERIA, key=lambda s: int(s.split(".")[0])):
        terminalreporter.write_line(_CRITERIA[key])
