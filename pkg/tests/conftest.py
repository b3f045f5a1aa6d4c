import random

import pytest
from hypothesis import strategies as st

from valuebound.gf import field_make, prime_power
from valuebound.report import random_map

SMALL_Q = [2, 3, 4, 5, 7, 8, 9]

_ACCEPTANCE: list[tuple[str, bool, str]] = []


@pytest.fixture
def criterion(request):
    """Record one acceptance line per test; printed in the terminal summary."""
    name = request.node.name

    def record(ok: bool, detail: str = ""):
        _ACCEPTANCE.append((name, bool(ok), detail))
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in _ACCEPTANCE:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")


def field_of(q):
    return field_make(*prime_power(q))


@st.composite
def small_maps(draw, qs=(2, 3, 4, 5), ns=(1, 2), max_domain=27):
    """Random sparse maps using every variable, with q^n <= max_domain."""
    pairs = [(q, n) for q in qs for n in ns if q**n <= max_domain]
    q, n = draw(st.sampled_from(pairs))
    seed = draw(st.integers(0, 2**32 - 1))
    return random_map(field_of(q), n, random.Random(seed), max_terms=3)
