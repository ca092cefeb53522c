import os

# re-check invariants after every construction during tests
os.environ.setdefault("POLYFEW_VALIDATE", "1")

import pytest  # noqa: E402

from polyfew import make_polytope, product, pyramid, simplex  # noqa: E402

PRISM_FACETS = [[0, 1, 2], [3, 4, 5], [0, 1, 3, 4], [1, 2, 4, 5], [0, 2, 3, 5]]


@pytest.fixture
def square():
    return make_polytope(2, [[0, 1], [1, 2], [2, 3], [0, 3]], 4)


@pytest.fixture
def prism():
    return make_polytope(3, PRISM_FACETS, 6)


@pytest.fixture
def cube():
    seg = simplex(1)
    return product(product(seg, seg), seg)


@pytest.fixture
def square_pyramid(square):
    return pyramid(square)


_CRITERIA: dict[int, str] = {}


@pytest.fixture
def criterion(request):
    """Record a pass/fail line for an acceptance criterion, timed."""
    import time

    state = {}

    def start(number: int, title: str):
        state.update(number=number, title=title, t0=time.perf_counter())

    yield start
    if not state:
        return
    elapsed = time.perf_counter() - state["t0"]
    failed = getattr(request.node, "rep_call", None)
    ok = failed is not None and failed.passed
    _CRITERIA[state["number"]] = (
        f"[{'PASS' if ok else 'FAIL'}] criterion {state['number']}: {state['title']} ({elapsed:.1f}s)"
    )


@pytest.hookimpl(wrapper=True)
def pytest_runtest_makereport(item, call):
    rep = yield
    if rep.when == "call":
        item.rep_call = rep
    return rep


def pytest_terminal_summary(terminalreporter):
    if _CRITERIA:
        terminalreporter.section("acceptance criteria")
        for n in sorted(_CRITERIA):
            terminalreporter.write_line(_CRITERIA[n])
