import pytest
from hypothesis import strategies as st

from cantorfst import AsyncAutomaton, EventuallyPeriodicWord


@st.composite
def automata(draw, mealy=False, max_states=3, max_in=3, max_out=3, max_emit=3, min_emit=0):
    n = draw(st.integers(1, max_states))
    x = draw(st.integers(1, max_in))
    y = draw(st.integers(1, max_out))
    if mealy:
        min_emit = max_emit = 1
    delta = [[draw(st.integers(0, n - 1)) for _ in range(x)] for _ in range(n)]
    emit = [
        [
            tuple(draw(st.lists(st.integers(0, y - 1), min_size=min_emit, max_size=max_emit)))
            for _ in range(x)
        ]
        for _ in range(n)
    ]
    return AsyncAutomaton(x, y, [f"q{i}" for i in range(n)], delta, emit)


def words(size, max_len=12, min_len=0):
    return st.lists(st.integers(0, size - 1), min_size=min_len, max_size=max_len).map(tuple)


def ep_words(size, max_pre=6, max_per=4):
    return st.builds(
        EventuallyPeriodicWord, words(size, max_pre), words(size, max_per, min_len=1)
    )


@pytest.fixture
def identity2():
    return AsyncAutomaton(2, 2, ["q0"], [[0, 0]], [[(0,), (1,)]])


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance: package exit criteria")
    config.addinivalue_line("markers", "criterion(number, text): acceptance criterion")


_criteria = {}


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    key = marker.args
    failed = call.excinfo is not None
    if call.when == "call" or failed:
        _criteria[key] = _criteria.get(key, True) and not failed


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for (number, text), ok in sorted(_criteria.items()):
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {text}")
