"""The automata A_n, B_m and C, and closed-form tables for their compositions.

Everything here is written from the closed formulas and never calls
:func:`cantorfst.automaton.compose` or runs an automaton, so the generic
operations and these tables can check each other.
"""

from __future__ import annotations

from math import gcd

from .automaton import AsyncAutomaton, RunResult
from .errors import AutomatonError

SIGMA = "σ"


def _positive(**params):
    for name, value in params.items():
        if not isinstance(value, int) or isinstance(value, bool) or value < 1:
            raise AutomatonError(f"{name} must be a positive integer, got {value!r}")


def build_a(n: int) -> AsyncAutomaton:
    """One state σ over {0..n} writing ``0^x 1`` for x < n and ``0^n`` for x = n."""
    _positive(n=n)
    emit = [(0,) * x + (1,) for x in range(n)] + [(0,) * n]
    return AsyncAutomaton(n + 1, 2, [SIGMA], [[0] * (n + 1)], [emit])


def build_b(m: int) -> AsyncAutomaton:
    """States 0..m-1 over {0,1}: a ``1`` writes the state and resets to 0,
    a ``0`` counts up mod m and writes ``m`` when wrapping around."""
    _positive(m=m)
    delta, emit = [], []
    for q in range(m):
        delta.append([(q + 1) % m, 0])
        emit.append([(m,) if q == m - 1 else (), (q,)])
    return AsyncAutomaton(2, m + 1, [str(q) for q in range(m)], delta, emit)


def b_closed_form(m: int, q: int, t: int, trailing_one: bool = False) -> RunResult:
    """End state and output of B_m from ``q`` on ``0^t`` (followed by ``1`` if asked)."""
    _positive(m=m)
    if not 0 <= q < m:
        raise AutomatonError(f"state {q} out of range for B_{m}")
    if t < 0:
        raise AutomatonError(f"t must be non-negative, got {t}")
    wraps = (m,) * ((q + t) // m)
    if trailing_one:
        return RunResult(0, wraps + ((q + t) % m,))
    return RunResult((q + t) % m, wraps)


def expected_ab_tables(n: int, m: int) -> AsyncAutomaton:
    """A_n∘B_m written directly from its closed-form transition and output tables."""
    _positive(n=n, m=m)
    delta, emit = [], []
    for q in range(m):
        drow, erow = [], []
        for x in range(n + 1):
            wraps = (m,) * ((q + x) // m)
            if x < n:
                drow.append(0)
                erow.append(wraps + ((q + x) % m,))
            else:
                drow.append((q + n) % m)
                erow.append(wraps)
        delta.append(drow)
        emit.append(erow)
    names = [f"({SIGMA},{q})" for q in range(m)]
    return AsyncAutomaton(n + 1, m + 1, names, delta, emit)


def expected_ba_tables(n: int) -> AsyncAutomaton:
    """B_n∘A_n written directly from its closed-form tables."""
    _positive(n=n)
    delta, emit = [], []
    for q in range(n):
        delta.append([(q + 1) % n, 0])
        erow = []
        for x in (0, 1):
            if x == 0 and q != n - 1:
                erow.append(())
            else:
                erow.append((0,) * q + (x,))
        emit.append(erow)
    names = [f"({q},{SIGMA})" for q in range(n)]
    return AsyncAutomaton(2, 2, names, delta, emit)


def eta(n: int, m: int) -> int:
    _positive(n=n, m=m)
    return m // gcd(n, m)


def build_c(n: int, m: int) -> AsyncAutomaton:
    """The connected part of A_n∘B_m reachable from (σ,0), on states 0..η-1.

    State ``q`` stands for the B_m counter value ``q*n mod m``.
    """
    size = eta(n, m)
    delta, emit = [], []
    for q in range(size):
        r = (q * n) % m
        drow, erow = [], []
        for x in range(n + 1):
            wraps = (m,) * ((r + x) // m)
            if x < n:
                drow.append(0)
                erow.append(wraps + ((r + x) % m,))
            else:
                drow.append((q + 1) % size)
                erow.append(wraps)
        delta.append(drow)
        emit.append(erow)
    return AsyncAutomaton(n + 1, m + 1, [str(q) for q in range(size)], delta, emit)


def build_identity(size: int) -> AsyncAutomaton:
    _positive(size=size)
    return AsyncAutomaton(size, size, ["q0"], [[0] * size], [[(x,) for x in range(size)]])


def build_constant(input_size: int, output_size: int, letter: int = 0) -> AsyncAutomaton:
    _positive(input_size=input_size, output_size=output_size)
    return AsyncAutomaton(
        input_size, output_size, ["q"], [[0] * input_size], [[(letter,)] * input_size]
    )


def build_shift(size: int) -> AsyncAutomaton:
    """Drops the first letter and copies the rest (continuous but not Mealy-definable)."""
    _positive(size=size)
    return AsyncAutomaton(
        size,
        size,
        ["start", "echo"],
        [[1] * size, [1] * size],
        [[()] * size, [(x,) for x in range(size)]],
    )
