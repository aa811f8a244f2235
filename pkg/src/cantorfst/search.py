"""Exhaustive enumeration of small Mealy automata."""

from __future__ import annotations

import itertools
from typing import Callable, Iterator, Optional

from .analysis import DECIDERS
from .automaton import AsyncAutomaton
from .errors import SearchSpaceError
from .serialize import to_json

MAX_CANDIDATES = 10**7


def count_candidates(x_size: int, y_size: int, max_states: int) -> int:
    return sum((k * y_size) ** (k * x_size) for k in range(1, max_states + 1))


def enumerate_mealy(x_size: int, y_size: int, num_states: int) -> Iterator[AsyncAutomaton]:
    """Every Mealy automaton on states ``0..num_states-1``, in a fixed order.

    Each (state, letter) entry independently ranges over (next state, output
    letter); no isomorphism reduction is applied.
    """
    names = [str(q) for q in range(num_states)]
    choices = list(itertools.product(range(num_states), range(y_size)))
    for entries in itertools.product(choices, repeat=num_states * x_size):
        delta = [[entries[q * x_size + x][0] for x in range(x_size)] for q in range(num_states)]
        emit = [[(entries[q * x_size + x][1],) for x in range(x_size)] for q in range(num_states)]
        yield AsyncAutomaton(x_size, y_size, names, delta, emit)


def expected_count(x_size: int, y_size: int, prop: str) -> Optional[int]:
    """Number of positive verdicts forced by alphabet sizes alone, if any."""
    if prop == "injective" and x_size > y_size:
        return 0
    if prop == "surjective" and x_size < y_size:
        return 0
    if prop == "bijective" and x_size != y_size:
        return 0
    return None


def enumerate_and_decide(
    x_size: int,
    y_size: int,
    max_states: int,
    prop: str,
    observe: Optional[Callable] = None,
    max_counterexamples: int = 10,
) -> dict:
    """Decide ``prop`` from every start state of every automaton up to ``max_states``.

    ``observe(automaton, start, verdict)`` is called for each decision.
    """
    if prop not in DECIDERS:
        raise ValueError(f"unknown property {prop!r}")
    total = count_candidates(x_size, y_size, max_states)
    if total > MAX_CANDIDATES:
        raise SearchSpaceError(
            f"search space too large: {total} candidates exceed {MAX_CANDIDATES}"
        )
    decide = DECIDERS[prop]
    expected = expected_count(x_size, y_size, prop)
    by_states = {}
    holds = decisions = 0
    counterexamples = []
    n_counterexamples = 0
    for k in range(1, max_states + 1):
        per_start = {str(q): {"checked": 0, "holds": 0} for q in range(k)}
        candidates = 0
        for a in enumerate_mealy(x_size, y_size, k):
            candidates += 1
            for q in range(k):
                verdict = decide(a, q)
                decisions += 1
                per_start[str(q)]["checked"] += 1
                if observe is not None:
                    observe(a, q, verdict)
                if verdict.holds:
                    holds += 1
                    per_start[str(q)]["holds"] += 1
                    if expected == 0:
                        n_counterexamples += 1
                        if len(counterexamples) < max_counterexamples:
                            counterexamples.append({"start": q, "automaton": to_json(a)})
        by_states[str(k)] = {"candidates": candidates, "starts": per_start}
    return {
        "x_size": x_size,
        "y_size": y_size,
        "max_states": max_states,
        "property": prop,
        "candidates": total,
        "decisions": decisions,
        "holds": holds,
        "expected_holds": expected,
        "counterexample_count": n_counterexamples,
        "counterexamples": counterexamples,
        "by_states": by_states,
    }
