"""Finite-state transducers and bijective colourings of Cantor trees."""

from .analysis import (
    INFINITE,
    check_short_map,
    decide_bijective,
    decide_injective,
    decide_surjective,
    distance,
    lcp,
    omega_function,
)
from .automaton import (
    AsyncAutomaton,
    RunResult,
    compose,
    is_nondegenerate,
    run_finite,
    run_omega_exact,
    run_omega_prefix,
    to_dot,
    validate,
)
from .colouring import (
    Colouring,
    colour_of,
    colour_tree,
    l_prefix,
    mealy_from_colouring,
    mealyfy,
    tilde_c,
)
from .constructions import (
    b_closed_form,
    build_a,
    build_b,
    build_c,
    build_constant,
    build_identity,
    build_shift,
    eta,
    expected_ab_tables,
    expected_ba_tables,
)
from .search import enumerate_and_decide
from .serialize import load, save
from .verdict import DecisionWitness, Verdict
from .words import EventuallyPeriodicWord

__all__ = [name for name in dir() if not name.startswith("_")]
