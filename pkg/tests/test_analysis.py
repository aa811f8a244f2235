import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cantorfst import (
    INFINITE,
    AsyncAutomaton,
    build_a,
    build_c,
    check_short_map,
    decide_bijective,
    decide_injective,
    decide_surjective,
    distance,
    expected_ab_tables,
    lcp,
    mealyfy,
    omega_function,
    run_omega_exact,
)
from cantorfst.analysis import (
    injective_bounded,
    producing_states,
    random_pairs,
    surjective_bounded,
    verify_witness,
)
from cantorfst.constructions import build_constant, build_identity, build_shift
from cantorfst.errors import NotMealyError
from cantorfst.words import EventuallyPeriodicWord as E

from conftest import automata, ep_words


def test_lcp_finite():
    assert lcp([(0, 1, 0), (0, 1, 1)]) == (0, 1)


def test_lcp_same_infinite_word():
    assert lcp([E((), (0,)), E((0,), (0,))]) is INFINITE


def test_lcp_disjoint():
    assert lcp([E((), (0,)), E((), (1,))]) == ()


def test_lcp_mixed():
    assert lcp([E((), (0, 1)), (0, 1, 0, 0)]) == (0, 1, 0)


def test_lcp_empty_set():
    with pytest.raises(ValueError):
        lcp([])


@given(ep_words(2), ep_words(2))
def test_lcp_of_distinct_words_is_exact(u, v):
    common = lcp([u, v])
    if u == v:
        assert common is INFINITE
    else:
        n = len(common)
        assert u.prefix(n) == v.prefix(n)
        assert u.letter(n) != v.letter(n)


def test_distance_examples():
    assert distance(E((0,), (1,)), E((0,), (1,))) == 0
    assert distance(E((), (0,)), E((), (1,))) == 1
    assert distance(E((0, 1), (0,)), E((0, 1), (1,))) == Fraction(1, 4)
    assert distance(E((0, 1), (0,)), E((0, 1), (1,)), Fraction(1, 3)) == Fraction(1, 9)
    with pytest.raises(ValueError):
        distance(E((), (0,)), E((), (1,)), 1)


@given(ep_words(2), ep_words(2), ep_words(2))
def test_ultrametric(u, v, w):
    assert distance(u, w) <= max(distance(u, v), distance(v, w))


@given(automata(mealy=True), st.data())
def test_mealy_maps_are_short(a, data):
    u = data.draw(ep_words(a.input_size))
    v = data.draw(ep_words(a.input_size))
    fu, fv = run_omega_exact(a, 0, u), run_omega_exact(a, 0, v)
    assert distance(fu, fv) <= distance(u, v)


# -- deciders ------------------------------------------------------------------------


def test_identity_is_bijective():
    a = build_identity(2)
    assert decide_injective(a, 0)
    assert decide_surjective(a, 0)
    assert decide_bijective(a, "q0")


def test_constant_map():
    a = build_constant(2, 2)
    inj = decide_injective(a, 0)
    assert not inj
    assert inj.witness.payload == (E((), (0,)), E((), (1,)))
    sur = decide_surjective(a, 0)
    assert not sur
    assert sur.witness.payload == (1,)


def test_three_to_two_collision():
    a = AsyncAutomaton(3, 2, ["q"], [[0, 0, 0]], [[(0,), (1,), (0,)]])
    v = decide_injective(a, 0)
    assert not v
    assert v.witness.payload == (E((), (0,)), E((), (2,)))
    assert verify_witness(a, 0, v.witness)


def test_bit_flip_surjective():
    assert decide_surjective(build_a(1), 0)


@pytest.mark.parametrize("n", range(1, 6))
def test_c_diagonal_bijective(n):
    assert decide_bijective(build_c(n, n), 0)


def test_deciders_require_mealy():
    for decide in (decide_injective, decide_surjective, decide_bijective):
        with pytest.raises(NotMealyError):
            decide(build_a(2), 0)


def test_delayed_copy_is_injective():
    # writes the previous letter: injective on infinite words although
    # finite words differing in their last letter collide
    a = AsyncAutomaton(2, 2, ["0", "1"], [[0, 1], [0, 1]], [[(0,), (0,)], [(1,), (1,)]])
    assert decide_injective(a, 0)
    assert injective_bounded(a, 0)


@settings(max_examples=300)
@given(automata(mealy=True, max_states=3, max_in=3, max_out=3), st.data())
def test_deciders_agree_with_bounded_oracles(a, data):
    q = data.draw(st.integers(0, a.num_states - 1))
    inj = decide_injective(a, q)
    sur = decide_surjective(a, q)
    assert inj.holds == injective_bounded(a, q)
    assert sur.holds == surjective_bounded(a, q)
    for v in (inj, sur):
        if not v:
            assert verify_witness(a, q, v.witness, k=4 * a.num_states**2 + 16)


@given(automata(mealy=True), st.data())
def test_surjective_witness_is_shortest(a, data):
    q = data.draw(st.integers(0, a.num_states - 1))
    v = decide_surjective(a, q)
    if v:
        return
    word = v.witness.payload
    assert not producing_states(a, q, word)
    assert producing_states(a, q, word[:-1])


# -- short maps ------------------------------------------------------------------------


def test_mealyfied_composite_is_short():
    f = mealyfy(expected_ab_tables(3, 2), 0)
    pairs = random_pairs(random.Random(7), 4, 200)
    report = check_short_map(pairs, f.omega_prefix, 64)
    assert report.checked == 200
    assert report.ok


def test_shift_violates():
    f = omega_function(build_shift(2), 0)
    report = check_short_map([(E((), (0,)), E((0, 1), (0,)))], f, 8)
    assert not report.ok
    (_, _, common_in, common_out), = report.violations
    assert (common_in, common_out) == (1, 0)


def test_identical_pair():
    u = E((1,), (0, 1))
    report = check_short_map([(u, u)], omega_function(build_identity(2), 0), 16)
    assert report.ok
