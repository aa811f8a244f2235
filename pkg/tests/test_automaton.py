import pytest
from hypothesis import given
from hypothesis import strategies as st

from cantorfst import (
    AsyncAutomaton,
    build_a,
    build_b,
    compose,
    is_nondegenerate,
    load,
    run_finite,
    run_omega_exact,
    run_omega_prefix,
    save,
    to_dot,
)
from cantorfst.constructions import build_identity, build_shift
from cantorfst.errors import (
    AlphabetMismatchError,
    DegenerateRunError,
    InvalidAutomatonError,
    SchemaError,
)
from cantorfst.words import EventuallyPeriodicWord as E

from conftest import automata, ep_words, words

SIGMA = "σ"


def all_epsilon():
    return AsyncAutomaton(1, 1, ["q"], [[0]], [[()]])


# -- validation ---------------------------------------------------------------


def test_identity_is_valid(identity2):
    assert identity2.is_mealy


def test_missing_entry_is_non_total():
    with pytest.raises(InvalidAutomatonError, match="non-total transition"):
        AsyncAutomaton(2, 2, ["q"], [[0]], [[(0,), (1,)]])


def test_letter_out_of_range():
    # output alphabet {0,1,2} (m=2) but an emit word contains 3
    with pytest.raises(InvalidAutomatonError, match="letter out of range"):
        AsyncAutomaton(2, 3, ["q"], [[0, 0]], [[(0,), (3,)]])


def test_dangling_state():
    with pytest.raises(InvalidAutomatonError, match="dangling"):
        AsyncAutomaton(1, 1, ["q"], [[1]], [[(0,)]])


def test_mealy_flag():
    assert not build_a(2).is_mealy
    assert build_a(1).is_mealy
    assert not build_b(2).is_mealy


# -- finite runs -----------------------------------------------------------------


def test_run_b2():
    assert run_finite(build_b(2), 0, (0, 0, 0)) == (1, (2,))


def test_run_a3():
    r = run_finite(build_a(3), SIGMA, (3, 0))
    assert r.end_state == 0
    assert r.output == (0, 0, 0, 1)


@given(automata(), st.data())
def test_run_empty_word(a, data):
    q = data.draw(st.integers(0, a.num_states - 1))
    assert run_finite(a, q, ()) == (q, ())


@given(automata(), st.data())
def test_run_split_laws(a, data):
    q = data.draw(st.integers(0, a.num_states - 1))
    w = data.draw(words(a.input_size))
    v = data.draw(words(a.input_size))
    mid = run_finite(a, q, w)
    rest = run_finite(a, mid.end_state, v)
    whole = run_finite(a, q, w + v)
    assert whole.end_state == rest.end_state
    assert whole.output == mid.output + rest.output


@given(automata(mealy=True), st.data())
def test_mealy_length_law(a, data):
    w = data.draw(words(a.input_size))
    assert len(run_finite(a, 0, w).output) == len(w)


def test_run_rejects_bad_letter():
    with pytest.raises(InvalidAutomatonError, match="out of range"):
        run_finite(build_b(2), 0, (2,))


# -- infinite runs ---------------------------------------------------------------


def test_omega_prefix_identity_composite():
    c = compose(build_a(2), build_b(2))
    assert run_omega_prefix(c, f"({SIGMA},0)", E((), (0, 1, 2)), 6) == (0, 1, 2, 0, 1, 2)


def test_omega_prefix_zero_length(identity2):
    assert run_omega_prefix(identity2, 0, E((), (1,)), 0) == ()


def test_omega_prefix_degenerate():
    with pytest.raises(DegenerateRunError, match="degenerate run"):
        run_omega_prefix(all_epsilon(), 0, E((), (0,)), 1)


def test_omega_exact_identity(identity2):
    assert run_omega_exact(identity2, 0, E((0, 1), (1,))) == E((0, 1), (1,))


def test_omega_exact_bit_flip():
    assert run_omega_exact(build_a(1), 0, E((), (0,))) == E((), (1,))


def test_omega_exact_a3_b2():
    # oracle: A_3 alone, then B_2 alone, on enough of the input to expose the period
    a3, b2 = build_a(3), build_b(2)
    mid = run_omega_exact(a3, 0, E((), (3,)))
    assert mid == E((), (0,))
    step_by_step = run_omega_exact(b2, 0, mid)
    assert step_by_step == E((), (2,))
    c = compose(a3, b2)
    assert run_omega_exact(c, f"({SIGMA},0)", E((), (3,))) == E((), (2,))


def test_omega_exact_degenerate():
    with pytest.raises(DegenerateRunError):
        run_omega_exact(all_epsilon(), 0, E((), (0,)))


@given(automata(min_emit=1), st.data())
def test_exact_matches_prefix(a, data):
    q = data.draw(st.integers(0, a.num_states - 1))
    w = data.draw(ep_words(a.input_size))
    k = data.draw(st.integers(0, 40))
    assert run_omega_exact(a, q, w).prefix(k) == run_omega_prefix(a, q, w, k)


@given(automata(), st.data())
def test_nondegenerate_never_runs_dry(a, data):
    if not is_nondegenerate(a):
        return
    q = data.draw(st.integers(0, a.num_states - 1))
    w = data.draw(ep_words(a.input_size))
    k = data.draw(st.integers(0, 30))
    assert len(run_omega_prefix(a, q, w, k)) == k
    assert run_omega_exact(a, q, w).prefix(k) == run_omega_prefix(a, q, w, k)


# -- composition -----------------------------------------------------------------


def test_compose_a3_b2_entry():
    c = compose(build_a(3), build_b(2))
    q = c.state_id(f"({SIGMA},0)")
    assert c.emit[q][3] == (2,)
    assert c.states[c.delta[q][3]] == f"({SIGMA},1)"
    # closed form m^floor((q+x)/m) with q=0, x=3, m=2
    assert c.emit[q][3] == (2,) * ((0 + 3) // 2)


def test_compose_identities(identity2):
    c = compose(identity2, identity2)
    assert c.states == ("(q0,q0)",)
    assert c.emit == identity2.emit


def test_compose_mismatch():
    with pytest.raises(AlphabetMismatchError, match="alphabet mismatch"):
        compose(build_b(2), build_a(3))


@st.composite
def composable(draw):
    a = draw(automata())
    b = draw(automata())
    b = AsyncAutomaton(a.output_size, b.output_size, b.states,
                       [[row[x % len(row)] for x in range(a.output_size)] for row in b.delta],
                       [[row[x % len(row)] for x in range(a.output_size)] for row in b.emit])
    return a, b


@given(composable(), st.data())
def test_compose_finite_semantics(ab, data):
    a, b = ab
    q = data.draw(st.integers(0, a.num_states - 1))
    s = data.draw(st.integers(0, b.num_states - 1))
    w = data.draw(words(a.input_size))
    c = compose(a, b)
    ra = run_finite(a, q, w)
    rb = run_finite(b, s, ra.output)
    rc = run_finite(c, q * b.num_states + s, w)
    assert rc.output == rb.output
    assert rc.end_state == ra.end_state * b.num_states + rb.end_state


# -- nondegeneracy -----------------------------------------------------------------


@pytest.mark.parametrize("n", [1, 2, 3, 5])
def test_a_b_nondegenerate(n):
    assert is_nondegenerate(build_a(n))
    assert is_nondegenerate(build_b(n))


def test_epsilon_self_loop():
    v = is_nondegenerate(all_epsilon())
    assert not v
    assert v.witness.kind == "epsilon-cycle"
    assert v.witness.payload == ((0, 0),)


@given(automata())
def test_epsilon_cycle_witness_is_a_cycle(a):
    v = is_nondegenerate(a)
    if v:
        return
    cycle = v.witness.payload
    for (q, x), (nq, _) in zip(cycle, cycle[1:] + cycle[:1]):
        assert a.emit[q][x] == ()
        assert a.delta[q][x] == nq


# -- diagrams and files ------------------------------------------------------------


def test_dot_a1():
    dot = to_dot(build_a(1))
    assert 's0 -> s0 [label="0|1"];' in dot
    assert 's0 -> s0 [label="1|0"];' in dot
    assert dot.count("->") == 2
    assert f'label="{SIGMA}"' in dot


def test_dot_b2():
    dot = to_dot(build_b(2))
    assert 's1 -> s0 [label="0|2"];' in dot
    assert 's0 -> s1 [label="0|ε"];' in dot


@pytest.mark.parametrize(
    "a", [build_a(3), compose(build_a(3), build_b(2)), build_shift(3)], ids=["a3", "a3b2", "shift"]
)
def test_save_load_roundtrip(a):
    b = load(save(a))
    assert b == a
    assert b.states == a.states


def test_save_is_byte_stable():
    assert save(build_b(3)) == save(load(save(build_b(3))))


def test_load_malformed_json():
    with pytest.raises(SchemaError, match="parse error"):
        load(b"{not json")


def test_load_reports_path():
    doc = save(build_identity(2)).decode().replace('"letter": 1', '"letter": "x"')
    with pytest.raises(SchemaError) as info:
        load(doc)
    assert info.value.path == ("transitions", 1, "letter")


def test_load_rejects_missing_transition():
    import json

    doc = json.loads(save(build_identity(2)))
    doc["transitions"].pop()
    with pytest.raises(SchemaError, match="non-total"):
        load(json.dumps(doc))


def test_load_rejects_duplicate_transition():
    import json

    doc = json.loads(save(build_identity(2)))
    doc["transitions"].append(dict(doc["transitions"][0]))
    with pytest.raises(SchemaError, match="duplicate"):
        load(json.dumps(doc))
