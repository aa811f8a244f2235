"""Asynchronous automata: data model, runs, composition and diagrams."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, List, NamedTuple, Optional, Sequence, Tuple, Union

from .errors import AlphabetMismatchError, DegenerateRunError, InvalidAutomatonError
from .verdict import EPSILON_CYCLE, DecisionWitness, Verdict
from .words import EventuallyPeriodicWord, Word, format_word

StateRef = Union[int, str]


class RunResult(NamedTuple):
    end_state: int
    output: Word


@dataclass(frozen=True)
class AsyncAutomaton:
    """A finite letter-to-word transducer.

    States are the integers ``0 .. len(states) - 1``; ``states`` holds their
    display names. ``delta[q][x]`` is the next state and ``emit[q][x]`` the
    (possibly empty) word written when reading letter ``x`` in state ``q``.
    Instances are validated on construction and never mutated afterwards.
    """

    input_size: int
    output_size: int
    states: Tuple[str, ...]
    delta: Tuple[Tuple[int, ...], ...]
    emit: Tuple[Tuple[Word, ...], ...]
    is_mealy: bool = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "states", tuple(str(s) for s in self.states))
        object.__setattr__(self, "delta", tuple(tuple(row) for row in self.delta))
        object.__setattr__(
            self, "emit", tuple(tuple(tuple(v) for v in row) for row in self.emit)
        )
        validate(self)
        object.__setattr__(
            self, "is_mealy", all(len(v) == 1 for row in self.emit for v in row)
        )

    @property
    def num_states(self) -> int:
        return len(self.states)

    @property
    def has_nonempty_emits(self) -> bool:
        return all(v for row in self.emit for v in row)

    def state_id(self, ref: StateRef) -> int:
        """Resolve a display name or an integer id to a state id."""
        if isinstance(ref, int) and not isinstance(ref, bool):
            if 0 <= ref < self.num_states:
                return ref
            raise InvalidAutomatonError(f"no state with id {ref}")
        if ref in self.states:
            return self.states.index(ref)
        try:
            return self.state_id(int(ref))
        except (TypeError, ValueError):
            raise InvalidAutomatonError(f"no state named {ref!r}") from None

    def transitions(self) -> Iterable[Tuple[int, int, int, Word]]:
        for q in range(self.num_states):
            for x in range(self.input_size):
                yield q, x, self.delta[q][x], self.emit[q][x]


def validate(a: AsyncAutomaton) -> None:
    """Raise :class:`InvalidAutomatonError` describing the first broken invariant."""
    if not isinstance(a.input_size, int) or a.input_size < 1:
        raise InvalidAutomatonError(f"input alphabet size must be >= 1, got {a.input_size!r}")
    if not isinstance(a.output_size, int) or a.output_size < 1:
        raise InvalidAutomatonError(f"output alphabet size must be >= 1, got {a.output_size!r}")
    n = len(a.states)
    if n < 1:
        raise InvalidAutomatonError("automaton needs at least one state")
    if len(set(a.states)) != n:
        raise InvalidAutomatonError("state names must be distinct")
    if len(a.delta) != n:
        raise InvalidAutomatonError(
            f"non-total transition: {len(a.delta)} transition rows for {n} states"
        )
    if len(a.emit) != n:
        raise InvalidAutomatonError(f"non-total emit: {len(a.emit)} emit rows for {n} states")
    for q in range(n):
        if len(a.delta[q]) != a.input_size:
            missing = len(a.delta[q])
            raise InvalidAutomatonError(
                f"non-total transition: state {q} has {missing} entries, "
                f"expected {a.input_size} (first missing letter {missing})"
            )
        if len(a.emit[q]) != a.input_size:
            raise InvalidAutomatonError(
                f"non-total emit: state {q} has {len(a.emit[q])} entries, "
                f"expected {a.input_size}"
            )
        for x in range(a.input_size):
            s = a.delta[q][x]
            if not isinstance(s, int) or isinstance(s, bool) or not 0 <= s < n:
                raise InvalidAutomatonError(f"dangling state id {s!r} at transition ({q},{x})")
            for i, y in enumerate(a.emit[q][x]):
                if not isinstance(y, int) or isinstance(y, bool) or not 0 <= y < a.output_size:
                    raise InvalidAutomatonError(
                        f"letter out of range: emit({q},{x})[{i}]={y!r} "
                        f"(output alphabet size {a.output_size})"
                    )


def _check_input(a: AsyncAutomaton, w: Sequence[int]) -> None:
    for i, x in enumerate(w):
        if not isinstance(x, int) or not 0 <= x < a.input_size:
            raise InvalidAutomatonError(
                f"letter out of range: input[{i}]={x!r} (input alphabet size {a.input_size})"
            )


def run_finite(a: AsyncAutomaton, q: StateRef, w: Sequence[int]) -> RunResult:
    q = a.state_id(q)
    _check_input(a, w)
    out: List[int] = []
    for x in w:
        out.extend(a.emit[q][x])
        q = a.delta[q][x]
    return RunResult(q, tuple(out))


def run_omega_prefix(
    a: AsyncAutomaton,
    q: StateRef,
    w: EventuallyPeriodicWord,
    k: int,
    fuel: Optional[int] = None,
) -> Word:
    """First ``k`` letters of the image of the infinite word ``w``.

    At most ``fuel`` input letters are read (default ``10*k*|Q| + |Q| + k``);
    running out raises :class:`DegenerateRunError`.
    """
    q = a.state_id(q)
    w.check_letters(a.input_size)
    if k <= 0:
        return ()
    if fuel is None:
        fuel = 10 * k * a.num_states + a.num_states + k
    out: List[int] = []
    for used, x in enumerate(w):
        if len(out) >= k:
            break
        if used >= fuel:
            raise DegenerateRunError(
                f"degenerate run: {len(out)} of {k} output letters after {fuel} input letters"
            )
        out.extend(a.emit[q][x])
        q = a.delta[q][x]
    return tuple(out[:k])


def run_omega_exact(
    a: AsyncAutomaton, q: StateRef, w: EventuallyPeriodicWord
) -> EventuallyPeriodicWord:
    """Exact image of an eventually periodic word.

    The state at the start of each pass over the period determines the
    rest of the run, so the first repeated state closes the output cycle.
    """
    q = a.state_id(q)
    w.check_letters(a.input_size)
    head = run_finite(a, q, w.preperiod)
    out = list(head.output)
    q = head.end_state
    seen = {}
    while q not in seen:
        seen[q] = len(out)
        r = run_finite(a, q, w.period)
        out.extend(r.output)
        q = r.end_state
    start = seen[q]
    if start == len(out):
        raise DegenerateRunError(
            f"degenerate run: the period of {w} emits nothing from state {a.states[q]}"
        )
    return EventuallyPeriodicWord(tuple(out[:start]), tuple(out[start:])).canonical()


def compose(a: AsyncAutomaton, b: AsyncAutomaton) -> AsyncAutomaton:
    """The automaton that feeds the output of ``a`` into ``b``.

    State ``(q, s)`` gets id ``q * |Q_b| + s`` and display name ``"(q,s)"``.
    """
    if a.output_size != b.input_size:
        raise AlphabetMismatchError(
            f"alphabet mismatch: first automaton outputs {a.output_size} letters, "
            f"second reads {b.input_size}"
        )
    nb = b.num_states
    names, delta, emit = [], [], []
    for q in range(a.num_states):
        for s in range(nb):
            names.append(f"({a.states[q]},{b.states[s]})")
            drow, erow = [], []
            for x in range(a.input_size):
                r = run_finite(b, s, a.emit[q][x])
                drow.append(a.delta[q][x] * nb + r.end_state)
                erow.append(r.output)
            delta.append(drow)
            emit.append(erow)
    return AsyncAutomaton(a.input_size, b.output_size, names, delta, emit)


def find_epsilon_cycle(a: AsyncAutomaton) -> Optional[List[Tuple[int, int]]]:
    """A cycle of empty-output transitions as ``(state, letter)`` steps, or None."""
    colour = [0] * a.num_states  # 0 unvisited, 1 on stack, 2 done
    for root in range(a.num_states):
        if colour[root]:
            continue
        path: List[Tuple[int, int]] = []
        stack = [(root, 0)]
        colour[root] = 1
        while stack:
            q, x = stack[-1]
            if x == a.input_size:
                stack.pop()
                colour[q] = 2
                if path:
                    path.pop()
                continue
            stack[-1] = (q, x + 1)
            if a.emit[q][x]:
                continue
            s = a.delta[q][x]
            if colour[s] == 1:
                cycle = path + [(q, x)]
                first = next(i for i, (p, _) in enumerate(cycle) if p == s)
                return cycle[first:]
            if colour[s] == 0:
                colour[s] = 1
                path.append((q, x))
                stack.append((s, 0))
    return None


def is_nondegenerate(a: AsyncAutomaton) -> Verdict:
    """Every state maps every infinite word to an infinite word.

    Degenerate exactly when the empty-output transitions contain a cycle.
    """
    cycle = find_epsilon_cycle(a)
    if cycle is None:
        return Verdict("nondegenerate", True)
    return Verdict("nondegenerate", False, DecisionWitness(EPSILON_CYCLE, tuple(cycle)))


def _dot_quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(a: AsyncAutomaton, name: str = "automaton") -> str:
    """Moore diagram in Graphviz DOT, one edge labelled ``x|v`` per transition."""
    lines = [f"digraph {_dot_quote(name)} {{", "  rankdir=LR;", "  node [shape=circle];"]
    for q, label in enumerate(a.states):
        lines.append(f"  s{q} [label={_dot_quote(label)}];")
    for q, x, s, v in a.transitions():
        label = f"{format_word((x,), a.input_size)}|{format_word(v, a.output_size)}"
        lines.append(f"  s{q} -> s{s} [label={_dot_quote(label)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
