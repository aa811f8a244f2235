"""Colourings of the Cantor tree and their letter-to-letter machines.

A colouring assigns a letter to every non-empty vertex ``w`` of the tree of
finite words; along an infinite path it reads off an infinite word.
"""

from __future__ import annotations

from collections import deque
from typing import Callable, Dict, Hashable, List, NamedTuple, Optional, Sequence, Tuple

from .automaton import AsyncAutomaton, StateRef, run_finite
from .errors import DepthExceededError, EmptyEmissionError, NotMealyError
from .words import EventuallyPeriodicWord, Word, check_letters, format_word


def colour_of(a: AsyncAutomaton, q: StateRef, w: Sequence[int]) -> int:
    """Letter written by a Mealy automaton on the last letter of ``w``."""
    if not a.is_mealy:
        raise NotMealyError("not a Mealy automaton")
    if not w:
        raise ValueError("empty word has no colour")
    before = run_finite(a, q, w[:-1])
    return a.emit[before.end_state][w[-1]][0]


def _require_nonempty(a: AsyncAutomaton) -> None:
    for q, x, _, v in a.transitions():
        if not v:
            raise EmptyEmissionError(
                f"empty emission present at state {a.states[q]!r}, letter {x}"
            )


def l_prefix(a: AsyncAutomaton, q: StateRef, w: Sequence[int]) -> Word:
    """The length-|w| prefix of the output on ``w``.

    Every continuation of ``w`` has an image starting with this word.
    """
    _require_nonempty(a)
    return run_finite(a, q, w).output[: len(w)]


class LazyMealy:
    """A letter-to-letter machine whose states are produced on demand."""

    input_size: int
    output_size: int
    start: Hashable

    def step(self, state, x: int) -> Tuple[Hashable, int]:
        raise NotImplementedError

    def run(self, w: Sequence[int], state=None) -> Tuple[Hashable, Word]:
        state = self.start if state is None else state
        out = []
        for x in w:
            state, y = self.step(state, x)
            out.append(y)
        return state, tuple(out)

    def omega_prefix(self, w: EventuallyPeriodicWord, k: int) -> Word:
        return self.run(w.prefix(k))[1]


class ColouringMealy(LazyMealy):
    """States are the words read so far; reading ``x`` in ``w`` writes ``c(wx)``."""

    def __init__(self, colouring: "Colouring"):
        self.colouring = colouring
        self.input_size = colouring.input_size
        self.output_size = colouring.output_size
        self.start = ()

    def step(self, state, x):
        nxt = state + (x,)
        return nxt, self.colouring(nxt)


class BufferedMealyState(NamedTuple):
    base: int
    surplus: Word


class BufferedMealy(LazyMealy):
    """Runs an automaton with non-empty outputs one letter at a time,
    holding back whatever was written beyond the input length."""

    def __init__(self, a: AsyncAutomaton, q0: StateRef):
        _require_nonempty(a)
        self.automaton = a
        self.input_size = a.input_size
        self.output_size = a.output_size
        self.start = BufferedMealyState(a.state_id(q0), ())

    def step(self, state, x):
        a = self.automaton
        buf = state.surplus + a.emit[state.base][x]
        return BufferedMealyState(a.delta[state.base][x], buf[1:]), buf[0]


def mealyfy(a: AsyncAutomaton, q0: StateRef) -> BufferedMealy:
    return BufferedMealy(a, q0)


def mealy_from_colouring(c: "Colouring") -> ColouringMealy:
    return ColouringMealy(c)


class Colouring:
    """A map from non-empty words to output letters.

    Either backed by an explicit table covering every word of length
    ``1..depth`` or by an automaton and a start state.
    """

    def __init__(
        self,
        input_size: int,
        output_size: int,
        table: Optional[Dict[Word, int]] = None,
        depth: Optional[int] = None,
        machine: Optional[LazyMealy] = None,
    ):
        self.input_size = input_size
        self.output_size = output_size
        self.table = table
        self.depth = depth
        self._machine = machine

    @classmethod
    def from_table(cls, table: Dict[Sequence[int], int], input_size: int, output_size: int):
        table = {tuple(w): y for w, y in table.items()}
        depth = max((len(w) for w in table), default=0)
        expected = sum(input_size**i for i in range(1, depth + 1))
        for w, y in table.items():
            if not w:
                raise ValueError("the root has no colour")
            check_letters(w, input_size)
            check_letters((y,), output_size, "colour")
        if len(table) != expected:
            raise ValueError(f"table must cover every word of length 1..{depth}")
        return cls(input_size, output_size, table=table, depth=depth)

    @classmethod
    def from_automaton(cls, a: AsyncAutomaton, q: StateRef):
        """Colouring whose path map is the automaton's function from ``q``."""
        return cls(a.input_size, a.output_size, machine=mealyfy(a, q))

    def __call__(self, w: Sequence[int]) -> int:
        w = tuple(w)
        if not w:
            raise ValueError("the root has no colour")
        if self.table is not None:
            if len(w) > self.depth:
                raise DepthExceededError(f"depth exceeded: |w|={len(w)} > {self.depth}")
            return self.table[w]
        return self._machine.run(w)[1][-1]

    def to_table(self, depth: int) -> Dict[Word, int]:
        if self.table is not None and depth > self.depth:
            raise DepthExceededError(f"depth exceeded: {depth} > {self.depth}")
        return {w: self(w) for w in _words_breadth_first(self.input_size, depth)}


def _words_breadth_first(size: int, depth: int):
    level: List[Word] = [()]
    for _ in range(depth):
        level = [w + (x,) for w in level for x in range(size)]
        yield from level


def tilde_c(c: Colouring, w: EventuallyPeriodicWord, k: int) -> Word:
    """First ``k`` letters of the colour sequence along the path ``w``."""
    if c.table is not None and k > c.depth:
        raise DepthExceededError(f"depth exceeded: {k} > {c.depth}")
    prefix = w.prefix(k)
    return tuple(c(prefix[: i + 1]) for i in range(k))


def colour_tree(a: AsyncAutomaton, q: StateRef, depth: int) -> Dict[Word, int]:
    """Colour of every vertex down to ``depth``, breadth first with letters ascending."""
    machine = mealyfy(a, q)
    table: Dict[Word, int] = {}
    queue = deque([((), machine.start)])
    while queue:
        w, state = queue.popleft()
        if len(w) == depth:
            continue
        for x in range(a.input_size):
            nxt, y = machine.step(state, x)
            table[w + (x,)] = y
            queue.append((w + (x,), nxt))
    return table


def colour_table_json(table: Dict[Word, int], input_size: int) -> dict:
    depth = max((len(w) for w in table), default=0)
    return {
        "depth": depth,
        "colours": {format_word(w, input_size): y for w, y in table.items()},
    }


def colour_tree_dot(table: Dict[Word, int], input_size: int, output_size: int) -> str:
    key: Callable[[Word], str] = lambda w: "v_" + ("_".join(map(str, w)) or "root")
    lines = ["digraph tree {", f'  {key(())} [label="ε"];']
    for w, y in table.items():
        label = f"{format_word(w, input_size)} / {format_word((y,), output_size)}"
        lines.append(f'  {key(w)} [label="{label}"];')
        lines.append(f"  {key(w[:-1])} -> {key(w)};")
    lines.append("}")
    return "\n".join(lines) + "\n"
