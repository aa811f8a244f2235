"""Prefix metric and exact decision procedures for Mealy automata."""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Callable, Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple, Union

from .automaton import AsyncAutomaton, StateRef, run_omega_exact, run_omega_prefix
from .errors import NotMealyError
from .verdict import COLLISION_PAIR, UNREACHABLE_OUTPUT, DecisionWitness, Verdict
from .words import EventuallyPeriodicWord, Word, lcp_length


class _Infinite:
    def __repr__(self):
        return "INFINITE"

    def __str__(self):
        return "infinite"


#: Longest common prefix of a single infinite word.
INFINITE = _Infinite()

AnyWord = Union[Sequence[int], EventuallyPeriodicWord]


def lcp(words: Iterable[AnyWord]):
    """Longest common prefix of finite and/or eventually periodic words.

    Returns :data:`INFINITE` only when the words all denote one infinite word.
    """
    words = list(words)
    if not words:
        raise ValueError("longest common prefix of an empty set")
    finite = [tuple(w) for w in words if not isinstance(w, EventuallyPeriodicWord)]
    infinite = {w.canonical() for w in words if isinstance(w, EventuallyPeriodicWord)}
    if not finite and len(infinite) == 1:
        return INFINITE
    if finite:
        bound = min(len(w) for w in finite)
    else:
        # two distinct eventually periodic words differ before this position
        bound = max(len(w.preperiod) for w in infinite) + lcm(*(len(w.period) for w in infinite))
    columns = [w[:bound] for w in finite] + [w.prefix(bound) for w in infinite]
    first = columns[0]
    n = min(lcp_length(first, other) for other in columns)
    return first[:n]


def distance(
    u: EventuallyPeriodicWord, v: EventuallyPeriodicWord, lam: Fraction = Fraction(1, 2)
) -> Fraction:
    lam = Fraction(lam)
    if not 0 < lam < 1:
        raise ValueError(f"lambda must lie in (0, 1), got {lam}")
    common = lcp([u, v])
    if common is INFINITE:
        return Fraction(0)
    return lam ** len(common)


def _require_mealy(a: AsyncAutomaton) -> None:
    if not a.is_mealy:
        raise NotMealyError("not a Mealy automaton")


# -- injectivity -------------------------------------------------------------

Pair = Tuple[int, int]


def _pair_edges(a: AsyncAutomaton, node: Pair):
    q1, q2 = node
    e1, e2, d1, d2 = a.emit[q1], a.emit[q2], a.delta[q1], a.delta[q2]
    for x1 in range(a.input_size):
        for x2 in range(a.input_size):
            if e1[x1] == e2[x2]:
                yield (x1, x2), (d1[x1], d2[x2])


def _pair_path(a: AsyncAutomaton, src: Pair, dst: Pair, nonempty: bool = False):
    """Shortest list of letter pairs leading from ``src`` to ``dst``, or None."""
    if src == dst and not nonempty:
        return []
    parent: Dict[Pair, Optional[Tuple[Pair, Pair]]] = {}
    queue = deque()
    for letters, nxt in _pair_edges(a, src):
        if nxt not in parent:
            parent[nxt] = (src, letters)
            queue.append(nxt)
    while queue and dst not in parent:
        node = queue.popleft()
        for letters, nxt in _pair_edges(a, node):
            if nxt not in parent:
                parent[nxt] = (node, letters)
                queue.append(nxt)
    if dst not in parent:
        return None
    path, node = [], dst
    while True:
        node, letters = parent[node]
        path.append(letters)
        if node == src:
            return path[::-1]


def _reachable_pairs(a: AsyncAutomaton, src: Pair):
    """Pair nodes reachable from ``src`` in breadth-first order, with parents."""
    parent = {src: None}
    order = [src]
    i = 0
    while i < len(order):
        node = order[i]
        i += 1
        for letters, nxt in _pair_edges(a, node):
            if nxt not in parent:
                parent[nxt] = (node, letters)
                order.append(nxt)
    return order, parent


def _trace(parent, node) -> List[Pair]:
    path = []
    while parent[node] is not None:
        node, letters = parent[node]
        path.append(letters)
    return path[::-1]


def _split(pairs: Sequence[Pair]) -> Tuple[Word, Word]:
    return tuple(p[0] for p in pairs), tuple(p[1] for p in pairs)


def decide_injective(a: AsyncAutomaton, q0: StateRef) -> Verdict:
    """Decide whether the function on infinite words from ``q0`` is injective.

    Two runs with equal outputs move through pairs of states. The function
    is not injective exactly when, after the two inputs first differ, the
    pair of runs can reach a cycle of equal-output steps.
    """
    _require_mealy(a)
    q0 = a.state_id(q0)
    # shortest single-run paths to each state reachable from q0
    prefix: Dict[int, Word] = {q0: ()}
    order = [q0]
    for p in order:
        for x in range(a.input_size):
            s = a.delta[p][x]
            if s not in prefix:
                prefix[s] = prefix[p] + (x,)
                order.append(s)
    for p in order:
        for x1 in range(a.input_size):
            for x2 in range(x1 + 1, a.input_size):
                if a.emit[p][x1] != a.emit[p][x2]:
                    continue
                v = (a.delta[p][x1], a.delta[p][x2])
                head = prefix[p]
                back = _pair_path(a, v, (p, p))
                if back is not None:
                    left, right = _split([(x1, x2)] + back)
                    pair = (
                        EventuallyPeriodicWord(head, left),
                        EventuallyPeriodicWord(head, right),
                    )
                    return Verdict("injective", False, DecisionWitness(COLLISION_PAIR, pair))
                nodes, parent = _reachable_pairs(a, v)
                for w in nodes:
                    cycle = _pair_path(a, w, w, nonempty=True)
                    if cycle is None:
                        continue
                    l_mid, r_mid = _split(_trace(parent, w))
                    l_cyc, r_cyc = _split(cycle)
                    pair = (
                        EventuallyPeriodicWord(head + (x1,) + l_mid, l_cyc),
                        EventuallyPeriodicWord(head + (x2,) + r_mid, r_cyc),
                    )
                    return Verdict("injective", False, DecisionWitness(COLLISION_PAIR, pair))
    return Verdict("injective", True)


# -- surjectivity ------------------------------------------------------------


def _successors(a: AsyncAutomaton, states: FrozenSet[int], y: int) -> FrozenSet[int]:
    return frozenset(
        a.delta[q][x] for q in states for x in range(a.input_size) if a.emit[q][x] == (y,)
    )


def decide_surjective(a: AsyncAutomaton, q0: StateRef) -> Verdict:
    """Decide whether every infinite output word is produced from ``q0``.

    An infinite word has a producing run as soon as each of its prefixes
    does, so it suffices to search the subsets of states reachable while
    reading output letters for one that gets stuck.
    """
    _require_mealy(a)
    start = frozenset({a.state_id(q0)})
    parent: Dict[FrozenSet[int], Optional[Tuple[FrozenSet[int], int]]] = {start: None}
    queue = deque([start])
    while queue:
        states = queue.popleft()
        for y in range(a.output_size):
            nxt = _successors(a, states, y)
            if not nxt:
                word = [y]
                node = states
                while parent[node] is not None:
                    node, letter = parent[node]
                    word.append(letter)
                witness = DecisionWitness(UNREACHABLE_OUTPUT, tuple(word[::-1]))
                return Verdict("surjective", False, witness)
            if nxt not in parent:
                parent[nxt] = (states, y)
                queue.append(nxt)
    return Verdict("surjective", True)


def decide_bijective(a: AsyncAutomaton, q0: StateRef) -> Verdict:
    for decide in (decide_injective, decide_surjective):
        v = decide(a, q0)
        if not v:
            return Verdict("bijective", False, v.witness)
    return Verdict("bijective", True)


DECIDERS = {
    "injective": decide_injective,
    "surjective": decide_surjective,
    "bijective": decide_bijective,
}


# -- bounded brute-force oracles and witness checks ----------------------------


def injective_bounded(a: AsyncAutomaton, q0: StateRef, length: Optional[int] = None) -> bool:
    """True iff no two distinct inputs of the given length have equal outputs
    with a pair of states repeating after the inputs first differ.

    With the default length ``|Q|^2 + |Q|`` this agrees with :func:`decide_injective`.
    """
    _require_mealy(a)
    q0 = a.state_id(q0)
    if length is None:
        length = a.num_states**2 + a.num_states
    layer = {(q0, q0, None)}
    for _ in range(length):
        nxt = set()
        for q1, q2, seen in layer:
            for x1 in range(a.input_size):
                for x2 in range(a.input_size):
                    if a.emit[q1][x1] != a.emit[q2][x2]:
                        continue
                    node = (a.delta[q1][x1], a.delta[q2][x2])
                    if seen is None:
                        nxt.add(node + ((None if x1 == x2 else frozenset([node])),))
                    elif node in seen:
                        return False
                    else:
                        nxt.add(node + (seen | {node},))
        layer = nxt
    return True


def surjective_bounded(a: AsyncAutomaton, q0: StateRef, length: Optional[int] = None) -> bool:
    """True iff every output word of the given length (default ``2^|Q| + 1``) has a run."""
    _require_mealy(a)
    if length is None:
        length = 2**a.num_states + 1

    @lru_cache(maxsize=None)
    def covered(states: FrozenSet[int], depth: int) -> bool:
        if depth == 0:
            return True
        for y in range(a.output_size):
            nxt = frozenset(
                a.delta[q][x]
                for q in states
                for x in range(a.input_size)
                if a.emit[q][x][0] == y
            )
            if not nxt or not covered(nxt, depth - 1):
                return False
        return True

    return covered(frozenset({a.state_id(q0)}), length)


def producing_states(a: AsyncAutomaton, q0: StateRef, output: Sequence[int]) -> FrozenSet[int]:
    """End states of all runs from ``q0`` that write exactly ``output``."""
    level = {a.state_id(q0)}
    for y in output:
        level = {
            a.delta[q][x] for q in level for x in range(a.input_size) if a.emit[q][x] == (y,)
        }
    return frozenset(level)


def verify_witness(a: AsyncAutomaton, q0: StateRef, witness: DecisionWitness, k: int = 52) -> bool:
    """Independent re-check of a negative injectivity or surjectivity verdict."""
    if witness.kind == COLLISION_PAIR:
        u, v = witness.payload
        if u == v:
            return False
        if run_omega_prefix(a, q0, u, k) != run_omega_prefix(a, q0, v, k):
            return False
        return run_omega_exact(a, q0, u) == run_omega_exact(a, q0, v)
    if witness.kind == UNREACHABLE_OUTPUT:
        return not producing_states(a, q0, witness.payload)
    raise ValueError(f"cannot verify witness of kind {witness.kind!r}")


# -- short maps --------------------------------------------------------------

PrefixMap = Callable[[EventuallyPeriodicWord, int], Word]


def omega_function(a: AsyncAutomaton, q: StateRef) -> PrefixMap:
    """The function on infinite words from ``q``, evaluated to a given length."""
    return lambda w, k: run_omega_prefix(a, q, w, k)


@dataclass
class ShortMapReport:
    checked: int = 0
    depth: int = 0
    violations: List[Tuple[EventuallyPeriodicWord, EventuallyPeriodicWord, int, int]] = field(
        default_factory=list
    )

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "property": "shortmap",
            "verdict": self.ok,
            "checked": self.checked,
            "depth": self.depth,
            "violations": [
                {"left": str(u), "right": str(v), "input_lcp": i, "output_lcp": o}
                for u, v, i, o in self.violations
            ],
        }


def check_short_map(
    pairs: Iterable[Tuple[EventuallyPeriodicWord, EventuallyPeriodicWord]],
    f: PrefixMap,
    k: int,
) -> ShortMapReport:
    """Check that images share at least as long a prefix as the inputs, up to depth ``k``."""
    report = ShortMapReport(depth=k)
    for u, v in pairs:
        report.checked += 1
        common_in = min(lcp_length(u.prefix(k), v.prefix(k)), k)
        common_out = lcp_length(f(u, k), f(v, k))
        if common_out < common_in:
            report.violations.append((u, v, common_in, common_out))
    return report


def random_word(rng: random.Random, size: int, max_pre: int = 8, max_period: int = 4):
    pre = tuple(rng.randrange(size) for _ in range(rng.randint(0, max_pre)))
    per = tuple(rng.randrange(size) for _ in range(rng.randint(1, max_period)))
    return EventuallyPeriodicWord(pre, per)


def random_pairs(rng: random.Random, size: int, count: int, max_shared: int = 24):
    """Pairs of words that usually share a prefix of random length."""
    pairs = []
    for _ in range(count):
        u = random_word(rng, size)
        shared = u.prefix(rng.randint(0, max_shared))
        tail = random_word(rng, size)
        pairs.append((u, EventuallyPeriodicWord(shared + tail.preperiod, tail.period)))
    return pairs
