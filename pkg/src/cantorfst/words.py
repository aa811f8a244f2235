"""Finite words and exact eventually periodic infinite words.

Letters are non-negative integers; a finite word is a tuple of letters.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence, Tuple

from .errors import AutomatonError

Word = Tuple[int, ...]

EPSILON = "ε"


def check_letters(word: Sequence[int], size: int, what: str = "word") -> None:
    for i, x in enumerate(word):
        if not isinstance(x, int) or isinstance(x, bool) or not 0 <= x < size:
            raise AutomatonError(
                f"letter out of range: {what}[{i}]={x!r} (alphabet size {size})"
            )


def format_word(word: Sequence[int], size: int = 10, empty: str = EPSILON) -> str:
    """Digit string for alphabets of at most ten letters, comma-separated otherwise."""
    if not word:
        return empty
    if size <= 10:
        return "".join(str(x) for x in word)
    return ",".join(str(x) for x in word)


def parse_word(text: str, size: int) -> Word:
    text = text.strip()
    if text in ("", EPSILON, "eps"):
        return ()
    try:
        if size <= 10 and "," not in text:
            word = tuple(int(c) for c in text)
        else:
            word = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise AutomatonError(f"cannot parse word {text!r}") from None
    check_letters(word, size)
    return word


def lcp_length(u: Sequence[int], v: Sequence[int]) -> int:
    n = 0
    for a, b in zip(u, v):
        if a != b:
            break
        n += 1
    return n


def _primitive_root(period: Word) -> Word:
    n = len(period)
    for d in range(1, n + 1):
        if n % d == 0 and period[:d] * (n // d) == period:
            return period[:d]
    return period


@dataclass(frozen=True, eq=False)
class EventuallyPeriodicWord:
    """The infinite word ``preperiod · period · period · ...``.

    Equality and hashing are by the denoted infinite word, so
    ``EventuallyPeriodicWord((0,), (0,)) == EventuallyPeriodicWord((), (0,))``.
    """

    preperiod: Word
    period: Word

    def __post_init__(self):
        object.__setattr__(self, "preperiod", tuple(self.preperiod))
        object.__setattr__(self, "period", tuple(self.period))
        if not self.period:
            raise AutomatonError("period of an infinite word must be non-empty")

    @classmethod
    def periodic(cls, period: Sequence[int]) -> "EventuallyPeriodicWord":
        return cls((), tuple(period))

    def canonical(self) -> "EventuallyPeriodicWord":
        """Shortest preperiod with a primitive period."""
        pre = list(self.preperiod)
        per = list(_primitive_root(self.period))
        while pre and pre[-1] == per[-1]:
            pre.pop()
            per = [per[-1]] + per[:-1]
        return EventuallyPeriodicWord(tuple(pre), tuple(per))

    def __eq__(self, other):
        if not isinstance(other, EventuallyPeriodicWord):
            return NotImplemented
        a, b = self.canonical(), other.canonical()
        return a.preperiod == b.preperiod and a.period == b.period

    def __hash__(self):
        c = self.canonical()
        return hash((c.preperiod, c.period))

    def letter(self, i: int) -> int:
        if i < len(self.preperiod):
            return self.preperiod[i]
        return self.period[(i - len(self.preperiod)) % len(self.period)]

    def prefix(self, k: int) -> Word:
        return tuple(itertools.islice(self, k))

    def __iter__(self) -> Iterator[int]:
        yield from self.preperiod
        yield from itertools.cycle(self.period)

    def check_letters(self, size: int) -> None:
        check_letters(self.preperiod, size, "preperiod")
        check_letters(self.period, size, "period")

    def format(self, size: int = 10) -> str:
        return f"{format_word(self.preperiod, size, '')}({format_word(self.period, size)})^ω"

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"EventuallyPeriodicWord({self.preperiod!r}, {self.period!r})"
