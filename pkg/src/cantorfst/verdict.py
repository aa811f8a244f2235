"""Yes/no answers of the decision procedures together with their certificates."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Optional

EPSILON_CYCLE = "epsilon-cycle"
COLLISION_PAIR = "collision-pair"
UNREACHABLE_OUTPUT = "unreachable-output"


@dataclass(frozen=True)
class DecisionWitness:
    """Certificate for a negative verdict.

    ``payload`` depends on ``kind``:

    * ``epsilon-cycle``: tuple of ``(state, letter)`` steps returning to the first state
    * ``collision-pair``: two distinct :class:`EventuallyPeriodicWord` with equal images
    * ``unreachable-output``: a finite output word that no run produces
    """

    kind: str
    payload: Any

    def to_json(self, automaton=None) -> dict:
        name = (lambda q: automaton.states[q]) if automaton is not None else (lambda q: q)
        if self.kind == EPSILON_CYCLE:
            body = {"cycle": [{"state": name(q), "letter": x} for q, x in self.payload]}
        elif self.kind == COLLISION_PAIR:
            body = {
                side: {"preperiod": list(w.preperiod), "period": list(w.period)}
                for side, w in zip(("left", "right"), self.payload)
            }
        else:
            body = {"word": list(self.payload)}
        return {"kind": self.kind, **body}


@dataclass(frozen=True)
class Verdict:
    property: str
    holds: bool
    witness: Optional[DecisionWitness] = None

    def __bool__(self):
        return self.holds

    def to_json(self, automaton=None) -> dict:
        return {
            "property": self.property,
            "verdict": self.holds,
            "witness": None if self.witness is None else self.witness.to_json(automaton),
        }
