"""JSON reading and writing of automata."""

from __future__ import annotations

import json

import jsonschema

from .automaton import AsyncAutomaton
from .errors import AutomatonError, SchemaError

AUTOMATON_SCHEMA = {
    "type": "object",
    "required": ["input_size", "output_size", "states", "transitions"],
    "additionalProperties": False,
    "properties": {
        "input_size": {"type": "integer", "minimum": 1},
        "output_size": {"type": "integer", "minimum": 1},
        "states": {"type": "array", "items": {"type": "string"}, "minItems": 1},
        "transitions": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["state", "letter", "next", "emit"],
                "additionalProperties": False,
                "properties": {
                    "state": {"type": "integer", "minimum": 0},
                    "letter": {"type": "integer", "minimum": 0},
                    "next": {"type": "integer", "minimum": 0},
                    "emit": {"type": "array", "items": {"type": "integer", "minimum": 0}},
                },
            },
        },
    },
}

_validator = jsonschema.Draft202012Validator(AUTOMATON_SCHEMA)


def to_json(a: AsyncAutomaton) -> dict:
    return {
        "input_size": a.input_size,
        "output_size": a.output_size,
        "states": list(a.states),
        "transitions": [
            {"state": q, "letter": x, "next": s, "emit": list(v)}
            for q, x, s, v in a.transitions()
        ],
    }


def save(a: AsyncAutomaton) -> bytes:
    return (json.dumps(to_json(a), ensure_ascii=False, indent=2) + "\n").encode("utf-8")


def from_json(doc) -> AsyncAutomaton:
    errors = sorted(_validator.iter_errors(doc), key=lambda e: list(e.absolute_path))
    if errors:
        raise SchemaError(errors[0].message, errors[0].absolute_path)
    n, k = len(doc["states"]), doc["input_size"]
    delta = [[None] * k for _ in range(n)]
    emit = [[None] * k for _ in range(n)]
    for i, t in enumerate(doc["transitions"]):
        q, x = t["state"], t["letter"]
        path = ("transitions", i)
        if q >= n:
            raise SchemaError(f"dangling state id {q}", path + ("state",))
        if x >= k:
            raise SchemaError(f"letter out of range: {x}", path + ("letter",))
        if delta[q][x] is not None:
            raise SchemaError(f"duplicate transition for ({q},{x})", path)
        delta[q][x] = t["next"]
        emit[q][x] = t["emit"]
    for q in range(n):
        for x in range(k):
            if delta[q][x] is None:
                raise SchemaError(f"non-total transition: missing ({q},{x})", ("transitions",))
    try:
        return AsyncAutomaton(k, doc["output_size"], doc["states"], delta, emit)
    except AutomatonError as exc:
        raise SchemaError(str(exc), ("transitions",)) from None


def load(data) -> AsyncAutomaton:
    """Parse bytes or text produced by :func:`save`."""
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    try:
        doc = json.loads(data)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"parse error: {exc}") from None
    return from_json(doc)
