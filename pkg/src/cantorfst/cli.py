"""Command-line front end.

Exit codes: 0 success, 2 bad parameters or input file, 3 alphabet mismatch,
4 degenerate run, 5 empty emission blocks colouring, 6 not a Mealy
automaton, 7 search space too large.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from pathlib import Path

from . import analysis, colouring, constructions, search
from .automaton import compose, is_nondegenerate, run_finite, run_omega_exact, run_omega_prefix, to_dot
from .errors import (
    AlphabetMismatchError,
    AutomatonError,
    DegenerateRunError,
    EmptyEmissionError,
    NotMealyError,
    SearchSpaceError,
)
from .serialize import load, save
from .words import EventuallyPeriodicWord, format_word, parse_word

EXIT_CODES = [
    (AlphabetMismatchError, 3),
    (DegenerateRunError, 4),
    (EmptyEmissionError, 5),
    (NotMealyError, 6),
    (SearchSpaceError, 7),
    (AutomatonError, 2),
]


def _dump(doc) -> str:
    return json.dumps(doc, ensure_ascii=False, indent=2) + "\n"


def _write(text: str, path) -> None:
    if path:
        Path(path).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _read(path: str):
    try:
        data = Path(path).read_bytes()
    except OSError as exc:
        raise AutomatonError(f"cannot read {path}: {exc.strerror}") from None
    return load(data)


def cmd_build(args) -> int:
    kind = args.kind
    if kind == "compose":
        if len(args.files) != 2:
            raise AutomatonError("build compose takes exactly two automaton files")
        a = compose(_read(args.files[0]), _read(args.files[1]))
    elif args.files:
        raise AutomatonError(f"build {kind} takes no files")
    elif kind == "a":
        a = constructions.build_a(args.n)
    elif kind == "b":
        a = constructions.build_b(args.m)
    elif kind == "c":
        a = constructions.build_c(args.n, args.m)
    elif kind == "identity":
        a = constructions.build_identity(args.size)
    elif kind == "shift":
        a = constructions.build_shift(args.size)
    else:  # const
        a = constructions.build_constant(args.x, args.y, args.letter)
    _write(save(a).decode("utf-8"), args.output)
    return 0


def _state(a, args):
    return a.state_id(args.state) if args.state is not None else 0


def cmd_eval(args) -> int:
    a = _read(args.automaton)
    q = _state(a, args)
    fmt = lambda w: format_word(w, a.output_size)
    if args.word is not None:
        r = run_finite(a, q, parse_word(args.word, a.input_size))
        doc = {"end_state": a.states[r.end_state], "output": fmt(r.output)}
        text = f"end: {doc['end_state']}\noutput: {doc['output']}\n"
    else:
        if args.period is None:
            raise AutomatonError("give --word, or --period (with optional --preperiod)")
        w = EventuallyPeriodicWord(
            parse_word(args.preperiod or "", a.input_size), parse_word(args.period, a.input_size)
        )
        if args.exact:
            image = run_omega_exact(a, q, w)
            doc = {"preperiod": format_word(image.preperiod, a.output_size, ""),
                   "period": fmt(image.period)}
            text = f"preperiod: {fmt(image.preperiod)}\nperiod: {fmt(image.period)}\n"
        else:
            out = run_omega_prefix(a, q, w, args.take, fuel=args.fuel)
            doc = {"output": fmt(out)}
            text = fmt(out) + "\n"
    sys.stdout.write(_dump(doc) if args.format == "json" else text)
    return 0


def cmd_colour(args) -> int:
    a = _read(args.automaton)
    table = colouring.colour_tree(a, _state(a, args), args.depth)
    if args.format == "dot":
        text = colouring.colour_tree_dot(table, a.input_size, a.output_size)
    else:
        text = _dump(colouring.colour_table_json(table, a.input_size))
    _write(text, args.output)
    return 0


def cmd_check(args) -> int:
    a = _read(args.automaton)
    q = _state(a, args)
    prop = args.property
    if prop == "nondegenerate":
        doc = is_nondegenerate(a).to_json(a)
    elif prop == "shortmap":
        seed = args.seed if args.seed is not None else int(os.environ.get("CANTOR_SEED", "0"))
        pairs = analysis.random_pairs(random.Random(seed), a.input_size, args.samples)
        report = analysis.check_short_map(pairs, analysis.omega_function(a, q), args.take)
        doc = report.to_json()
    else:
        doc = analysis.DECIDERS[prop](a, q).to_json(a)
    sys.stdout.write(_dump(doc))
    return 0


def cmd_search(args) -> int:
    summary = search.enumerate_and_decide(args.x, args.y, args.max_states, args.property)
    _write(_dump(summary), args.output)
    return 0


def cmd_export(args) -> int:
    a = _read(args.automaton)
    _write(to_dot(a, Path(args.automaton).stem), args.output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cantorfst", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="build an automaton and write it as JSON")
    p.add_argument("kind", choices=["a", "b", "c", "compose", "identity", "shift", "const"])
    p.add_argument("files", nargs="*", help="two automaton files for compose")
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--size", type=int, default=2)
    p.add_argument("--x", type=int, default=2)
    p.add_argument("--y", type=int, default=2)
    p.add_argument("--letter", type=int, default=0)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("eval", help="run an automaton on a finite or infinite word")
    p.add_argument("automaton")
    p.add_argument("--state")
    p.add_argument("--word")
    p.add_argument("--preperiod")
    p.add_argument("--period")
    p.add_argument("--take", type=int, default=16)
    p.add_argument("--fuel", type=int)
    p.add_argument("--exact", action="store_true")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("colour", help="colour the tree of input words")
    p.add_argument("automaton")
    p.add_argument("--state")
    p.add_argument("--depth", type=int, default=2)
    p.add_argument("--format", choices=["json", "dot"], default="json")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_colour)

    p = sub.add_parser("check", help="decide a property of an automaton")
    p.add_argument("automaton")
    p.add_argument(
        "property", choices=["nondegenerate", "injective", "surjective", "bijective", "shortmap"]
    )
    p.add_argument("--state")
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--seed", type=int)
    p.add_argument("--take", type=int, default=64)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("search", help="enumerate small Mealy automata")
    p.add_argument("--x", type=int, required=True)
    p.add_argument("--y", type=int, required=True)
    p.add_argument("--max-states", type=int, required=True)
    p.add_argument("--property", choices=sorted(analysis.DECIDERS), required=True)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("export", help="write the Moore diagram")
    p.add_argument("automaton")
    p.add_argument("--format", choices=["dot"], default="dot")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_export)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except AutomatonError as exc:
        print(f"error: {exc}", file=sys.stderr)
        for cls, code in EXIT_CODES:
            if isinstance(exc, cls):
                return code
        return 2


if __name__ == "__main__":
    sys.exit(main())
