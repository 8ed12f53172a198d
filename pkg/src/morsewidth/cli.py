"""Command-line front end.

Sources accepted anywhere a word is expected:

* ``catalog:NAME``      a catalog entry, including torus_plat(p,q)
* ``profile:2,4,4,2``   crossingless word realizing that gap profile
* a file path           parsed as the text format
* anything else         parsed directly as the text format

Exit codes: 0 success, 1 validation failure, 2 syntax error, 3 budget
exhausted.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Union

from .catalog import catalog, entries, realize_profile
from .bracket import jones_normalized, kauffman_bracket, writhe
from .errors import (
    BracketMismatch,
    BudgetExceeded,
    InvalidMove,
    ParseError,
    UnknownName,
    ValidationError,
)
from .events import MorseWord, TangleWord
from .invariants import (
    connected_sum,
    embedding_report,
    level_profile,
    otp_compare,
    tangle_trunk,
)
from .search import Objective, ObjectiveKind, SearchConfig, beam_search
from .textio import parse, render_profile, serialize

_OBJECTIVES = {
    "width": ObjectiveKind.GABAI_WIDTH,
    "critical": ObjectiveKind.CRITICAL_COUNT,
    "otp": ObjectiveKind.OTP_LEX,
}


def _load_closed(source: str) -> MorseWord:
    word = _load(source)
    if isinstance(word, TangleWord):
        raise ValueError("this command needs a closed word, got a tangle")
    return word


def _load(source: str) -> Union[MorseWord, TangleWord]:
    if source.startswith("catalog:"):
        return catalog(source[len("catalog:") :])
    if source.startswith("profile:"):
        raw = source[len("profile:") :]
        try:
            widths = [int(p) for p in raw.split(",") if p.strip() != ""]
        except ValueError:
            raise ValueError(f"profile needs comma-separated integers, got {raw!r}")
        return realize_profile(widths)
    if os.path.exists(source):
        with open(source, "r", encoding="utf-8") as fh:
            return parse(fh.read())
    return parse(source)


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2))


def _word_json(word: MorseWord) -> dict:
    report = embedding_report(word).as_dict()
    report["gaps"] = [
        {"width": g.width, "class": g.classification}
        for g in level_profile(word).gaps
    ]
    return report


def _cmd_analyze(args) -> int:
    word = _load(args.source)
    if isinstance(word, TangleWord):
        _emit(
            {
                "boundary_strands": word.boundary_strands,
                "trunk": tangle_trunk(word),
                "arc_count": word.arc_count,
            }
        )
    else:
        _emit(_word_json(word))
    return 0


def _cmd_optimize(args) -> int:
    word = _load_closed(args.source)
    objective = Objective(_OBJECTIVES[args.objective])
    config = SearchConfig(
        beam_width=args.beam,
        max_steps=args.steps,
        insertion_budget=args.insertions,
        random_seed=args.seed,
    )
    result = beam_search(word, objective, config)
    _emit(
        {
            "input": {"word": serialize(word), "report": _word_json(word)},
            "best": {
                "word": serialize(result.best_word),
                "report": _word_json(result.best_word),
            },
            "trace": [str(m) for m in result.trace],
            "visited": result.visited,
        }
    )
    return 0


def _cmd_sum(args) -> int:
    a, b = _load_closed(args.left), _load_closed(args.right)
    word = connected_sum(a, b)
    _emit({"word": serialize(word), "report": _word_json(word)})
    return 0


def _cmd_compare(args) -> int:
    a, b = _load_closed(args.left), _load_closed(args.right)
    verdict = otp_compare(a, b)
    print({-1: "less", 0: "equal", 1: "greater"}[verdict])
    return 0


def _cmd_bracket(args) -> int:
    word = _load_closed(args.source)
    _emit(
        {
            "crossings": word.crossing_count,
            "writhe": writhe(word),
            "bracket": str(kauffman_bracket(word)),
            "jones_normalized": str(jones_normalized(word)),
        }
    )
    return 0


def _cmd_catalog(args) -> int:
    if args.name is None:
        for name, desc in entries():
            print(f"{name:22} {desc}")
        return 0
    print(serialize(catalog(args.name)))
    return 0


def _cmd_render(args) -> int:
    word = _load(args.source)
    sys.stdout.write(render_profile(word, fmt=args.format))
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="morsewidth",
        description="Width, trunk, and friends for Morse-word knot presentations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="invariant report for a word")
    p.add_argument("source")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("optimize", help="beam-search for a better position")
    p.add_argument("source")
    p.add_argument("--objective", choices=sorted(_OBJECTIVES), default="width")
    p.add_argument("--beam", type=int, default=SearchConfig.beam_width)
    p.add_argument("--steps", type=int, default=SearchConfig.max_steps)
    p.add_argument("--seed", type=int, default=SearchConfig.random_seed)
    p.add_argument("--insertions", type=int, default=SearchConfig.insertion_budget)
    p.set_defaults(func=_cmd_optimize)

    p = sub.add_parser("sum", help="connected sum of two knot words")
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(func=_cmd_sum)

    p = sub.add_parser("compare", help="thick-vector order of two words")
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(func=_cmd_compare)

    p = sub.add_parser("bracket", help="bracket polynomial and writhe")
    p.add_argument("source")
    p.set_defaults(func=_cmd_bracket)

    p = sub.add_parser("catalog", help="list catalog entries or print one")
    p.add_argument("name", nargs="?")
    p.set_defaults(func=_cmd_catalog)

    p = sub.add_parser("render", help="draw the classified gap profile")
    p.add_argument("source")
    p.add_argument("--format", choices=["ascii", "svg"], default="ascii")
    p.set_defaults(func=_cmd_render)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"syntax error: {exc}", file=sys.stderr)
        return 2
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return 3
    except (ValidationError, InvalidMove, BracketMismatch, UnknownName, ValueError) as exc:
        message = exc.args[0] if exc.args else exc
        print(f"invalid input: {message}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
