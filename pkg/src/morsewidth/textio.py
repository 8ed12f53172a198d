"""Text format for Morse words, and profile rendering.

One event per whitespace-separated token, read bottom to top:

    b<i>    cup at position i
    d<i>    cap at position i
    x<i>+   positive crossing at i (lower-left strand over)
    x<i>-   negative crossing at i

``#`` starts a comment running to end of line.  A leading ``tangle <2n>``
header declares an open word on 2n boundary strands; without it the word
must close up from and to zero strands.  Malformed tokens raise
ParseError with 1-based line and column; structurally bad words raise
ValidationError from the word constructors.
"""

from __future__ import annotations

import re
from typing import Union

from .errors import ParseError
from .events import MorseEvent, MorseWord, TangleWord, cap, cross, cup
from .invariants import THICK, THIN, level_profile

_TOKEN = re.compile(r"\S+")
_EVENT = re.compile(r"^(?:([bd])([0-9]+)|x([0-9]+)([+-]))$")


def _tokens(text: str):
    for line_no, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0]
        for m in _TOKEN.finditer(body):
            yield m.group(0), line_no, m.start() + 1


def parse(text: str) -> Union[MorseWord, TangleWord]:
    """Parse the text format; MorseWord for closed words, TangleWord
    when the ``tangle`` header is present."""
    stream = list(_tokens(text))
    boundary = None
    if stream and stream[0][0] == "tangle":
        if len(stream) < 2:
            tok, ln, col = stream[0]
            raise ParseError("tangle header needs a strand count", ln, col)
        count_tok, ln, col = stream[1]
        if not re.fullmatch(r"[0-9]+", count_tok):
            raise ParseError(
                f"tangle strand count must be an integer, got {count_tok!r}", ln, col
            )
        boundary = int(count_tok)
        stream = stream[2:]

    events: list[MorseEvent] = []
    for tok, ln, col in stream:
        m = _EVENT.match(tok)
        if m is None:
            raise ParseError(f"unrecognized token {tok!r}", ln, col)
        if m.group(1) == "b":
            events.append(cup(int(m.group(2))))
        elif m.group(1) == "d":
            events.append(cap(int(m.group(2))))
        else:
            events.append(cross(int(m.group(3)), +1 if m.group(4) == "+" else -1))

    if boundary is not None:
        return TangleWord(boundary, events)
    return MorseWord(events)


def serialize(word: Union[MorseWord, TangleWord]) -> str:
    """Inverse of parse up to whitespace."""
    return str(word)


_SVG_FILL = {THICK: "#4477aa", THIN: "#cc6677"}


def render_profile(word: MorseWord, fmt: str = "ascii") -> str:
    """Draw the classified gaps (thick and thin only), widest level
    scale, top of the diagram first."""
    rows = [
        (g.width, g.classification)
        for g in level_profile(word).gaps
        if g.classification in (THICK, THIN)
    ]
    rows.reverse()
    if fmt == "ascii":
        lines = [f"{cls:>5} {w:>3} {'#' * w}" for w, cls in rows]
        return "\n".join(lines) + "\n"
    if fmt == "svg":
        bar_h, gap_h, unit, pad = 18, 6, 12, 8
        width_px = pad * 2 + unit * max((w for w, _ in rows), default=0)
        height_px = pad * 2 + len(rows) * (bar_h + gap_h) - (gap_h if rows else 0)
        parts = [
            f'<svg xmlns="http://www.w3.org/2000/svg" '
            f'width="{width_px}" height="{max(height_px, pad * 2)}">'
        ]
        y = pad
        for w, cls in rows:
            parts.append(
                f'<rect x="{pad}" y="{y}" width="{unit * w}" height="{bar_h}" '
                f'fill="{_SVG_FILL[cls]}"><title>{cls} {w}</title></rect>'
            )
            y += bar_h + gap_h
        parts.append("</svg>")
        return "\n".join(parts) + "\n"
    raise ValueError(f"unknown render format {fmt!r}")
