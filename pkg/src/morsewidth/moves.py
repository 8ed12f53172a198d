"""Local rewrite moves on Morse words.

Every move preserves the component count and the knot type of the
presented diagram, and each move has an inverse move in the system:

* CommuteDistant  -- swap two adjacent events whose strand supports at the
                     shared level are disjoint, reindexing as needed.  The
                     cap-then-cup pair at one slot needs a ``side`` telling
                     where the reborn pair lands, since both resolutions
                     are height exchanges of disjoint pieces.
* ZigZagCancel    -- delete Cup(i) immediately followed by Cap(i±1): a
                     finger poking an existing strand.  ZigZagInsert is
                     the inverse.
* R1Absorb        -- delete the crossing in Cup(i), Cross(i,±): a kink at
                     a minimum.  R1Insert(at="cup") is the inverse.
* CapAbsorbCross  -- delete the crossing in Cross(i,±), Cap(i): a kink at
                     a maximum.  R1Insert(at="cap") is the inverse.
* R2Cancel        -- delete Cross(i,s), Cross(i,-s).  R2Insert inverse.
* YangBaxter      -- braid relation: Cross(i,s) Cross(i+1,s) Cross(i,s)
                     <-> Cross(i+1,s) Cross(i,s) Cross(i+1,s).

Crossing-only moves never touch the level profile; width changes come
only from cup/cap reordering (a cup-above-cap exchange moves the gap
between them by 4) and from zig-zag insertion/cancellation.  Sites are
0-based event positions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .errors import InvalidMove
from .events import EventKind, MorseEvent, MorseWord, cap, cross, cup


class MoveKind(Enum):
    COMMUTE_DISTANT = "CommuteDistant"
    ZIGZAG_CANCEL = "ZigZagCancel"
    ZIGZAG_INSERT = "ZigZagInsert"
    R1_ABSORB = "R1Absorb"
    R1_INSERT = "R1Insert"
    R2_CANCEL = "R2Cancel"
    R2_INSERT = "R2Insert"
    YANG_BAXTER = "YangBaxter"
    CAP_ABSORB_CROSS = "CapAbsorbCross"


_KIND_ORDER = {k: n for n, k in enumerate(MoveKind)}

# Net change in event count, used for insertion budgets.
LENGTH_DELTA = {
    MoveKind.COMMUTE_DISTANT: 0,
    MoveKind.YANG_BAXTER: 0,
    MoveKind.ZIGZAG_CANCEL: -2,
    MoveKind.R2_CANCEL: -2,
    MoveKind.R1_ABSORB: -1,
    MoveKind.CAP_ABSORB_CROSS: -1,
    MoveKind.ZIGZAG_INSERT: +2,
    MoveKind.R2_INSERT: +2,
    MoveKind.R1_INSERT: +1,
}

# Moves that change the diagram's writhe (first Reidemeister family).
# The Kauffman bracket picks up a -A^{+-3} factor under these; the
# writhe-normalized bracket is invariant under all kinds.
WRITHE_CHANGING = frozenset(
    {MoveKind.R1_ABSORB, MoveKind.R1_INSERT, MoveKind.CAP_ABSORB_CROSS}
)


@dataclass(frozen=True, order=True)
class Move:
    kind: MoveKind = field(compare=False)
    site: int
    params: tuple = ()

    # order=True cannot sort across enum members, so sort key is explicit:
    def sort_key(self) -> tuple:
        return (self.site, _KIND_ORDER[self.kind], self.params)

    def __str__(self) -> str:
        inner = ",".join(str(p) for p in self.params)
        return f"{self.kind.value}@{self.site}" + (f"({inner})" if inner else "")


def _support(event: MorseEvent, lower: bool) -> tuple[int, int]:
    """Occupied interval at the level between two adjacent events, in
    doubled coordinates (strand p -> 2p, the slot left of p -> 2p-1)."""
    i = event.index
    if lower:
        # Seen from above: a cup's newborn strands, a cap's scar slot.
        if event.kind is EventKind.CAP:
            return (2 * i - 1, 2 * i - 1)
        return (2 * i, 2 * i + 2)
    # Seen from below: a cup's insertion slot, a cap's consumed strands.
    if event.kind is EventKind.CUP:
        return (2 * i - 1, 2 * i - 1)
    return (2 * i, 2 * i + 2)


_SHIFT = {EventKind.CUP: +2, EventKind.CAP: -2, EventKind.CROSS: 0}


def _shifted(event: MorseEvent, delta: int) -> MorseEvent:
    return MorseEvent(event.kind, event.index + delta, event.sign)


def _commute_pair(
    e1: MorseEvent, e2: MorseEvent, side: str = ""
) -> tuple[MorseEvent, MorseEvent] | None:
    """Swapped pair (e2', e1') when e1;e2 commute as distant events."""
    if (
        e1.kind is EventKind.CAP
        and e2.kind is EventKind.CUP
        and e1.index == e2.index
    ):
        # Coincident scar and rebirth slot: both resolutions are valid
        # height exchanges; 'side' says where the cup lands below.
        i = e1.index
        if side == "left":
            return (cup(i), cap(i + 2))
        if side == "right":
            return (cup(i + 2), cap(i))
        return None
    if side:
        return None
    lo1, hi1 = _support(e1, lower=True)
    lo2, hi2 = _support(e2, lower=False)
    if hi2 < lo1:  # e2 acts entirely below e1's support
        return (e2, _shifted(e1, _SHIFT[e2.kind]))
    if lo2 > hi1:  # e2 acts entirely above
        return (_shifted(e2, -_SHIFT[e1.kind]), e1)
    return None


def _is_zigzag(e1: MorseEvent, e2: MorseEvent) -> bool:
    return (
        e1.kind is EventKind.CUP
        and e2.kind is EventKind.CAP
        and abs(e2.index - e1.index) == 1
    )


def _is_r2(e1: MorseEvent, e2: MorseEvent) -> bool:
    return (
        e1.kind is EventKind.CROSS
        and e2.kind is EventKind.CROSS
        and e1.index == e2.index
        and e1.sign == -e2.sign
    )


def _yang_baxter(e1: MorseEvent, e2: MorseEvent, e3: MorseEvent):
    if not (
        e1.kind is e2.kind is e3.kind is EventKind.CROSS
        and e1.sign == e2.sign == e3.sign
        and e1.index == e3.index
        and abs(e2.index - e1.index) == 1
    ):
        return None
    s = e1.sign
    return (cross(e2.index, s), cross(e1.index, s), cross(e2.index, s))


def enumerate_moves(word: MorseWord) -> list[Move]:
    """All valid moves, in deterministic order (site, then kind, then
    parameters).  Growth moves are included; callers bound them with a
    length budget."""
    ev = word.events
    counts = word.counts
    moves: list[Move] = []

    for k in range(len(ev) - 1):
        a, b = ev[k], ev[k + 1]
        if a.kind is EventKind.CAP and b.kind is EventKind.CUP and a.index == b.index:
            moves.append(Move(MoveKind.COMMUTE_DISTANT, k, ("left",)))
            moves.append(Move(MoveKind.COMMUTE_DISTANT, k, ("right",)))
        elif _commute_pair(a, b) is not None:
            moves.append(Move(MoveKind.COMMUTE_DISTANT, k))
        if _is_zigzag(a, b):
            moves.append(Move(MoveKind.ZIGZAG_CANCEL, k))
        if _is_r2(a, b):
            moves.append(Move(MoveKind.R2_CANCEL, k))
        if (
            a.kind is EventKind.CUP
            and b.kind is EventKind.CROSS
            and b.index == a.index
        ):
            moves.append(Move(MoveKind.R1_ABSORB, k))
        if (
            a.kind is EventKind.CROSS
            and b.kind is EventKind.CAP
            and b.index == a.index
        ):
            moves.append(Move(MoveKind.CAP_ABSORB_CROSS, k))

    for k in range(len(ev) - 2):
        if _yang_baxter(ev[k], ev[k + 1], ev[k + 2]) is not None:
            moves.append(Move(MoveKind.YANG_BAXTER, k))

    for k, e in enumerate(ev):
        if e.kind is EventKind.CUP:
            for s in (+1, -1):
                moves.append(Move(MoveKind.R1_INSERT, k, (s, "cup")))
        elif e.kind is EventKind.CAP:
            for s in (+1, -1):
                moves.append(Move(MoveKind.R1_INSERT, k, (s, "cap")))

    for k in range(len(ev) + 1):
        n = counts[k]
        for i in range(1, n + 1):  # cap above at i+1
            moves.append(Move(MoveKind.ZIGZAG_INSERT, k, (i, "right")))
        for i in range(2, n + 2):  # cap above at i-1
            moves.append(Move(MoveKind.ZIGZAG_INSERT, k, (i, "left")))
        for i in range(1, n):
            for s in (+1, -1):
                moves.append(Move(MoveKind.R2_INSERT, k, (i, s)))

    moves.sort(key=Move.sort_key)
    return moves


def _checked(word: MorseWord, move: Move, condition: bool) -> None:
    if not condition:
        raise InvalidMove(f"{move} does not apply to {word}")


def apply_move(word: MorseWord, move: Move) -> MorseWord:
    """Apply one move; InvalidMove if its predicate fails at the site."""
    ev = list(word.events)
    k = move.site
    kind = move.kind

    if kind in (MoveKind.ZIGZAG_INSERT, MoveKind.R2_INSERT):
        _checked(word, move, 0 <= k <= len(ev))
    elif kind is MoveKind.YANG_BAXTER:
        _checked(word, move, 0 <= k <= len(ev) - 3)
    elif kind is MoveKind.R1_INSERT:
        _checked(word, move, 0 <= k <= len(ev) - 1)
    else:
        _checked(word, move, 0 <= k <= len(ev) - 2)

    if kind is MoveKind.COMMUTE_DISTANT:
        side = move.params[0] if move.params else ""
        swapped = _commute_pair(ev[k], ev[k + 1], side)
        _checked(word, move, swapped is not None)
        ev[k], ev[k + 1] = swapped
    elif kind is MoveKind.ZIGZAG_CANCEL:
        _checked(word, move, _is_zigzag(ev[k], ev[k + 1]))
        del ev[k : k + 2]
    elif kind is MoveKind.ZIGZAG_INSERT:
        i, side = move.params
        n = word.counts[k]
        if side == "right":
            _checked(word, move, 1 <= i <= n)
            ev[k:k] = [cup(i), cap(i + 1)]
        else:
            _checked(word, move, side == "left" and 2 <= i <= n + 1)
            ev[k:k] = [cup(i), cap(i - 1)]
    elif kind is MoveKind.R2_CANCEL:
        _checked(word, move, _is_r2(ev[k], ev[k + 1]))
        del ev[k : k + 2]
    elif kind is MoveKind.R2_INSERT:
        i, s = move.params
        n = word.counts[k]
        _checked(word, move, 1 <= i <= n - 1 and s in (+1, -1))
        ev[k:k] = [cross(i, s), cross(i, -s)]
    elif kind is MoveKind.R1_ABSORB:
        _checked(
            word,
            move,
            ev[k].kind is EventKind.CUP
            and ev[k + 1].kind is EventKind.CROSS
            and ev[k + 1].index == ev[k].index,
        )
        del ev[k + 1]
    elif kind is MoveKind.R1_INSERT:
        s, at = move.params
        if at == "cup":
            _checked(word, move, ev[k].kind is EventKind.CUP)
            ev.insert(k + 1, cross(ev[k].index, s))
        else:
            _checked(word, move, at == "cap" and ev[k].kind is EventKind.CAP)
            ev.insert(k, cross(ev[k].index, s))
    elif kind is MoveKind.CAP_ABSORB_CROSS:
        _checked(
            word,
            move,
            ev[k].kind is EventKind.CROSS
            and ev[k + 1].kind is EventKind.CAP
            and ev[k + 1].index == ev[k].index,
        )
        del ev[k]
    elif kind is MoveKind.YANG_BAXTER:
        replaced = _yang_baxter(ev[k], ev[k + 1], ev[k + 2])
        _checked(word, move, replaced is not None)
        ev[k : k + 3] = replaced
    else:  # pragma: no cover
        raise InvalidMove(f"unknown kind {kind}")

    result = MorseWord(ev)
    assert result.component_count == word.component_count
    return result


def inverse_move(word: MorseWord, move: Move) -> Move:
    """The move that undoes ``move``, to be applied to apply_move's result."""
    ev = word.events
    k = move.site
    kind = move.kind
    if kind is MoveKind.COMMUTE_DISTANT:
        e1, e2 = ev[k], ev[k + 1]
        if e1.kind is EventKind.CUP and e2.kind is EventKind.CAP:
            if e2.index == e1.index + 2:
                return Move(kind, k, ("left",))
            if e2.index == e1.index - 2:
                return Move(kind, k, ("right",))
        return Move(kind, k)
    if kind is MoveKind.ZIGZAG_CANCEL:
        side = "right" if ev[k + 1].index == ev[k].index + 1 else "left"
        return Move(MoveKind.ZIGZAG_INSERT, k, (ev[k].index, side))
    if kind is MoveKind.ZIGZAG_INSERT:
        return Move(MoveKind.ZIGZAG_CANCEL, k)
    if kind is MoveKind.R2_CANCEL:
        return Move(MoveKind.R2_INSERT, k, (ev[k].index, ev[k].sign))
    if kind is MoveKind.R2_INSERT:
        return Move(MoveKind.R2_CANCEL, k)
    if kind is MoveKind.R1_ABSORB:
        return Move(MoveKind.R1_INSERT, k, (ev[k + 1].sign, "cup"))
    if kind is MoveKind.R1_INSERT:
        _, at = move.params
        if at == "cup":
            return Move(MoveKind.R1_ABSORB, k)
        return Move(MoveKind.CAP_ABSORB_CROSS, k)
    if kind is MoveKind.CAP_ABSORB_CROSS:
        return Move(MoveKind.R1_INSERT, k, (ev[k].sign, "cap"))
    return Move(MoveKind.YANG_BAXTER, k)


def canonical_key(word: MorseWord) -> tuple[MorseEvent, ...]:
    """Normal form for visited sets: within each maximal run of
    consecutive crossings, greedily bubble distant crossings into
    lowest-index-first order.  Crossing commutation never reindexes, so
    this is the unique lexicographic normal form of the run; two words
    equal up to distant crossing commutation always share a key.
    Crossings are never pulled past cups or caps: that rewriting is
    order-sensitive and would make the key depend on bubbling history."""
    ev = list(word.events)
    changed = True
    while changed:
        changed = False
        for k in range(len(ev) - 1):
            a, b = ev[k], ev[k + 1]
            if (
                a.kind is EventKind.CROSS
                and b.kind is EventKind.CROSS
                and abs(a.index - b.index) >= 2
                and b.index < a.index
            ):
                ev[k], ev[k + 1] = b, a
                changed = True
    return tuple(ev)
