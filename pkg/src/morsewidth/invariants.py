"""Level invariants of a Morse word: width, trunk, height, bridge number.

Between two consecutive critical events (cups and caps; crossings are not
critical for the height function) the strand count is constant.  Each such
regular interval is a *gap* whose width is that count.  A gap is *thick*
when a cup lies below it and a cap above, *thin* in the opposite case, and
unclassified otherwise.  For a closed word the thick and thin gaps
alternate, starting and ending thick, so #thick = #thin + 1.

From the gap profile:

* width        -- Gabai width, the sum of all gap widths; equivalently
                  (sum of thick^2 - sum of thin^2) / 2.
* trunk        -- the largest gap width (always attained at a thick gap).
* height       -- the number of thick gaps.
* bridge_count -- the number of caps (= number of cups).
* otp_vector   -- thick widths, sorted non-increasing; compared
                  lexicographically with a proper prefix ordered first.

All derived ratios (proportion, average_trunk) are exact rationals.
These are invariants of the embedding the word presents, not of the
underlying knot type; knot-type minima over all embeddings are out of
scope (as are mp(K), distortion and bridge-distance style invariants),
and position comparisons are per word set (see position search).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ValidationError, Violation
from .events import EventKind, MorseEvent, MorseWord, TangleWord, require_knot

THICK = "thick"
THIN = "thin"
NEITHER = "neither"


@dataclass(frozen=True)
class Gap:
    """One regular interval between consecutive critical events."""

    width: int
    below: EventKind
    above: EventKind

    @property
    def classification(self) -> str:
        if self.below is EventKind.CUP and self.above is EventKind.CAP:
            return THICK
        if self.below is EventKind.CAP and self.above is EventKind.CUP:
            return THIN
        return NEITHER


@dataclass(frozen=True)
class LevelProfile:
    gaps: tuple[Gap, ...]

    @property
    def thick_widths(self) -> tuple[int, ...]:
        return tuple(g.width for g in self.gaps if g.classification == THICK)

    @property
    def thin_widths(self) -> tuple[int, ...]:
        return tuple(g.width for g in self.gaps if g.classification == THIN)

    @property
    def widths(self) -> tuple[int, ...]:
        return tuple(g.width for g in self.gaps)


def level_profile(word: MorseWord) -> LevelProfile:
    """Gap profile of a closed word (crossings merge into their gap)."""
    criticals = [
        (ev, word.counts[pos + 1])
        for pos, ev in enumerate(word.events)
        if ev.is_critical
    ]
    gaps = [
        Gap(width=count_after, below=ev.kind, above=criticals[t + 1][0].kind)
        for t, (ev, count_after) in enumerate(criticals[:-1])
    ]
    return LevelProfile(tuple(gaps))


def width(word: MorseWord) -> int:
    return sum(level_profile(word).widths)


def trunk(word: MorseWord) -> int:
    return max(level_profile(word).widths)


def height(word: MorseWord) -> int:
    return len(level_profile(word).thick_widths)


def bridge_count(word: MorseWord) -> int:
    return sum(1 for e in word.events if e.kind is EventKind.CAP)


def critical_count(word: MorseWord) -> int:
    return sum(1 for e in word.events if e.is_critical)


def otp_vector(word: MorseWord) -> tuple[int, ...]:
    return tuple(sorted(level_profile(word).thick_widths, reverse=True))


def otp_compare(a, b) -> int:
    """Order two thick-width vectors (or the words carrying them): -1, 0, +1.

    Lexicographic on non-increasing vectors; a proper prefix precedes the
    longer vector, so {10,10} < {10,10,10}.  (Python tuple comparison
    implements exactly this convention.)
    """
    if isinstance(a, MorseWord):
        a = otp_vector(a)
    if isinstance(b, MorseWord):
        b = otp_vector(b)
    a, b = tuple(a), tuple(b)
    return -1 if a < b else (0 if a == b else 1)


def proportion(word: MorseWord) -> Fraction:
    """trunk / (height * 2 * bridge), exactly; equals 1 on bridge positions."""
    return Fraction(trunk(word), height(word) * 2 * bridge_count(word))


def average_trunk(word: MorseWord) -> Fraction:
    thick = level_profile(word).thick_widths
    return Fraction(sum(thick), len(thick))


def rep_upper_bound(word: MorseWord) -> int:
    """Upper bound for the representativity of the knot the word presents:
    min(bridge number, floor(trunk/2))."""
    require_knot(word)
    return min(bridge_count(word), trunk(word) // 2)


def waist_upper_bound(word: MorseWord) -> int:
    """Upper bound for the waist of the knot: floor(trunk/3)."""
    require_knot(word)
    return trunk(word) // 3


@dataclass(frozen=True)
class EmbeddingReport:
    """All level invariants of one knot embedding."""

    width: int
    trunk: int
    height: int
    bridge: int
    critical_count: int
    otp_vector: tuple[int, ...]
    proportion: Fraction
    average_trunk: Fraction
    rep_upper: int
    waist_upper: int

    def as_dict(self) -> dict:
        """JSON-ready dict; rationals become {num, den} in lowest terms."""
        return {
            "width": self.width,
            "trunk": self.trunk,
            "height": self.height,
            "bridge": self.bridge,
            "critical_count": self.critical_count,
            "otp_vector": list(self.otp_vector),
            "proportion": {
                "num": self.proportion.numerator,
                "den": self.proportion.denominator,
            },
            "average_trunk": {
                "num": self.average_trunk.numerator,
                "den": self.average_trunk.denominator,
            },
            "rep_upper": self.rep_upper,
            "waist_upper": self.waist_upper,
        }


def embedding_report(word: MorseWord) -> EmbeddingReport:
    require_knot(word)
    return EmbeddingReport(
        width=width(word),
        trunk=trunk(word),
        height=height(word),
        bridge=bridge_count(word),
        critical_count=critical_count(word),
        otp_vector=otp_vector(word),
        proportion=proportion(word),
        average_trunk=average_trunk(word),
        rep_upper=rep_upper_bound(word),
        waist_upper=waist_upper_bound(word),
    )


def is_bridge_position(word: MorseWord) -> bool:
    """True when every cup precedes every cap."""
    seen_cap = False
    for e in word.events:
        if e.kind is EventKind.CAP:
            seen_cap = True
        elif e.kind is EventKind.CUP and seen_cap:
            return False
    return True


def connected_sum(a: MorseWord, b: MorseWord) -> MorseWord:
    """Splice two knot words: drop a's final cap and b's initial cup and
    concatenate.  Exactly additive: width w1+w2-2, bridge b1+b2-1, trunk
    max(t1, t2), still one component."""
    for w in (a, b):
        if not isinstance(w, MorseWord):
            raise ValidationError(
                [Violation("EmptyWord", 0, "connected_sum needs two knot words")]
            )
        require_knot(w)
    # Local validity forces a's last event to be Cap(1) at two strands and
    # b's first to be Cup(1), so the splice lines up without reindexing.
    return MorseWord(a.events[:-1] + b.events[1:])


def tangle_trunk(word: TangleWord) -> int:
    """Largest strand count over regular levels, boundary level included."""
    return max(word.counts)
