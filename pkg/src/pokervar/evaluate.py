"""Hand evaluation: best-5-of-7 showdown strength and video poker categories."""

from __future__ import annotations

from collections import Counter
from enum import Enum, IntEnum
from typing import Sequence

from . import _tables as T
from .cards import ACE, DEUCE, JACK, Card, CardError, require_distinct


class HandCategory(IntEnum):
    """Video poker pay categories, best first."""

    NATURAL_ROYAL_FLUSH = 0
    FOUR_DEUCES = 1
    WILD_ROYAL_FLUSH = 2
    FIVE_OF_A_KIND = 3
    STRAIGHT_FLUSH = 4
    FOUR_OF_A_KIND = 5
    FULL_HOUSE = 6
    FLUSH = 7
    STRAIGHT = 8
    THREE_OF_A_KIND = 9
    TWO_PAIRS = 10
    JACKS_OR_BETTER = 11
    NOTHING = 12

    @property
    def key(self) -> str:
        return self.name.lower()


class Outcome(Enum):
    A_WINS = "a_wins"
    TIE = "tie"
    B_WINS = "b_wins"


def _codes(cards: Sequence[Card | int]) -> list[int]:
    return [c.code if isinstance(c, Card) else int(c) for c in cards]


def showdown_value(cards: Sequence[Card | int]) -> int:
    """Strength of the best five-card hand among 5 to 7 cards.

    Larger is stronger; equal values tie.  The value packs the category above
    bit 20 with tiebreak ranks below it.
    """
    counts = [0] * 13
    suit_masks = [0, 0, 0, 0]
    suit_counts = [0, 0, 0, 0]
    for c in _codes(cards):
        r, s = c >> 2, c & 3
        counts[r] += 1
        suit_masks[s] |= 1 << r
        suit_counts[s] += 1

    flush_value = -1
    for s in range(4):
        if suit_counts[s] >= 5:
            fm = suit_masks[s]
            sh = int(T.STRAIGHT_HIGH[fm])
            if sh >= 0:
                return T.STRAIGHT_FLUSH << 20 | sh << 16
            flush_value = T.FLUSH << 20 | int(T.TOP5[fm])

    present = m2 = m3 = m4 = 0
    for r in range(13):
        n = counts[r]
        if n:
            present |= 1 << r
            if n == 2:
                m2 |= 1 << r
            elif n == 3:
                m3 |= 1 << r
            elif n == 4:
                m4 |= 1 << r

    hb = T.HIGH_BIT
    if m4:
        q = int(hb[m4])
        return T.QUADS << 20 | q << 16 | int(hb[present & ~(1 << q)]) << 12
    if m3:
        t = int(hb[m3])
        rest = (m3 & ~(1 << t)) | m2
        if rest:
            return T.FULL_HOUSE << 20 | t << 16 | int(hb[rest]) << 12
    if flush_value >= 0:
        return flush_value
    sh = int(T.STRAIGHT_HIGH[present])
    if sh >= 0:
        return T.STRAIGHT << 20 | sh << 16
    if m3:
        t = int(hb[m3])
        return T.TRIPS << 20 | t << 16 | int(T.TOP2[present & ~(1 << t)]) << 8
    if m2 & (m2 - 1):
        p1 = int(hb[m2])
        p2 = int(hb[m2 & ~(1 << p1)])
        kick = int(hb[present & ~(1 << p1 | 1 << p2)])
        return T.TWO_PAIR << 20 | p1 << 16 | p2 << 12 | kick << 8
    if m2:
        p = int(hb[m2])
        return T.PAIR << 20 | p << 16 | int(T.TOP3[present & ~(1 << p)]) << 4
    return int(T.TOP5[present])


def showdown(hole_a: Sequence[Card], hole_b: Sequence[Card], board: Sequence[Card]) -> Outcome:
    if len(hole_a) != 2 or len(hole_b) != 2 or len(board) != 5:
        raise CardError("showdown needs two hole cards each and a five-card board")
    require_distinct(hole_a, hole_b, board)
    a = showdown_value([*hole_a, *board])
    b = showdown_value([*hole_b, *board])
    if a > b:
        return Outcome.A_WINS
    if a < b:
        return Outcome.B_WINS
    return Outcome.TIE


def _check_five(codes: list[int]) -> None:
    if len(codes) != 5 or len(set(codes)) != 5:
        raise CardError("need five distinct cards")


def classify_standard(hand: Sequence[Card | int]) -> HandCategory:
    codes = _codes(hand)
    _check_five(codes)
    ranks = [c >> 2 for c in codes]
    flush = len({c & 3 for c in codes}) == 1
    mask = 0
    for r in ranks:
        mask |= 1 << r
    shape = sorted(Counter(ranks).values(), reverse=True)
    straight = len(shape) == 5 and T.STRAIGHT_HIGH[mask] >= 0

    if straight and flush:
        if T.STRAIGHT_HIGH[mask] == ACE:
            return HandCategory.NATURAL_ROYAL_FLUSH
        return HandCategory.STRAIGHT_FLUSH
    if shape[0] == 4:
        return HandCategory.FOUR_OF_A_KIND
    if shape == [3, 2]:
        return HandCategory.FULL_HOUSE
    if flush:
        return HandCategory.FLUSH
    if straight:
        return HandCategory.STRAIGHT
    if shape[0] == 3:
        return HandCategory.THREE_OF_A_KIND
    if shape == [2, 2, 1]:
        return HandCategory.TWO_PAIRS
    if shape[0] == 2:
        pair = next(r for r, n in Counter(ranks).items() if n == 2)
        if pair >= JACK:
            return HandCategory.JACKS_OR_BETTER
    return HandCategory.NOTHING


def classify_deuces(hand: Sequence[Card | int]) -> HandCategory:
    """Best pay category with the four deuces wild."""
    codes = _codes(hand)
    _check_five(codes)
    naturals = [c for c in codes if c >> 2 != DEUCE]
    wild = 5 - len(naturals)
    if wild == 4:
        return HandCategory.FOUR_DEUCES

    counts = Counter(c >> 2 for c in naturals)
    shape = sorted(counts.values(), reverse=True)
    top = shape[0]
    distinct = top == 1
    suited = len({c & 3 for c in naturals}) == 1
    mask = 0
    for r in counts:
        mask |= 1 << r
    straight = distinct and bool(T.FITS_STRAIGHT[mask])

    if suited and distinct and mask & T.ROYAL_BITS == mask:
        # naturals confined to T..A: every wild fills a missing royal rank
        if wild == 0:
            return HandCategory.NATURAL_ROYAL_FLUSH
        return HandCategory.WILD_ROYAL_FLUSH
    if top + wild >= 5:
        return HandCategory.FIVE_OF_A_KIND
    if suited and straight:
        return HandCategory.STRAIGHT_FLUSH
    if top + wild >= 4:
        return HandCategory.FOUR_OF_A_KIND
    if (wild == 0 and shape == [3, 2]) or (wild == 1 and shape == [2, 2]):
        return HandCategory.FULL_HOUSE
    if suited:
        return HandCategory.FLUSH
    if straight:
        return HandCategory.STRAIGHT
    if top + wild >= 3:
        return HandCategory.THREE_OF_A_KIND
    return HandCategory.NOTHING


def classify(hand: Sequence[Card | int], wild: bool) -> HandCategory:
    return classify_deuces(hand) if wild else classify_standard(hand)
