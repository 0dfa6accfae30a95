"""Card model and deck bookkeeping.

A card is encoded as ``rank * 4 + suit`` with ranks ``2..A -> 0..12`` and
suits ``c, d, h, s -> 0..3``, so integer order is the (rank, suit) order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

RANK_CHARS = "23456789TJQKA"
SUIT_CHARS = "cdhs"
SUIT_NAMES = ("club", "diamond", "heart", "spade")

DEUCE = 0
JACK = RANK_CHARS.index("J")
ACE = RANK_CHARS.index("A")


class CardError(ValueError):
    """Malformed card text or an impossible card combination."""


class DuplicateCardError(CardError):
    """The same card appears twice."""


@dataclass(frozen=True, order=True)
class Card:
    code: int

    def __post_init__(self):
        if not 0 <= self.code < 52:
            raise CardError(f"card code out of range: {self.code}")

    @classmethod
    def of(cls, rank: int, suit: int) -> "Card":
        return cls(rank * 4 + suit)

    @classmethod
    def parse(cls, text: str) -> "Card":
        t = text.strip()
        if t[:2] == "10":
            t = "T" + t[2:]
        if len(t) != 2:
            raise CardError(f"bad card {text!r}")
        r = RANK_CHARS.find(t[0].upper())
        s = SUIT_CHARS.find(t[1].lower())
        if r < 0 or s < 0:
            raise CardError(f"bad card {text!r}")
        return cls.of(r, s)

    @property
    def rank(self) -> int:
        return self.code >> 2

    @property
    def suit(self) -> int:
        return self.code & 3

    def __str__(self) -> str:
        return RANK_CHARS[self.rank] + SUIT_CHARS[self.suit]

    def __repr__(self) -> str:
        return f"Card({str(self)!r})"


FULL_DECK = tuple(Card(c) for c in range(52))


def parse_cards(text: str | Iterable[str]) -> tuple[Card, ...]:
    """Parse ``"Ts Tc"`` (or ``"TsTc"``, or a list of tokens) into cards."""
    if isinstance(text, str):
        tokens = text.replace(",", " ").split()
        if len(tokens) == 1 and len(tokens[0]) > 3:
            s = tokens[0]
            tokens = [s[i : i + 2] for i in range(0, len(s), 2)]
    else:
        tokens = list(text)
    return tuple(Card.parse(t) for t in tokens)


def format_cards(cards: Iterable[Card]) -> str:
    return " ".join(str(c) for c in cards)


def require_distinct(*groups: Iterable[Card]) -> None:
    seen: set[Card] = set()
    for group in groups:
        for c in group:
            if c in seen:
                raise DuplicateCardError(f"duplicate card {c}")
            seen.add(c)


class CardSet:
    """Immutable set of cards backed by a 52-bit mask."""

    __slots__ = ("_mask",)

    def __init__(self, cards: Iterable[Card] | int = ()):
        if isinstance(cards, int):
            if cards < 0 or cards >> 52:
                raise CardError("mask outside 52 bits")
            self._mask = cards
            return
        mask = 0
        for c in cards:
            bit = 1 << c.code
            if mask & bit:
                raise DuplicateCardError(f"duplicate card {c}")
            mask |= bit
        self._mask = mask

    @classmethod
    def parse(cls, text: str) -> "CardSet":
        return cls(parse_cards(text))

    @property
    def mask(self) -> int:
        return self._mask

    def __iter__(self) -> Iterator[Card]:
        m = self._mask
        while m:
            low = m & -m
            yield Card(low.bit_length() - 1)
            m ^= low

    def __len__(self) -> int:
        return self._mask.bit_count()

    def __contains__(self, card: object) -> bool:
        return isinstance(card, Card) and bool(self._mask >> card.code & 1)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, CardSet) and other._mask == self._mask

    def __hash__(self) -> int:
        return hash(self._mask)

    def complement(self) -> "CardSet":
        return CardSet(~self._mask & ((1 << 52) - 1))

    def __or__(self, other: "CardSet") -> "CardSet":
        return CardSet(self._mask | other._mask)

    def __sub__(self, other: "CardSet") -> "CardSet":
        return CardSet(self._mask & ~other._mask)

    def isdisjoint(self, other: "CardSet") -> bool:
        return not self._mask & other._mask

    def codes(self) -> list[int]:
        return [c.code for c in self]

    def __str__(self) -> str:
        return format_cards(self)

    def __repr__(self) -> str:
        return f"CardSet({str(self)!r})"
