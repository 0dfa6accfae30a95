"""Exact single-play and n-play video poker analysis.

The full-deck analysis works on suit-equivalence classes of dealt hands.  For
each class representative the payout sums of all 32 holds come from
precomputed subset tables (sum of ``pay`` and ``pay**2`` over every five-card
hand containing a given subset) by inclusion-exclusion over the discards, so
the whole game is solved with integer arithmetic and no rounding.
"""

from __future__ import annotations

import hashlib
import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, lcm
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from . import kernels
from .cards import Card, CardError, format_cards, parse_cards
from .evaluate import HandCategory, classify
from .exact import SummaryStats, format_exact, parse_exact

STANDARD = "standard"
DEUCES_WILD = "deuces_wild"
VARIANTS = (STANDARD, DEUCES_WILD)

HAND_COUNT = comb(52, 5)

_IMPOSSIBLE = {
    STANDARD: {
        HandCategory.FOUR_DEUCES,
        HandCategory.WILD_ROYAL_FLUSH,
        HandCategory.FIVE_OF_A_KIND,
    },
    DEUCES_WILD: {HandCategory.TWO_PAIRS, HandCategory.JACKS_OR_BETTER},
}


class PayTableError(ValueError):
    pass


@dataclass(frozen=True)
class PayTable:
    """Return per unit bet for each hand category (maximum bet assumed)."""

    name: str
    variant: str
    payouts: tuple[tuple[HandCategory, Fraction], ...]

    def __post_init__(self):
        if self.variant not in VARIANTS:
            raise PayTableError(f"unknown variant {self.variant!r}")
        seen = set()
        for cat, value in self.payouts:
            if cat in seen:
                raise PayTableError(f"category {cat.key} listed twice")
            seen.add(cat)
            if cat in _IMPOSSIBLE[self.variant]:
                raise PayTableError(f"{cat.key} cannot occur in {self.variant}")
            if value < 0:
                raise PayTableError(f"negative payout for {cat.key}")
        object.__setattr__(
            self, "payouts", tuple(sorted((c, Fraction(v)) for c, v in self.payouts))
        )

    @classmethod
    def of(cls, name: str, variant: str, payouts: dict) -> "PayTable":
        items = []
        for cat, value in payouts.items():
            if not isinstance(cat, HandCategory):
                cat = HandCategory[str(cat).upper()]
            items.append((cat, Fraction(value)))
        return cls(name, variant, tuple(items))

    @property
    def wild(self) -> bool:
        return self.variant == DEUCES_WILD

    def pay(self, category: HandCategory) -> Fraction:
        return dict(self.payouts).get(category, Fraction(0))

    def pay_vector(self) -> list[Fraction]:
        return [self.pay(c) for c in HandCategory]

    def scaled(self) -> tuple[int, np.ndarray]:
        """Common denominator and integer payouts indexed by category code."""
        pays = self.pay_vector()
        scale = lcm(*(p.denominator for p in pays))
        return scale, np.array([int(p * scale) for p in pays], dtype=np.int64)

    def to_text(self) -> str:
        lines = [f"name: {self.name}", f"variant: {self.variant}"]
        lines += [f"{cat.key}: {format_payout(v)}" for cat, v in self.payouts]
        return "\n".join(lines) + "\n"

    def fingerprint(self) -> str:
        body = [self.variant] + [f"{c.key}={format_exact(v)}" for c, v in self.payouts if v]
        return hashlib.sha256("\n".join(body).encode()).hexdigest()

    @classmethod
    def from_text(cls, text: str) -> "PayTable":
        name, variant, payouts = "custom", None, {}
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            key, sep, value = line.partition(":")
            if not sep:
                raise PayTableError(f"line {lineno}: expected 'key: value'")
            key, value = key.strip().lower(), value.strip()
            if key == "name":
                name = value
            elif key == "variant":
                variant = value.replace("-", "_")
            else:
                try:
                    cat = HandCategory[key.upper()]
                except KeyError:
                    raise PayTableError(f"line {lineno}: unknown category {key!r}") from None
                if cat in payouts:
                    raise PayTableError(f"line {lineno}: {key} listed twice")
                try:
                    payouts[cat] = parse_exact(value)
                except (ValueError, ZeroDivisionError):
                    raise PayTableError(f"line {lineno}: bad payout {value!r}") from None
        if variant is None:
            raise PayTableError("pay table does not name its variant")
        return cls.of(name, variant, payouts)

    @classmethod
    def load(cls, path: str | Path) -> "PayTable":
        return cls.from_text(Path(path).read_text())


def format_payout(value: Fraction) -> str:
    return str(value.numerator) if value.denominator == 1 else format_exact(value)


JACKS_OR_BETTER_9_6 = PayTable.of(
    "jacks-or-better-9-6",
    STANDARD,
    {
        HandCategory.NATURAL_ROYAL_FLUSH: 800,
        HandCategory.STRAIGHT_FLUSH: 50,
        HandCategory.FOUR_OF_A_KIND: 25,
        HandCategory.FULL_HOUSE: 9,
        HandCategory.FLUSH: 6,
        HandCategory.STRAIGHT: 4,
        HandCategory.THREE_OF_A_KIND: 3,
        HandCategory.TWO_PAIRS: 2,
        HandCategory.JACKS_OR_BETTER: 1,
    },
)

DEUCES_WILD_FULL_PAY = PayTable.of(
    "deuces-wild-full-pay",
    DEUCES_WILD,
    {
        HandCategory.NATURAL_ROYAL_FLUSH: 800,
        HandCategory.FOUR_DEUCES: 200,
        HandCategory.WILD_ROYAL_FLUSH: 25,
        HandCategory.FIVE_OF_A_KIND: 15,
        HandCategory.STRAIGHT_FLUSH: 9,
        HandCategory.FOUR_OF_A_KIND: 5,
        HandCategory.FULL_HOUSE: 3,
        HandCategory.FLUSH: 2,
        HandCategory.STRAIGHT: 2,
        HandCategory.THREE_OF_A_KIND: 1,
    },
)

PRESETS = {p.name: p for p in (JACKS_OR_BETTER_9_6, DEUCES_WILD_FULL_PAY)}


def resolve_game(spec: str) -> PayTable:
    """A preset name or a path to a pay table file."""
    if spec in PRESETS:
        return PRESETS[spec]
    path = Path(spec)
    if not path.is_file():
        raise PayTableError(f"unknown preset or unreadable pay table: {spec}")
    try:
        return PayTable.load(path)
    except OSError as exc:
        raise PayTableError(f"cannot read pay table {spec}: {exc}") from exc


# ---------------------------------------------------------------------------
# hands, masks, equivalence classes


def _codes(cards: Iterable[Card | int]) -> list[int]:
    return [c.code if isinstance(c, Card) else int(c) for c in cards]


def _hand(hand: Sequence[Card | int] | str) -> tuple[Card, ...]:
    cards = parse_cards(hand) if isinstance(hand, str) else tuple(
        c if isinstance(c, Card) else Card(int(c)) for c in hand
    )
    if len(cards) != 5 or len(set(cards)) != 5:
        raise CardError("a video poker hand is five distinct cards")
    return cards


def held_cards(hand: Sequence[Card], mask: int) -> tuple[Card, ...]:
    """Cards kept by ``mask``; bit ``i`` holds ``hand[i]``."""
    return tuple(c for i, c in enumerate(hand) if mask >> i & 1)


def mask_for(hand: Sequence[Card], held: Iterable[Card]) -> int:
    held = set(held)
    if not held <= set(hand):
        raise CardError("held cards must come from the hand")
    return sum(1 << i for i, c in enumerate(hand) if c in held)


@lru_cache(maxsize=None)
def all_hands() -> np.ndarray:
    """Every five-card hand once, rows sorted, in lexicographic order."""
    flat = np.fromiter(itertools.chain.from_iterable(itertools.combinations(range(52), 5)),
                       dtype=np.int8, count=5 * HAND_COUNT)
    hands = flat.reshape(HAND_COUNT, 5)
    hands.flags.writeable = False
    return hands


def _decode_keys(keys: np.ndarray) -> np.ndarray:
    return np.stack([(keys // 52 ** (4 - i)) % 52 for i in range(5)], axis=1)


@dataclass(frozen=True)
class EquivalenceClass:
    canonical_hand: tuple[Card, ...]
    weight: int

    def __str__(self) -> str:
        return f"{format_cards(self.canonical_hand)} x{self.weight}"


@dataclass(frozen=True)
class ClassTable:
    variant: str
    keys: np.ndarray
    hands: np.ndarray
    weights: np.ndarray

    def __len__(self) -> int:
        return len(self.keys)

    def lookup(self, key: int) -> int:
        i = int(np.searchsorted(self.keys, key))
        if i == len(self.keys) or self.keys[i] != key:
            raise KeyError(key)
        return i


@lru_cache(maxsize=None)
def class_table(variant: str) -> ClassTable:
    """All equivalence classes of dealt hands, in representative order."""
    if variant not in VARIANTS:
        raise PayTableError(f"unknown variant {variant!r}")
    keys = kernels.canonical_keys(all_hands(), variant == DEUCES_WILD)
    uniq, weights = np.unique(keys, return_counts=True)
    return ClassTable(variant, uniq, _decode_keys(uniq), weights.astype(np.int64))


def canonicalize(hand: Sequence[Card | int] | str, variant: str = STANDARD) -> EquivalenceClass:
    """Least hand, in sorted-card lexicographic order, equivalent to ``hand``.

    Standard hands are equivalent under relabelling of the four suits.  With
    deuces wild, the suits of deuces are ignored and the relabelling acts on
    the natural cards only.
    """
    cards = _hand(hand)
    key = int(kernels.canonical_keys(np.array([_codes(cards)]), variant == DEUCES_WILD)[0])
    table = class_table(variant)
    i = table.lookup(key)
    return EquivalenceClass(tuple(Card(int(c)) for c in table.hands[i]), int(table.weights[i]))


# ---------------------------------------------------------------------------
# per-hold analysis


@dataclass(frozen=True)
class HoldAnalysis:
    """Conditional mean and variance of the payout given the deal and a hold.

    ``mask`` bit ``i`` holds ``hand[i]``.
    """

    hand: tuple[Card, ...]
    mask: int
    cond_mean: Fraction
    cond_var: Fraction

    @property
    def held(self) -> tuple[Card, ...]:
        return held_cards(self.hand, self.mask)

    @property
    def hold_flags(self) -> tuple[bool, ...]:
        return tuple(bool(self.mask >> i & 1) for i in range(5))


@lru_cache(maxsize=32)
def _combo_index(n: int, k: int) -> np.ndarray:
    flat = np.fromiter(itertools.chain.from_iterable(itertools.combinations(range(n), k)),
                       dtype=np.int16, count=k * comb(n, k))
    return flat.reshape(comb(n, k), k)


def _deck_codes(deck: Iterable[Card | int] | None) -> list[int]:
    if deck is None:
        return list(range(52))
    codes = sorted(set(_codes(deck)))
    if len(codes) < 5:
        raise CardError("a deck needs at least five cards")
    return codes


def _completion_moments(hand, mask, pay: PayTable, deck_codes) -> tuple[int, int, int]:
    """Exact (count, sum of pays, sum of squared pays), scaled by ``pay.scaled()``."""
    codes = _codes(hand)
    held = [c for i, c in enumerate(codes) if mask >> i & 1]
    rest = np.array([c for c in deck_codes if c not in codes], dtype=np.int64)
    k = 5 - len(held)
    if k > len(rest):
        return 0, 0, 0
    draws = rest[_combo_index(len(rest), k)] if k else np.empty((1, 0), dtype=np.int64)
    finals = np.hstack([np.broadcast_to(np.array(held, dtype=np.int64), (len(draws), len(held))), draws])
    counts = np.bincount(kernels.category5(finals, pay.wild), minlength=len(HandCategory))
    _, pays = pay.scaled()
    s1 = sum(int(n) * int(p) for n, p in zip(counts, pays))
    s2 = sum(int(n) * int(p) ** 2 for n, p in zip(counts, pays))
    return len(draws), s1, s2


def hold_distribution(hand, mask: int, pay: PayTable, deck=None) -> HoldAnalysis:
    """Enumerate every replacement draw for one hold and return exact moments.

    ``deck`` restricts the cards in play (the full 52 by default).
    """
    cards = _hand(hand)
    if not 0 <= mask < 32:
        raise ValueError(f"hold mask must be in 0..31, got {mask}")
    deck_codes = _deck_codes(deck)
    if not set(_codes(cards)) <= set(deck_codes):
        raise CardError("hand is not drawn from the deck")
    n, s1, s2 = _completion_moments(cards, mask, pay, deck_codes)
    if n == 0:
        raise ValueError("not enough cards left to replace the discards")
    scale, _ = pay.scaled()
    mean = Fraction(s1, n * scale)
    return HoldAnalysis(cards, mask, mean, Fraction(s2, n * scale * scale) - mean * mean)


def _pick(means: Sequence[Fraction], variances: Sequence[Fraction]) -> int:
    """Max mean, then min variance, then smallest mask."""
    return min(range(len(means)), key=lambda m: (-means[m], variances[m], m))


@dataclass
class _GameTables:
    pay: PayTable
    scale: int
    t1: np.ndarray
    t2: np.ndarray


@lru_cache(maxsize=4)
def _game_tables(pay: PayTable) -> _GameTables:
    scale, pays = pay.scaled()
    top = int(pays.max()) if len(pays) else 0
    if top * top * HAND_COUNT >= 2**63:
        raise PayTableError("payouts too large for 64-bit subset sums")
    hands = all_hands()
    hand_pays = pays[kernels.category5(hands, pay.wild)]
    t1, t2 = kernels.subset_sums(hands, hand_pays)
    return _GameTables(pay, scale, t1, t2)


_DRAWS = np.array([comb(47, 5 - bin(m).count("1")) for m in range(32)], dtype=np.int64)
_LCM_DRAWS = lcm(*(int(x) for x in _DRAWS))


def _select_holds(s1: np.ndarray, s2: np.ndarray) -> np.ndarray:
    """Optimal mask per row of 32 payout sums (exact comparisons)."""
    scaled_mean = s1 * (_LCM_DRAWS // _DRAWS)
    best = scaled_mean.max(axis=1)
    tied = scaled_mean == best[:, None]
    choice = tied.argmax(axis=1)
    for i in np.nonzero(tied.sum(axis=1) > 1)[0]:
        cands = np.nonzero(tied[i])[0]
        var = {
            int(m): Fraction(int(_DRAWS[m]) * int(s2[i, m]) - int(s1[i, m]) ** 2, int(_DRAWS[m]) ** 2)
            for m in cands
        }
        choice[i] = min(var, key=lambda m: (var[m], m))
    return choice


def _table_holds(hands: np.ndarray, pay: PayTable) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """(chosen masks, chosen s1, chosen s2) for sorted full-deck hands."""
    tables = _game_tables(pay)
    s1, s2 = kernels.hold_sums(hands, tables.t1, tables.t2)
    choice = _select_holds(s1, s2)
    rows = np.arange(len(hands))
    return choice, s1[rows, choice], s2[rows, choice]


def optimal_hold(hand, pay: PayTable, tie_break: str = "min_variance", deck=None) -> HoldAnalysis:
    """Hold maximising the conditional mean, ties to the smaller variance.

    The returned analysis refers to the hand in sorted card order; residual
    ties (equal mean and variance) go to the smallest mask.
    """
    if tie_break != "min_variance":
        raise ValueError(f"unsupported tie break {tie_break!r}")
    cards = tuple(sorted(_hand(hand)))
    scale, _ = pay.scaled()
    if deck is None:
        choice, s1, s2 = _table_holds(np.array([_codes(cards)], dtype=np.int64), pay)
        m = int(choice[0])
        n = int(_DRAWS[m])
        mean = Fraction(int(s1[0]), n * scale)
        return HoldAnalysis(cards, m, mean, Fraction(int(s2[0]), n * scale * scale) - mean * mean)
    deck_codes = _deck_codes(deck)
    options = {}
    for m in range(32):
        n, s1, s2 = _completion_moments(cards, m, pay, deck_codes)
        if n:
            mean = Fraction(s1, n * scale)
            options[m] = (mean, Fraction(s2, n * scale * scale) - mean * mean)
    m = min(options, key=lambda k: (-options[k][0], options[k][1], k))
    return HoldAnalysis(cards, m, *options[m])


# ---------------------------------------------------------------------------
# game-level decomposition


@dataclass(frozen=True)
class VarianceDecomposition:
    """Mean and law-of-total-variance split of the single-play return."""

    e_r1: Fraction
    var_r1: Fraction
    v_deal: Fraction
    v_draw: Fraction
    strategy_label: str = "min-variance optimal"

    def __post_init__(self):
        if self.v_deal + self.v_draw != self.var_r1:
            raise ValueError("v_deal + v_draw must equal var_r1")
        if min(self.var_r1, self.v_deal, self.v_draw) < 0:
            raise ValueError("variances must be nonnegative")

    @property
    def cov_r12(self) -> Fraction:
        # covariance of two plays of the same deal equals the deal variance
        return self.v_deal

    def to_dict(self) -> dict:
        return {k: format_exact(getattr(self, k)) for k in ("e_r1", "var_r1", "v_deal", "v_draw")}


@dataclass(frozen=True)
class NPlayRow:
    n: int
    stats: SummaryStats


def nplay_variance_forms(decomp: VarianceDecomposition, n: int) -> dict[str, Fraction]:
    """The four equivalent expressions for the n-play variance of return per unit bet."""
    if n < 1:
        raise ValueError(f"number of plays must be positive, got {n}")
    inv = Fraction(1, n)
    return {
        "deal_plus_draw_over_n": decomp.v_deal + inv * decomp.v_draw,
        "single_minus_draw": decomp.var_r1 - (1 - inv) * decomp.v_draw,
        "single_over_n_plus_deal": inv * decomp.var_r1 + (1 - inv) * decomp.v_deal,
        "exchangeable": inv * decomp.var_r1 + (1 - inv) * decomp.cov_r12,
    }


def nplay_table(decomp: VarianceDecomposition, ns: Iterable[int]) -> list[NPlayRow]:
    rows = []
    for n in ns:
        forms = nplay_variance_forms(decomp, n)
        variance = forms["deal_plus_draw_over_n"]
        if any(v != variance for v in forms.values()):
            raise ArithmeticError(f"n-play variance forms disagree at n={n}")
        rows.append(NPlayRow(n, SummaryStats(decomp.e_r1, variance)))
    return rows


def per_unit_bet_variance(decomp: VarianceDecomposition, n: int) -> Fraction:
    """``Var(R_1 + ... + R_n) / n``, i.e. variance *of return* per unit bet.

    This grows with ``n`` and is NOT the variance of the return per unit bet
    of an n-play hand (see :func:`nplay_table` for that).
    """
    if n < 1:
        raise ValueError(f"number of plays must be positive, got {n}")
    return decomp.var_r1 + (n - 1) * decomp.v_deal


@dataclass
class StrategyTable:
    """Optimal hold and its conditional moments for every class of dealt hand."""

    pay: PayTable
    hands: np.ndarray
    weights: np.ndarray
    masks: np.ndarray
    cond_means: list[Fraction] = field(repr=False)
    cond_vars: list[Fraction] = field(repr=False)
    decomposition: VarianceDecomposition

    def __len__(self) -> int:
        return len(self.weights)

    def distinct_cond_means(self) -> int:
        return len(set(self.cond_means))

    def write(self, path: str | Path) -> None:
        d = self.decomposition
        lines = [
            "# pokervar strategy cache v1",
            f"fingerprint: {self.pay.fingerprint()}",
            f"game: {self.pay.name}",
            f"variant: {self.pay.variant}",
            f"classes: {len(self)}",
            f"e_r1: {format_exact(d.e_r1)}",
            f"v_deal: {format_exact(d.v_deal)}",
            f"v_draw: {format_exact(d.v_draw)}",
        ]
        for hand, w, m, mean, var in zip(self.hands, self.weights, self.masks,
                                         self.cond_means, self.cond_vars):
            cards = format_cards(Card(int(c)) for c in hand)
            lines.append(f"{cards} {int(w)} {int(m)} {format_exact(mean)} {format_exact(var)}")
        Path(path).write_text("\n".join(lines) + "\n")

    @classmethod
    def read(cls, path: str | Path, pay: PayTable) -> "StrategyTable":
        header: dict[str, str] = {}
        hands, weights, masks, means, variances = [], [], [], [], []
        for raw in Path(path).read_text().splitlines():
            if not raw or raw.startswith("#"):
                continue
            key, sep, value = raw.partition(": ")
            if sep and key.isidentifier():
                header[key] = value
                continue
            parts = raw.split()
            if len(parts) != 9:
                raise CacheError(f"malformed cache row: {raw!r}")
            hands.append([Card.parse(t).code for t in parts[:5]])
            weights.append(int(parts[5]))
            masks.append(int(parts[6]))
            means.append(parse_exact(parts[7]))
            variances.append(parse_exact(parts[8]))
        if header.get("fingerprint") != pay.fingerprint():
            raise CacheError(f"cache {path} was built for a different pay table")
        if int(header.get("classes", -1)) != len(weights):
            raise CacheError(f"cache {path} is truncated")
        decomp = decompose(weights, means, variances)
        for key in ("e_r1", "v_deal", "v_draw"):
            if key in header and parse_exact(header[key]) != getattr(decomp, key):
                raise CacheError(f"cache {path} is inconsistent ({key})")
        return cls(pay, np.array(hands, dtype=np.int64), np.array(weights, dtype=np.int64),
                   np.array(masks, dtype=np.int64), means, variances, decomp)


class CacheError(ValueError):
    pass


def decompose(weights: Sequence[int], cond_means: Sequence[Fraction],
              cond_vars: Sequence[Fraction]) -> VarianceDecomposition:
    """Law of total variance over weighted deal classes."""
    total = sum(int(w) for w in weights)
    if total <= 0:
        raise ValueError("no deals")
    e = sum((int(w) * m for w, m in zip(weights, cond_means)), Fraction(0)) / total
    e2 = sum((int(w) * m * m for w, m in zip(weights, cond_means)), Fraction(0)) / total
    v_draw = sum((int(w) * v for w, v in zip(weights, cond_vars)), Fraction(0)) / total
    v_deal = e2 - e * e
    return VarianceDecomposition(e, v_deal + v_draw, v_deal, v_draw)


def _solve_chunk(args):
    hands, pay = args
    return _table_holds(hands, pay)


def solve_game(pay: PayTable, workers: int = 1, chunk: int = 16384) -> StrategyTable:
    """Optimal hold for every equivalence class of dealt hand, exactly."""
    table = class_table(pay.variant)
    _game_tables(pay)
    pieces = [(table.hands[i : i + chunk], pay) for i in range(0, len(table), chunk)]
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            results = list(pool.map(_solve_chunk, pieces))
    else:
        results = [_solve_chunk(p) for p in pieces]
    masks = np.concatenate([r[0] for r in results])
    s1 = np.concatenate([r[1] for r in results])
    s2 = np.concatenate([r[2] for r in results])

    scale, _ = pay.scaled()
    n = _DRAWS[masks]
    w = table.weights
    # exact integer reduction grouped by number of cards drawn
    e_num = e2_num = draw_num = Fraction(0)
    for k in range(6):
        sel = n == comb(47, k)
        if not sel.any():
            continue
        nk = comb(47, k)
        ws, a, b = w[sel].astype(object), s1[sel].astype(object), s2[sel].astype(object)
        sum_a = int((ws * a).sum())
        sum_aa = int((ws * a * a).sum())
        sum_b = int((ws * b).sum())
        e_num += Fraction(sum_a, nk)
        e2_num += Fraction(sum_aa, nk * nk)
        draw_num += Fraction(sum_b, nk) - Fraction(sum_aa, nk * nk)
    total = int(w.sum())
    e = e_num / (total * scale)
    v_deal = e2_num / (total * scale * scale) - e * e
    v_draw = draw_num / (total * scale * scale)
    decomp = VarianceDecomposition(e, v_deal + v_draw, v_deal, v_draw)

    means = [Fraction(int(a), int(k) * scale) for a, k in zip(s1, n)]
    variances = [
        Fraction(int(k) * int(b) - int(a) ** 2, int(k) ** 2 * scale * scale)
        for a, b, k in zip(s1, s2, n)
    ]
    return StrategyTable(pay, table.hands, w, masks, means, variances, decomp)


def load_or_solve(pay: PayTable, cache: str | Path | None = None, workers: int = 1) -> StrategyTable:
    if cache is not None and Path(cache).exists():
        return StrategyTable.read(cache, pay)
    result = solve_game(pay, workers=workers)
    if cache is not None:
        result.write(cache)
    return result


def analyze_game(pay: PayTable, deck=None, workers: int = 1) -> VarianceDecomposition:
    """Mean, variance, and deal/draw split of the single-play return.

    With ``deck`` the game is played on that reduced deck and every deal is
    enumerated directly (no equivalence classes).
    """
    if deck is None:
        return solve_game(pay, workers=workers).decomposition
    deck_codes = _deck_codes(deck)
    means, variances = [], []
    for hand in itertools.combinations(deck_codes, 5):
        h = optimal_hold(hand, pay, deck=deck_codes)
        means.append(h.cond_mean)
        variances.append(h.cond_var)
    return decompose([1] * len(means), means, variances)


def covariance_identity_check(pay: PayTable, deck) -> tuple[Fraction, Fraction]:
    """(Cov(R_1, R_2) by brute force, V_deal from :func:`analyze_game`).

    The covariance enumerates every deal and every ordered pair of draws for
    two conditionally independent plays, classifying each final hand with the
    scalar evaluator.
    """
    deck_codes = _deck_codes(deck)
    deals = list(itertools.combinations(deck_codes, 5))
    sum_r, sum_rr = Fraction(0), Fraction(0)
    for hand in deals:
        hold = optimal_hold(hand, pay, deck=deck_codes)
        held = [c.code for c in hold.held]
        rest = [c for c in deck_codes if c not in hand]
        payouts = [
            pay.pay(classify([*held, *draw], pay.wild))
            for draw in itertools.combinations(rest, 5 - len(held))
        ]
        n = len(payouts)
        sum_r += Fraction(sum(payouts), n)
        sum_rr += sum(a * b for a in payouts for b in payouts) / (n * n)
    e = sum_r / len(deals)
    cov = sum_rr / len(deals) - e * e
    return cov, analyze_game(pay, deck=deck_codes).v_deal
