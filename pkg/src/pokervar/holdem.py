"""Pot-share return when two all-in players run the rest of the board n times.

Returns are in units of the pot for the chosen player: 1 for a win, 1/2 for a
chop, 0 for a loss, on each run.  The runs are dealt successively without
replacement, so they are exchangeable and the n-run mean and variance follow
from ``E[R_1]``, ``Var(R_1)`` and ``Cov(R_1, R_2)``.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, sqrt
from statistics import NormalDist
from typing import Optional, Sequence

import numpy as np

from . import kernels
from .cards import Card, CardError, CardSet, parse_cards, require_distinct
from .exact import SummaryStats, sample_mean_stats

HERO = "hero"
VILLAIN = "villain"
PLAYERS = (HERO, VILLAIN)

CLOSED_FORM = "closed_form"
EXACT_ENUMERATION = "exact_enumeration"
SUIT_COMPOSITION = "suit_composition"
MONTE_CARLO = "monte_carlo"
METHODS = (CLOSED_FORM, EXACT_ENUMERATION, SUIT_COMPOSITION, MONTE_CARLO)

# per-run return, indexed as in the joint matrix
VALUES = (Fraction(1), Fraction(1, 2), Fraction(0))

MC_CONFIDENCE = 0.99
_EVAL_CHUNK = 1 << 17


class RunLimitError(ValueError):
    """More runs requested than the stub can deal."""


@dataclass(frozen=True)
class AllInState:
    """Two hole-card pairs, the board so far, and cards known to be out.

    ``dead`` cards are removed from the stub before anything is dealt.
    ``mucked_hands`` counts folded hands whose cards are unknown; they stay in
    the unseen set and only shrink the number of runs the stub can supply.
    """

    hero: tuple[Card, ...]
    villain: tuple[Card, ...]
    board: tuple[Card, ...] = ()
    dead: CardSet = field(default_factory=CardSet)
    mucked_hands: int = 0

    def __post_init__(self):
        object.__setattr__(self, "hero", tuple(self.hero))
        object.__setattr__(self, "villain", tuple(self.villain))
        object.__setattr__(self, "board", tuple(self.board))
        if not isinstance(self.dead, CardSet):
            object.__setattr__(self, "dead", CardSet(self.dead))
        if len(self.hero) != 2 or len(self.villain) != 2:
            raise CardError("each player holds exactly two cards")
        if len(self.board) not in (0, 3, 4):
            raise CardError(f"board must have 0, 3 or 4 cards, not {len(self.board)}")
        if self.mucked_hands < 0:
            raise ValueError("mucked hand count must be nonnegative")
        require_distinct(self.hero, self.villain, self.board, self.dead)

    @classmethod
    def parse(cls, hero: str, villain: str, board: str = "", dead: str = "",
              mucked_hands: int = 0) -> "AllInState":
        return cls(parse_cards(hero), parse_cards(villain), parse_cards(board),
                   CardSet(parse_cards(dead)), mucked_hands)

    @property
    def cards_to_come(self) -> int:
        return 5 - len(self.board)

    def unseen(self) -> list[Card]:
        out = CardSet([*self.hero, *self.villain, *self.board]) | self.dead
        return list(out.complement())

    def hole(self, player: str) -> tuple[Card, ...]:
        return self.hero if _player(player) == HERO else self.villain

    def is_mirrored_pair(self) -> bool:
        ranks = {c.rank for c in (*self.hero, *self.villain)}
        return not self.board and len(ranks) == 1


def _player(player: str) -> str:
    if player not in PLAYERS:
        raise ValueError(f"player must be 'hero' or 'villain', not {player!r}")
    return player


def plan_max_runs(state: AllInState) -> int:
    """Most runs the stub supports, allowing three burns and the mucked hands."""
    spare = len(state.unseen()) - (2 * state.mucked_hands + 3)
    runs = spare // state.cards_to_come
    if runs < 1:
        raise RunLimitError("the stub cannot supply even one run")
    return runs


def _check_runs(state: AllInState, n: int) -> int:
    if n < 1:
        raise ValueError(f"number of runs must be positive, got {n}")
    limit = plan_max_runs(state)
    if n > limit:
        raise RunLimitError(f"{n} runs requested but at most {limit} can be dealt")
    return limit


def _codes(cards: Sequence[Card]) -> np.ndarray:
    return np.array([c.code for c in cards], dtype=np.int64)


def _doubled_returns(state: AllInState, player: str, boards: np.ndarray) -> np.ndarray:
    """Twice the player's return (0, 1 or 2) on each full board."""
    hero, villain = _codes(state.hero), _codes(state.villain)
    out = np.empty(len(boards), dtype=np.int64)
    for lo in range(0, len(boards), _EVAL_CHUNK):
        codes = kernels.showdown_codes(hero, villain, boards[lo : lo + _EVAL_CHUNK])
        out[lo : lo + _EVAL_CHUNK] = codes.astype(np.int64) + 1
    return out if _player(player) == HERO else 2 - out


def _value_index(doubled: np.ndarray) -> np.ndarray:
    # 2 -> row 0 (win), 1 -> row 1 (chop), 0 -> row 2 (loss)
    return 2 - doubled


# ---------------------------------------------------------------------------
# one card to come


@dataclass(frozen=True)
class OutsTies:
    """River cards that win for the player, chop, or lose."""

    outs: int
    ties: int
    losses: int

    def __post_init__(self):
        if min(self.outs, self.ties, self.losses) < 0:
            raise ValueError("counts must be nonnegative")
        if self.unseen == 0:
            raise ValueError("no unseen cards")

    @property
    def unseen(self) -> int:
        return self.outs + self.ties + self.losses


def classify_river_outcomes(state: AllInState, player: str = HERO) -> OutsTies:
    if len(state.board) != 4:
        raise CardError("river outcomes need a four-card board")
    unseen = state.unseen()
    boards = np.hstack([np.tile(_codes(state.board), (len(unseen), 1)), _codes(unseen)[:, None]])
    r = _doubled_returns(state, player, boards)
    return OutsTies(int((r == 2).sum()), int((r == 1).sum()), int((r == 0).sum()))


def one_card_stats(outs: OutsTies, n: int, max_runs: Optional[int] = None) -> SummaryStats:
    """Closed-form mean and variance of the n-run return with one card to come.

    Without ties this is the hypergeometric variance with the finite-population
    correction; with ties the covariance comes from ordered pairs of rivers.
    """
    total = outs.unseen
    limit = total if max_runs is None else max_runs
    if n < 1:
        raise ValueError(f"number of runs must be positive, got {n}")
    if n > limit:
        raise RunLimitError(f"{n} runs requested but at most {limit} can be dealt")
    o, t = outs.outs, outs.ties
    mean = Fraction(2 * o + t, 2 * total)
    if t == 0:
        p = Fraction(o, total)
        correction = 1 - Fraction(n - 1, total - 1) if total > 1 else Fraction(1)
        return SummaryStats(mean, p * (1 - p) * correction / n)
    var1 = Fraction(4 * o + t, 4 * total) - mean * mean
    both = Fraction(4 * o * (o - 1) + 4 * o * t + t * (t - 1), 4 * total * (total - 1))
    return sample_mean_stats(mean, var1, both - mean * mean, n)


# ---------------------------------------------------------------------------
# joint law of two runs


@dataclass(frozen=True)
class RunOutcomeDistribution:
    """Joint law of (R_1, R_2); rows and columns ordered win, chop, loss."""

    joint: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        j = self.joint
        if len(j) != 3 or any(len(row) != 3 for row in j):
            raise ValueError("joint must be 3x3")
        if sum(sum(row) for row in j) != 1:
            raise ValueError("joint probabilities must sum to 1")
        if any(j[a][b] != j[b][a] for a in range(3) for b in range(3)):
            raise ValueError("joint must be symmetric for exchangeable runs")

    @classmethod
    def from_counts(cls, counts, total: int) -> "RunOutcomeDistribution":
        return cls(tuple(tuple(Fraction(int(counts[a][b]), total) for b in range(3)) for a in range(3)))

    @property
    def marginal(self) -> tuple[Fraction, ...]:
        return tuple(sum(row) for row in self.joint)

    @property
    def e_r1(self) -> Fraction:
        return sum(p * v for p, v in zip(self.marginal, VALUES))

    @property
    def var_r1(self) -> Fraction:
        return sum(p * v * v for p, v in zip(self.marginal, VALUES)) - self.e_r1**2

    @property
    def cov_r12(self) -> Fraction:
        e12 = sum(self.joint[a][b] * VALUES[a] * VALUES[b] for a in range(3) for b in range(3))
        return e12 - self.e_r1**2

    def stats(self, n: int) -> SummaryStats:
        return sample_mean_stats(self.e_r1, self.var_r1, self.cov_r12, n)

    def common_denominator(self) -> int:
        d = 1
        for row in self.joint:
            for p in row:
                d = d * p.denominator // np.gcd(d, p.denominator)
        return int(d)


def _pair_counts(run_masks: np.ndarray, idx: np.ndarray) -> np.ndarray:
    """Ordered pairs of disjoint runs, tallied by (outcome of run 1, outcome of run 2)."""
    disjoint = (run_masks[:, None] & run_masks[None, :]) == 0
    counts = np.zeros((3, 3), dtype=np.int64)
    for a in range(3):
        rows = disjoint[idx == a]
        for b in range(3):
            counts[a, b] = rows[:, idx == b].sum()
    return counts


def _exact_joint(state: AllInState, player: str) -> RunOutcomeDistribution:
    c = state.cards_to_come
    unseen = _codes(state.unseen())
    runs = np.array(list(itertools.combinations(unseen, c)), dtype=np.int64)
    boards = np.hstack([np.tile(_codes(state.board), (len(runs), 1)), runs])
    idx = _value_index(_doubled_returns(state, player, boards))
    masks = np.bitwise_or.reduce(np.left_shift(np.uint64(1), runs.astype(np.uint64)), axis=1)
    counts = _pair_counts(masks, idx)
    u = len(unseen)
    return RunOutcomeDistribution.from_counts(counts, comb(u, c) * comb(u - c, c))


def one_card_joint(state: AllInState, player: str = HERO) -> RunOutcomeDistribution:
    """Enumerate every ordered pair of distinct river cards."""
    if len(state.board) != 4:
        raise CardError("one card to come needs a four-card board")
    return _exact_joint(state, player)


def two_card_joint(state: AllInState, player: str = HERO) -> RunOutcomeDistribution:
    """Enumerate every (turn, river) pair for run 1 against every disjoint pair for run 2."""
    if len(state.board) != 3:
        raise CardError("two cards to come needs a three-card board")
    return _exact_joint(state, player)


def board_marginal(state: AllInState, player: str = HERO) -> tuple[Fraction, ...]:
    """Exact single-run law (win, chop, loss) by enumerating every completion."""
    c = state.cards_to_come
    unseen = _codes(state.unseen())
    runs = np.array(list(itertools.combinations(unseen, c)), dtype=np.int64)
    boards = np.hstack([np.tile(_codes(state.board), (len(runs), 1)), runs])
    idx = _value_index(_doubled_returns(state, player, boards))
    counts = np.bincount(idx, minlength=3)
    return tuple(Fraction(int(k), len(runs)) for k in counts)


# ---------------------------------------------------------------------------
# pocket pairs of the same rank, five cards to come


def _suit_compositions(total: int = 5) -> list[tuple[int, int, int, int]]:
    return [t for t in itertools.product(range(total + 1), repeat=4) if sum(t) == total]


def mirrored_pair_joint(state: AllInState, player: str = HERO) -> RunOutcomeDistribution:
    """Joint law of two runs from the suit counts on each board.

    Both players hold a pair of the same rank, so a player wins a run exactly
    when the board shows four or more cards of one of that player's suits, and
    the run is chopped otherwise.  This model does not separate out boards
    that are themselves a straight flush the pocket card cannot improve;
    :func:`board_marginal` counts those exactly.
    """
    if not state.is_mirrored_pair():
        raise ValueError("needs an empty board and both pocket pairs of one rank")
    hero_suits = {c.suit for c in state.hero}
    villain_suits = {c.suit for c in state.villain}
    left = [13 - 1 - sum(1 for c in state.dead if c.suit == s) for s in range(4)]
    stub = sum(left)

    def value(comp) -> int:
        if any(comp[s] >= 4 for s in hero_suits):
            return 0
        if any(comp[s] >= 4 for s in villain_suits):
            return 2
        return 1

    first = {comp: np.prod([comb(left[s], comp[s]) for s in range(4)], dtype=object)
             for comp in _suit_compositions()}
    counts = [[0] * 3 for _ in range(3)]
    for c1, w1 in first.items():
        if not w1:
            continue
        a = value(c1)
        for c2 in first:
            w2 = 1
            for s in range(4):
                w2 *= comb(left[s] - c1[s], c2[s])
            if w2:
                counts[a][value(c2)] += int(w1) * w2
    dist = RunOutcomeDistribution.from_counts(counts, comb(stub, 5) * comb(stub - 5, 5))
    if _player(player) == VILLAIN:
        dist = RunOutcomeDistribution(tuple(tuple(row[::-1]) for row in dist.joint[::-1]))
    return dist


# ---------------------------------------------------------------------------
# Monte Carlo


@dataclass(frozen=True)
class MonteCarloMeta:
    samples: int
    seed: int
    confidence: float
    mean_half_width: float
    var_half_width: float
    cov_half_width: Optional[float]
    row_var_half_widths: tuple[float, ...]

    def to_dict(self) -> dict:
        return {
            "samples": self.samples,
            "seed": self.seed,
            "confidence": self.confidence,
            "mean_half_width": self.mean_half_width,
            "var_r1_half_width": self.var_half_width,
            "cov_r12_half_width": self.cov_half_width,
            "row_variance_half_widths": list(self.row_var_half_widths),
        }


def _mc_chunk(args) -> np.ndarray:
    """Histogram of (sum, sum of squares) of doubled returns per trial."""
    state, player, n, size, seed, index = args
    rng = np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(index,)))
    c = state.cards_to_come
    unseen = _codes(state.unseen())
    order = np.argsort(rng.random((size, len(unseen))), axis=1)[:, : c * n]
    dealt = unseen[order]
    fixed = np.tile(_codes(state.board), (size, 1))
    t1 = np.zeros(size, dtype=np.int64)
    t2 = np.zeros(size, dtype=np.int64)
    for j in range(n):
        r = _doubled_returns(state, player, np.hstack([fixed, dealt[:, j * c : (j + 1) * c]]))
        t1 += r
        t2 += r * r
    width = 4 * n + 1
    return np.bincount(t1 * width + t2, minlength=(2 * n + 1) * width)


def _moments(hist: np.ndarray, n: int):
    """Exact plug-in estimates and the per-trial statistics behind them."""
    width = 4 * n + 1
    cells = [(divmod(i, width), int(k)) for i, k in enumerate(hist) if k]
    s = sum(k for _, k in cells)
    mu = Fraction(sum(t1 * k for (t1, _), k in cells), 2 * n * s)

    def q(t1, t2):  # mean squared deviation of the runs in one trial
        return Fraction(t2, 4 * n) - 2 * mu * Fraction(t1, 2 * n) + mu * mu

    def cv(t1, t2):  # mean cross product of deviations in one trial
        if n == 1:
            return Fraction(0)
        cross = Fraction(t1 * t1 - t2, 4)
        return (cross - mu * (n - 1) * t1 + n * (n - 1) * mu * mu) / (n * (n - 1))

    return cells, s, mu, q, cv


def _half_width(cells, s, stat, z) -> float:
    if s < 2:
        return float("inf")
    m = sum(stat(*tt) * k for tt, k in cells) / s
    second = sum(stat(*tt) ** 2 * k for tt, k in cells) / s
    return z * sqrt(max(float(second - m * m), 0.0) / s)


def five_card_monte_carlo(state: AllInState, player: str, runs: int, samples: int, seed: int,
                          workers: int = 1, chunk: int = 1 << 16) -> "RunItNReport":
    """Seeded estimate of the n-run statistics by dealing ``runs`` disjoint boards per trial.

    ``E[R_1]``, ``Var(R_1)`` and ``Cov(R_1, R_2)`` are pooled over runs (they
    are exchangeable) and combined for each n, so the mean is the same in
    every row.  Trials are split into fixed chunks, each with its own stream
    derived from ``(seed, chunk index)``; the result does not depend on
    ``workers``.  Works for any street, although the exact methods are
    preferable with one or two cards to come.
    """
    if samples < 1:
        raise ValueError("need at least one sample")
    if seed is None:
        raise ValueError("Monte Carlo needs an explicit seed")
    _player(player)
    _check_runs(state, runs)
    jobs = [(state, player, runs, min(chunk, samples - lo), seed, i)
            for i, lo in enumerate(range(0, samples, chunk))]
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            parts = list(pool.map(_mc_chunk, jobs))
    else:
        parts = [_mc_chunk(j) for j in jobs]
    hist = np.sum(parts, axis=0)

    cells, s, mu, q, cv = _moments(hist, runs)
    var1 = sum(q(*tt) * k for tt, k in cells) / s
    cov12 = sum(cv(*tt) * k for tt, k in cells) / s if runs > 1 else Fraction(0)
    rows = [sample_mean_stats(mu, var1, cov12, n) for n in range(1, runs + 1)]

    z = NormalDist().inv_cdf(0.5 + MC_CONFIDENCE / 2)
    meta = MonteCarloMeta(
        samples=s,
        seed=seed,
        confidence=MC_CONFIDENCE,
        mean_half_width=_half_width(cells, s, lambda t1, t2: Fraction(t1, 2 * runs), z),
        var_half_width=_half_width(cells, s, q, z),
        cov_half_width=_half_width(cells, s, cv, z) if runs > 1 else None,
        row_var_half_widths=tuple(
            _half_width(cells, s, lambda t1, t2, n=n: q(t1, t2) / n + (1 - Fraction(1, n)) * cv(t1, t2), z)
            for n in range(1, runs + 1)
        ),
    )
    return RunItNReport(tuple(rows), runs, MONTE_CARLO, player, mc=meta)


# ---------------------------------------------------------------------------
# report


@dataclass(frozen=True)
class RunItNReport:
    rows: tuple[SummaryStats, ...]
    n_max: int
    method: str
    player: str = HERO
    distribution: Optional[RunOutcomeDistribution] = None
    outs: Optional[OutsTies] = None
    mc: Optional[MonteCarloMeta] = None

    def __post_init__(self):
        if len(self.rows) != self.n_max:
            raise ValueError("one row per n is required")
        if len({r.mean for r in self.rows}) > 1:
            raise ValueError("the mean must not depend on n")

    def row(self, n: int) -> SummaryStats:
        return self.rows[n - 1]


def _auto_method(state: AllInState) -> str:
    if len(state.board) == 4:
        return CLOSED_FORM
    if len(state.board) == 3:
        return EXACT_ENUMERATION
    return SUIT_COMPOSITION if state.is_mirrored_pair() else MONTE_CARLO


def run_it_n_report(state: AllInState, player: str = HERO, n_max: int = 4, method: str = "auto",
                    samples: int = 10**6, seed: Optional[int] = None,
                    workers: int = 1) -> RunItNReport:
    """Mean and variance of the player's pot share for n = 1..n_max runs.

    ``method="auto"`` uses the closed form with one card to come, exact
    enumeration with two, the suit-composition method for mirrored pocket
    pairs, and Monte Carlo otherwise.
    """
    _player(player)
    limit = _check_runs(state, n_max)
    if method == "auto":
        method = _auto_method(state)
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}")

    if method == MONTE_CARLO:
        return five_card_monte_carlo(state, player, n_max, samples, seed, workers=workers)
    if method == CLOSED_FORM:
        if len(state.board) != 4:
            raise ValueError("the closed form needs exactly one card to come")
        outs = classify_river_outcomes(state, player)
        rows = tuple(one_card_stats(outs, n, limit) for n in range(1, n_max + 1))
        return RunItNReport(rows, n_max, method, player, outs=outs)
    if method == EXACT_ENUMERATION:
        if len(state.board) == 4:
            dist = one_card_joint(state, player)
        elif len(state.board) == 3:
            dist = two_card_joint(state, player)
        else:
            raise ValueError("exact enumeration of two five-card runs is not supported")
    else:
        dist = mirrored_pair_joint(state, player)
    rows = tuple(dist.stats(n) for n in range(1, n_max + 1))
    return RunItNReport(rows, n_max, method, player, distribution=dist)
