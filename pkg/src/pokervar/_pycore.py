"""Vectorised numpy kernels; fallback when the compiled ``_core`` is absent.

Every function here has a twin with the same signature and results in
``_core.pyx``.
"""

from __future__ import annotations

import numpy as np

from . import _tables as T

_POW2 = (1 << np.arange(13, dtype=np.int64))


def _rank_masks(ranks: np.ndarray, select: np.ndarray | None = None) -> np.ndarray:
    bits = np.left_shift(1, ranks)
    if select is not None:
        bits = np.where(select, bits, 0)
    return np.bitwise_or.reduce(bits, axis=1)


def eval7(cards) -> np.ndarray:
    """Showdown values for each row of 5 to 7 card codes."""
    c = np.asarray(cards, dtype=np.int64)
    ranks, suits = c >> 2, c & 3
    counts = (ranks[:, :, None] == np.arange(13)).sum(axis=1)
    present = ((counts > 0) * _POW2).sum(axis=1)
    m2 = ((counts == 2) * _POW2).sum(axis=1)
    m3 = ((counts == 3) * _POW2).sum(axis=1)
    m4 = ((counts == 4) * _POW2).sum(axis=1)

    flush_mask = np.zeros(len(c), dtype=np.int64)
    for s in range(4):
        in_suit = suits == s
        fm = _rank_masks(ranks, in_suit)
        flush_mask = np.where(in_suit.sum(axis=1) >= 5, fm, flush_mask)
    has_flush = flush_mask > 0
    sf_high = T.STRAIGHT_HIGH[flush_mask]

    hb = T.HIGH_BIT
    q = hb[m4]
    quads = T.QUADS << 20 | q.clip(0) << 16 | hb[present & ~np.left_shift(1, q.clip(0))] << 12

    t = hb[m3]
    tbit = np.left_shift(1, t.clip(0))
    rest = (m3 & ~tbit) | m2
    full = T.FULL_HOUSE << 20 | t.clip(0) << 16 | hb[rest].clip(0) << 12

    flush = T.FLUSH << 20 | T.TOP5[flush_mask]
    st_high = T.STRAIGHT_HIGH[present]
    straight = T.STRAIGHT << 20 | st_high.clip(0) << 16
    trips = T.TRIPS << 20 | t.clip(0) << 16 | T.TOP2[present & ~tbit] << 8

    p1 = hb[m2]
    p1bit = np.left_shift(1, p1.clip(0))
    p2 = hb[m2 & ~p1bit]
    p2bit = np.left_shift(1, p2.clip(0))
    two_pair = (
        T.TWO_PAIR << 20
        | p1.clip(0) << 16
        | p2.clip(0) << 12
        | hb[present & ~(p1bit | p2bit)].clip(0) << 8
    )
    pair = T.PAIR << 20 | p1.clip(0) << 16 | T.TOP3[present & ~p1bit] << 4
    high = T.TOP5[present]

    value = np.select(
        [
            has_flush & (sf_high >= 0),
            m4 > 0,
            (m3 > 0) & (rest > 0),
            has_flush,
            st_high >= 0,
            m3 > 0,
            p2 >= 0,
            m2 > 0,
        ],
        [
            T.STRAIGHT_FLUSH << 20 | sf_high.clip(0) << 16,
            quads,
            full,
            flush,
            straight,
            trips,
            two_pair,
            pair,
        ],
        high,
    )
    return value.astype(np.int32)


def category5(cards, wild: bool) -> np.ndarray:
    """Video poker category codes (``HandCategory`` values) per five-card row."""
    c = np.asarray(cards, dtype=np.int64)
    ranks, suits = c >> 2, c & 3
    natural = ranks != 0 if wild else np.ones_like(ranks, dtype=bool)
    n_wild = 5 - natural.sum(axis=1)
    counts = ((ranks[:, :, None] == np.arange(13)) & natural[:, :, None]).sum(axis=1)
    top = counts.max(axis=1)
    mask = ((counts > 0) * _POW2).sum(axis=1)
    n_pairs = (counts == 2).sum(axis=1)
    distinct = top == 1
    # all natural cards share a suit (vacuous when there are none)
    lead = np.where(natural, suits, -1).max(axis=1)
    suited = (~natural | (suits == lead[:, None])).all(axis=1)
    royal_ranks = (mask & T.ROYAL_BITS) == mask

    if wild:
        straight = distinct & (T.FITS_STRAIGHT[mask] == 1)
        conds = [
            n_wild == 4,
            suited & distinct & royal_ranks & (n_wild == 0),
            suited & distinct & royal_ranks,
            top + n_wild >= 5,
            suited & straight,
            top + n_wild >= 4,
            ((n_wild == 0) & (top == 3) & (n_pairs == 1)) | ((n_wild == 1) & (n_pairs == 2)),
            suited,
            straight,
            top + n_wild >= 3,
        ]
        cats = [1, 0, 2, 3, 4, 5, 6, 7, 8, 9]
    else:
        straight = distinct & (T.STRAIGHT_HIGH[mask] >= 0)
        pair_rank = T.HIGH_BIT[((counts == 2) * _POW2).sum(axis=1)]
        conds = [
            suited & straight & royal_ranks,
            suited & straight,
            top == 4,
            (top == 3) & (n_pairs == 1),
            suited,
            straight,
            top == 3,
            n_pairs == 2,
            (n_pairs == 1) & (pair_rank >= 9),
        ]
        cats = [0, 4, 5, 6, 7, 8, 9, 10, 11]
    return np.select(conds, cats, 12).astype(np.int8)


def canonical_keys(cards, wild: bool) -> np.ndarray:
    """Lexicographically least base-52 packing over all suit relabellings.

    With ``wild`` the deuces are relabelled ``2c, 2d, ...`` in order, so their
    suits drop out of the key.
    """
    c = np.asarray(cards, dtype=np.int64)
    ranks, suits = c >> 2, c & 3
    is_deuce = (ranks == 0) if wild else np.zeros_like(ranks, dtype=bool)
    place = np.arange(5, dtype=np.int64)
    weights = 52 ** (4 - place)
    best = None
    for perm in T.SUIT_PERMS:
        mapped = ranks * 4 + perm[suits]
        mapped = np.where(is_deuce, -1, mapped)
        mapped.sort(axis=1)
        mapped = np.where(mapped < 0, place, mapped)
        key = mapped @ weights
        best = key if best is None else np.minimum(best, key)
    return best


def decode_keys(keys) -> np.ndarray:
    k = np.asarray(keys, dtype=np.int64)
    return np.stack([(k // 52 ** (4 - i)) % 52 for i in range(5)], axis=1)


def _subset_index(hands: np.ndarray) -> np.ndarray:
    """Flat subset-table index of every hold mask of every (sorted) hand."""
    idx = np.zeros((len(hands), 32), dtype=np.int64)
    for m in range(32):
        k = int(T.MASK_SIZE[m])
        col = np.full(len(hands), T.SUBSET_OFFSETS[k], dtype=np.int64)
        for j in range(k):
            col += T.BINOM[hands[:, T.MASK_POSITIONS[m, j]], j + 1]
        idx[:, m] = col
    return idx


def subset_sums(hands, pays) -> tuple[np.ndarray, np.ndarray]:
    """Sum of ``pay`` and ``pay**2`` over the 5-card hands containing each subset.

    ``hands`` must list every 5-card hand once, sorted within rows.  The result
    is indexed by subset size offset plus colex rank.
    """
    h = np.asarray(hands, dtype=np.int64)
    p = np.asarray(pays, dtype=np.int64)
    p2 = p * p
    idx = _subset_index(h)
    t1 = np.zeros(T.N_SUBSETS, dtype=np.int64)
    t2 = np.zeros(T.N_SUBSETS, dtype=np.int64)
    for m in range(32):
        np.add.at(t1, idx[:, m], p)
        np.add.at(t2, idx[:, m], p2)
    return t1, t2


def hold_sums(hands, t1, t2) -> tuple[np.ndarray, np.ndarray]:
    """Payout sums over all draws for each of the 32 holds of each hand.

    Entry ``[i, m]`` sums over final hands that keep the cards selected by
    mask ``m`` and contain no discarded card (inclusion-exclusion over the
    discards).
    """
    h = np.asarray(hands, dtype=np.int64)
    idx = _subset_index(h)
    s1 = np.asarray(t1)[idx]
    s2 = np.asarray(t2)[idx]
    for b in range(5):
        bit = 1 << b
        lo = [m for m in range(32) if not m & bit]
        hi = [m | bit for m in lo]
        s1[:, lo] -= s1[:, hi]
        s2[:, lo] -= s2[:, hi]
    return s1, s2


def showdown_codes(hero, villain, boards) -> np.ndarray:
    """+1 hero wins, 0 tie, -1 villain wins, for each row of board cards."""
    b = np.asarray(boards, dtype=np.int64)
    n = len(b)
    hv = eval7(np.hstack([np.broadcast_to(np.asarray(hero, dtype=np.int64), (n, 2)), b]))
    vv = eval7(np.hstack([np.broadcast_to(np.asarray(villain, dtype=np.int64), (n, 2)), b]))
    return np.sign(hv.astype(np.int64) - vv).astype(np.int8)
