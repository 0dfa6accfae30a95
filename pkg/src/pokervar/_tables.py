"""Lookup tables over 13-bit rank masks, shared by every evaluator backend.

Hand values pack a category in bits 20+ and up to five tiebreak ranks as
nibbles in bits 16, 12, 8, 4, 0.
"""

from itertools import permutations
from math import comb

import numpy as np

NMASK = 1 << 13

# showdown categories
HIGH_CARD, PAIR, TWO_PAIR, TRIPS, STRAIGHT, FLUSH, FULL_HOUSE, QUADS, STRAIGHT_FLUSH = range(9)
CAT_SHIFT = 20

WHEEL = (1 << 12) | 0b1111
ROYAL_BITS = 0b11111 << 8


def _straight_high(mask: int) -> int:
    for hi in range(12, 3, -1):
        window = 0b11111 << (hi - 4)
        if mask & window == window:
            return hi
    if mask & WHEEL == WHEEL:
        return 3
    return -1


def _top(mask: int, k: int) -> int:
    packed, taken = 0, 0
    for r in range(12, -1, -1):
        if taken == k:
            break
        if mask >> r & 1:
            packed = (packed << 4) | r
            taken += 1
    return packed << 4 * (k - taken)


def _fits_straight(mask: int) -> bool:
    if mask & WHEEL == mask:
        return True
    return any(mask & (0b11111 << lo) == mask for lo in range(9))


STRAIGHT_HIGH = np.array([_straight_high(m) for m in range(NMASK)], dtype=np.int32)
HIGH_BIT = np.array([m.bit_length() - 1 for m in range(NMASK)], dtype=np.int32)
POPCOUNT = np.array([bin(m).count("1") for m in range(NMASK)], dtype=np.int32)
TOP2 = np.array([_top(m, 2) for m in range(NMASK)], dtype=np.int32)
TOP3 = np.array([_top(m, 3) for m in range(NMASK)], dtype=np.int32)
TOP5 = np.array([_top(m, 5) for m in range(NMASK)], dtype=np.int32)
# non-deuce rank masks that wild cards can complete to a straight
FITS_STRAIGHT = np.array([_fits_straight(m) for m in range(NMASK)], dtype=np.int8)

BINOM = np.array([[comb(n, k) for k in range(6)] for n in range(53)], dtype=np.int64)
# start of each subset size inside the flat subset-sum tables
SUBSET_OFFSETS = np.cumsum([0] + [comb(52, k) for k in range(6)]).astype(np.int64)
N_SUBSETS = int(SUBSET_OFFSETS[-1])

SUIT_PERMS = np.array(list(permutations(range(4))), dtype=np.int64)

# positions of held cards for each of the 32 hold masks
MASK_SIZE = np.array([bin(m).count("1") for m in range(32)], dtype=np.int64)
MASK_POSITIONS = np.full((32, 5), -1, dtype=np.int64)
for _m in range(32):
    _pos = [i for i in range(5) if _m >> i & 1]
    MASK_POSITIONS[_m, : len(_pos)] = _pos
