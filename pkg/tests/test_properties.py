"""Randomised invariants."""

from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from pokervar.cards import Card
from pokervar.evaluate import classify, showdown_value
from pokervar.exact import format_decimal, format_exact, parse_exact, sample_mean_stats
from pokervar.holdem import AllInState, OutsTies, one_card_stats, two_card_joint
from pokervar.videopoker import DEUCES_WILD, STANDARD, canonicalize

hands = st.lists(st.integers(0, 51), min_size=5, max_size=5, unique=True)
sevens = st.lists(st.integers(0, 51), min_size=7, max_size=7, unique=True)
perms = st.permutations(range(4))
fractions = st.fractions(max_denominator=10**6)


def relabel(codes, perm):
    return [c - c % 4 + perm[c % 4] for c in codes]


@given(sevens, perms)
def test_showdown_value_ignores_suit_names(codes, perm):
    assert showdown_value(codes) == showdown_value(relabel(codes, perm))


@given(sevens, st.randoms(use_true_random=False))
def test_showdown_value_ignores_card_order(codes, rnd):
    shuffled = codes[:]
    rnd.shuffle(shuffled)
    assert showdown_value(codes) == showdown_value(shuffled)


@given(hands, perms)
def test_categories_ignore_suit_names(codes, perm):
    for wild in (False, True):
        assert classify(codes, wild) == classify(relabel(codes, perm), wild)


@settings(max_examples=60, deadline=None)
@given(hands, perms)
def test_canonical_class_is_suit_invariant(codes, perm):
    for variant in (STANDARD, DEUCES_WILD):
        assert canonicalize(codes, variant) == canonicalize(relabel(codes, perm), variant)


@given(fractions)
def test_exact_text_round_trip(x):
    assert parse_exact(format_exact(x)) == x


@given(fractions)
def test_decimal_is_within_half_an_ulp(x):
    assert abs(Fraction(format_decimal(x)) - x) <= Fraction(1, 2 * 10**6)


@given(st.integers(0, 20), st.integers(0, 20), st.integers(2, 20), st.data())
def test_one_card_variance_shrinks_with_runs(o, t, l, data):
    outs = OutsTies(o, t, l)
    n = data.draw(st.integers(1, outs.unseen - 1))
    a, b = one_card_stats(outs, n), one_card_stats(outs, n + 1)
    assert a.mean == b.mean
    assert b.variance <= a.variance


@given(fractions.filter(lambda f: f >= 0), st.integers(1, 50))
def test_independent_runs_scale_by_one_over_n(var, n):
    assert sample_mean_stats(Fraction(1, 2), var, Fraction(0), n).variance == var / n


@settings(max_examples=10, deadline=None)
@given(st.lists(st.integers(0, 51), min_size=7, max_size=7, unique=True))
def test_two_card_joint_is_a_symmetric_law(codes):
    cards = [Card(c) for c in codes]
    state = AllInState(cards[:2], cards[2:4], cards[4:])
    d = two_card_joint(state)
    for a in range(3):
        assert sum(d.joint[a]) == d.marginal[a]
        assert sum(row[a] for row in d.joint) == d.marginal[a]
    assert d.var_r1 >= 0
