"""IntervalSet normalization, membership semantics, intersection queries."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from tsl.symbolic.interval import (
    Interval,
    IntervalSet,
    first_reciprocal_below,
    harmonic_index,
    interval_set,
    point_set,
    reciprocal_tail,
    unit_segment,
)

F = Fraction


def test_harmonic_index():
    assert harmonic_index(F(1, 5)) == 5
    assert harmonic_index(F(1)) == 1
    assert harmonic_index(F(2, 5)) is None
    assert harmonic_index(F(0)) is None


def test_first_reciprocal_below():
    assert first_reciprocal_below(F(1, 2)) == 3  # 1/3 < 1/2
    assert first_reciprocal_below(F(2, 5)) == 3
    assert first_reciprocal_below(F(1)) == 2
    assert first_reciprocal_below(F(3)) == 1


def test_merge_and_flags():
    s = IntervalSet(intervals=[(0, F(1, 2), True, False), (F(1, 2), 1, True, True)])
    assert s.components == (Interval(F(0), F(1), True, True),)
    gap = IntervalSet(intervals=[(0, F(1, 2), True, False), (F(1, 2), 1, False, True)])
    assert len(gap.components) == 2
    assert not gap.member(F(1, 2))


def test_point_absorption():
    s = IntervalSet(intervals=[(0, F(1, 2), True, False)], plus=[F(1, 2)])
    assert s.components == (Interval(F(0), F(1, 2), True, True),)
    assert s.plus_points == ()
    s2 = IntervalSet(intervals=[(0, F(1, 4), True, True)], plus=[F(1, 2)])
    assert s2.plus_points == (F(1, 2),)


def test_point_bridges_two_components():
    s = IntervalSet(
        intervals=[(0, F(1, 2), True, False), (F(1, 2), 1, False, True)],
        plus=[F(1, 2)],
    )
    assert s.components == (Interval(F(0), F(1), True, True),)


def test_puncture_splits():
    s = IntervalSet(intervals=[(0, 1, True, True)], minus=[F(1, 2)])
    assert len(s.components) == 2
    assert not s.member(F(1, 2))
    assert s.member(F(1, 4)) and s.member(F(3, 4))


def test_puncture_at_endpoint_flips_flag():
    s = IntervalSet(intervals=[(0, F(1, 2), True, True)], minus=[F(1, 2)])
    assert s.components == (Interval(F(0), F(1, 2), True, False),)


def test_minus_tail_normalization():
    s = IntervalSet(intervals=[(0, F(1, 2), True, False)], harmonic=("-", 1))
    # 1/2 is the open endpoint; the surviving tail starts where 1/n < 1/2
    assert s.harmonic == ("-", 3)
    assert not s.member(F(1, 3))
    assert not s.member(F(1, 7))
    assert s.member(F(2, 7))
    assert s.member(F(0))


def test_minus_tail_away_from_zero_dissolves():
    s = IntervalSet(intervals=[(F(1, 4), F(1, 2), True, True)], harmonic=("-", 1))
    assert s.harmonic is None
    assert not s.member(F(1, 3))  # punctured structurally
    assert not s.member(F(1, 2))  # endpoint flag flipped
    assert s.member(F(2, 5))


def test_plus_tail_normalization():
    s = reciprocal_tail(1)
    assert s.components == () and s.harmonic == ("+", 1)
    assert s.member(F(1, 17)) and s.member(F(1)) and not s.member(F(2, 5))
    covered = IntervalSet(intervals=[(0, F(1, 10), True, True)], harmonic=("+", 1))
    # the infinite part is swallowed by the component; big points become isolated
    assert covered.harmonic is None
    assert covered.member(F(1, 3))
    assert F(1, 2) in covered.plus_points
    assert not covered.member(F(2, 5))


def test_plus_tail_absorbs_adjacent_points():
    s = IntervalSet(plus=[F(1, 2), F(1, 3)], harmonic=("+", 4))
    assert s.harmonic == ("+", 2)
    assert s.plus_points == ()


def test_plus_tail_with_holes():
    s = IntervalSet(minus=[F(1, 5)], harmonic=("+", 3))
    assert not s.member(F(1, 5))
    assert s.member(F(1, 4)) and s.member(F(1, 3)) and s.member(F(1, 6))
    assert s.harmonic == ("+", 6)
    assert set(s.plus_points) == {F(1, 3), F(1, 4)}


def test_membership_examples():
    s = interval_set(F(1, 4), F(1, 2), True, False)
    assert s.member(F(1, 4)) and s.member(F(1, 3)) and not s.member(F(1, 2))
    assert not point_set(F(1, 2)).member(F(1, 4))
    assert unit_segment().member(F(1))


def test_bounds():
    assert reciprocal_tail(3).infimum() == 0
    assert reciprocal_tail(3).supremum() == F(1, 3)
    s = interval_set(F(1, 4), F(1, 2), False, False)
    assert s.infimum() == F(1, 4) and s.supremum() == F(1, 2)
    with pytest.raises(ValueError):
        IntervalSet().infimum()


def test_meets_interval():
    s = interval_set(F(1, 4), F(1, 2), False, False)
    assert s.meets_interval(F(1, 2), 1, True, True) is False  # touches open end
    assert s.meets_interval(F(1, 3), 1)
    assert not s.meets_interval(0, F(1, 4))
    tail = reciprocal_tail(2)
    assert tail.meets_interval(F(1, 3), F(1, 2))            # contains 1/2? closed
    assert tail.meets_interval(F(2, 5), F(1, 2), True, True)
    assert not tail.meets_interval(F(2, 5), F(1, 2), True, False)
    assert tail.meets_interval(0, F(1, 100), False, False)  # deep tail points
    punct = IntervalSet(intervals=[(0, F(1, 2), True, False)], harmonic=("-", 1))
    assert punct.meets_interval(F(1, 3), F(1, 3))is False  # the puncture itself
    assert punct.meets_interval(F(1, 3), F(2, 5))


def test_meets_punctured_zero():
    tail = reciprocal_tail(1)
    assert not tail.meets_punctured_zero(F(1, 2))  # only reciprocal points there
    sliver = interval_set(0, F(1, 8), False, False)
    assert sliver.meets_punctured_zero(F(1, 100))
    zero = point_set(0)
    assert zero.meets_punctured_zero(F(1, 64))
    assert not point_set(F(1, 4)).meets_punctured_zero(F(1, 8))


# -- hypothesis strategies ---------------------------------------------------

fractions01 = st.fractions(min_value=0, max_value=1, max_denominator=12)


@st.composite
def raw_parts(draw):
    intervals = draw(st.lists(
        st.tuples(fractions01, fractions01, st.booleans(), st.booleans()),
        max_size=4,
    ))
    intervals = [(min(a, b), max(a, b), lc, hc) for a, b, lc, hc in intervals]
    plus = draw(st.lists(fractions01, max_size=3))
    minus = draw(st.lists(fractions01, max_size=3))
    harmonic = draw(st.one_of(
        st.none(),
        st.tuples(st.sampled_from(["+", "-"]), st.integers(1, 9)),
    ))
    return intervals, plus, minus, harmonic


def raw_member(x, intervals, plus, minus, harmonic):
    """Reference semantics: (intervals + plus + tail) minus (minus + tail)."""
    n = harmonic_index(x)
    if x in minus:
        return False
    if harmonic and harmonic[0] == "-" and n is not None and n >= harmonic[1]:
        return False
    if harmonic and harmonic[0] == "+" and n is not None and n >= harmonic[1]:
        return True
    if x in plus:
        return True
    for lo, hi, lc, hc in intervals:
        if Interval(lo, hi, lc, hc).contains(x) if lo < hi else (
            lo == hi == x and lc and hc
        ):
            return True
    return False


PROBES = sorted(
    set(F(p, q) for q in range(1, 14) for p in range(0, q + 1))
    | set(F(1, n) for n in range(1, 30))
)


@settings(max_examples=200)
@given(raw_parts())
def test_normalization_preserves_membership(parts):
    intervals, plus, minus, harmonic = parts
    s = IntervalSet(intervals=intervals, plus=plus, minus=minus, harmonic=harmonic)
    for x in PROBES:
        assert s.member(x) == raw_member(x, intervals, set(plus), set(minus), harmonic), (
            x, parts, s)


@settings(max_examples=200)
@given(raw_parts())
def test_normalization_idempotent(parts):
    intervals, plus, minus, harmonic = parts
    s = IntervalSet(intervals=intervals, plus=plus, minus=minus, harmonic=harmonic)
    again = IntervalSet(
        intervals=s.components, plus=s.plus_points, harmonic=s.harmonic
    )
    assert again == s


@settings(max_examples=200)
@given(raw_parts(), st.randoms())
def test_normalization_order_independent(parts, rng):
    intervals, plus, minus, harmonic = parts
    a = IntervalSet(intervals=intervals, plus=plus, minus=minus, harmonic=harmonic)
    shuffled = list(intervals)
    rng.shuffle(shuffled)
    b = IntervalSet(
        intervals=shuffled,
        plus=list(reversed(plus)),
        minus=list(reversed(minus)),
        harmonic=harmonic,
    )
    assert a == b


def _nonharmonic_in(lo: F, hi: F) -> F:
    """A non-reciprocal rational strictly inside (lo, hi)."""
    assert lo < hi
    cands = [lo + (hi - lo) * F(k, 7) for k in (2, 3, 4, 5)]
    for c in cands:
        if harmonic_index(c) is None:
            return c
    # averages of consecutive reciprocals are never reciprocals
    n = first_reciprocal_below(hi)
    return (F(1, n) + F(1, n + 1)) / 2


@settings(max_examples=200)
@given(raw_parts(), fractions01, fractions01, st.booleans(), st.booleans())
def test_meets_interval_against_witness_search(parts, a, b, lc, hc):
    intervals, plus, minus, harmonic = parts
    s = IntervalSet(intervals=intervals, plus=plus, minus=minus, harmonic=harmonic)
    lo, hi = min(a, b), max(a, b)
    got = s.meets_interval(lo, hi, lc, hc)
    query = Interval(lo, hi, lc, hc) if (lo < hi or (lc and hc)) else None
    witnesses = []
    if query is not None:
        witnesses.extend([lo, hi, (lo + hi) / 2])
        if lo < hi:
            witnesses.append(_nonharmonic_in(lo, hi))
        for c in s.components:
            olo, ohi = max(c.lo, lo), min(c.hi, hi)
            if olo < ohi:
                witnesses.extend([olo, ohi, _nonharmonic_in(olo, ohi)])
            elif olo == ohi:
                witnesses.append(olo)
        witnesses.extend(p for p in s.plus_points)
        if s.harmonic and s.harmonic[0] == "+" and hi > 0:
            k = s.harmonic[1]
            h = harmonic_index(hi)
            if hc and h is not None and h >= k:
                witnesses.append(hi)
            witnesses.append(F(1, max(k, first_reciprocal_below(hi))))
    expected = any(
        query is not None and query.contains(w) and s.member(w) for w in witnesses
    )
    assert got == expected, (parts, lo, hi, lc, hc, witnesses)
