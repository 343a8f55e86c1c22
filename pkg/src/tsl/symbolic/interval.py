"""Exact-rational subsets of the unit segment.

An IntervalSet denotes
    (union of intervals  +  isolated points  +  optional reciprocal tail)
    minus (puncture points  +  optional reciprocal tail),
where the reciprocal tail with index k is {1/n : n >= k}.  Everything is a
Fraction; no floats anywhere.

Normalization produces one canonical form per set: intervals are merged and
positive-length, puncture points are realized structurally (endpoint flags or
component splits), a surviving minus tail punctures only the component at 0,
a surviving plus tail lies strictly below every component, and isolated
points sit strictly outside all component closures.  normalize is idempotent
and input-order independent (property-tested).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def frac(v) -> Fraction:
    return v if isinstance(v, Fraction) else Fraction(v)


def harmonic_index(x: Fraction) -> int | None:
    """n when x = 1/n for a positive integer n, else None."""
    if x > 0 and x.numerator == 1:
        return x.denominator
    return None


def first_reciprocal_below(bound: Fraction) -> int:
    """Smallest n >= 1 with 1/n strictly below bound (bound > 0)."""
    if bound <= 0:
        raise ValueError("bound must be positive")
    inv = ONE / bound
    n = int(inv) + 1
    while Fraction(1, n) >= bound:  # guard against off-by-one on exact hits
        n += 1
    while n > 1 and Fraction(1, n - 1) < bound:
        n -= 1
    return n


@dataclass(frozen=True, order=True)
class Interval:
    lo: Fraction
    hi: Fraction
    lo_closed: bool
    hi_closed: bool

    def contains(self, x: Fraction) -> bool:
        if x < self.lo or x > self.hi:
            return False
        if x == self.lo and not self.lo_closed:
            return False
        if x == self.hi and not self.hi_closed:
            return False
        return True


def _interval(lo, hi, lo_closed, hi_closed) -> Interval | None:
    lo, hi = frac(lo), frac(hi)
    if lo > hi or (lo == hi and not (lo_closed and hi_closed)):
        return None
    return Interval(lo, hi, bool(lo_closed), bool(hi_closed))


class IntervalSet:
    """Canonical exact subset of [0, 1]."""

    __slots__ = ("components", "plus_points", "harmonic")

    def __init__(self, intervals=(), plus=(), minus=(), harmonic=None):
        comps, pts = [], []
        for item in intervals:
            iv = item if isinstance(item, Interval) else _interval(*item)
            if iv is None:
                continue
            if not (ZERO <= iv.lo and iv.hi <= ONE):
                raise ValueError("intervals must stay inside the unit segment")
            if iv.lo == iv.hi:
                pts.append(iv.lo)
            else:
                comps.append(iv)
        plus_points = sorted(set(frac(p) for p in plus) | set(pts))
        minus_points = sorted(set(frac(p) for p in minus))
        for p in plus_points + minus_points:
            if not ZERO <= p <= ONE:
                raise ValueError("points must stay inside the unit segment")
        if harmonic is not None:
            sign, k = harmonic
            if sign not in ("+", "-") or int(k) < 1:
                raise ValueError("harmonic tail is ('+'|'-', k>=1)")
            harmonic = (sign, int(k))

        comps = _merge(comps)
        minus_all = set(minus_points)

        # realize minus punctures structurally
        for m in minus_points:
            comps = _puncture(comps, m)

        # minus tail: keep only the infinite part inside the component at 0;
        # the finitely many remaining tail points puncture individually
        minus_tail = None
        dropped_tail_from = None
        if harmonic is not None and harmonic[0] == "-":
            k = harmonic[1]
            dropped_tail_from = k
            piece0 = next((c for c in comps if c.lo == ZERO), None)
            if piece0 is not None:
                tail_k = max(k, first_reciprocal_below(piece0.hi))
                minus_tail = ("-", tail_k)
                stop = tail_k
            else:
                min_lo = min((c.lo for c in comps), default=None)
                stop = k if min_lo is None else max(
                    k, first_reciprocal_below(min_lo)
                )
            for n in range(k, stop):
                comps = _puncture(comps, Fraction(1, n))
                minus_all.add(Fraction(1, n))

        def _removed(p: Fraction) -> bool:
            if p in minus_all:
                return True
            n = harmonic_index(p)
            return (
                n is not None
                and dropped_tail_from is not None
                and n >= dropped_tail_from
            )

        # plus points: drop removed/covered ones, absorb endpoint touches
        plus_keep = []
        for p in plus_points:
            if _removed(p):
                continue
            comps, absorbed = _absorb_point(comps, p)
            if not absorbed:
                plus_keep.append(p)

        # plus tail
        plus_tail = None
        if harmonic is not None and harmonic[0] == "+":
            k = harmonic[1]
            holes = [n for n in (harmonic_index(m) for m in minus_points)
                     if n is not None and n >= k]
            k_eff = max([k] + [n + 1 for n in holes])
            # tail points above k_eff but at/above the hole range: add the
            # skipped ones individually
            singles = [Fraction(1, n) for n in range(k, k_eff)
                       if Fraction(1, n) not in set(minus_points)]
            piece0 = next((c for c in comps if c.lo == ZERO), None)
            if piece0 is not None:
                n_cov = first_reciprocal_below(piece0.hi)
                singles.extend(Fraction(1, n) for n in range(k_eff, n_cov))
                plus_tail = None  # everything from n_cov on is covered
            else:
                min_lo = min((c.lo for c in comps), default=None)
                if min_lo is None or min_lo == ZERO:
                    n_start = k_eff
                else:
                    n_start = max(k_eff, first_reciprocal_below(min_lo))
                singles.extend(Fraction(1, n) for n in range(k_eff, n_start))
                plus_tail = ("+", n_start)
            for p in singles:
                comps, absorbed = _absorb_point(comps, p)
                if not absorbed and p not in plus_keep:
                    plus_keep.append(p)

        # extend a plus tail downward through consecutive isolated points
        if plus_tail is not None:
            kset = set(plus_keep)
            kk = plus_tail[1]
            while kk > 1 and Fraction(1, kk - 1) in kset:
                kk -= 1
                kset.remove(Fraction(1, kk))
            plus_keep = sorted(kset)
            plus_tail = ("+", kk)

        comps = _merge(comps)
        # re-check plus points against the merged components
        final_pts = []
        for p in sorted(set(plus_keep)):
            comps, absorbed = _absorb_point(comps, p)
            if not absorbed:
                final_pts.append(p)
        comps = _merge(comps)

        self.components = tuple(comps)
        self.plus_points = tuple(final_pts)
        self.harmonic = plus_tail or minus_tail

    # -- queries -------------------------------------------------------------

    def member(self, x) -> bool:
        x = frac(x)
        n = harmonic_index(x)
        if self.harmonic is not None:
            sign, k = self.harmonic
            if n is not None and n >= k:
                if sign == "+":
                    return True
                return False  # punctured out of the 0-component
        for c in self.components:
            if c.contains(x):
                return True
        return x in self.plus_points

    def is_empty(self) -> bool:
        return not self.components and not self.plus_points and (
            self.harmonic is None or self.harmonic[0] == "-"
        )

    def infimum(self) -> Fraction:
        if self.is_empty():
            raise ValueError("empty set has no bounds")
        vals = [c.lo for c in self.components[:1]] + list(self.plus_points[:1])
        if self.harmonic is not None and self.harmonic[0] == "+":
            vals.append(ZERO)
        return min(vals)

    def supremum(self) -> Fraction:
        if self.is_empty():
            raise ValueError("empty set has no bounds")
        vals = [c.hi for c in self.components[-1:]] + list(self.plus_points[-1:])
        if self.harmonic is not None and self.harmonic[0] == "+":
            vals.append(Fraction(1, self.harmonic[1]))
        return max(vals)

    def meets_interval(self, lo, hi, lo_closed=True, hi_closed=True) -> bool:
        """Does the set intersect the given subinterval of [0, 1]?"""
        lo, hi = frac(lo), frac(hi)
        query = _interval(lo, hi, lo_closed, hi_closed)
        if query is None:
            return False
        for c in self.components:
            olo = max(c.lo, query.lo)
            ohi = min(c.hi, query.hi)
            if olo > ohi:
                continue
            if olo < ohi:
                return True  # positive-length overlap survives punctures
            if c.contains(olo) and query.contains(olo) and self.member(olo):
                return True
        for p in self.plus_points:
            if query.contains(p):
                return True
        if self.harmonic is not None and self.harmonic[0] == "+":
            k = self.harmonic[1]
            if query.hi <= ZERO:
                return False
            # the largest tail point admitted by the top of the query; tail
            # points only shrink, so if it misses the bottom all of them do
            top = harmonic_index(query.hi)
            if query.hi_closed and top is not None and top >= k:
                best = query.hi
            else:
                best = Fraction(1, max(k, first_reciprocal_below(query.hi)))
            return query.contains(best)
        return False

    def meets_punctured_zero(self, eps) -> bool:
        """Does the set meet [0, eps) minus all reciprocal points?"""
        eps = frac(eps)
        if eps <= 0:
            return False
        if self.member(ZERO):
            return True
        for c in self.components:
            if c.lo < eps:
                return True  # a positive-length sliver holds non-reciprocals
        for p in self.plus_points:
            if p < eps and harmonic_index(p) is None:
                return True
        return False

    # -- structural equality ---------------------------------------------------

    def parts(self):
        return (self.components, self.plus_points, self.harmonic)

    def __eq__(self, other):
        return isinstance(other, IntervalSet) and self.parts() == other.parts()

    def __hash__(self):
        return hash(self.parts())

    def __repr__(self):
        bits = []
        for c in self.components:
            bits.append(
                f"{'[' if c.lo_closed else '('}{c.lo},{c.hi}"
                f"{']' if c.hi_closed else ')'}"
            )
        bits.extend(f"{{{p}}}" for p in self.plus_points)
        if self.harmonic:
            sign, k = self.harmonic
            bits.append(f"{sign}tail({k})")
        return "IntervalSet(" + (" | ".join(bits) or "empty") + ")"


def _merge(comps):
    comps = sorted(comps, key=lambda c: (c.lo, not c.lo_closed))
    out = []
    for c in comps:
        if out:
            prev = out[-1]
            touches = c.lo < prev.hi or (
                c.lo == prev.hi and (c.lo_closed or prev.hi_closed)
            )
            if touches:
                if c.hi > prev.hi or (c.hi == prev.hi and c.hi_closed):
                    hi, hic = c.hi, c.hi_closed
                else:
                    hi, hic = prev.hi, prev.hi_closed
                lo_closed = prev.lo_closed or (c.lo == prev.lo and c.lo_closed)
                out[-1] = Interval(prev.lo, hi, lo_closed, hic)
                continue
        out.append(c)
    return out


def _puncture(comps, m: Fraction):
    out = []
    for c in comps:
        if not c.contains(m):
            out.append(c)
        elif m == c.lo:
            piece = _interval(c.lo, c.hi, False, c.hi_closed)
            if piece:
                out.append(piece)
        elif m == c.hi:
            piece = _interval(c.lo, c.hi, c.lo_closed, False)
            if piece:
                out.append(piece)
        else:
            left = _interval(c.lo, m, c.lo_closed, False)
            right = _interval(m, c.hi, False, c.hi_closed)
            out.extend(p for p in (left, right) if p)
    return out


def _absorb_point(comps, p: Fraction):
    """Drop p if covered; close a touching open endpoint; else report free."""
    for i, c in enumerate(comps):
        if c.contains(p):
            return comps, True
        if p == c.lo and not c.lo_closed:
            comps = comps[:i] + [Interval(c.lo, c.hi, True, c.hi_closed)] + comps[i + 1:]
            return _merge(comps), True
        if p == c.hi and not c.hi_closed:
            comps = comps[:i] + [Interval(c.lo, c.hi, c.lo_closed, True)] + comps[i + 1:]
            return _merge(comps), True
    return comps, False


# -- convenient constructors --------------------------------------------------


def interval_set(lo, hi, lo_closed=True, hi_closed=True) -> IntervalSet:
    return IntervalSet(intervals=[(lo, hi, lo_closed, hi_closed)])


def point_set(*points) -> IntervalSet:
    return IntervalSet(plus=points)


def reciprocal_tail(k: int = 1) -> IntervalSet:
    """{1/n : n >= k}."""
    return IntervalSet(harmonic=("+", k))


def empty_set() -> IntervalSet:
    return IntervalSet()


def unit_segment() -> IntervalSet:
    return interval_set(0, 1)
