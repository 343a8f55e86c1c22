"""Exact oracles for the punctured-origin segment space (registry id 71).

The space is the unit segment with its natural linear meet.  Points other
than 0 keep their Euclidean basic neighborhoods (x - eps, x + eps) cap I; the
basic neighborhoods of 0 are [0, eps) minus the whole reciprocal set
{1/n : n >= 1}.

Closure rules derived from that base (each is exercised against the
brute-force grid oracle kept in the test suite):

  * closure at x != 0 is Euclidean;
  * 0 lies in the closure iff 0 is in the set or some component starts at 0
    with positive length (a positive-length sliver contains non-reciprocal
    points arbitrarily close to 0, while isolated points and reciprocal
    tails are dodged by the punctured neighborhoods);
  * Int(cl(.)) of every basic neighborhood is Euclidean-regular, so the
    delta-closure is the Euclidean closure;
  * closures of basic neighborhoods of any point are plain closed intervals,
    so theta-adherence also reduces to Euclidean adherence.
"""

from __future__ import annotations

from .interval import ONE, ZERO, IntervalSet, frac


def euclid_closure(a: IntervalSet) -> IntervalSet:
    """Euclidean closure: close components, fill punctures, and add 0 when a
    reciprocal tail accumulates there."""
    intervals = [(c.lo, c.hi, True, True) for c in a.components]
    plus = list(a.plus_points)
    harmonic = None
    if a.harmonic is not None and a.harmonic[0] == "+":
        harmonic = a.harmonic
        plus.append(ZERO)
    return IntervalSet(intervals=intervals, plus=plus, harmonic=harmonic)


def s71_closure(a: IntervalSet) -> IntervalSet:
    """Closure in the punctured-origin topology.

    Components close fully (Euclidean behaviour away from 0, and a component
    starting at 0 puts non-reciprocal points in every punctured neighborhood
    of 0); bare reciprocal tails stay open at 0.
    """
    zero_in = a.member(ZERO) or any(c.lo == ZERO for c in a.components)
    intervals = [(c.lo, c.hi, True, True) for c in a.components]
    plus = list(a.plus_points)
    if zero_in:
        plus.append(ZERO)
    return IntervalSet(
        intervals=intervals,
        plus=plus,
        harmonic=a.harmonic if a.harmonic and a.harmonic[0] == "+" else None,
    )


def s71_delta_closure(a: IntervalSet) -> IntervalSet:
    """Delta-closure; equals the Euclidean closure in this space."""
    return euclid_closure(a)


def s71_theta_mem(x, a: IntervalSet) -> bool:
    """Theta-adherence, which reduces to Euclidean-closure membership."""
    return euclid_closure(a).member(frac(x))


def s71_interior(a: IntervalSet) -> IntervalSet:
    """Interior in the punctured-origin topology.

    Components open up except at the relative endpoints: 0 stays when the
    set contains a right sliver of 0 (the punctured neighborhoods of 0 avoid
    reciprocal punctures anyway), and 1 stays by one-sided neighborhoods.
    Isolated points and bare reciprocal tails have empty interior.
    """
    intervals = []
    for c in a.components:
        lo_closed = c.lo == ZERO and c.lo_closed
        hi_closed = c.hi == ONE and c.hi_closed
        intervals.append((c.lo, c.hi, lo_closed, hi_closed))
    harmonic = a.harmonic if a.harmonic and a.harmonic[0] == "-" else None
    return IntervalSet(intervals=intervals, harmonic=harmonic)


def euclid_basic(x, eps) -> IntervalSet:
    """(x - eps, x + eps) cap I, the basic neighborhood of x != 0."""
    x, eps = frac(x), frac(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    lo = max(ZERO, x - eps)
    hi = min(ONE, x + eps)
    return IntervalSet(intervals=[(lo, hi, x - eps < ZERO, x + eps > ONE)])


def punctured_zero_basic(eps) -> IntervalSet:
    """[0, eps) cap I minus the reciprocal set, the basic neighborhood of 0."""
    eps = frac(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    hi = min(ONE, eps)
    return IntervalSet(intervals=[(ZERO, hi, True, eps > ONE)], harmonic=("-", 1))


def s71_int_cl_basic(kind: str, center, eps) -> IntervalSet:
    """Int(cl(U)) for a named basic neighborhood, via the closure and
    interior rules above."""
    if kind == "euclidean_at_x":
        u = euclid_basic(center, eps)
    elif kind == "punctured_at_0":
        u = punctured_zero_basic(eps)
    else:
        raise ValueError("kind must be 'euclidean_at_x' or 'punctured_at_0'")
    return s71_interior(s71_closure(u))


def s71_closure_mem(x, a: IntervalSet) -> bool:
    return s71_closure(a).member(frac(x))


def s71_delta_mem(x, a: IntervalSet) -> bool:
    return s71_delta_closure(a).member(frac(x))


def harmonic_chain() -> IntervalSet:
    """The separating chain {1/n : n >= 1}."""
    from .interval import reciprocal_tail

    return reciprocal_tail(1)


def left_open_unit_chain() -> IntervalSet:
    """The chain (0, 1]."""
    return IntervalSet(intervals=[(ZERO, ONE, False, True)])
