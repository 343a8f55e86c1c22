"""Exact oracles for the punctured-edge square space (registry id 72).

The carrier is the unit square.  One distinguished edge (the segment
y = 0, parametrized by t in [0, 1]) carries the infinite chain: the meet of
two edge points is the smaller parameter, the meet of anything else is the
edge point at 0, so off-edge points are atoms over that bottom.

Off-edge points keep Euclidean ball neighborhoods.  A basic neighborhood of
an edge point e(a) with radius eps is

    (B(e(a), eps) cap X)  minus  {e(t) : 0 < |t - a| < eps}  plus  {e(a)},

so a neighborhood of an edge point contains no other edge point.  Everything
below is decided with exact rational arithmetic on squared distances.

Derived membership rules (each re-verified against the first-principles
neighborhood-intersection test):

  * plain closure adds nothing along the edge: an edge point is in cl(A)
    iff it is in A (its neighborhoods miss every other edge point, and the
    finitely many off-edge members stay at positive distance); an off-edge
    point is in cl(A) iff it belongs to A's off-edge part;
  * closures of basic neighborhoods are closed balls intersected with the
    square, which regain the punctured edge window; hence theta- and
    delta-adherence of an edge point reduce to Euclidean adherence of its
    parameter to the parameter set, and stay raw membership off the edge.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .interval import ONE, ZERO, IntervalSet, frac
from .space71 import euclid_closure


def edge(t) -> tuple:
    t = frac(t)
    if not ZERO <= t <= ONE:
        raise ValueError("edge parameter outside the unit segment")
    return ("edge", t)


def off(x, y) -> tuple:
    x, y = frac(x), frac(y)
    if not (ZERO <= x <= ONE and ZERO < y <= ONE):
        raise ValueError("off-edge point outside the open upper square")
    return ("off", x, y)


def coords(p) -> tuple[Fraction, Fraction]:
    if p[0] == "edge":
        return (p[1], ZERO)
    return (p[1], p[2])


def dist2(p, q) -> Fraction:
    (px, py), (qx, qy) = coords(p), coords(q)
    return (px - qx) ** 2 + (py - qy) ** 2


def meet72(p, q):
    if p == q:
        return p
    if p[0] == "edge" and q[0] == "edge":
        return edge(min(p[1], q[1]))
    return edge(ZERO)


def leq72(p, q) -> bool:
    return meet72(p, q) == p


@dataclass(frozen=True)
class EdgeSet72:
    """A chain-relevant subset: edge parameters plus finitely many off-edge
    points (all the infinite structure lives on the edge)."""

    edge: IntervalSet
    off_edge: frozenset = frozenset()

    def __post_init__(self):
        for x, y in self.off_edge:
            off(x, y)  # validates


def s72_closure_mem(p, a: EdgeSet72) -> bool:
    if p[0] == "edge":
        return a.edge.member(p[1])
    return (p[1], p[2]) in a.off_edge


def s72_theta_mem(p, a: EdgeSet72) -> bool:
    if p[0] == "edge":
        return euclid_closure(a.edge).member(p[1])
    return (p[1], p[2]) in a.off_edge


def s72_delta_mem(p, a: EdgeSet72) -> bool:
    # Int(cl(V)) of a basic neighborhood holds the same open parameter
    # window as cl(V), so delta- and theta-adherence coincide here
    return s72_theta_mem(p, a)


# -- first-principles neighborhood machinery ---------------------------------


def in_basic(p, a, eps) -> bool:
    """p in the basic neighborhood of e(a) with radius eps."""
    a, eps = frac(a), frac(eps)
    if p[0] == "edge":
        return p[1] == a
    return dist2(p, edge(a)) < eps * eps


def basic_nbhds_meet(p, delta, a, eps) -> bool:
    """Exact emptiness test for V_delta(p) cap U_eps(e(a)).

    Both neighborhoods keep their full off-edge ball interiors, and two open
    balls centered in the square intersect off the edge iff they intersect
    at all (the segment between their centers enters the overlap, and a
    nonempty open overlap contains points with positive y inside the
    square).  Edge points contribute only themselves.
    """
    delta, eps = frac(delta), frac(eps)
    lens = dist2(p, edge(a)) < (delta + eps) ** 2
    p_in_u = in_basic(p, a, eps)
    if p[0] == "edge":
        ea_in_v = p[1] == a
    else:
        ea_in_v = dist2(p, edge(a)) < delta * delta
    return lens or p_in_u or ea_in_v


def cl_basic_mem(p, a, eps) -> bool:
    """p in cl(U) for the basic neighborhood U of e(a), from first principles.

    The delta-limit of basic_nbhds_meet: the lens condition for all delta
    collapses to dist <= eps, and the constant disjuncts are already inside
    that bound.  Equivalently, cl(U) is the closed ball within the square.
    """
    a, eps = frac(a), frac(eps)
    return dist2(p, edge(a)) <= eps * eps


def int_cl_basic_mem(p, a, eps) -> bool:
    """p in Int(cl(U)) when the closed ball stays clear of the other sides.

    Inside the guard a - eps > 0, a + eps < 1, eps < 1: any point with
    dist < eps is interior (a small ball or punctured-edge neighborhood
    around it stays in the closed ball), and any point at dist = eps has
    square points just outside the sphere arbitrarily close, so it is not.
    """
    a, eps = frac(a), frac(eps)
    if not (a - eps > ZERO and a + eps < ONE and eps < ONE):
        raise ValueError("sample parameters must keep the ball inside the square")
    return dist2(p, edge(a)) < eps * eps


def ball_within_closed_ball(c1, r1, c2, r2) -> bool:
    """B(c1, r1) within B[c2, r2], decided on squared distances."""
    r1, r2 = frac(r1), frac(r2)
    if r1 > r2:
        return False
    return dist2(c1, c2) <= (r2 - r1) ** 2


def open_edge_chain(lo, hi) -> EdgeSet72:
    """The edge chain with parameters in the open interval (lo, hi)."""
    return EdgeSet72(IntervalSet(intervals=[(frac(lo), frac(hi), False, False)]))
