"""Claims ledgers for the two built-in exact-rational spaces.

Every assertion made about these spaces gets exactly one row with a
definitive pass/fail status and an exact witness; a computed failure is
recorded as such, never adjusted.  Registry ids: 71 is the punctured-origin
segment, 72 the punctured-edge square.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .interval import IntervalSet
from .space71 import (
    euclid_basic,
    harmonic_chain,
    left_open_unit_chain,
    s71_closure,
    s71_delta_closure,
    s71_int_cl_basic,
)
from .space72 import (
    ball_within_closed_ball,
    basic_nbhds_meet,
    cl_basic_mem,
    dist2,
    edge,
    in_basic,
    int_cl_basic_mem,
    leq72,
    meet72,
    off,
    open_edge_chain,
    s72_closure_mem,
    s72_delta_mem,
    s72_theta_mem,
)

F = Fraction


@dataclass(frozen=True)
class LedgerRow:
    claim: str
    anchor: str
    status: str  # "pass" | "fail" | "indeterminate"
    witness: str

    def to_obj(self):
        return {
            "claim": self.claim,
            "anchor": self.anchor,
            "status": self.status,
            "witness": self.witness,
        }


@dataclass(frozen=True)
class ClaimsLedger:
    example: int
    rows: tuple[LedgerRow, ...]

    def __post_init__(self):
        ids = [r.claim for r in self.rows]
        if len(ids) != len(set(ids)):
            raise ValueError("duplicate claim ids in ledger")
        if any(r.status not in ("pass", "fail", "indeterminate") for r in self.rows):
            raise ValueError("statuses must be pass/fail/indeterminate")

    @property
    def all_pass(self) -> bool:
        return all(r.status == "pass" for r in self.rows)


def run_ledger(example: int) -> ClaimsLedger:
    if example == 71:
        return ClaimsLedger(71, tuple(_rows_71()))
    if example == 72:
        return ClaimsLedger(72, tuple(_rows_72()))
    raise ValueError("known examples: 71, 72")


# ---------------------------------------------------------------------------
# segment space
# ---------------------------------------------------------------------------


def _row(claim, anchor, ok, witness) -> LedgerRow:
    return LedgerRow(claim, anchor, "pass" if ok else "fail", witness)


def _rows_71():
    rows = []
    h = harmonic_chain()

    cl_h = s71_closure(h)
    ok = not cl_h.member(0)
    rows.append(_row(
        "71.reciprocal_chain_escapes_closure",
        "0 is not in the closure of the reciprocal chain {1/n}",
        ok,
        f"closure computed as {cl_h!r}; membership of 0: {cl_h.member(0)}",
    ))

    inf_h = h.infimum()
    ok = inf_h == 0 and not cl_h.member(0)
    rows.append(_row(
        "71.space_not_complete",
        "the space is not complete: the reciprocal chain's infimum avoids its closure",
        ok,
        f"inf = {inf_h}; membership of 0 in the closure: {cl_h.member(0)}",
    ))

    dcl_h = s71_delta_closure(h)
    ok = dcl_h.member(0)
    rows.append(_row(
        "71.reciprocal_chain_delta_adherent",
        "0 is in the delta-closure of the reciprocal chain",
        ok,
        f"delta-closure computed as {dcl_h!r}",
    ))

    x = F(3, 4)
    for eps in (F(1, 3), F(1, 2)):
        u = euclid_basic(x, eps)
        got = s71_int_cl_basic("euclidean_at_x", x, eps)
        ok = got == u
        rows.append(_row(
            f"71.euclidean_int_cl_identity_eps_{eps.denominator}",
            "Int(cl(U)) = U for the Euclidean basic neighborhood "
            f"U = ({x}-{eps}, {x}+{eps}) cap I",
            ok,
            f"U = {u!r}; Int(cl(U)) = {got!r}",
        ))
    for eps in (F(1, 3), F(1, 2)):
        got = s71_int_cl_basic("punctured_at_0", 0, eps)
        expected = IntervalSet(intervals=[(0, eps, True, False)])
        ok = got == expected
        rows.append(_row(
            f"71.punctured_int_cl_identity_eps_{eps.denominator}",
            f"Int(cl(punctured basic neighborhood of 0)) = [0, {eps})",
            ok,
            f"Int(cl(U)) = {got!r}; expected {expected!r}",
        ))

    for name, chain in (
        ("left_open_unit_chain", left_open_unit_chain()),
        ("reciprocal_chain", harmonic_chain()),
    ):
        dcl = s71_delta_closure(chain)
        lo, hi = chain.infimum(), chain.supremum()
        ok = dcl.member(lo) and dcl.member(hi)
        rows.append(_row(
            f"71.delta_complete_{name}",
            f"the chain {chain!r} has inf and sup inside its delta-closure",
            ok,
            f"inf = {lo} in {dcl.member(lo)}, sup = {hi} in {dcl.member(hi)}; "
            f"delta-closure {dcl!r}",
        ))
    return rows


# ---------------------------------------------------------------------------
# square space
# ---------------------------------------------------------------------------

_SAMPLES = ((F(1, 2), F(1, 4)), (F(1, 3), F(1, 8)))


def _battery(a: Fraction, eps: Fraction):
    """Deterministic probe points around the basic neighborhood of e(a)."""
    params = [0, a - 2 * eps, a - eps, a - eps / 2, a, a + eps / 2, a + eps,
              a + 2 * eps, 1]
    pts = [edge(t) for t in params if 0 <= t <= 1]
    offs = [(a, eps / 2), (a, eps), (a, 2 * eps), (a - eps / 2, eps / 2),
            (a + eps / 2, eps / 2), (F(1, 2), F(1, 2)), (a, 1)]
    pts.extend(off(x, y) for x, y in offs if 0 <= x <= 1 and 0 < y <= 1)
    return pts


def _delta_grid(eps: Fraction):
    return [eps / (1 << j) for j in range(0, 20)]


def _rows_72():
    rows = []

    # closure identity, re-verified from the neighborhood-intersection test
    bad = None
    for a, eps in _SAMPLES:
        for p in _battery(a, eps):
            ball_rule = dist2(p, edge(a)) <= eps * eps
            first_principles = cl_basic_mem(p, a, eps)
            if ball_rule != first_principles:
                bad = (a, eps, p, "rule mismatch")
                break
            if ball_rule:
                if not all(
                    basic_nbhds_meet(p, d, a, eps) for d in _delta_grid(eps)
                ):
                    bad = (a, eps, p, "adherent point separated at some radius")
                    break
            else:
                if not any(
                    not basic_nbhds_meet(p, d, a, eps) for d in _delta_grid(eps)
                ):
                    bad = (a, eps, p, "no separating radius found")
                    break
        if bad:
            break
    rows.append(_row(
        "72.basic_closure_identity",
        "the closure of a basic edge neighborhood is the closed ball cut to the square",
        bad is None,
        "closed-ball rule agrees with the neighborhood-intersection limit on "
        f"the probe battery at samples {[(str(a), str(e)) for a, e in _SAMPLES]}"
        if bad is None else f"mismatch at {bad}",
    ))

    # the closure regains the punctured edge window
    a, eps = _SAMPLES[0]
    window_ok = all(
        cl_basic_mem(edge(t), a, eps) == (abs(t - a) <= eps)
        for t in (a - 2 * eps, a - eps, a - eps / 2, a, a + eps / 2, a + eps,
                  a + 2 * eps)
    )
    u_edge_only_center = in_basic(edge(a), a, eps) and not any(
        in_basic(edge(t), a, eps)
        for t in (a - eps / 2, a + eps / 2, a - eps, a + eps)
    )
    rows.append(_row(
        "72.closure_regains_edge_window",
        "cl(U) meets the edge in the closed parameter window although U keeps only its center",
        window_ok and u_edge_only_center,
        f"at a={a}, eps={eps}: edge membership in cl(U) is |t-a| <= eps; "
        f"U's edge content is exactly e({a})",
    ))

    chain_a = open_edge_chain(F(1, 3), F(2, 3))

    # a basic neighborhood of the endpoint misses the open chain entirely
    a0, eps0 = F(1, 3), F(1, 6)
    probe_params = [F(1, 3) + F(1, 24), F(2, 5), F(1, 2), F(2, 3) - F(1, 24)]
    misses = not any(in_basic(edge(t), a0, eps0) for t in probe_params)
    off_empty = not chain_a.off_edge
    rows.append(_row(
        "72.neighborhood_misses_open_edge_chain",
        "a basic neighborhood of e(1/3) is disjoint from the open edge chain (1/3, 2/3)",
        misses and off_empty,
        f"U(e({a0}), {eps0}) keeps only its center on the edge; probes "
        f"{[str(t) for t in probe_params]} all outside U",
    ))

    # interior of the closure strictly exceeds the neighborhood
    a1, eps1 = _SAMPLES[0]
    q = edge(a1 + eps1 / 2)
    delta = eps1 / 4
    cert = (
        not in_basic(q, a1, eps1)
        and int_cl_basic_mem(q, a1, eps1)
        and ball_within_closed_ball(q, delta, edge(a1), eps1)
    )
    rows.append(_row(
        "72.interior_closure_identity",
        "U = Int(cl(U)) for a basic edge neighborhood U",
        not cert,
        f"refuted: e({a1 + eps1 / 2}) is outside U but interior to "
        f"cl(U) = B[e({a1}), {eps1}] cap X, since the ball of radius {delta} "
        "around it stays inside the closed ball and its own punctured "
        "neighborhoods are contained in that ball",
    ))

    # extrema of the open edge chain
    lo, hi = chain_a.edge.infimum(), chain_a.edge.supremum()
    stated_ok = (
        all(leq72(edge(t), edge(F(1, 3))) for t in probe_params)
        and all(leq72(edge(F(2, 3)), edge(t)) for t in probe_params)
    )
    rows.append(_row(
        "72.stated_extrema_orientation",
        "sup of the chain (1/3, 2/3) is e(1/3) and inf is e(2/3)",
        stated_ok,
        f"meet(e(1/3), e(1/2)) = e({meet72(edge(F(1,3)), edge(F(1,2)))[1]}), "
        "so e(1/3) lies below the chain, not above it",
    ))
    consistent_ok = (
        lo == F(1, 3)
        and hi == F(2, 3)
        and all(leq72(edge(F(1, 3)), edge(t)) for t in probe_params)
        and all(leq72(edge(t), edge(F(2, 3))) for t in probe_params)
        and meet72(off(F(1, 2), F(1, 2)), edge(F(1, 2))) == edge(0)
    )
    rows.append(_row(
        "72.meet_consistent_extrema",
        "inf of the chain (1/3, 2/3) is e(1/3) and sup is e(2/3) under the meet's order",
        consistent_ok,
        f"parameter bounds computed as [{lo}, {hi}]; e(1/3) below and e(2/3) "
        "above every probe; off-edge points bound no edge pair",
    ))

    # theta-completeness at the chain
    th = (
        s72_theta_mem(edge(F(1, 3)), chain_a)
        and s72_theta_mem(edge(F(2, 3)), chain_a)
    )
    rows.append(_row(
        "72.theta_complete_on_edge_chain",
        "both bounds of the chain (1/3, 2/3) are theta-adherent to it",
        th,
        "closures of the punctured neighborhoods are closed balls, whose "
        "edge windows meet the chain at every radius",
    ))

    # the claimed delta-incompleteness
    d_lo = s72_delta_mem(edge(F(1, 3)), chain_a)
    d_hi = s72_delta_mem(edge(F(2, 3)), chain_a)
    window_point = edge(F(1, 3) + F(1, 24))
    window_cert = (
        int_cl_basic_mem(window_point, F(1, 3), F(1, 12))
        and s72_closure_mem(window_point, chain_a)
    )
    rows.append(_row(
        "72.delta_incomplete_on_edge_chain",
        "some bound of the chain (1/3, 2/3) avoids its delta-closure",
        not (d_lo and d_hi and window_cert),
        f"refuted: delta-membership of e(1/3) is {d_lo} and of e(2/3) is "
        f"{d_hi}; Int(cl(V)) of every neighborhood of e(1/3) regains the "
        "punctured edge window, e.g. radius 1/12 already contains the chain "
        f"point e({F(1,3) + F(1,24)})",
    ))

    # the space is not complete at the same chain
    plain = (
        not s72_closure_mem(edge(F(1, 3)), chain_a)
        and not s72_closure_mem(edge(F(2, 3)), chain_a)
    )
    rows.append(_row(
        "72.plain_incomplete_on_edge_chain",
        "both bounds of the chain (1/3, 2/3) avoid its plain closure",
        plain,
        "edge points are isolated along the edge: each neighborhood keeps "
        "only its center there, so the open chain has no extra closure "
        "points on the edge",
    ))

    # the edge is the only infinite chain
    z, w = off(F(1, 4), F(1, 2)), off(F(3, 4), F(1, 4))
    unique = (
        meet72(z, w) == edge(0)
        and meet72(z, edge(F(1, 2))) == edge(0)
        and meet72(z, edge(0)) == edge(0)
        and leq72(edge(0), z)
        and not leq72(z, edge(F(1, 2)))
        and not leq72(edge(F(1, 2)), z)
    )
    rows.append(_row(
        "72.off_edge_points_are_atoms",
        "off-edge points are pairwise incomparable and sit only above the bottom edge point",
        unique,
        f"meets of {z} and {w} with each other and with edge points all "
        "collapse to e(0)",
    ))
    return rows
