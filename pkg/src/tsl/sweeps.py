"""Exhaustive sweeps over all multimap / embedding instances on small carriers.

The instance universes are huge (tens of millions on three-point carriers),
so the per-instance loops run in the kernel backend.  Skips are performance
layers only and cannot change outcomes:

  * pairs whose codomain is not updown-closed (or whose domain is not
    complete) have that hypothesis false for every instance and are counted
    in bulk;
  * value tuples containing a non-T1-closed value have the T1 hypothesis
    false and are skipped with block counting, preserving the position of
    the first counterexample in the full lexicographic order;
  * embedding sites whose subsemilattice is closed in the ambient model make
    the implication vacuously true and are counted in bulk.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bitsets import bit_list, iter_bits, popcount
from .enumeration import MAX_N_COMBINED, enumerate_meet_tables, enumerate_topologies
from .kernels import sweep_embedding_site, sweep_transfer_pair
from .multimaps import ti_closed
from .semitopo import TopSemilattice


def sweep_models(n_max: int):
    if not 1 <= n_max <= MAX_N_COMBINED:
        raise ValueError(f"sweep carrier bound must be 1..{MAX_N_COMBINED}")
    out = []
    for n in range(1, n_max + 1):
        for space in enumerate_topologies(n):
            for meet in enumerate_meet_tables(n):
                out.append(TopSemilattice(space, meet))
    return out


def model_obj(ts: TopSemilattice) -> dict:
    return {
        "n": ts.n,
        "opens": [bit_list(u) for u in ts.space.opens],
        "meet": [list(r) for r in ts.meet.rows],
    }


@dataclass
class _DomTables:
    complete: bool
    meet_flat: tuple
    leq_pairs: tuple
    closed_flags: bytes


@dataclass
class _CodTables:
    updown: bool
    t1_values: tuple
    vmeet_flat: tuple
    upset: tuple
    complete_sub: bytes
    closed: tuple


def _dom_tables(ts: TopSemilattice) -> _DomTables:
    k = ts.n
    meet_flat = tuple(ts.meet.rows[x][y] for x in range(k) for y in range(k))
    pairs = []
    for x in range(k):
        for y in iter_bits(ts.order.up_set(x)):
            if y != x:
                pairs.extend((x, y))
    closed_flags = bytes(
        1 if m in ts.space.closed_set else 0 for m in range(1 << k)
    )
    return _DomTables(ts.is_complete("plain"), meet_flat, tuple(pairs), closed_flags)


def _cod_tables(ts: TopSemilattice) -> _CodTables:
    m = ts.n
    size = 1 << m
    t1_values = tuple(v for v in range(1, size) if ti_closed(ts.space, v, 1))
    vmeet = tuple(
        ts.meet.meet_mask(a, b) for a in range(size) for b in range(size)
    )
    upset = []
    for v in range(size):
        u = 0
        for x in iter_bits(v):
            u |= ts.order.up_set(x)
        upset.append(u)
    complete_sub = bytearray(size)
    for v in range(size):
        if v == 0 or ts.meet.meet_mask(v, v) & ~v:
            complete_sub[v] = 2  # sub-model undefined
        else:
            complete_sub[v] = 1 if ts.sub(v).is_complete("plain") else 0
    return _CodTables(
        ts.is_updown_closed("plain"),
        t1_values,
        vmeet,
        tuple(upset),
        bytes(complete_sub),
        ts.space.closed,
    )


@dataclass
class TransferSweepResult:
    checked: int
    evaluated: int
    hyp_monotone: int
    hyp_disjoint: int
    cx_monotone: dict | None
    cx_disjoint: dict | None
    cx_derived: dict | None


def transfer_sweep(n_max: int = 3) -> TransferSweepResult:
    """All (domain model, codomain model, nonempty-valued multimap) instances."""
    models = sweep_models(n_max)
    dom_tabs = [_dom_tables(ts) for ts in models]
    cod_tabs = [_cod_tables(ts) for ts in models]
    checked = evaluated = hyp_m = hyp_d = 0
    cx_m = cx_d = cx_der = None
    for di, dom in enumerate(models):
        dt = dom_tabs[di]
        k = dom.n
        for ci, cod in enumerate(models):
            ct = cod_tabs[ci]
            m = cod.n
            block = ((1 << m) - 1) ** k
            checked += block
            if not dt.complete or not ct.updown:
                continue  # a pair-level hypothesis is false for every instance
            ev, h_m, h_d, c_m, c_d, c_der = sweep_transfer_pair(
                k,
                dt.meet_flat,
                dt.leq_pairs,
                dt.closed_flags,
                m,
                ct.t1_values,
                ct.vmeet_flat,
                ct.upset,
                ct.complete_sub,
                ct.closed,
            )
            evaluated += ev
            hyp_m += h_m
            hyp_d += h_d

            def _cx(values):
                return {
                    "dom": model_obj(dom),
                    "cod": model_obj(cod),
                    "values": [bit_list(v) for v in values],
                }

            if cx_m is None and c_m is not None:
                cx_m = _cx(c_m)
            if cx_d is None and c_d is not None:
                cx_d = _cx(c_d)
            if cx_der is None and c_der is not None:
                cx_der = _cx(c_der)
    return TransferSweepResult(checked, evaluated, hyp_m, hyp_d, cx_m, cx_d, cx_der)


@dataclass
class EmbeddingSweepResult:
    checked: int  # instances per variant (the variants share one universe)
    sites_scanned: int
    cx_theorem: dict | None
    cx_regular: dict | None


def embedding_sweep(n_max: int = 3) -> EmbeddingSweepResult:
    """All (ambient model, subsemilattice, target model, point map) instances.

    Variants share a universe: the main form needs the ambient model
    topological with theta-closed fibers, the regular variant needs it
    regular and semitopological with plainly closed fibers.
    """
    models = sweep_models(n_max)
    e_meet_flat = [
        tuple(ts.meet.rows[x][y] for x in range(ts.n) for y in range(ts.n))
        for ts in models
    ]
    e_closed_flags = [
        bytes(1 if v in ts.space.closed_set else 0 for v in range(1 << ts.n))
        for ts in models
    ]
    e_complete = [ts.is_complete("plain") for ts in models]
    checked = 0
    sites = 0
    cx_thm = cx_reg = None
    for y in models:
        y_theta_flags = bytes(
            1 if y.space.is_closed(v, "theta") else 0 for v in range(1 << y.n)
        )
        y_closed_flags = bytes(
            1 if v in y.space.closed_set else 0 for v in range(1 << y.n)
        )
        y_topological = y.is_topological()
        y_regular_semitop = y.space.separation("regular") and y.is_semitopological()
        for sub_mask in y.meet.subsemilattices():
            s = popcount(sub_mask)
            site_universe = sum(ts.n ** s for ts in models)
            checked += site_universe
            if y.space.is_closed(sub_mask):
                continue  # conclusion holds; the implication cannot fail here
            if not (y_topological or y_regular_semitop):
                continue  # ambient hypotheses false in both variants
            sites += 1
            points = bit_list(sub_mask)
            pos = {p: i for i, p in enumerate(points)}
            meet_pos = tuple(
                pos[y.meet.rows[p][q]] for p in points for q in points
            )
            subclosed = sorted(
                set(
                    sum(1 << pos[p] for p in points if c >> p & 1)
                    for c in y.space.closed
                )
            )
            for ei, e in enumerate(models):
                if not e_complete[ei]:
                    continue
                variants = []
                if y_topological and cx_thm is None:
                    variants.append(("thm", y_theta_flags))
                if y_regular_semitop and cx_reg is None:
                    variants.append(("reg", y_closed_flags))
                for tag, fiber_flags in variants:
                    _, found = sweep_embedding_site(
                        s,
                        e.n,
                        meet_pos,
                        tuple(points),
                        e_meet_flat[ei],
                        e_closed_flags[ei],
                        tuple(subclosed),
                        fiber_flags,
                    )
                    if found is not None:
                        cx = {
                            "ambient": model_obj(y),
                            "subsemilattice": points,
                            "target": model_obj(e),
                            "map": list(found),
                            "variant": tag,
                        }
                        if tag == "thm":
                            cx_thm = cx
                        else:
                            cx_reg = cx
    return EmbeddingSweepResult(checked, sites, cx_thm, cx_reg)
