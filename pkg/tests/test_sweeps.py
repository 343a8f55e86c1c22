"""The bulk sweeps must agree with the single-instance theorem checkers."""

import itertools

from tsl import MultiMap, check_disjoint_corollary, check_transfer_theorem
from tsl.kernels import load_backend
from tsl.multimaps import check_closed_embedding_theorem
from tsl.bitsets import bit_list, popcount
from tsl.sweeps import (
    _cod_tables,
    _dom_tables,
    embedding_sweep,
    sweep_models,
    transfer_sweep,
)

PURE = load_backend("pure")


def _checker_counts(dom, cod):
    """Hypothesis-true counts via the object-level checkers, full universe."""
    mono = disj = 0
    for values in itertools.product(range(1, 1 << cod.n), repeat=dom.n):
        phi = MultiMap(dom, cod, values)
        out_m = check_transfer_theorem(phi)
        out_d = check_disjoint_corollary(phi)
        if out_m.hypotheses_hold:
            mono += 1
            assert out_m.conclusion is True  # no falsification on finite models
        if out_d.hypotheses_hold:
            disj += 1
            assert out_d.conclusion is True
    return mono, disj


def test_transfer_kernel_matches_checkers_exhaustively():
    models = sweep_models(2)
    for dom in models:
        dt = _dom_tables(dom)
        for cod in models:
            ct = _cod_tables(cod)
            expect_mono, expect_disj = _checker_counts(dom, cod)
            if not dt.complete or not ct.updown:
                # the sweep skips the pair: its hypotheses fail everywhere
                assert expect_mono == 0 and expect_disj == 0
                continue
            _, h_mono, h_disj, cx_m, cx_d, cx_der = PURE.sweep_transfer_pair(
                dom.n, dt.meet_flat, dt.leq_pairs, dt.closed_flags,
                cod.n, ct.t1_values, ct.vmeet_flat, ct.upset,
                ct.complete_sub, ct.closed,
            )
            assert (h_mono, h_disj) == (expect_mono, expect_disj), (dom, cod)
            assert cx_m is None and cx_d is None and cx_der is None


def test_embedding_sweep_matches_checker_on_nonclosed_sites():
    models = sweep_models(2)
    for y in models:
        for sub_mask in y.meet.subsemilattices():
            if sub_mask == 0 or y.space.is_closed(sub_mask):
                continue
            points = bit_list(sub_mask)
            for e in models:
                for images in itertools.product(range(e.n), repeat=len(points)):
                    out = check_closed_embedding_theorem(y, sub_mask, e, images)
                    assert not out.falsifies, (y, sub_mask, e, images)
                    out_reg = check_closed_embedding_theorem(
                        y, sub_mask, e, images, regular_variant=True
                    )
                    assert not out_reg.falsifies


def test_sweep_results_backend_independent():
    res = transfer_sweep(2)
    assert (res.checked, res.evaluated, res.hyp_monotone, res.hyp_disjoint) == (
        609, 159, 83, 11,
    )
    emb = embedding_sweep(2)
    assert (emb.checked, emb.sites_scanned) == (634, 8)
    assert emb.cx_theorem is None and emb.cx_regular is None


def test_transfer_universe_size_arithmetic():
    models = sweep_models(2)
    total = 0
    for dom in models:
        for cod in models:
            total += ((1 << cod.n) - 1) ** dom.n
    assert total == transfer_sweep(2).checked


def test_embedding_universe_size_arithmetic():
    models = sweep_models(2)
    total = 0
    for y in models:
        for sub_mask in y.meet.subsemilattices():
            s = popcount(sub_mask)
            total += sum(e.n ** s for e in models)
    assert total == embedding_sweep(2).checked
