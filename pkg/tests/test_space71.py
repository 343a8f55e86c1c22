"""Punctured-origin segment space: closure rules, the Int(cl(.)) identities
and their boundary cases, and agreement with the brute-force grid oracle."""

from fractions import Fraction

import pytest

from grid_oracle import corpus, grid_closure_member, grid_delta_member, probe_points
from tsl.symbolic.interval import IntervalSet, interval_set, point_set
from tsl.symbolic.space71 import (
    euclid_basic,
    harmonic_chain,
    left_open_unit_chain,
    punctured_zero_basic,
    s71_closure,
    s71_delta_closure,
    s71_int_cl_basic,
    s71_interior,
    s71_theta_mem,
)

F = Fraction


def test_harmonic_chain_closure_excludes_zero():
    cl = s71_closure(harmonic_chain())
    assert not cl.member(0)
    assert cl.member(F(1, 7)) and cl.member(1)


def test_harmonic_chain_delta_closure_contains_zero():
    dcl = s71_delta_closure(harmonic_chain())
    assert dcl.member(0)


def test_closure_euclidean_away_from_zero():
    s = interval_set(F(1, 4), F(1, 2), True, True)
    assert s71_closure(s) == s
    half_open = interval_set(F(1, 4), F(1, 2), False, False)
    assert s71_closure(half_open) == s


def test_closure_left_accumulation():
    s = interval_set(0, F(1, 2), False, False)
    assert s71_closure(s) == interval_set(0, F(1, 2), True, True)


def test_closure_of_empty_and_points():
    assert s71_closure(IntervalSet()) == IntervalSet()
    assert s71_closure(point_set(F(1, 3))) == point_set(F(1, 3))


def test_interior_examples():
    assert s71_interior(interval_set(F(1, 4), F(1, 2))) == interval_set(
        F(1, 4), F(1, 2), False, False
    )
    # 0 and 1 are relatively interior at the ends
    assert s71_interior(interval_set(0, F(1, 2))) == interval_set(
        0, F(1, 2), True, False
    )
    assert s71_interior(interval_set(F(1, 2), 1)) == interval_set(
        F(1, 2), 1, False, True
    )
    assert s71_interior(point_set(F(1, 2))) == IntervalSet()
    assert s71_interior(harmonic_chain()) == IntervalSet()


def test_interior_keeps_reciprocal_punctures():
    s = IntervalSet(intervals=[(0, F(1, 2), True, True)], harmonic=("-", 1))
    inner = s71_interior(s)
    assert inner.member(0)
    assert not inner.member(F(1, 3))
    assert not inner.member(F(1, 2))


def test_int_cl_identities_generic():
    x = F(3, 4)
    for eps in (F(1, 5), F(1, 3), F(1, 2)):
        u = euclid_basic(x, eps)
        assert s71_int_cl_basic("euclidean_at_x", x, eps) == u
    assert s71_int_cl_basic("euclidean_at_x", F(1, 2), F(1, 4)) == euclid_basic(
        F(1, 2), F(1, 4)
    )
    for eps in (F(1, 3), F(1, 2)):
        expected = IntervalSet(intervals=[(0, eps, True, False)])
        assert s71_int_cl_basic("punctured_at_0", 0, eps) == expected


def test_int_cl_identity_boundary_cases():
    # at x - eps = 0 the interior regains the origin
    got = s71_int_cl_basic("euclidean_at_x", F(1, 2), F(1, 2))
    assert got == interval_set(0, 1, True, True)
    assert got != euclid_basic(F(1, 2), F(1, 2))
    # at x + eps = 1 it regains the right endpoint
    got = s71_int_cl_basic("euclidean_at_x", F(2, 3), F(1, 3))
    assert got == interval_set(F(1, 3), 1, False, True)
    assert got != euclid_basic(F(2, 3), F(1, 3))
    got = s71_int_cl_basic("euclidean_at_x", F(3, 4), F(1, 4))
    assert got == interval_set(F(1, 2), 1, False, True)
    # at eps = 1 the punctured shape closes on the right as well
    assert s71_int_cl_basic("punctured_at_0", 0, F(1)) == interval_set(0, 1)


def test_int_cl_rejects_bad_args():
    with pytest.raises(ValueError):
        s71_int_cl_basic("nowhere", 0, F(1, 2))
    with pytest.raises(ValueError):
        euclid_basic(F(1, 2), 0)
    with pytest.raises(ValueError):
        punctured_zero_basic(F(-1))


def test_theta_membership_is_euclidean():
    assert s71_theta_mem(F(1, 2), interval_set(F(1, 4), F(1, 2), True, False))
    assert s71_theta_mem(0, harmonic_chain())
    assert not s71_theta_mem(F(2, 5), harmonic_chain())


def test_delta_completeness_witness_chains():
    for chain in (left_open_unit_chain(), harmonic_chain()):
        dcl = s71_delta_closure(chain)
        assert dcl.member(chain.infimum())
        assert dcl.member(chain.supremum())
    cl = s71_closure(harmonic_chain())
    assert not cl.member(harmonic_chain().infimum())


def test_closure_operator_laws_on_corpus():
    for a in corpus():
        cl = s71_closure(a)
        dcl = s71_delta_closure(a)
        for x in probe_points():
            assert not a.member(x) or cl.member(x)  # extensive
            assert not cl.member(x) or dcl.member(x)  # plain within delta
        assert s71_closure(cl) == cl  # idempotent
        assert s71_delta_closure(dcl) == dcl


def test_grid_oracle_agreement_on_corpus():
    probes = probe_points()
    for a in corpus():
        cl = s71_closure(a)
        dcl = s71_delta_closure(a)
        for x in probes:
            assert cl.member(x) == grid_closure_member(x, a), (a, x, "cl")
            assert dcl.member(x) == grid_delta_member(x, a), (a, x, "delta")


def test_grid_oracle_and_int_cl_shapes_agree():
    # the oracle's hard-coded Int(cl(.)) formulas match the symbolic path
    for x, eps in ((F(1, 2), F(1, 4)), (F(1, 2), F(1, 2)), (F(2, 3), F(1, 3)),
                   (F(1, 8), F(1, 16))):
        sym = s71_int_cl_basic("euclidean_at_x", x, eps)
        lo, hi = max(F(0), x - eps), min(F(1), x + eps)
        assert sym == IntervalSet(
            intervals=[(lo, hi, x - eps <= 0, x + eps >= 1)]
        )
    for eps in (F(1, 4), F(1, 2), F(1)):
        sym = s71_int_cl_basic("punctured_at_0", 0, eps)
        assert sym == IntervalSet(
            intervals=[(0, min(F(1), eps), True, eps >= 1)]
        )
