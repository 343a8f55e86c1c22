"""Claim suite engine: coverage, determinism, report invariants, witnesses."""

import json

import pytest

from tsl.claims import (
    CLAIM_INDEX,
    SUITES,
    WITNESS_TARGETS,
    ClaimReport,
    find_witness,
    run_claim_suite,
)


def test_suite_coverage_manifest():
    for suite, expected_ids in CLAIM_INDEX.items():
        reports = run_claim_suite(suite, 2)
        assert [r.claim for r in reports] == expected_ids


def test_all_core_suites_pass_small():
    for suite in ("operators", "completeness", "weak_topologies", "transfer"):
        for rep in run_claim_suite(suite, 2):
            assert rep.status == "pass", rep
            assert rep.checked_count > 0
            assert rep.anchor and rep.universe


def test_examples_suite_matches_ledgers():
    reports = run_claim_suite("examples")
    ids = [r.claim for r in reports]
    assert any(i.startswith("71.") for i in ids)
    assert any(i.startswith("72.") for i in ids)
    statuses = {r.claim: r.status for r in reports}
    assert statuses["71.reciprocal_chain_escapes_closure"] == "pass"
    assert statuses["72.interior_closure_identity"] == "fail"


def test_fail_reports_carry_counterexamples():
    for rep in run_claim_suite("examples"):
        if rep.status == "fail":
            assert rep.counterexample
            json.loads(rep.counterexample)


def test_all_suite_is_concatenation():
    all_reports = run_claim_suite("all", 2)
    ids = [r.claim for r in all_reports]
    for suite in SUITES:
        nmax = None if suite == "examples" else 2
        for rep in run_claim_suite(suite, nmax):
            assert rep.claim in ids


def test_unknown_suite_rejected():
    with pytest.raises(ValueError):
        run_claim_suite("everything")


def test_determinism():
    a = [r.to_obj() for r in run_claim_suite("operators", 3)]
    b = [r.to_obj() for r in run_claim_suite("operators", 3)]
    assert a == b
    wa = find_witness("closure_lt_thetacl", 2).to_obj()
    wb = find_witness("closure_lt_thetacl", 2).to_obj()
    assert wa == wb


def test_witness_targets():
    expectations = {
        "theta_not_idempotent": (3, "fail"),
        "closure_lt_thetacl": (2, "fail"),
        "semitop_not_updown_closed": (2, "fail"),
        "nonbiclosed_thetacl_not_chain": (3, "fail"),
        "retraction_range_not_theta_closed": (2, "fail"),
    }
    for target in WITNESS_TARGETS:
        nmax, status = expectations[target]
        rep = find_witness(target, nmax)
        assert rep.status == status
        assert rep.counterexample is not None
        assert rep.checked_count > 0
        # below the first witness level everything is exhausted
        rep_low = find_witness(target, 1)
        assert rep_low.status == "pass"
        assert rep_low.counterexample is None


def test_witness_semitop_is_sierpinski_min_meet():
    rep = find_witness("semitop_not_updown_closed", 2)
    cx = json.loads(rep.counterexample)
    assert cx["opens"] == [[], [1], [0, 1]]
    assert cx["meet"] == [[0, 0], [0, 1]]


def test_unknown_witness_target():
    with pytest.raises(ValueError):
        find_witness("perpetual_motion", 3)


def test_report_shape():
    rep = run_claim_suite("operators", 2)[0]
    assert isinstance(rep, ClaimReport)
    obj = rep.to_obj()
    assert list(obj) == [
        "claim", "anchor", "universe", "status", "counterexample", "checked_count",
    ]
