"""Acceptance suite: one test per criterion, exact expectations, stated
runtime bounds.  Run with `pytest tests/test_acceptance.py -v -s` to see the
per-criterion PASS lines.
"""

import json
import subprocess
import sys
import time

import pytest

from grid_oracle import corpus, grid_closure_member, grid_delta_member, probe_points
from tsl import FiniteSpace, bit_list, mask_of
from tsl.claims import _equivalence_reports
from tsl.enumeration import (
    brute_force_meet_tables,
    brute_force_topology_count,
    enumerate_meet_tables,
    enumerate_topologies,
)
from tsl.spaces import MODES
from tsl.sweeps import embedding_sweep, model_obj, sweep_models, transfer_sweep
from tsl.symbolic.space71 import s71_closure, s71_delta_closure


def _stamp(name, t0, bound=None):
    elapsed = time.time() - t0
    suffix = f" [{elapsed:.1f}s" + (f" < {bound}s]" if bound else "]")
    print(f"PASS {name}{suffix}")
    if bound is not None:
        assert elapsed < bound, f"{name} exceeded its {bound}s budget"


def _spaces4():
    for n in range(1, 5):
        yield from enumerate_topologies(n)


@pytest.fixture(scope="module")
def models4():
    return sweep_models(4)


def _run_cli(*args):
    proc = subprocess.run(
        [sys.executable, "-m", "tsl.cli", *args], capture_output=True, text=True
    )
    return proc.returncode, proc.stdout


def test_criterion_01_operator_inclusion_chain():
    t0 = time.time()
    for space in _spaces4():
        tables = {m: space.closure_table(m) for m in MODES}
        for a in range(1 << space.n):
            cl, dcl, tcl, btcl = (tables[m][a] for m in MODES)
            assert cl & ~dcl == 0, (space, a)
            assert dcl & ~tcl == 0, (space, a)
            assert tcl & ~btcl == 0, (space, a)
    _stamp("criterion-01 operator inclusion chain (n<=4, all subsets)", t0, 60)


def test_criterion_02_regular_collapse():
    t0 = time.time()
    n_regular = 0
    for space in _spaces4():
        if not space.separation("regular"):
            continue
        n_regular += 1
        for a in range(1 << space.n):
            values = {space.closure(a, m) for m in MODES}
            assert len(values) == 1, (space, a)
    assert n_regular > 4  # discrete and indiscrete spaces at least
    _stamp(f"criterion-02 regular collapse ({n_regular} regular spaces)", t0)


def test_criterion_03_derived_topology_consistency():
    t0 = time.time()
    for space in _spaces4():
        tau_d = space.derived("delta")    # construction validates the axioms
        tau_t = space.derived("theta")
        for a in range(1 << space.n):
            assert tau_d.closure(a) == space.closure(a, "delta")
            assert tau_t.closure(a) == space.closure(a, "bigtheta")
    _stamp("criterion-03 derived-topology consistency (n<=4)", t0)


def test_criterion_04_theta_nonidempotence_witness_cli():
    t0 = time.time()
    code, out = _run_cli("witness", "--target", "theta_not_idempotent",
                         "--nmax", "3")
    assert code == 1  # witness found
    report = json.loads(out)
    witness = json.loads(report["counterexample"])
    assert witness["n"] == 3
    space = FiniteSpace(3, [mask_of(u) for u in witness["opens"]])
    a = mask_of(witness["set"])
    # recompute through the definitional second path
    t1 = space.closure_by_quantification(a, "theta")
    t2 = space.closure_by_quantification(t1, "theta")
    assert bit_list(t1) == witness["theta_closure"]
    assert bit_list(t2) == witness["theta_closure_twice"]
    assert t1 != t2
    if witness["opens"] == [[], [0], [2], [0, 2], [0, 1, 2]] and witness["set"] == [0]:
        assert witness["theta_closure"] == [0, 1]
        assert witness["theta_closure_twice"] == [0, 1, 2]
    _stamp("criterion-04 theta non-idempotence witness via CLI", t0, 5)


def test_criterion_05_finite_completeness_meta(models4):
    t0 = time.time()
    for ts in models4:
        for mode in MODES:
            assert ts.is_complete(mode), (model_obj(ts), mode)
    _stamp(f"criterion-05 completeness meta-theorem ({len(models4)} models)", t0)


def test_criterion_06_equivalence_theorems(models4):
    t0 = time.time()
    reports = _equivalence_reports(models4, "acceptance")
    assert len(reports) == 4
    for rep in reports:
        assert rep.status == "pass", rep
        assert rep.checked_count > 0
    _stamp("criterion-06 equivalence theorems (independent sides, n<=4)", t0)


def test_criterion_07_weak_topology_inclusions(models4):
    t0 = time.time()
    for ts in models4:
        opens = {
            mode: set(ts.weak_topology(mode).opens)
            for mode in ("chain", "star", "delta_chain", "theta_chain",
                         "bigtheta_chain")
        }
        assert opens["chain"] <= opens["star"], model_obj(ts)
        assert opens["bigtheta_chain"] <= opens["delta_chain"], model_obj(ts)
        assert opens["bigtheta_chain"] <= opens["theta_chain"], model_obj(ts)
        assert opens["delta_chain"] <= opens["chain"], model_obj(ts)
    _stamp("criterion-07 weak-topology inclusions (n<=4)", t0)


def test_criterion_08_theta_closure_chain_facts(models4):
    t0 = time.time()
    n_biclosed = n_qual = 0
    for ts in models4:
        table = ts.space.closure_table("theta")
        if ts.is_theta_biclosed():
            n_biclosed += 1
            for c in ts.meet.chains():
                assert ts.order.is_chain(table[c]), (model_obj(ts), c)
        if ts.is_complete("theta") and ts.is_updown_closed("theta"):
            n_qual += 1
            for c in ts.meet.chains():
                tc = table[c]
                assert table[tc] == tc, (model_obj(ts), c)
                assert ts.space.is_h_set(tc), (model_obj(ts), c)
    assert n_biclosed > 0 and n_qual > 0
    _stamp(
        f"criterion-08 theta-closures of chains ({n_biclosed} bicone-closed, "
        f"{n_qual} theta-complete updown-closed)", t0)


def test_criterion_09_transfer_sweeps():
    t0 = time.time()
    res = transfer_sweep(3)
    assert res.cx_monotone is None
    assert res.cx_disjoint is None
    assert res.cx_derived is None
    assert res.checked == 23526888
    emb = embedding_sweep(3)
    assert emb.cx_theorem is None and emb.cx_regular is None
    assert emb.checked > 4_000_000
    # fiber-preimage identity on raw maps over all carriers <= 3
    for nd in range(1, 4):
        for nc in range(1, 4):
            for flat in range(nc ** nd):
                images, v = [], flat
                for _ in range(nd):
                    images.append(v % nc)
                    v //= nc
                for f in range(1 << nd):
                    image = 0
                    for x in range(nd):
                        if f >> x & 1:
                            image |= 1 << images[x]
                    fiber_pre = 0
                    for e in range(nc):
                        fiber = [x for x in range(nd) if images[x] == e]
                        if any(f >> x & 1 for x in fiber):
                            fiber_pre |= 1 << e
                    assert fiber_pre == image
    _stamp(
        f"criterion-09 transfer sweeps ({res.checked} multimap instances, "
        f"{emb.checked} embedding instances)", t0, 600)


def test_criterion_10_semitop_witness_cli():
    t0 = time.time()
    code, out = _run_cli("witness", "--target", "semitop_not_updown_closed",
                         "--nmax", "2")
    assert code == 1
    witness = json.loads(json.loads(out)["counterexample"])
    assert witness["opens"] == [[], [1], [0, 1]]   # Sierpinski
    assert witness["meet"] == [[0, 0], [0, 1]]     # min-meet
    _stamp("criterion-10 semitopological updown witness via CLI", t0)


def test_criterion_11_segment_ledger_cli():
    t0 = time.time()
    code, out = _run_cli("example", "71", "--ledger")
    assert code == 0
    rows = [json.loads(line) for line in out.strip().splitlines()]
    statuses = {r["claim"]: r["status"] for r in rows}
    assert all(s == "pass" for s in statuses.values())
    for required in (
        "71.reciprocal_chain_escapes_closure",
        "71.reciprocal_chain_delta_adherent",
        "71.euclidean_int_cl_identity_eps_3",
        "71.euclidean_int_cl_identity_eps_2",
        "71.punctured_int_cl_identity_eps_3",
        "71.punctured_int_cl_identity_eps_2",
        "71.delta_complete_left_open_unit_chain",
        "71.delta_complete_reciprocal_chain",
    ):
        assert statuses[required] == "pass"
    _stamp("criterion-11 segment-model ledger all-pass via CLI", t0, 5)


def test_criterion_12_grid_oracle_agreement():
    t0 = time.time()
    probes = probe_points()
    assert len(probes) == 1 + sum(
        sum(1 for p in range(1, q + 1) if __import__("math").gcd(p, q) == 1)
        for q in range(1, 33)
    )
    sets = corpus()
    assert len(sets) == 20
    for a in sets:
        cl = s71_closure(a)
        dcl = s71_delta_closure(a)
        for x in probes:
            assert cl.member(x) == grid_closure_member(x, a), (a, x)
            assert dcl.member(x) == grid_delta_member(x, a), (a, x)
    _stamp(
        f"criterion-12 grid-oracle agreement (20 sets x {len(probes)} probes)", t0)


def test_criterion_13_square_ledger_definitive():
    t0 = time.time()
    code, out = _run_cli("example", "72", "--ledger")
    assert code == 1  # the ledger faithfully reports source discrepancies
    rows = [json.loads(line) for line in out.strip().splitlines()]
    statuses = {r["claim"]: r["status"] for r in rows}
    assert statuses["72.basic_closure_identity"] == "pass"
    assert "indeterminate" not in statuses.values()
    assert statuses["72.interior_closure_identity"] == "fail"
    assert statuses["72.stated_extrema_orientation"] == "fail"
    assert statuses["72.meet_consistent_extrema"] == "pass"
    assert statuses["72.delta_incomplete_on_edge_chain"] == "fail"
    assert all(r["witness"] for r in rows)
    _stamp("criterion-13 square-model ledger definitive statuses via CLI", t0)


def test_criterion_14_enumeration_cross_checks():
    t0 = time.time()
    expected = {1: 1, 2: 4, 3: 29}
    for n, count in expected.items():
        assert len(enumerate_topologies(n)) == count
        assert brute_force_topology_count(n) == count
    for n in (1, 2, 3):
        assert set(t.rows for t in enumerate_meet_tables(n)) == set(
            t.rows for t in brute_force_meet_tables(n)
        )
    _stamp("criterion-14 enumeration cross-checks (1, 4, 29; dual-path meets)", t0)
