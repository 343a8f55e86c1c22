#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Covers the three hot loops: subbase-closure fixpoints (weak-topology
generation), the transfer-theorem sweep, and the embedding sweep.  Run:

    python benchmarks/bench_kernels.py [--nmax 3]
"""

import argparse
import random
import time

from tsl.kernels import available_backends, load_backend
from tsl.sweeps import _cod_tables, _dom_tables, sweep_models


def time_union_closure(backend, batches):
    t0 = time.perf_counter()
    for masks in batches:
        backend.union_closure(masks)
        backend.intersection_closure(masks, (1 << 9) - 1)
    return time.perf_counter() - t0


def time_transfer(backend, pair_args):
    t0 = time.perf_counter()
    for args in pair_args:
        backend.sweep_transfer_pair(*args)
    return time.perf_counter() - t0


def time_embedding(backend, site_args):
    t0 = time.perf_counter()
    for args in site_args:
        backend.sweep_embedding_site(*args)
    return time.perf_counter() - t0


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--nmax", type=int, default=3)
    parser.add_argument("--pairs", type=int, default=400)
    args = parser.parse_args()

    rng = random.Random(2024)
    batches = [
        tuple(rng.randrange(1, 1 << 9) for _ in range(12)) for _ in range(3000)
    ]

    models = sweep_models(args.nmax)
    dom_tabs = [_dom_tables(ts) for ts in models]
    cod_tabs = [_cod_tables(ts) for ts in models]
    eligible = [
        (d, c)
        for d, dt in enumerate(dom_tabs) if dt.complete
        for c, ct in enumerate(cod_tabs) if ct.updown
    ]
    rng.shuffle(eligible)
    pair_args = []
    for d, c in eligible[: args.pairs]:
        dt, ct = dom_tabs[d], cod_tabs[c]
        pair_args.append((
            models[d].n, dt.meet_flat, dt.leq_pairs, dt.closed_flags,
            models[c].n, ct.t1_values, ct.vmeet_flat, ct.upset,
            ct.complete_sub, ct.closed,
        ))

    site_args = []
    for _ in range(2000):
        site_args.append((
            3, 3,
            (0, 0, 0, 0, 1, 0, 0, 0, 2),
            (0, 1, 2),
            (0, 0, 0, 0, 1, 0, 0, 0, 2),
            bytes([1] + [rng.randrange(2) for _ in range(7)]),
            (0b000, 0b001, 0b011, 0b111),
            bytes([1] + [rng.randrange(2) for _ in range(7)]),
        ))

    rows = []
    for name in available_backends():
        backend = load_backend(name)
        rows.append((
            name,
            time_union_closure(backend, batches),
            time_transfer(backend, pair_args),
            time_embedding(backend, site_args),
        ))

    print(f"{'backend':10s} {'closure-fixpoints':>18s} {'transfer-sweep':>15s} "
          f"{'embedding-sweep':>16s}")
    for name, t_cl, t_tr, t_em in rows:
        print(f"{name:10s} {t_cl:17.3f}s {t_tr:14.3f}s {t_em:15.3f}s")
    if len(rows) == 2:
        base = rows[0] if rows[0][0] == "pure" else rows[1]
        fast = rows[1] if rows[0][0] == "pure" else rows[0]
        print("speedup   " + " ".join(
            f"{base[i] / fast[i]:17.1f}x" for i in (1, 2, 3)
        ))


if __name__ == "__main__":
    main()
