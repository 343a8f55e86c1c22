"""Deterministic enumeration of finite topologies, meet tables and combined
models, with brute-force second paths for the small-carrier cross-checks.

Topologies on a labeled carrier correspond to reflexive transitive relations:
row x of the relation is the minimal neighborhood of x.  Relations are
scanned as binary counters over the off-diagonal cells ((0,1), (0,2), ...,
row-major), so the enumeration order is reproducible and documented.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterator

from .bitsets import full_mask
from .order import MeetTable, find_axiom_violation
from .semitopo import TopSemilattice
from .spaces import FiniteSpace, space_from_preorder

MAX_N_SINGLE = 5
MAX_N_COMBINED = 4

_topology_cache: dict[int, tuple[FiniteSpace, ...]] = {}
_meet_cache: dict[int, tuple[MeetTable, ...]] = {}


def _off_diagonal_cells(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(n) for j in range(n) if i != j]


def preorder_rows(n: int) -> Iterator[tuple[int, ...]]:
    """All reflexive transitive relations as row masks, counter order."""
    cells = _off_diagonal_cells(n)
    base = [1 << i for i in range(n)]
    for counter in range(1 << len(cells)):
        rows = base[:]
        for idx, (i, j) in enumerate(cells):
            if counter >> idx & 1:
                rows[i] |= 1 << j
        if _is_transitive(rows, n):
            yield tuple(rows)


def _is_transitive(rows, n: int) -> bool:
    for x in range(n):
        reach = rows[x]
        expanded = reach
        for y in range(n):
            if reach >> y & 1:
                expanded |= rows[y]
        if expanded != reach:
            return False
    return True


def enumerate_topologies(n: int) -> tuple[FiniteSpace, ...]:
    """One validated space per preorder; cached per carrier size."""
    if not 1 <= n <= MAX_N_SINGLE:
        raise ValueError(f"carrier size must be 1..{MAX_N_SINGLE}")
    if n not in _topology_cache:
        _topology_cache[n] = tuple(
            space_from_preorder(n, rows) for rows in preorder_rows(n)
        )
    return _topology_cache[n]


def brute_force_topology_count(n: int) -> int:
    """Count set families containing empty/full and closed under union and
    intersection, by scanning all families of subsets.  Feasible for n <= 3."""
    if n > 3:
        raise ValueError("brute-force family scan limited to n <= 3")
    nsets = 1 << n
    full = full_mask(n)
    count = 0
    for pick in range(1 << nsets):
        fam = [s for s in range(nsets) if pick >> s & 1]
        fam_set = set(fam)
        if 0 not in fam_set or full not in fam_set:
            continue
        if all(a | b in fam_set and a & b in fam_set for a in fam for b in fam):
            count += 1
    return count


def enumerate_meet_tables(n: int) -> tuple[MeetTable, ...]:
    """One table per labeled partial order with all binary greatest lower
    bounds; scan order inherited from preorder_rows."""
    if not 1 <= n <= MAX_N_SINGLE:
        raise ValueError(f"carrier size must be 1..{MAX_N_SINGLE}")
    if n not in _meet_cache:
        found = []
        for rows in preorder_rows(n):
            if not _is_antisymmetric(rows, n):
                continue
            table = _glb_table(rows, n)
            if table is not None:
                found.append(MeetTable(table))
        _meet_cache[n] = tuple(found)
    return _meet_cache[n]


def _is_antisymmetric(rows, n: int) -> bool:
    return all(
        not (rows[x] >> y & 1 and rows[y] >> x & 1)
        for x in range(n)
        for y in range(x + 1, n)
    )


def _glb_table(rows, n: int):
    """rows[x] is the up-set mask of x; the glb of {x, y} is the maximum of
    the common lower bounds, when it exists for every pair."""
    down = [0] * n
    for x in range(n):
        for y in range(n):
            if rows[x] >> y & 1:
                down[y] |= 1 << x
    table = [[0] * n for _ in range(n)]
    for x in range(n):
        for y in range(n):
            common = down[x] & down[y]
            glb = None
            for z in range(n):
                if common >> z & 1 and common & ~down[z] == 0:
                    glb = z
                    break
            if glb is None:
                return None
            table[x][y] = glb
    return table


def brute_force_meet_tables(n: int) -> tuple[MeetTable, ...]:
    """All n^(n*n) tables filtered by the three axioms.  Feasible for n <= 3."""
    if n > 3:
        raise ValueError("brute-force table scan limited to n <= 3")
    found = []
    for flat in product(range(n), repeat=n * n):
        rows = [flat[i * n : (i + 1) * n] for i in range(n)]
        if find_axiom_violation(rows) is None:
            found.append(MeetTable(rows))
    return tuple(found)


def enumerate_models(n: int) -> Iterator[TopSemilattice]:
    """Every (topology, meet table) pair; spaces and tables are shared
    objects so their operator caches amortize across the product."""
    if not 1 <= n <= MAX_N_COMBINED:
        raise ValueError(f"combined carrier size must be 1..{MAX_N_COMBINED}")
    for space in enumerate_topologies(n):
        for meet in enumerate_meet_tables(n):
            yield TopSemilattice(space, meet)


def models_up_to(n_max: int) -> Iterator[TopSemilattice]:
    for n in range(1, n_max + 1):
        yield from enumerate_models(n)


def model_count(n_max: int) -> int:
    return sum(
        len(enumerate_topologies(n)) * len(enumerate_meet_tables(n))
        for n in range(1, n_max + 1)
    )


FILTERS = {
    "updown_closed": lambda ts: ts.is_updown_closed("plain"),
    "delta_updown_closed": lambda ts: ts.is_updown_closed("delta"),
    "theta_updown_closed": lambda ts: ts.is_updown_closed("theta"),
    "theta_biclosed": lambda ts: ts.is_theta_biclosed(),
    "semitopological": lambda ts: ts.is_semitopological(),
    "topological": lambda ts: ts.is_topological(),
    "regular": lambda ts: ts.space.separation("regular"),
    "urysohn": lambda ts: ts.space.separation("urysohn"),
}


@dataclass(frozen=True)
class EnumSpec:
    """Bounds and filters for a claim-suite universe."""

    n_max: int
    structure: str = "topologized_semilattices"
    filters: tuple[str, ...] = field(default_factory=tuple)

    def __post_init__(self):
        limits = {
            "topologies": MAX_N_SINGLE,
            "meet_tables": MAX_N_SINGLE,
            "topologized_semilattices": MAX_N_COMBINED,
        }
        if self.structure not in limits:
            raise ValueError(f"unknown structure {self.structure!r}")
        if not 1 <= self.n_max <= limits[self.structure]:
            raise ValueError(
                f"n_max for {self.structure} must be 1..{limits[self.structure]}"
            )
        for name in self.filters:
            if name not in FILTERS:
                raise ValueError(f"unknown filter {name!r}")


def enumerate_structures(spec: EnumSpec):
    if spec.structure == "topologies":
        for n in range(1, spec.n_max + 1):
            yield from enumerate_topologies(n)
        return
    if spec.structure == "meet_tables":
        for n in range(1, spec.n_max + 1):
            yield from enumerate_meet_tables(n)
        return
    preds = [FILTERS[name] for name in spec.filters]
    for ts in models_up_to(spec.n_max):
        if all(p(ts) for p in preds):
            yield ts
