"""Finite topological spaces and the four closure operators.

A finite topology is stored as the explicit family of open sets (masks)
together with the derived minimal-neighborhood table; min_nbhd(x) is the
intersection of all opens containing x and is itself open, which is what
makes the operator tables below exact:

    cl(A)   = {x : min_nbhd(x) meets A}
    thcl(A) = {x : cl(min_nbhd(x)) meets A}
    dcl(A)  = {x : Int(cl(min_nbhd(x))) meets A}
    THcl(A) = least fixpoint of thcl above A
              (= intersection of all theta-closed supersets; both computed)

The definitional all-opens quantifications are kept as a second computation
path (closure_by_quantification) and the two are compared as a standing
invariant in the claim suite and tests.
"""

from __future__ import annotations

from .bitsets import bit_list, full_mask, iter_bits, subsets

MODES = ("plain", "delta", "theta", "bigtheta")
SEPARATION_PROPS = ("T1", "hausdorff", "urysohn", "regular")


class TopologyError(ValueError):
    """A family of sets fails the topology axioms; carries a witness."""

    def __init__(self, reason: str, witness=None):
        self.reason = reason
        self.witness = witness
        msg = reason if witness is None else f"{reason}: witness {witness}"
        super().__init__(msg)


class FiniteSpace:
    """A validated topology on {0..n-1}. Immutable once constructed."""

    __slots__ = (
        "n",
        "full",
        "opens",
        "opens_set",
        "closed",
        "closed_set",
        "min_nbhd",
        "_cl_min",
        "_icl_min",
        "_mode_tables",
        "_theta_closed_family",
        "_separation_cache",
        "_derived_cache",
    )

    def __init__(self, n: int, opens):
        if n < 1:
            raise TopologyError("carrier must have at least one element")
        full = full_mask(n)
        fam = sorted(set(opens))
        if any(u & ~full for u in fam):
            raise TopologyError("open set outside carrier", witness=fam)
        if 0 not in fam:
            raise TopologyError("empty set missing from the family")
        if full not in fam:
            raise TopologyError("full carrier missing from the family")
        fam_set = frozenset(fam)
        for u in fam:
            for v in fam:
                if u | v not in fam_set:
                    raise TopologyError("union closure fails", witness=(bit_list(u), bit_list(v)))
                if u & v not in fam_set:
                    raise TopologyError(
                        "intersection closure fails", witness=(bit_list(u), bit_list(v))
                    )
        self.n = n
        self.full = full
        self.opens = tuple(fam)
        self.opens_set = fam_set
        self.closed = tuple(sorted(full & ~u for u in fam))
        self.closed_set = frozenset(self.closed)
        mins = []
        for x in range(n):
            m = full
            for u in fam:
                if u >> x & 1:
                    m &= u
            mins.append(m)
        self.min_nbhd = tuple(mins)
        if any(m not in fam_set for m in mins):
            raise TopologyError("minimal neighborhood not open", witness=mins)
        # the specialization preorder must reconstruct the family exactly
        regen = set([0])
        frontier = set(mins)
        while frontier:
            regen |= frontier
            frontier = {a | b for a in regen for b in regen} - regen
        if regen != set(fam):
            raise TopologyError("family is not generated by minimal neighborhoods")
        self._cl_min = None
        self._icl_min = None
        self._mode_tables = {}
        self._theta_closed_family = None
        self._separation_cache = {}
        self._derived_cache = {}

    # -- core operators ----------------------------------------------------

    def closure(self, a: int, mode: str = "plain") -> int:
        if mode == "plain":
            return self._points_meeting(self.min_nbhd, a)
        if mode == "theta":
            return self._points_meeting(self._cl_min_table(), a)
        if mode == "delta":
            return self._points_meeting(self._icl_min_table(), a)
        if mode == "bigtheta":
            cur = a
            table = self._cl_min_table()
            while True:
                nxt = self._points_meeting(table, cur)
                if nxt == cur:
                    return cur
                cur = nxt
        raise ValueError(f"unknown closure mode {mode!r}")

    def interior(self, a: int) -> int:
        out = 0
        for x in iter_bits(a):
            if self.min_nbhd[x] & ~a == 0:
                out |= 1 << x
        return out

    def is_closed(self, a: int, mode: str = "plain") -> bool:
        return self.closure(a, mode) == a

    def _points_meeting(self, table, a: int) -> int:
        out = 0
        for x in range(self.n):
            if table[x] & a:
                out |= 1 << x
        return out

    def _cl_min_table(self):
        if self._cl_min is None:
            self._cl_min = tuple(self.closure(m) for m in self.min_nbhd)
        return self._cl_min

    def _icl_min_table(self):
        if self._icl_min is None:
            self._icl_min = tuple(self.interior(c) for c in self._cl_min_table())
        return self._icl_min

    def closure_table(self, mode: str) -> tuple[int, ...]:
        """closure(a, mode) for every mask a, indexed by mask."""
        table = self._mode_tables.get(mode)
        if table is None:
            table = tuple(self.closure(a, mode) for a in range(1 << self.n))
            self._mode_tables[mode] = table
        return table

    # -- definitional second path ------------------------------------------

    def closure_by_quantification(self, a: int, mode: str) -> int:
        """Same operators computed by quantifying over all opens / families."""
        if mode == "plain":
            out = self.full
            for c in self.closed:
                if a & ~c == 0:
                    out &= c
            return out
        if mode == "theta":
            out = 0
            for x in range(self.n):
                if all(self.closure(u) & a for u in self.opens if u >> x & 1):
                    out |= 1 << x
            return out
        if mode == "delta":
            out = 0
            for x in range(self.n):
                if all(
                    self.interior(self.closure(u)) & a for u in self.opens if u >> x & 1
                ):
                    out |= 1 << x
            return out
        if mode == "bigtheta":
            out = self.full
            for c in self.theta_closed_family():
                if a & ~c == 0:
                    out &= c
            return out
        raise ValueError(f"unknown closure mode {mode!r}")

    def theta_closed_family(self) -> tuple[int, ...]:
        if self._theta_closed_family is None:
            self._theta_closed_family = tuple(
                m for m in range(1 << self.n) if self.closure(m, "theta") == m
            )
        return self._theta_closed_family

    def delta_closed_family(self) -> tuple[int, ...]:
        return tuple(m for m in range(1 << self.n) if self.closure(m, "delta") == m)

    def derived(self, mode: str) -> "FiniteSpace":
        """Topology whose closed sets are the delta-closed (theta-closed) sets.

        Raises TopologyError if the family fails the axioms, which would
        falsify the derived-topology claims; the claim suite reports that as
        a failure rather than masking it.
        """
        cached = self._derived_cache.get(mode)
        if cached is not None:
            return cached
        if mode == "delta":
            fam = self.delta_closed_family()
        elif mode == "theta":
            fam = self.theta_closed_family()
        else:
            raise ValueError("derived topology exists for modes 'delta' and 'theta'")
        out = FiniteSpace(self.n, [self.full & ~c for c in fam])
        self._derived_cache[mode] = out
        return out

    # -- separation ---------------------------------------------------------

    def separation(self, prop: str) -> bool:
        cached = self._separation_cache.get(prop)
        if cached is not None:
            return cached
        if prop == "T1":
            ok = all(
                any(u >> x & 1 and not u >> y & 1 for u in self.opens)
                for x in range(self.n)
                for y in range(self.n)
                if x != y
            )
        elif prop == "hausdorff":
            ok = self._pairwise_separated(lambda u, v: u & v == 0)
        elif prop == "urysohn":
            ok = self._pairwise_separated(
                lambda u, v: self.closure(u) & self.closure(v) == 0
            )
        elif prop == "regular":
            ok = True
            for f in self.closed:
                for x in range(self.n):
                    if f >> x & 1:
                        continue
                    if not any(
                        u >> x & 1 and f & ~v == 0 and u & v == 0
                        for u in self.opens
                        for v in self.opens
                    ):
                        ok = False
        else:
            raise ValueError(f"unknown separation property {prop!r}")
        self._separation_cache[prop] = ok
        return ok

    def _pairwise_separated(self, good) -> bool:
        for x in range(self.n):
            for y in range(x + 1, self.n):
                if not any(
                    u >> x & 1 and v >> y & 1 and good(u, v)
                    for u in self.opens
                    for v in self.opens
                ):
                    return False
        return True

    # -- H-sets --------------------------------------------------------------

    def is_h_set(self, m: int, all_covers: bool = False) -> bool:
        """Every open cover of m has a finite subfamily whose closures cover m.

        Primary path quantifies over covers built from minimal neighborhoods,
        which suffices on finite spaces (any cover refines to the minimal
        neighborhoods of the covered points).  all_covers=True runs the
        definitional check over every subfamily of the topology; only
        sensible for small opens families.
        """
        if m == 0:
            return True
        if all_covers:
            if len(self.opens) > 12:
                raise ValueError("all-covers check limited to small opens families")
            pool = list(self.opens)
        else:
            pool = sorted(set(self.min_nbhd[x] for x in iter_bits(m)))
        families = [
            [pool[i] for i in iter_bits(pick)] for pick in subsets(full_mask(len(pool)))
        ]
        for fam in families:
            union = 0
            for u in fam:
                union |= u
            if m & ~union:
                continue  # not a cover of m
            # the family itself is the finite subfamily; closures only grow it
            closed_union = 0
            for u in fam:
                closed_union |= self.closure(u)
            if m & ~closed_union:
                return False
        return True

    def is_h_set_by_filters(self, m: int) -> bool:
        """Filter criterion: every filter meeting m has theta-adherence in m.

        On a finite carrier every filter is principal, so the quantification
        reduces to the filter bases {B : B >= F0}; ad_theta of such a filter
        is thcl(F0).  That principal-filter reduction is a theorem about
        finite spaces, recorded here rather than assumed silently elsewhere.
        """
        if m == 0:
            return True
        for f0 in range(1, 1 << self.n):
            if f0 & m and not (m & self.ad_theta([f0])):
                return False
        return True

    def ad_theta(self, family) -> int:
        """Intersection of theta closures of all members of a nonempty family."""
        family = list(family)
        if not family:
            raise ValueError("family must be nonempty")
        out = self.full
        for f in family:
            out &= self.closure(f, "theta")
        return out

    # -- misc ----------------------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, FiniteSpace)
            and self.n == other.n
            and self.opens == other.opens
        )

    def __hash__(self):
        return hash((self.n, self.opens))

    def __repr__(self):
        return f"FiniteSpace(n={self.n}, opens={[bit_list(u) for u in self.opens]})"


def make_space(n: int, opens) -> FiniteSpace:
    """Validate an explicit family of opens (masks); rejects non-topologies."""
    return FiniteSpace(n, opens)


def generate_topology(n: int, subbase) -> FiniteSpace:
    """Smallest topology containing the subbase.

    Finite intersections first (the empty intersection contributes the full
    carrier), then all unions (the empty union contributes the empty set).
    """
    from .kernels import intersection_closure, union_closure

    full = full_mask(n)
    base = intersection_closure(tuple(set(subbase)), full)
    fam = union_closure(tuple(base) + (0,))
    return FiniteSpace(n, fam)


def subset_compact(topology: FiniteSpace, s: int, all_covers: bool = False) -> bool:
    """Every open cover of s has a finite subcover.

    Fast path: on a finite carrier, picking one cover member per point of s
    is a finite subcover, so it suffices that covers exist at all (the full
    carrier is open).  all_covers=True enumerates every subfamily of the
    topology and verifies the finite subcover definitionally.
    """
    if all_covers:
        if len(topology.opens) > 12:
            raise ValueError("all-covers check limited to small opens families")
        pool = list(topology.opens)
        for pick in subsets(full_mask(len(pool))):
            fam = [pool[i] for i in iter_bits(pick)]
            union = 0
            for u in fam:
                union |= u
            if s & ~union:
                continue
            # per-point selection produces a finite subcover of the cover
            sub = []
            for x in iter_bits(s):
                sub.append(next(u for u in fam if u >> x & 1))
            covered = 0
            for u in sub:
                covered |= u
            if s & ~covered:
                return False
        return True
    for x in iter_bits(s):
        if not any(u >> x & 1 for u in topology.opens):
            return False
    return True


def product_space(a: FiniteSpace, b: FiniteSpace) -> FiniteSpace:
    """Product topology on pairs (x, y) encoded as x * b.n + y.

    Opens are generated by boxes U x V; on finite spaces this matches the
    minimal-neighborhood product used by the joint-continuity check.
    """
    boxes = set()
    for u in a.opens:
        for v in b.opens:
            box = 0
            for x in iter_bits(u):
                for y in iter_bits(v):
                    box |= 1 << (x * b.n + y)
            boxes.add(box)
    from .kernels import union_closure

    fam = union_closure(tuple(boxes) + (0,))
    return FiniteSpace(a.n * b.n, fam)


def space_from_preorder(n: int, rows: tuple[int, ...]) -> FiniteSpace:
    """Topology whose minimal neighborhoods are the preorder rows."""
    fam = {0}
    frontier = set(rows)
    while frontier:
        fam |= frontier
        frontier = {p | q for p in fam for q in fam} - fam
    return FiniteSpace(n, fam)


def sierpinski() -> FiniteSpace:
    """Two points with exactly one nontrivial open {1}."""
    return FiniteSpace(2, [0, 0b10, 0b11])


def w3_space() -> FiniteSpace:
    """Three points, opens {0},{2},{0,2}: the least theta-non-idempotent space."""
    return FiniteSpace(3, [0, 0b001, 0b100, 0b101, 0b111])
