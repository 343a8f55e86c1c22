"""Topologized semilattices: continuity, closedness variants, completeness
notions, the five weakened topologies, and directed theta-convergence."""

from __future__ import annotations

from .bitsets import bit_list, iter_bits
from .order import MeetTable
from .spaces import FiniteSpace, generate_topology, subset_compact

WEAK_MODES = ("chain", "star", "delta_chain", "theta_chain", "bigtheta_chain")


class TopSemilattice:
    """A finite topology and a meet table sharing one carrier."""

    __slots__ = ("space", "meet", "order", "n", "_weak_cache", "_flag_cache")

    def __init__(self, space: FiniteSpace, meet: MeetTable):
        if space.n != meet.n:
            raise ValueError("space and meet table must share one carrier")
        self.space = space
        self.meet = meet
        self.order = meet.order
        self.n = space.n
        self._weak_cache = {}
        self._flag_cache = {}

    # -- continuity ----------------------------------------------------------

    def is_semitopological(self) -> bool:
        """Each translation x -> meet(a, x) is continuous."""
        flag = self._flag_cache.get("semitop")
        if flag is None:
            flag = True
            for a in range(self.n):
                row = self.meet.rows[a]
                for u in self.space.opens:
                    pre = 0
                    for x in range(self.n):
                        if u >> row[x] & 1:
                            pre |= 1 << x
                    if pre not in self.space.opens_set:
                        flag = False
                        break
                if not flag:
                    break
            self._flag_cache["semitop"] = flag
        return flag

    def is_topological(self) -> bool:
        """The meet is jointly continuous for the product topology.

        The product of finite spaces is determined by the products of minimal
        neighborhoods, so joint continuity at (x, y) says exactly that the
        meet-image of min_nbhd(x) x min_nbhd(y) sits inside min_nbhd(xy).
        The explicit product space path is kept in the tests.
        """
        flag = self._flag_cache.get("top")
        if flag is None:
            mn = self.space.min_nbhd
            flag = all(
                self.meet.meet_mask(mn[x], mn[y]) & ~mn[self.meet.rows[x][y]] == 0
                for x in range(self.n)
                for y in range(self.n)
            )
            self._flag_cache["top"] = flag
        return flag

    # -- closedness of cones ---------------------------------------------------

    def is_updown_closed(self, mode: str = "plain") -> bool:
        """Up-sets and down-sets of points are mode-closed (plain/delta/theta)."""
        key = ("updown", mode)
        flag = self._flag_cache.get(key)
        if flag is None:
            flag = all(
                self.space.is_closed(self.order.up_set(x), mode)
                and self.space.is_closed(self.order.down_set(x), mode)
                for x in range(self.n)
            )
            self._flag_cache[key] = flag
        return flag

    def is_theta_biclosed(self) -> bool:
        """The two-sided cone of every point is theta-closed."""
        flag = self._flag_cache.get("biclosed")
        if flag is None:
            flag = all(
                self.space.is_closed(self.order.updown_set(x), "theta")
                for x in range(self.n)
            )
            self._flag_cache["biclosed"] = flag
        return flag

    # -- completeness -----------------------------------------------------------

    def is_complete(self, mode: str = "plain") -> bool:
        """Every nonempty chain has inf and sup inside its mode-closure."""
        key = ("complete", mode)
        flag = self._flag_cache.get(key)
        if flag is None:
            table = self.space.closure_table(mode)
            flag = True
            for c in self.meet.chains():
                closure = table[c]
                lo = self.order.chain_inf(c)
                hi = self.order.chain_sup(c)
                if not (closure >> lo & 1 and closure >> hi & 1):
                    flag = False
                    break
            self._flag_cache[key] = flag
        return flag

    # -- weakened topologies -----------------------------------------------------

    def weak_topology(self, mode: str) -> FiniteSpace:
        """Topology generated by complements of the mode's distinguished sets.

        chain: closed chains; star: closed subsemilattices (the empty set
        counts by convention, its complement is the full carrier);
        delta_chain: delta-closed chains; theta_chain: theta-closures of
        chains; bigtheta_chain: theta-closed chains.
        """
        cached = self._weak_cache.get(mode)
        if cached is not None:
            return cached
        full = self.space.full
        if mode == "chain":
            sets = [c for c in self.meet.chains() if self.space.is_closed(c)]
        elif mode == "star":
            sets = [s for s in self.meet.subsemilattices() if self.space.is_closed(s)]
        elif mode == "delta_chain":
            sets = [c for c in self.meet.chains() if self.space.is_closed(c, "delta")]
        elif mode == "theta_chain":
            table = self.space.closure_table("theta")
            sets = sorted(set(table[c] for c in self.meet.chains()))
        elif mode == "bigtheta_chain":
            sets = [c for c in self.meet.chains() if self.space.is_closed(c, "theta")]
        else:
            raise ValueError(f"unknown weak topology mode {mode!r}")
        topo = generate_topology(self.n, [full & ~s for s in sets])
        self._weak_cache[mode] = topo
        return topo

    def subsemilattices(self) -> tuple[int, ...]:
        return self.meet.subsemilattices()

    # -- directed convergence ------------------------------------------------------

    def theta_converges(self, d: int, x: int, direction: str,
                        all_opens: bool = False) -> bool:
        """Directed set d theta-converges to x from the given direction.

        up: for every open U around x some d0 in d has d & upset(d0) inside
        cl(U); down uses down-sets.  Raises if d is not directed the right way.
        The minimal neighborhood of x is the binding U (closure is monotone),
        so the default checks only it; all_opens=True quantifies literally.
        """
        if direction == "up":
            if not self.order.is_up_directed(d):
                raise ValueError("set is not up-directed")
            cones = self.order.up
        elif direction == "down":
            if not self.order.is_down_directed(d):
                raise ValueError("set is not down-directed")
            cones = self.order.down
        else:
            raise ValueError("direction must be 'up' or 'down'")
        if all_opens:
            nbhds = [u for u in self.space.opens if u >> x & 1]
        else:
            nbhds = [self.space.min_nbhd[x]]
        for u in nbhds:
            cl_u = self.space.closure(u)
            if not any(d & cones[d0] & ~cl_u == 0 for d0 in iter_bits(d)):
                return False
        return True

    # -- substructures ----------------------------------------------------------

    def sub(self, mask: int) -> "TopSemilattice":
        """Sub-model on a meet-closed subset: subspace topology, restricted meet."""
        points = bit_list(mask)
        if not points:
            raise ValueError("submodel needs a nonempty carrier")
        pos = {p: i for i, p in enumerate(points)}
        if self.meet.meet_mask(mask, mask) & ~mask:
            raise ValueError("subset is not meet-closed")
        rows = [[pos[self.meet.rows[p][q]] for q in points] for p in points]
        opens = set()
        for u in self.space.opens:
            t = 0
            for p in points:
                if u >> p & 1:
                    t |= 1 << pos[p]
            opens.add(t)
        return TopSemilattice(FiniteSpace(len(points), opens), MeetTable(rows))

    def __eq__(self, other):
        return (
            isinstance(other, TopSemilattice)
            and self.space == other.space
            and self.meet == other.meet
        )

    def __hash__(self):
        return hash((self.space, self.meet))

    def __repr__(self):
        return f"TopSemilattice({self.space!r}, {self.meet!r})"


def is_compact_in(ts: TopSemilattice, topology: FiniteSpace, s: int,
                  all_covers: bool = False) -> bool:
    """Compactness of s in an alternative topology on the model's carrier."""
    if topology.n != ts.n:
        raise ValueError("topology must live on the model's carrier")
    return subset_compact(topology, s, all_covers=all_covers)


def min_meet_chain(n: int) -> MeetTable:
    """The linear order 0 < 1 < ... < n-1 with meet = min."""
    return MeetTable([[min(x, y) for y in range(n)] for x in range(n)])
