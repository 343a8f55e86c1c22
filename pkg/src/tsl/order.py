"""Finite meet-semilattices, the induced partial order, chains and directed sets.

Elements are dense indices 0..n-1; subsets are int bitmasks (see bitsets).
The empty set is not a chain and is neither up- nor down-directed: the
completeness notions downstream quantify over non-empty chains only, so the
predicates return False on mask 0 by convention.
"""

from __future__ import annotations

from .bitsets import bit_list, full_mask, iter_bits


class AxiomError(ValueError):
    """A semilattice axiom failed; carries the axiom name and a witness triple."""

    def __init__(self, axiom: str, witness: tuple[int, ...]):
        self.axiom = axiom
        self.witness = witness
        super().__init__(f"{axiom} fails at {witness}")


def find_axiom_violation(rows) -> tuple[str, tuple[int, ...]] | None:
    """Exhaustive idempotence/commutativity/associativity check.

    Returns (axiom name, witness indices) for the first violation in scan
    order, or None if the table is a valid meet table.  Entries must already
    be in range.
    """
    n = len(rows)
    for x in range(n):
        if rows[x][x] != x:
            return ("idempotence", (x,))
    for x in range(n):
        for y in range(x + 1, n):
            if rows[x][y] != rows[y][x]:
                return ("commutativity", (x, y))
    for x in range(n):
        for y in range(n):
            xy = rows[x][y]
            for z in range(n):
                if rows[xy][z] != rows[x][rows[y][z]]:
                    return ("associativity", (x, y, z))
    return None


class MeetTable:
    """A validated n x n meet table. Immutable once constructed."""

    __slots__ = ("n", "rows", "order", "_chains", "_subsemis", "_meet_mask_cache")

    def __init__(self, rows):
        rows = tuple(tuple(r) for r in rows)
        n = len(rows)
        if n < 1:
            raise ValueError("carrier must have at least one element")
        for r in rows:
            if len(r) != n or any(not (0 <= v < n) for v in r):
                raise ValueError("table entries must be indices in 0..n-1")
        violation = find_axiom_violation(rows)
        if violation is not None:
            raise AxiomError(*violation)
        self.n = n
        self.rows = rows
        self.order = OrderRelation.from_meet(self)
        self._chains = None
        self._subsemis = None
        self._meet_mask_cache = {}

    def meet(self, x: int, y: int) -> int:
        return self.rows[x][y]

    def meet_mask(self, a: int, b: int) -> int:
        """Mask of {meet(x, y) : x in a, y in b}."""
        key = (a, b)
        cached = self._meet_mask_cache.get(key)
        if cached is not None:
            return cached
        out = 0
        for x in iter_bits(a):
            row = self.rows[x]
            for y in iter_bits(b):
                out |= 1 << row[y]
        self._meet_mask_cache[key] = out
        return out

    def chains(self) -> tuple[int, ...]:
        """All nonempty chains, each once, lexicographic on sorted index lists."""
        if self._chains is None:
            o = self.order
            found = [m for m in range(1, 1 << self.n) if o.is_chain(m)]
            found.sort(key=bit_list)
            self._chains = tuple(found)
        return self._chains

    def subsemilattices(self) -> tuple[int, ...]:
        """All meet-closed subsets, including 0 by convention, ascending."""
        if self._subsemis is None:
            out = []
            for m in range(1 << self.n):
                if self.meet_mask(m, m) | m == m:
                    out.append(m)
            self._subsemis = tuple(out)
        return self._subsemis

    def __eq__(self, other):
        return isinstance(other, MeetTable) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"MeetTable({list(map(list, self.rows))!r})"


def validate_meet(rows) -> MeetTable:
    """Validate a raw table; raises AxiomError naming axiom and witness."""
    return MeetTable(rows)


class OrderRelation:
    """Partial order as per-element up-set / down-set masks."""

    __slots__ = ("n", "up", "down")

    def __init__(self, n: int, up: tuple[int, ...]):
        self.n = n
        self.up = up
        down = [0] * n
        for x in range(n):
            for y in iter_bits(up[x]):
                down[y] |= 1 << x
        self.down = tuple(down)

    @classmethod
    def from_meet(cls, table: MeetTable) -> "OrderRelation":
        n = table.n
        up = []
        for x in range(n):
            m = 0
            for y in range(n):
                if table.rows[x][y] == x:
                    m |= 1 << y
            up.append(m)
        return cls(n, tuple(up))

    def leq(self, x: int, y: int) -> bool:
        return bool(self.up[x] >> y & 1)

    def up_set(self, x: int) -> int:
        return self.up[x]

    def down_set(self, x: int) -> int:
        return self.down[x]

    def updown_set(self, x: int) -> int:
        return self.up[x] | self.down[x]

    def comparable(self, x: int, y: int) -> bool:
        return self.leq(x, y) or self.leq(y, x)

    def is_chain(self, mask: int) -> bool:
        if mask == 0:
            return False
        for x in iter_bits(mask):
            # every other member must be comparable to x
            if mask & ~(self.up[x] | self.down[x]):
                return False
        return True

    def is_up_directed(self, mask: int) -> bool:
        if mask == 0:
            return False
        for x in iter_bits(mask):
            for y in iter_bits(mask):
                if not (self.up[x] & self.up[y] & mask):
                    return False
        return True

    def is_down_directed(self, mask: int) -> bool:
        if mask == 0:
            return False
        for x in iter_bits(mask):
            for y in iter_bits(mask):
                if not (self.down[x] & self.down[y] & mask):
                    return False
        return True

    def minimum_of(self, mask: int) -> int | None:
        for x in iter_bits(mask):
            if mask & ~self.up[x] == 0:
                return x
        return None

    def maximum_of(self, mask: int) -> int | None:
        for x in iter_bits(mask):
            if mask & ~self.down[x] == 0:
                return x
        return None

    def chain_inf(self, mask: int) -> int:
        """Minimum of a nonempty chain, verified to be the glb in the carrier."""
        if not self.is_chain(mask):
            raise ValueError("not a nonempty chain")
        m = self.minimum_of(mask)
        assert m is not None
        # a finite chain contains its glb: no strictly tighter lower bound exists
        lower = full_mask(self.n)
        for x in iter_bits(mask):
            lower &= self.down[x]
        assert lower & ~self.down[m] == 0, "lower bound above the chain minimum"
        return m

    def chain_sup(self, mask: int) -> int:
        """Maximum of a nonempty chain, verified to be the lub in the carrier."""
        if not self.is_chain(mask):
            raise ValueError("not a nonempty chain")
        m = self.maximum_of(mask)
        assert m is not None
        upper = full_mask(self.n)
        for x in iter_bits(mask):
            upper &= self.up[x]
        assert upper & ~self.up[m] == 0, "upper bound below the chain maximum"
        return m

    def __eq__(self, other):
        return isinstance(other, OrderRelation) and self.up == other.up

    def __hash__(self):
        return hash(self.up)


def induced_order(table: MeetTable) -> OrderRelation:
    """The order x <= y iff meet(x, y) = x."""
    return table.order
