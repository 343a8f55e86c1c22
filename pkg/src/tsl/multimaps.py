"""Multi-valued maps, point maps, and the transfer-theorem checkers.

The checkers never assume the statement they probe: hypotheses and conclusion
are computed independently and reported as a four-state outcome, so a
hypotheses-true/conclusion-false instance is a recorded falsification, not an
error path.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bitsets import bit_list, iter_bits
from .semitopo import TopSemilattice
from .spaces import FiniteSpace


def ti_closed(space: FiniteSpace, f: int, i: int) -> bool:
    """T1: points outside f have an open neighborhood missing f (iff closed);
    T2: a neighborhood whose closure misses f (iff theta-closed)."""
    if i == 1:
        good = lambda u: u & f == 0
    elif i == 2:
        good = lambda u: space.closure(u) & f == 0
    else:
        raise ValueError("i must be 1 or 2")
    for x in range(space.n):
        if f >> x & 1:
            continue
        if not any(u >> x & 1 and good(u) for u in space.opens):
            return False
    return True


class MultiMap:
    """Per-point subsets of the codomain carrier; arbitrary values allowed,
    the theorem checkers reject empty ones."""

    __slots__ = ("dom", "cod", "values")

    def __init__(self, dom: TopSemilattice, cod: TopSemilattice, values):
        values = tuple(values)
        if len(values) != dom.n:
            raise ValueError("one value mask per domain point")
        if any(v & ~cod.space.full for v in values):
            raise ValueError("value outside the codomain carrier")
        self.dom = dom
        self.cod = cod
        self.values = values

    def image(self, a: int) -> int:
        out = 0
        for x in iter_bits(a):
            out |= self.values[x]
        return out

    def preimage(self, b: int) -> int:
        out = 0
        for x in range(self.dom.n):
            if self.values[x] & b:
                out |= 1 << x
        return out

    def is_multimorphism(self) -> bool:
        meet_mask = self.cod.meet.meet_mask
        rows = self.dom.meet.rows
        v = self.values
        return all(
            meet_mask(v[x], v[y]) & ~v[rows[x][y]] == 0
            for x in range(self.dom.n)
            for y in range(self.dom.n)
        )

    def is_upper_semicontinuous(self) -> bool:
        return all(
            self.preimage(f) in self.dom.space.closed_set for f in self.cod.space.closed
        )

    def values_ti_closed(self, i: int) -> bool:
        return all(ti_closed(self.cod.space, v, i) for v in self.values)

    def is_ti_multimorphism(self, i: int) -> bool:
        return self.is_multimorphism() and self.values_ti_closed(i)

    def __repr__(self):
        return f"MultiMap(values={[bit_list(v) for v in self.values]})"


class PointMap:
    """A total single-valued map between two models."""

    __slots__ = ("dom", "cod", "images")

    def __init__(self, dom: TopSemilattice, cod: TopSemilattice, images):
        images = tuple(images)
        if len(images) != dom.n or any(not (0 <= e < cod.n) for e in images):
            raise ValueError("images must assign a codomain point to every point")
        self.dom = dom
        self.cod = cod
        self.images = images

    def image_mask(self, a: int) -> int:
        out = 0
        for x in iter_bits(a):
            out |= 1 << self.images[x]
        return out

    def preimage_mask(self, b: int) -> int:
        out = 0
        for x in range(self.dom.n):
            if b >> self.images[x] & 1:
                out |= 1 << x
        return out

    def is_homomorphism(self) -> bool:
        h = self.images
        return all(
            h[self.dom.meet.rows[x][y]] == self.cod.meet.rows[h[x]][h[y]]
            for x in range(self.dom.n)
            for y in range(self.dom.n)
        )

    def is_continuous(self) -> bool:
        return all(
            self.preimage_mask(u) in self.dom.space.opens_set for u in self.cod.space.opens
        )

    def is_closed_map(self) -> bool:
        return all(
            self.image_mask(c) in self.cod.space.closed_set for c in self.dom.space.closed
        )

    def is_retraction(self) -> bool:
        if self.dom is not self.cod and self.dom != self.cod:
            raise ValueError("a retraction needs equal domain and codomain")
        h = self.images
        return all(h[h[x]] == h[x] for x in range(self.dom.n)) and self.is_continuous()

    def fibers(self, restrict_to_image: bool = False) -> MultiMap:
        """The fiber multimap e -> h^{-1}(e) on the codomain (or its image)."""
        cod = self.cod
        images = set(self.images)
        if len(images) < cod.n:
            if not restrict_to_image:
                raise ValueError("map is not surjective; empty fiber")
            mask = 0
            for e in images:
                mask |= 1 << e
            cod = self.cod.sub(mask)
            relabel = {e: i for i, e in enumerate(bit_list(mask))}
            values = [0] * cod.n
            for x, e in enumerate(self.images):
                values[relabel[e]] |= 1 << x
            return MultiMap(cod, self.dom, values)
        values = [0] * cod.n
        for x, e in enumerate(self.images):
            values[e] |= 1 << x
        return MultiMap(cod, self.dom, values)


def is_retraction_map(space: FiniteSpace, images) -> bool:
    """Space-level retraction test (idempotent and continuous)."""
    images = tuple(images)
    if any(images[images[x]] != images[x] for x in range(space.n)):
        return False
    for u in space.opens:
        pre = 0
        for x in range(space.n):
            if u >> images[x] & 1:
                pre |= 1 << x
        if pre not in space.opens_set:
            return False
    return True


@dataclass(frozen=True)
class TheoremOutcome:
    """Joint record of the evaluated hypotheses and the conclusion.

    conclusion is None when a side of it is undefined (for the multimap
    transfer statement: a value set that is not meet-closed cannot carry the
    sub-model structure); that can only happen with failed hypotheses.
    """

    hypotheses: tuple[tuple[str, bool], ...]
    conclusion: bool | None
    witness: str | None = None

    @property
    def hypotheses_hold(self) -> bool:
        return all(v for _, v in self.hypotheses)

    @property
    def status(self) -> str:
        h = "hyp" if self.hypotheses_hold else "nohyp"
        if self.conclusion is None:
            c = "undefined"
        else:
            c = "concl" if self.conclusion else "noconcl"
        return f"{h}+{c}"

    @property
    def falsifies(self) -> bool:
        return self.hypotheses_hold and self.conclusion is False


def _complete_submodel(ts: TopSemilattice, mask: int) -> bool | None:
    """Plain completeness of the sub-model on mask, None when undefined."""
    if mask == 0:
        return None
    if ts.meet.meet_mask(mask, mask) & ~mask:
        return None
    return ts.sub(mask).is_complete("plain")


def check_transfer_theorem(phi: MultiMap) -> TheoremOutcome:
    """Monotone-condition transfer of completeness along a multimap.

    Hypotheses: domain complete, codomain updown-closed, the map an upper
    semicontinuous T1 multimorphism, and for x <= y the value of x meets the
    up-closure of the value of y only inside the value of y.  Conclusion:
    the full image is a complete sub-model iff every value is.
    """
    if any(v == 0 for v in phi.values):
        raise ValueError("theorem checker requires nonempty values")
    dom, cod = phi.dom, phi.cod
    up = cod.order
    mono = True
    for x in range(dom.n):
        for y in iter_bits(dom.order.up_set(x)):
            target = 0
            for b in iter_bits(phi.values[y]):
                target |= up.up_set(b)
            if phi.values[x] & target & ~phi.values[y]:
                mono = False
    hyps = (
        ("dom_complete", dom.is_complete("plain")),
        ("cod_updown_closed", cod.is_updown_closed("plain")),
        ("upper_semicontinuous", phi.is_upper_semicontinuous()),
        ("t1_values", phi.values_ti_closed(1)),
        ("multimorphism", phi.is_multimorphism()),
        ("monotone_condition", mono),
    )
    lhs = _complete_submodel(cod, phi.image(dom.space.full))
    rhs_parts = [_complete_submodel(cod, v) for v in phi.values]
    if lhs is None or any(p is None for p in rhs_parts):
        conclusion = None
        witness = "a value set (or the full image) is not meet-closed"
    else:
        rhs = all(rhs_parts)
        conclusion = lhs == rhs
        witness = f"image complete={lhs}, all values complete={rhs}"
    return TheoremOutcome(hyps, conclusion, witness)


def check_disjoint_corollary(phi: MultiMap) -> TheoremOutcome:
    """Disjoint-values variant of the transfer statement.

    Also verifies the derived fact used in its proof: strictly comparable
    points have values with disjoint upper fringes (at x = y the stated form
    is violated by any nonempty value, and the proof's contradiction needs
    distinct points, so the strict form is what is checkable).
    """
    if any(v == 0 for v in phi.values):
        raise ValueError("theorem checker requires nonempty values")
    dom, cod = phi.dom, phi.cod
    disjoint = all(
        phi.values[x] & phi.values[y] == 0
        for x in range(dom.n)
        for y in range(x + 1, dom.n)
    )
    hyps = (
        ("dom_complete", dom.is_complete("plain")),
        ("cod_updown_closed", cod.is_updown_closed("plain")),
        ("upper_semicontinuous", phi.is_upper_semicontinuous()),
        ("t1_values", phi.values_ti_closed(1)),
        ("multimorphism", phi.is_multimorphism()),
        ("disjoint_values", disjoint),
    )
    lhs = _complete_submodel(cod, phi.image(dom.space.full))
    rhs_parts = [_complete_submodel(cod, v) for v in phi.values]
    derived_ok = True
    for x in range(dom.n):
        for y in iter_bits(dom.order.up_set(x)):
            if y == x:
                continue
            target = 0
            for b in iter_bits(phi.values[y]):
                target |= cod.order.up_set(b)
            if phi.values[x] & target:
                derived_ok = False
    if lhs is None or any(p is None for p in rhs_parts):
        conclusion = None
        witness = "a value set (or the full image) is not meet-closed"
    else:
        rhs = all(rhs_parts)
        conclusion = lhs == rhs
        witness = (
            f"image complete={lhs}, all values complete={rhs}, "
            f"derived disjoint-fringe fact={derived_ok}"
        )
    if all(v for _, v in hyps) and not derived_ok:
        # proof-step falsification is surfaced through the conclusion field
        conclusion = False
    return TheoremOutcome(hyps, conclusion, witness)


def check_closed_embedding_theorem(
    y: TopSemilattice,
    sub_mask: int,
    e: TopSemilattice,
    images,
    regular_variant: bool = False,
) -> TheoremOutcome:
    """Closedness of a subsemilattice from a fiber-closed homomorphism.

    Main form: ambient model topological, map a closed homomorphism into a
    complete model, fibers theta-closed in the ambient space; conclusion:
    the subsemilattice is closed.  Regular variant: ambient regular and
    semitopological, fibers plainly closed.
    """
    if y.meet.meet_mask(sub_mask, sub_mask) & ~sub_mask:
        raise ValueError("subset is not a subsemilattice")
    images = tuple(images)
    points = bit_list(sub_mask)
    if len(images) != len(points):
        raise ValueError("one image per subsemilattice point")
    if sub_mask == 0:
        sub_ts = None
        hom = True
        closed_map = True
    else:
        sub_ts = y.sub(sub_mask)
        h = PointMap(sub_ts, e, images)
        hom = h.is_homomorphism()
        closed_map = h.is_closed_map()
    fibers_ok = True
    mode = "plain" if regular_variant else "theta"
    for target in range(e.n):
        fiber = 0
        for i, p in enumerate(points):
            if images[i] == target:
                fiber |= 1 << p
        if not y.space.is_closed(fiber, mode):
            fibers_ok = False
    if regular_variant:
        ambient = (
            ("cod_regular", y.space.separation("regular")),
            ("cod_semitopological", y.is_semitopological()),
        )
    else:
        ambient = (("cod_topological", y.is_topological()),)
    hyps = ambient + (
        ("closed_map", closed_map),
        ("homomorphism", hom),
        ("target_complete", e.is_complete("plain")),
        (("fibers_closed" if regular_variant else "fibers_theta_closed"), fibers_ok),
    )
    conclusion = y.space.is_closed(sub_mask)
    witness = f"subsemilattice {bit_list(sub_mask)} closed={conclusion}"
    return TheoremOutcome(hyps, conclusion, witness)
