"""Pure-Python kernels: the hot inner loops behind generate_topology and the
exhaustive multimap sweeps.

The compiled extension (tsl._ckernels) implements the same functions with the
same semantics; tsl.kernels selects one at import time.  Keep the two in
lockstep: the equivalence tests compare them output-for-output.
"""

from __future__ import annotations

BACKEND = "pure"


def union_closure(masks):
    """Close a family of masks under pairwise union; sorted tuple.

    Every union of family members is a union of the generators, so the
    closure is reached by repeatedly joining one generator at a time.
    """
    gens = tuple(set(masks))
    fam = set(gens)
    frontier = list(fam)
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                u = a | g
                if u not in fam:
                    fam.add(u)
                    nxt.append(u)
        frontier = nxt
    return tuple(sorted(fam))


def intersection_closure(masks, full):
    """Close under pairwise intersection, seeding the empty intersection."""
    gens = tuple(set(masks))
    fam = set(gens)
    fam.add(full)
    frontier = list(fam)
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                u = a & g
                if u not in fam:
                    fam.add(u)
                    nxt.append(u)
        frontier = nxt
    return tuple(sorted(fam))


def sweep_transfer_pair(
    k,
    dmeet,            # flat k*k meet table of the domain model
    dleq,             # flat strict leq pairs (x0,y0,x1,y1,...), x<y in the order
    dclosed,          # bytes of length 2**k: 1 if the mask is closed in dom
    m,
    t1_values,        # ascending tuple of nonempty T1-closed masks of cod
    vmeet,            # flat (2**m)*(2**m): mask of pairwise meets of two masks
    upset,            # tuple 2**m: union of up-sets of the mask's members
    complete_sub,     # bytes 2**m: 1 complete sub-model, 0 not, 2 not meet-closed
    cclosed,          # tuple of closed masks of cod
):
    """Evaluate every multimap built from T1-closed values on one model pair.

    Returns (evaluated, hyp_mono, hyp_disj, cx_mono, cx_disj, cx_derived):
    counts of hypothesis-true instances for the monotone-condition theorem and
    the disjointness corollary, the first (lexicographic) counterexample tuple
    for each conclusion, and the first disjointness instance violating the
    derived fact that strictly comparable points have disjoint upper fringes.
    Tuples not drawn from t1_values are hypothesis-false and are accounted by
    the caller arithmetically.
    """
    if not 1 <= k <= 6 or not 1 <= m <= 6:
        raise ValueError("sweep kernels support carriers up to 6 points")
    evaluated = 0
    hyp_mono = 0
    hyp_disj = 0
    cx_mono = None
    cx_disj = None
    cx_derived = None
    npairs = len(dleq) // 2
    nvals = len(t1_values)
    if nvals == 0:
        return 0, 0, 0, None, None, None
    idx = [0] * k
    values = [t1_values[0]] * k
    first = t1_values[0]
    while True:
        evaluated += 1
        ok = True
        # multimorphism: value-products land inside the meet's value
        for x in range(k):
            vx = values[x]
            base = x * k
            vrow = (vx << m)
            for y in range(x + 1):
                if vmeet[vrow + values[y]] & ~values[dmeet[base + y]]:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            # upper semicontinuity: preimages of closed sets are closed
            for f in cclosed:
                pre = 0
                for x in range(k):
                    if values[x] & f:
                        pre |= 1 << x
                if not dclosed[pre]:
                    ok = False
                    break
        if ok:
            mono = True
            for i in range(npairs):
                x = dleq[2 * i]
                y = dleq[2 * i + 1]
                if values[x] & upset[values[y]] & ~values[y]:
                    mono = False
                    break
            disj = True
            for x in range(k):
                vx = values[x]
                for y in range(x + 1, k):
                    if vx & values[y]:
                        disj = False
                        break
                if not disj:
                    break
            if mono or disj:
                union = 0
                rhs = True
                for x in range(k):
                    union |= values[x]
                    if complete_sub[values[x]] != 1:
                        rhs = False
                lhs = complete_sub[union]
                conclusion = (lhs == 1) == rhs
                if mono:
                    hyp_mono += 1
                    if not conclusion and cx_mono is None:
                        cx_mono = tuple(values)
                if disj:
                    hyp_disj += 1
                    if not conclusion and cx_disj is None:
                        cx_disj = tuple(values)
                    if cx_derived is None:
                        for i in range(npairs):
                            x = dleq[2 * i]
                            y = dleq[2 * i + 1]
                            if values[x] & upset[values[y]]:
                                cx_derived = tuple(values)
                                break
        # odometer increment, last position fastest
        pos = k - 1
        while pos >= 0:
            nxt = idx[pos] + 1
            if nxt < nvals:
                idx[pos] = nxt
                values[pos] = t1_values[nxt]
                break
            idx[pos] = 0
            values[pos] = first
            pos -= 1
        if pos < 0:
            break
    return evaluated, hyp_mono, hyp_disj, cx_mono, cx_disj, cx_derived


def sweep_embedding_site(
    s,                # points in the subsemilattice
    m_e,              # carrier size of the target model
    sub_meet_pos,     # flat s*s: position of the meet inside the subsemilattice
    ypoints,          # ambient point index per position
    emeet,            # flat m_e*m_e
    eclosed,          # bytes 2**m_e: closed masks of the target
    subclosed,        # tuple of position-masks: closed sets of the subspace
    fiber_flags,      # bytes 2**nY: per ambient mask, fiber admissibility
):
    """Scan all maps h : subsemilattice -> target at one conclusion-false site.

    Returns (checked, first hypothesis-true image tuple or None).  A
    hypothesis-true map here is a counterexample to the embedding claim,
    since the caller only visits sites where the subsemilattice is not
    closed in the ambient model.
    """
    if not 0 <= s <= 6 or not 1 <= m_e <= 6:
        raise ValueError("sweep kernels support carriers up to 6 points")
    checked = 0
    h = [0] * s
    found = None

    def rec(pos):
        nonlocal checked, found
        if found is not None:
            return
        if pos == s:
            checked += 1
            for i in range(s):
                hi = h[i]
                base = i * s
                for j in range(i + 1):
                    if emeet[hi * m_e + h[j]] != h[sub_meet_pos[base + j]]:
                        return
            for cmask in subclosed:
                img = 0
                rest = cmask
                while rest:
                    low = rest & -rest
                    img |= 1 << h[low.bit_length() - 1]
                    rest ^= low
                if not eclosed[img]:
                    return
            for e in range(m_e):
                fiber = 0
                for i in range(s):
                    if h[i] == e:
                        fiber |= 1 << ypoints[i]
                if not fiber_flags[fiber]:
                    return
            found = tuple(h)
            return
        for v in range(m_e):
            h[pos] = v
            rec(pos + 1)
            if found is not None:
                return

    rec(0)
    return checked, found
