# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; semantics identical to tsl._pure_kernels.

Masks are machine ints here: carriers stay at or below 5 points for models
and 25 points for product-space families, far inside 64 bits.  The sweep
kernels accept carriers up to 6 points (fixed-size scratch arrays).
"""

BACKEND = "c"


def union_closure(masks):
    """Close a family of masks under pairwise union; sorted tuple."""
    gens = tuple(set(masks))
    fam = set(gens)
    frontier = list(fam)
    cdef unsigned long long a, g, u
    while frontier:
        nxt = []
        for a_obj in frontier:
            a = a_obj
            for g_obj in gens:
                g = g_obj
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
    cdef unsigned long long a, g, u
    while frontier:
        nxt = []
        for a_obj in frontier:
            a = a_obj
            for g_obj in gens:
                g = g_obj
                u = a & g
                if u not in fam:
                    fam.add(u)
                    nxt.append(u)
        frontier = nxt
    return tuple(sorted(fam))


cdef inline tuple _int_tuple(int *arr, int k):
    out = []
    cdef int t
    for t in range(k):
        out.append(arr[t])
    return tuple(out)


def sweep_transfer_pair(
    int k,
    dmeet,
    dleq,
    const unsigned char[:] dclosed,
    int m,
    t1_values,
    vmeet,
    upset,
    const unsigned char[:] complete_sub,
    cclosed,
):
    """See tsl._pure_kernels.sweep_transfer_pair."""
    if k < 1 or k > 6 or m < 1 or m > 6:
        raise ValueError("sweep kernels support carriers up to 6 points")
    cdef int size = 1 << m
    cdef int nvals = len(t1_values)
    if nvals == 0:
        return 0, 0, 0, None, None, None
    cdef int npairs = len(dleq) // 2
    cdef int ncl = len(cclosed)
    if ncl > 64 or npairs > 36:
        raise ValueError("table too large for the sweep kernel")

    cdef int c_dmeet[36]
    cdef int c_leq[72]
    cdef int c_t1[63]
    cdef int c_vmeet[4096]
    cdef int c_up[64]
    cdef int c_ccl[64]
    cdef int i
    for i in range(k * k):
        c_dmeet[i] = dmeet[i]
    for i in range(2 * npairs):
        c_leq[i] = dleq[i]
    for i in range(nvals):
        c_t1[i] = t1_values[i]
    for i in range(size * size):
        c_vmeet[i] = vmeet[i]
    for i in range(size):
        c_up[i] = upset[i]
    for i in range(ncl):
        c_ccl[i] = cclosed[i]

    cdef long long evaluated = 0, hyp_mono = 0, hyp_disj = 0
    cx_mono = None
    cx_disj = None
    cx_derived = None

    cdef int idx[6]
    cdef int values[6]
    for i in range(k):
        idx[i] = 0
        values[i] = c_t1[0]

    cdef bint ok, mono, disj, rhs, conclusion
    cdef int x, y, pos, vx, base, pre, f, union_mask, nxt, lhs
    while True:
        evaluated += 1
        ok = True
        for x in range(k):
            vx = values[x]
            base = x * k
            for y in range(x + 1):
                if c_vmeet[(vx << m) + values[y]] & ~values[c_dmeet[base + y]]:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            for i in range(ncl):
                f = c_ccl[i]
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
                x = c_leq[2 * i]
                y = c_leq[2 * i + 1]
                if values[x] & c_up[values[y]] & ~values[y]:
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
                union_mask = 0
                rhs = True
                for x in range(k):
                    union_mask |= values[x]
                    if complete_sub[values[x]] != 1:
                        rhs = False
                lhs = complete_sub[union_mask]
                conclusion = (lhs == 1) == rhs
                if mono:
                    hyp_mono += 1
                    if (not conclusion) and cx_mono is None:
                        cx_mono = _int_tuple(values, k)
                if disj:
                    hyp_disj += 1
                    if (not conclusion) and cx_disj is None:
                        cx_disj = _int_tuple(values, k)
                    if cx_derived is None:
                        for i in range(npairs):
                            x = c_leq[2 * i]
                            y = c_leq[2 * i + 1]
                            if values[x] & c_up[values[y]]:
                                cx_derived = _int_tuple(values, k)
                                break
        pos = k - 1
        while pos >= 0:
            nxt = idx[pos] + 1
            if nxt < nvals:
                idx[pos] = nxt
                values[pos] = c_t1[nxt]
                break
            idx[pos] = 0
            values[pos] = c_t1[0]
            pos -= 1
        if pos < 0:
            break
    return evaluated, hyp_mono, hyp_disj, cx_mono, cx_disj, cx_derived


cdef inline int _bit_index(int low):
    cdef int idx = 0
    while low > 1:
        low >>= 1
        idx += 1
    return idx


def sweep_embedding_site(
    int s,
    int m_e,
    sub_meet_pos,
    ypoints,
    emeet,
    const unsigned char[:] eclosed,
    subclosed,
    const unsigned char[:] fiber_flags,
):
    """See tsl._pure_kernels.sweep_embedding_site."""
    if s < 0 or s > 6 or m_e < 1 or m_e > 6:
        raise ValueError("sweep kernels support carriers up to 6 points")
    cdef int nsub = len(subclosed)
    if nsub > 64:
        raise ValueError("table too large for the sweep kernel")
    cdef int c_meetpos[36]
    cdef int c_ypts[6]
    cdef int c_emeet[36]
    cdef int c_subcl[64]
    cdef int i
    for i in range(s * s):
        c_meetpos[i] = sub_meet_pos[i]
    for i in range(s):
        c_ypts[i] = ypoints[i]
    for i in range(m_e * m_e):
        c_emeet[i] = emeet[i]
    for i in range(nsub):
        c_subcl[i] = subclosed[i]

    cdef long long checked = 0
    cdef int h[6]
    for i in range(s):
        h[i] = 0
    cdef bint ok
    cdef int pos, j, hi, base, img, rest, low, e, fiber
    while True:
        checked += 1
        ok = True
        for i in range(s):
            hi = h[i]
            base = i * s
            for j in range(i + 1):
                if c_emeet[hi * m_e + h[j]] != h[c_meetpos[base + j]]:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            for i in range(nsub):
                rest = c_subcl[i]
                img = 0
                while rest:
                    low = rest & (-rest)
                    img |= 1 << h[_bit_index(low)]
                    rest ^= low
                if not eclosed[img]:
                    ok = False
                    break
        if ok:
            for e in range(m_e):
                fiber = 0
                for i in range(s):
                    if h[i] == e:
                        fiber |= 1 << c_ypts[i]
                if not fiber_flags[fiber]:
                    ok = False
                    break
        if ok:
            return checked, _int_tuple(h, s)
        pos = s - 1
        while pos >= 0:
            if h[pos] + 1 < m_e:
                h[pos] += 1
                break
            h[pos] = 0
            pos -= 1
        if pos < 0:
            break
    return checked, None
