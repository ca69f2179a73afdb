# cython: language_level=3, boundscheck=False, wraparound=False
"""Integer-arithmetic geometry kernels (compiled twin of _kernels_py).

Same contracts, same algorithms, bit-identical outputs. Operands are
arbitrary-precision Python ints, so the arithmetic itself stays in
CPython's bignum core; compilation removes the interpreter overhead of
the surrounding predicate plumbing. Keep in lockstep with _kernels_py.py;
the parity test suite enforces agreement.
"""
from math import gcd

SEG_NONE = "none"
SEG_POINT = "point"
SEG_OVERLAP = "overlap"


cpdef tuple rred(n, d):
    if d == 0:
        raise ZeroDivisionError("rational with zero denominator")
    if d < 0:
        n, d = -n, -d
    if n == 0:
        return 0, 1
    g = gcd(n, d)
    return n // g, d // g


cpdef int rcmp(n1, d1, n2, d2):
    t = n1 * d2 - n2 * d1
    return (t > 0) - (t < 0)


cpdef tuple radd(n1, d1, n2, d2):
    return rred(n1 * d2 + n2 * d1, d1 * d2)


cpdef tuple rsub(n1, d1, n2, d2):
    return rred(n1 * d2 - n2 * d1, d1 * d2)


cpdef tuple rmul(n1, d1, n2, d2):
    return rred(n1 * n2, d1 * d2)


cpdef tuple rdiv(n1, d1, n2, d2):
    return rred(n1 * d2, d1 * n2)


cdef inline tuple _dx(tuple p, tuple q):
    return q[0] * p[1] - p[0] * q[1], p[1] * q[1]


cdef inline tuple _dy(tuple p, tuple q):
    return q[2] * p[3] - p[2] * q[3], p[3] * q[3]


cpdef int orient(tuple p, tuple q, tuple r):
    a1, b1 = _dx(p, q)
    a2, b2 = _dy(p, r)
    a3, b3 = _dy(p, q)
    a4, b4 = _dx(p, r)
    t = a1 * a2 * b3 * b4 - a3 * a4 * b1 * b2
    return (t > 0) - (t < 0)


cpdef bint point_eq(tuple p, tuple q):
    return p[0] * q[1] == q[0] * p[1] and p[2] * q[3] == q[2] * p[3]


cpdef tuple point_dist_sq(tuple p, tuple q):
    dxn, dxd = _dx(p, q)
    dyn, dyd = _dy(p, q)
    num = dxn * dxn * dyd * dyd + dyn * dyn * dxd * dxd
    den = dxd * dxd * dyd * dyd
    return rred(num, den)


cpdef bint on_segment(tuple q, tuple a, tuple b):
    if orient(a, b, q) != 0:
        return False
    lox, hix = (a, b) if rcmp(a[0], a[1], b[0], b[1]) <= 0 else (b, a)
    if rcmp(q[0], q[1], lox[0], lox[1]) < 0 or rcmp(q[0], q[1], hix[0], hix[1]) > 0:
        return False
    loy, hiy = (a, b) if rcmp(a[2], a[3], b[2], b[3]) <= 0 else (b, a)
    if rcmp(q[2], q[3], loy[2], loy[3]) < 0 or rcmp(q[2], q[3], hiy[2], hiy[3]) > 0:
        return False
    return True


cpdef tuple lerp(tuple a, tuple b, tn, td):
    xn, xd = _dx(a, b)
    yn, yd = _dy(a, b)
    rxn, rxd = rred(a[0] * xd * td + tn * xn * a[1], a[1] * xd * td)
    ryn, ryd = rred(a[2] * yd * td + tn * yn * a[3], a[3] * yd * td)
    return rxn, rxd, ryn, ryd


cpdef tuple foot_param(tuple q, tuple a, tuple b):
    vxn, vxd = _dx(a, b)
    vyn, vyd = _dy(a, b)
    wxn, wxd = _dx(a, q)
    wyn, wyd = _dy(a, q)
    dot_n = wxn * vxn * wyd * vyd + wyn * vyn * wxd * vxd
    dot_d = wxd * vxd * wyd * vyd
    vv_n = vxn * vxn * vyd * vyd + vyn * vyn * vxd * vxd
    vv_d = vxd * vxd * vyd * vyd
    return rdiv(dot_n, dot_d, vv_n, vv_d)


cpdef tuple point_seg_dist_sq(tuple q, tuple a, tuple b):
    tn, td = foot_param(q, a, b)
    if tn <= 0:
        return point_dist_sq(q, a)
    if tn >= td:
        return point_dist_sq(q, b)
    vxn, vxd = _dx(a, b)
    vyn, vyd = _dy(a, b)
    wxn, wxd = _dx(a, q)
    wyn, wyd = _dy(a, q)
    cr_n = wxn * vyn * wyd * vxd - wyn * vxn * wxd * vyd
    cr_d = wxd * vyd * wyd * vxd
    vv_n = vxn * vxn * vyd * vyd + vyn * vyn * vxd * vxd
    vv_d = vxd * vxd * vyd * vyd
    return rdiv(cr_n * cr_n, cr_d * cr_d, vv_n, vv_d)


cdef tuple _cross_of_diffs(tuple p1, tuple p2, tuple p3, tuple p4):
    axn, axd = _dx(p1, p2)
    ayn, ayd = _dy(p1, p2)
    bxn, bxd = _dx(p3, p4)
    byn, byd = _dy(p3, p4)
    num = axn * byn * ayd * bxd - ayn * bxn * axd * byd
    den = axd * byd * ayd * bxd
    return num, den


cpdef tuple seg_intersect(tuple a, tuple b, tuple c, tuple d):
    cdef int o1 = orient(a, b, c)
    cdef int o2 = orient(a, b, d)
    cdef int o3 = orient(c, d, a)
    cdef int o4 = orient(c, d, b)
    if o1 == 0 and o2 == 0:
        tc = foot_param(c, a, b)
        td_ = foot_param(d, a, b)
        lo, hi = (tc, td_) if rcmp(tc[0], tc[1], td_[0], td_[1]) <= 0 else (td_, tc)
        lo = lo if rcmp(lo[0], lo[1], 0, 1) > 0 else (0, 1)
        hi = hi if rcmp(hi[0], hi[1], 1, 1) < 0 else (1, 1)
        s = rcmp(lo[0], lo[1], hi[0], hi[1])
        if s > 0:
            return (SEG_NONE,)
        if s == 0:
            return (SEG_POINT, lerp(a, b, lo[0], lo[1]))
        return (SEG_OVERLAP, lerp(a, b, lo[0], lo[1]), lerp(a, b, hi[0], hi[1]))
    if o1 * o2 < 0 and o3 * o4 < 0:
        num = _cross_of_diffs(a, c, c, d)
        den = _cross_of_diffs(a, b, c, d)
        t = rdiv(num[0], num[1], den[0], den[1])
        return (SEG_POINT, lerp(a, b, t[0], t[1]))
    for q, s0, s1 in ((c, a, b), (d, a, b), (a, c, d), (b, c, d)):
        if on_segment(q, s0, s1):
            return (SEG_POINT, q)
    return (SEG_NONE,)


cpdef tuple seg_seg_dist_sq(tuple a, tuple b, tuple c, tuple d):
    if seg_intersect(a, b, c, d)[0] != SEG_NONE:
        return 0, 1
    best = point_seg_dist_sq(a, c, d)
    for cand in (
        point_seg_dist_sq(b, c, d),
        point_seg_dist_sq(c, a, b),
        point_seg_dist_sq(d, a, b),
    ):
        if rcmp(cand[0], cand[1], best[0], best[1]) < 0:
            best = cand
    return best
