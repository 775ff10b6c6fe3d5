# cython: language_level=3
"""Compiled integer kernels for the exact geometric predicates.

Same contracts as ``_core_py``.  Inputs with at most 15-bit magnitude take a
128-bit machine-integer fast path (the largest product below is bounded by
2**(8*15 + 2) < 2**127); anything larger falls back to PyLong arithmetic of
the same formula.
"""

cdef extern from *:
    ctypedef long long i128 "__int128"

DEF SMALL = 32768  # 2**15


cdef inline int _sign_i128(i128 v):
    if v > 0:
        return 1
    if v < 0:
        return -1
    return 0


def orient_sign(axn, axd, ayn, ayd, bxn, bxd, byn, byd, cxn, cxd, cyn, cyd):
    """Sign of the orientation determinant of rational points a, b, c."""
    cdef long long a1, a2, a3, a4, b1, b2, b3, b4, c1, c2, c3, c4
    cdef i128 p1, p2, p3, p4, d
    try:
        a1 = axn; a2 = axd; a3 = ayn; a4 = ayd
        b1 = bxn; b2 = bxd; b3 = byn; b4 = byd
        c1 = cxn; c2 = cxd; c3 = cyn; c4 = cyd
    except OverflowError:
        return _orient_big(axn, axd, ayn, ayd, bxn, bxd, byn, byd,
                           cxn, cxd, cyn, cyd)
    if (-SMALL < a1 < SMALL and a2 < SMALL and -SMALL < a3 < SMALL and a4 < SMALL
            and -SMALL < b1 < SMALL and b2 < SMALL and -SMALL < b3 < SMALL and b4 < SMALL
            and -SMALL < c1 < SMALL and c2 < SMALL and -SMALL < c3 < SMALL and c4 < SMALL):
        p1 = <i128>b1 * a2 - <i128>a1 * b2
        p2 = <i128>c3 * a4 - <i128>a3 * c4
        p3 = <i128>b3 * a4 - <i128>a3 * b4
        p4 = <i128>c1 * a2 - <i128>a1 * c2
        d = p1 * p2 * b4 * c2 - p3 * p4 * b2 * c4
        return _sign_i128(d)
    return _orient_big(axn, axd, ayn, ayd, bxn, bxd, byn, byd,
                       cxn, cxd, cyn, cyd)


cdef _orient_big(axn, axd, ayn, ayd, bxn, bxd, byn, byd, cxn, cxd, cyn, cyd):
    p1 = bxn * axd - axn * bxd
    p2 = cyn * ayd - ayn * cyd
    p3 = byn * ayd - ayn * byd
    p4 = cxn * axd - axn * cxd
    d = p1 * p2 * byd * cxd - p3 * p4 * bxd * cyd
    if d > 0:
        return 1
    if d < 0:
        return -1
    return 0


def dot_sign(axn, axd, ayn, ayd, bxn, bxd, byn, byd, cxn, cxd, cyn, cyd):
    """Sign of (b - a) . (c - a) for rational points a, b, c."""
    cdef long long a1, a2, a3, a4, b1, b2, b3, b4, c1, c2, c3, c4
    cdef i128 p1, p2, p3, p4, d
    try:
        a1 = axn; a2 = axd; a3 = ayn; a4 = ayd
        b1 = bxn; b2 = bxd; b3 = byn; b4 = byd
        c1 = cxn; c2 = cxd; c3 = cyn; c4 = cyd
    except OverflowError:
        return _dot_big(axn, axd, ayn, ayd, bxn, bxd, byn, byd,
                        cxn, cxd, cyn, cyd)
    # 10-bit bound: the sum below multiplies six small factors.
    if (-1024 < a1 < 1024 and a2 < 1024 and -1024 < a3 < 1024 and a4 < 1024
            and -1024 < b1 < 1024 and b2 < 1024 and -1024 < b3 < 1024 and b4 < 1024
            and -1024 < c1 < 1024 and c2 < 1024 and -1024 < c3 < 1024 and c4 < 1024):
        p1 = <i128>b1 * a2 - <i128>a1 * b2
        p2 = <i128>c3 * a4 - <i128>a3 * c4
        p3 = <i128>b3 * a4 - <i128>a3 * b4
        p4 = <i128>c1 * a2 - <i128>a1 * c2
        d = (p1 * p4 * (<i128>b4 * a4) * (<i128>c4 * a4)
             + p3 * p2 * (<i128>b2 * a2) * (<i128>c2 * a2))
        return _sign_i128(d)
    return _dot_big(axn, axd, ayn, ayd, bxn, bxd, byn, byd, cxn, cxd, cyn, cyd)


cdef _dot_big(axn, axd, ayn, ayd, bxn, bxd, byn, byd, cxn, cxd, cyn, cyd):
    p1 = bxn * axd - axn * bxd
    p2 = cyn * ayd - ayn * cyd
    p3 = byn * ayd - ayn * byd
    p4 = cxn * axd - axn * cxd
    d = p1 * p4 * byd * ayd * cyd * ayd + p3 * p2 * bxd * axd * cxd * axd
    if d > 0:
        return 1
    if d < 0:
        return -1
    return 0


def frac_cmp(an, ad, bn, bd):
    """Sign of a/b - c/d given positive denominators."""
    cdef long long x1, x2, x3, x4
    cdef i128 d
    try:
        x1 = an; x2 = ad; x3 = bn; x4 = bd
    except OverflowError:
        v = an * bd - bn * ad
        return 1 if v > 0 else (-1 if v < 0 else 0)
    d = <i128>x1 * x4 - <i128>x3 * x2
    return _sign_i128(d)
