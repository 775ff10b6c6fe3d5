"""Pure-Python integer kernels.

These are the hot predicates of the exact kernel.  All arguments are plain
Python integers (numerator/denominator pairs with positive denominators);
everything is computed with integer arithmetic so no gcd normalization
happens on the hot path.  The compiled twin lives in ``_core.pyx``.
"""


def orient_sign(axn, axd, ayn, ayd, bxn, bxd, byn, byd, cxn, cxd, cyn, cyd):
    """Sign of the orientation determinant of rational points a, b, c.

    Returns +1 if c is strictly left of the directed line a->b, 0 if the
    points are collinear, -1 if strictly right.
    """
    p1 = bxn * axd - axn * bxd  # bx - ax over bxd*axd
    p2 = cyn * ayd - ayn * cyd  # cy - ay over cyd*ayd
    p3 = byn * ayd - ayn * byd  # by - ay over byd*ayd
    p4 = cxn * axd - axn * cxd  # cx - ax over cxd*axd
    # The common positive factor axd*ayd of both denominators is dropped.
    d = p1 * p2 * byd * cxd - p3 * p4 * bxd * cyd
    if d > 0:
        return 1
    if d < 0:
        return -1
    return 0


def dot_sign(axn, axd, ayn, ayd, bxn, bxd, byn, byd, cxn, cxd, cyn, cyd):
    """Sign of (b - a) . (c - a) for rational points a, b, c."""
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
    d = an * bd - bn * ad
    if d > 0:
        return 1
    if d < 0:
        return -1
    return 0
