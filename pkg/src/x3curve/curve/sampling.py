"""Seeded construction of points of a requested class."""

import math
import random

from ..errors import ClassInfeasible, ExtensionBoundTooSmall
from ..gf import nth_roots
from .classify import GENERIC, ORBIT, PORDER, SPECIAL, PointClass, classify
from .points import CurvePoint, point_from_x
from .pq import excluded_alphas


def _sort_points(points):
    return sorted(set(points), key=lambda P: (P.a.coeffs, P.b.coeffs))


def _points_over_alpha(params, alpha):
    """All points in the field of alpha with alpha(P) = alpha."""
    out = []
    for a in nth_roots(alpha / (1 - alpha), params.m):
        out.extend(point_from_x(a, params))
    return out


def alphas_of_porder(params, i, K):
    """All alpha in K of P-order i: ((alpha+z)/(alpha+z^2))^3 has order i + 1."""
    n = K.size - 1
    if n % (i + 1):
        return []
    z = K.zeta3
    rho = K.root_of_unity(i + 1)
    bad = excluded_alphas(K)
    out = set()
    for j in range(1, i + 2):
        if math.gcd(j, i + 1) != 1:
            continue
        for r in nth_roots(rho ** j, 3):
            if r == 1:
                continue
            alpha = (z - r * z * z) / (r - 1)
            if alpha not in bad:
                out.add(alpha)
    return sorted(out, key=lambda s: s.coeffs)


def _check_feasible(cls, params):
    p, m = params.p, params.m
    if cls.tag == PORDER:
        i = cls.i
        if i is None or i < 1 or i > m - 1:
            raise ClassInfeasible("P-order %r is outside 1..m-1" % i)
        if (i + 1) % p == 0:
            raise ClassInfeasible("P-order %d has p | i+1" % i)
        if cls.rational is not None and cls.rational != (m % (i + 1) == 0):
            raise ClassInfeasible("P-order %d points are %srational" % (i, "" if m % (i + 1) == 0 else "non-"))
    elif cls.tag == SPECIAL:
        if cls.rational is False:
            raise ClassInfeasible("alpha-special points are rational")
    elif cls.tag == GENERIC:
        if cls.rational:
            raise ClassInfeasible("generic points are non-rational")
    elif cls.tag != ORBIT:
        raise ClassInfeasible(cls)


def class_candidates(cls, params, k_max=12, k=None):
    """(k, sorted list of every point of the class over F_{q^{2k}}) for the first k that has any.

    Not used for the generic class, whose points are scanned randomly.
    """
    _check_feasible(cls, params)
    if cls.tag == ORBIT:
        from ..autgrp import orbit_m_points
        # the symbolic places are resolved by orbit transfer downstream
        return 1, orbit_m_points(params) + [CurvePoint.place(params, "O0"), CurvePoint.place(params, "Oinf")]
    if cls.tag == SPECIAL:
        K = params.base_field
        z = K.zeta3
        pts = []
        for alpha in (-z, -z * z):
            pts.extend(_points_over_alpha(params, alpha))
        return 1, _sort_points(pts)
    ks = [k] if k else range(1, k_max + 1)
    for kk in ks:
        K = params.field(kk)
        pts = []
        for alpha in alphas_of_porder(params, cls.i, K):
            pts.extend(_points_over_alpha(params, alpha))
        if pts:
            return kk, _sort_points(pts)
    raise ExtensionBoundTooSmall("no point of class %s over F_{q^2k}, k <= %d" % (cls.label, k_max))


def sample_points(cls, params, n=5, k_max=12, seed=0, k=None):
    """A deterministic sample of n points of the given class (fewer if fewer exist)."""
    if isinstance(cls, str):
        cls = PointClass.from_label(cls)
    rng = random.Random(seed)
    if cls.tag == GENERIC:
        _check_feasible(cls, params)
        return _sample_generic(params, n, k or 2, rng)
    _, pts = class_candidates(cls, params, k_max, k)
    if len(pts) <= n:
        return pts
    return [pts[j] for j in sorted(rng.sample(range(len(pts)), n))]


def _sample_generic(params, n, k, rng, max_tries=100000):
    K = params.field(k)
    want = PointClass(GENERIC, rational=False)
    out = []
    seen = set()
    for _ in range(max_tries):
        a = K.random_nonzero(rng)
        if a.in_subfield(2 * params.n) or a in seen:
            continue
        seen.add(a)
        pts = point_from_x(a, params)
        if not pts or classify(pts[0], params) != want:
            continue
        out.append(pts[rng.randrange(len(pts))])
        if len(out) == n:
            return out
    if not out:
        raise ExtensionBoundTooSmall("no generic point found over F_{q^%d}" % (2 * k))
    return out
