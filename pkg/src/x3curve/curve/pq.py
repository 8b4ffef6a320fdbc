"""The rational functions P_i(s), Q_i(s) built from zeta_3, and the P-order.

For i >= 1 both are polynomials.  They are obtained by expanding the
binomials in (s + zeta)^k and dividing exactly by s(s - 1) or (s - 1), so the
removable singularities at s = 0, 1 never need special treatment.  For i <= 0
the values are stored as numerator / (s^2 - s + 1)^k.
"""

import functools
from math import comb

from ..errors import ExcludedAlpha, PoleAt
from ..gf import mult_order


def _need_zeta(ctx):
    if ctx.zeta3 is None:
        raise ValueError("%r has no primitive cube root of unity" % ctx)
    return ctx.zeta3


def _binomial_power(ctx, c, N):
    """Coefficients of (s + c)^N, low degree first."""
    return [c ** (N - k) * comb(N, k) for k in range(N + 1)]


def _div_by_s_minus_1(f):
    """Exact quotient of f by (s - 1); the remainder must vanish."""
    n = len(f) - 1
    quo = [None] * n
    acc = f[n]
    for k in range(n - 1, -1, -1):
        quo[k] = acc
        acc = f[k] + acc
    if acc:
        raise ArithmeticError("polynomial is not divisible by s - 1")
    return quo


def _strip(f):
    while len(f) > 1 and not f[-1]:
        f.pop()
    return f


@functools.lru_cache(maxsize=None)
def pq_rational(which, i, ctx):
    """(numerator coefficients, k): the function equals numerator / (s^2 - s + 1)^k."""
    z = _need_zeta(ctx)
    z2 = z * z
    if which == "P":
        if i == 0:
            return ((ctx.zero,), 0)
        if i < 0:
            num, _ = pq_rational("P", -i, ctx)
            return (tuple(-c for c in num), -3 * i)
        N = 3 * i
        f = [u - v for u, v in zip(_binomial_power(ctx, z, N), _binomial_power(ctx, z2, N))]
        if f[0]:
            raise ArithmeticError("numerator of P_%d does not vanish at 0" % i)
        f = _div_by_s_minus_1(f[1:])
        scale = (3 * (z - z2)).inverse()
        return (tuple(_strip([c * scale for c in f])), 0)
    if which == "Q":
        c1 = (1 - z) / 3
        c2 = (1 - z2) / 3
        if i >= 1:
            N = 3 * i - 1
            f = [c1 * u + c2 * v for u, v in zip(_binomial_power(ctx, z, N), _binomial_power(ctx, z2, N))]
            return (tuple(_strip(_div_by_s_minus_1(f))), 0)
        # Q_{-n} = (c1 S2^N + c2 S1^N) / ((s - 1) (S1 S2)^N) with N = 3n + 1
        N = 1 - 3 * i
        f = [c1 * v + c2 * u for u, v in zip(_binomial_power(ctx, z, N), _binomial_power(ctx, z2, N))]
        return (tuple(_strip(_div_by_s_minus_1(f))), N)
    raise ValueError("which must be 'P' or 'Q'")


def pq_poly(which, i, ctx):
    """Coefficient list of the polynomial P_i or Q_i for i >= 1."""
    if i < 1:
        raise ValueError("P_i and Q_i are polynomials only for i >= 1")
    return list(pq_rational(which, i, ctx)[0])


def _horner(coeffs, s):
    acc = s.ctx.zero
    for c in reversed(coeffs):
        acc = acc * s + c
    return acc


def pq_eval(which, i, s):
    """Value of P_i(s) or Q_i(s)."""
    num, k = pq_rational(which, i, s.ctx)
    val = _horner(num, s)
    if k:
        w = s * s - s + 1
        if not w:
            raise PoleAt("%s_%d has a pole at s^2 - s + 1 = 0" % (which, i))
        val = val / w ** k
    return val


def pq_identity_check(i, j, l, s):
    """Both product identities between P and Q at the given indices and point."""
    P = lambda k: pq_eval("P", k, s)
    Q = lambda k: pq_eval("Q", k, s)
    w = s * s - s + 1
    if not w and j != 0:
        raise PoleAt("s^2 - s + 1 vanishes")
    wj = w ** (3 * j)
    first = P(i) * P(l + j) - P(j) * P(l + i) == wj * P(i - j) * P(l)
    second = P(i) * Q(l + j) - P(j) * Q(l + i) == wj * P(i - j) * Q(l)
    return first and second


def excluded_alphas(ctx):
    z = _need_zeta(ctx)
    return {ctx.zero, ctx.one, -z, -z * z}


def p_order(alpha):
    """Smallest i >= 1 with P_{i+1}(alpha) = 0."""
    ctx = alpha.ctx
    z = _need_zeta(ctx)
    if alpha in excluded_alphas(ctx):
        raise ExcludedAlpha("alpha %r is excluded" % alpha)
    ratio = (alpha + z) / (alpha + z * z)
    i = mult_order(ratio ** 3) - 1
    assert i >= 1
    return i


@functools.lru_cache(maxsize=None)
def pq_integer_poly(which, i):
    """Integer coefficients (low degree first) of P_i or Q_i, i >= 1, computed over Q(zeta_3).

    An independent route to pq_poly: exact algebraic-number arithmetic, then
    reduction mod p gives the finite-field polynomials.
    """
    import sympy as sp

    if i < 1:
        raise ValueError("P_i and Q_i are polynomials only for i >= 1")
    s = sp.Symbol("s")
    z = (-1 + sp.sqrt(-3)) / 2
    z2 = sp.expand(z * z)
    if which == "P":
        num = sp.expand((s + z) ** (3 * i) - (s + z2) ** (3 * i))
        quo, rem = sp.div(num, s * (s - 1), s)
        quo = sp.radsimp(quo / (3 * (z - z2)))
    elif which == "Q":
        num = sp.expand((1 - z) / 3 * (s + z) ** (3 * i - 1) + (1 - z2) / 3 * (s + z2) ** (3 * i - 1))
        quo, rem = sp.div(num, s - 1, s)
    else:
        raise ValueError("which must be 'P' or 'Q'")
    if sp.simplify(rem) != 0:
        raise ArithmeticError("inexact division for %s_%d" % (which, i))
    coeffs = sp.Poly(sp.expand(quo), s).all_coeffs()[::-1]
    out = []
    for c in coeffs:
        c = sp.nsimplify(c)
        if not c.is_integer:
            raise ArithmeticError("non-integer coefficient %s in %s_%d" % (c, which, i))
        out.append(int(c))
    return tuple(out)
