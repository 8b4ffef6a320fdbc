"""Truncated power series over a finite field.

A series is stored as an integer array of shape (prec, e): row k holds the
F_p-coordinates of the coefficient of t^k.  Products are computed with one
big-integer multiplication (Kronecker substitution over both the t-index and
the coordinate index), followed by reduction modulo the field modulus.
"""

import numpy as np

from .errors import ContextMismatch, NoConvergence, NonUnitDivisor, NotReversible, SingularStart
from .gf import FieldElement


def _reduction_matrix(ctx):
    R = getattr(ctx, "_series_red", None)
    if R is None:
        R = np.array(ctx._red, dtype=np.int64).reshape(max(0, ctx.e - 1), ctx.e)
        ctx._series_red = R
    return R


def _mul_arrays(ctx, a, b, prec):
    """Coefficient array of a*b truncated to prec rows."""
    a = a[:prec]
    b = b[:prec]
    if len(a) == 0 or len(b) == 0:
        return np.zeros((prec, ctx.e), dtype=np.int64)
    p, e = ctx.p, ctx.e
    w = 2 * e - 1
    pa = np.zeros((len(a), w), dtype="<u8")
    pa[:, :e] = a
    pb = np.zeros((len(b), w), dtype="<u8")
    pb[:, :e] = b
    prod = int.from_bytes(pa.tobytes(), "little") * int.from_bytes(pb.tobytes(), "little")
    rows = min(prec, len(a) + len(b) - 1)
    raw = prod.to_bytes((len(a) + len(b)) * w * 8, "little")
    c = np.frombuffer(raw, dtype="<u8", count=rows * w).reshape(rows, w)
    c = (c % p).astype(np.int64)
    out = np.zeros((prec, e), dtype=np.int64)
    if e == 1:
        out[:rows] = c
    else:
        out[:rows] = (c[:, :e] + c[:, e:] @ _reduction_matrix(ctx)) % p
    return out


class TruncatedSeries:
    """Power series in t known modulo t^prec."""

    __slots__ = ("ctx", "coeffs", "prec")

    def __init__(self, ctx, coeffs, prec=None):
        arr = np.asarray(coeffs, dtype=np.int64)
        if prec is None:
            prec = arr.shape[0]
        if arr.shape[0] < prec:
            arr = np.vstack([arr.reshape(-1, ctx.e), np.zeros((prec - arr.shape[0], ctx.e), dtype=np.int64)])
        self.ctx = ctx
        self.coeffs = arr[:prec].reshape(prec, ctx.e) % ctx.p
        self.prec = prec

    # -- constructors --

    @classmethod
    def from_elements(cls, ctx, elems, prec):
        arr = np.zeros((prec, ctx.e), dtype=np.int64)
        for k, c in enumerate(elems[:prec]):
            arr[k] = ctx(c).coeffs
        return cls(ctx, arr, prec)

    @classmethod
    def constant(cls, c, prec, ctx=None):
        ctx = ctx if ctx is not None else c.ctx
        return cls.from_elements(ctx, [c], prec)

    @classmethod
    def variable(cls, ctx, prec):
        return cls.from_elements(ctx, [0, 1], prec)

    # -- access --

    def __getitem__(self, k):
        if k >= self.prec:
            raise IndexError("coefficient %d beyond precision %d" % (k, self.prec))
        return FieldElement(self.ctx, tuple(int(v) for v in self.coeffs[k]))

    def elements(self):
        return [self[k] for k in range(self.prec)]

    def __repr__(self):
        terms = ["%r*t^%d" % (self[k], k) for k in range(self.prec) if self.coeffs[k].any()]
        return "(%s + O(t^%d))" % (" + ".join(terms) or "0", self.prec)

    def truncate(self, prec):
        prec = min(prec, self.prec)
        return TruncatedSeries(self.ctx, self.coeffs[:prec], prec)

    def valuation(self):
        nz = np.flatnonzero(self.coeffs.any(axis=1))
        return int(nz[0]) if len(nz) else self.prec

    def is_zero(self):
        return not self.coeffs.any()

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = min(self.prec, other.prec)
        return self.ctx is other.ctx and np.array_equal(self.coeffs[:n], other.coeffs[:n])

    __hash__ = None

    # -- arithmetic --

    def _lift(self, other):
        if isinstance(other, TruncatedSeries):
            if other.ctx is not self.ctx:
                raise ContextMismatch("%r vs %r" % (self.ctx, other.ctx))
            return other
        if isinstance(other, (int, FieldElement)):
            c = self.ctx(other)
            arr = np.zeros((self.prec, self.ctx.e), dtype=np.int64)
            arr[0] = c.coeffs
            return TruncatedSeries(self.ctx, arr, self.prec)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        n = min(self.prec, other.prec)
        return TruncatedSeries(self.ctx, self.coeffs[:n] + other.coeffs[:n], n)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(self.ctx, -self.coeffs, self.prec)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        n = min(self.prec, other.prec)
        return TruncatedSeries(self.ctx, self.coeffs[:n] - other.coeffs[:n], n)

    def __rsub__(self, other):
        return -self + other

    def __mul__(self, other):
        if isinstance(other, (int, FieldElement)):
            c = self.ctx(other)
            return TruncatedSeries(self.ctx, _mul_arrays(self.ctx, self.coeffs, np.array([c.coeffs]), self.prec), self.prec)
        other = self._lift(other)
        if other is NotImplemented:
            return other
        n = min(self.prec, other.prec)
        return TruncatedSeries(self.ctx, _mul_arrays(self.ctx, self.coeffs, other.coeffs, n), n)

    __rmul__ = __mul__

    def inverse(self):
        """Multiplicative inverse of a unit series, by Newton iteration."""
        if not self.coeffs[0].any():
            raise NonUnitDivisor("constant term is zero")
        v = TruncatedSeries.constant(self[0].inverse(), 1)
        k = 1
        while k < self.prec:
            k = min(2 * k, self.prec)
            u = self.truncate(k)
            v = TruncatedSeries(self.ctx, v.coeffs, k)
            v = v * (2 - u * v)
        return TruncatedSeries(self.ctx, v.coeffs, self.prec)

    def __truediv__(self, other):
        if isinstance(other, (int, FieldElement)):
            return self * self.ctx(other).inverse()
        other = self._lift(other)
        if other is NotImplemented:
            return other
        n = min(self.prec, other.prec)
        return self.truncate(n) * other.truncate(n).inverse()

    def __rtruediv__(self, other):
        return self._lift(other) * self.inverse()

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        result = self._lift(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def derivative(self):
        """Formal d/dt; the result is known to precision prec - 1."""
        if self.prec <= 1:
            return TruncatedSeries(self.ctx, np.zeros((0, self.ctx.e), dtype=np.int64), 0)
        ks = np.arange(1, self.prec, dtype=np.int64).reshape(-1, 1)
        return TruncatedSeries(self.ctx, self.coeffs[1:] * ks, self.prec - 1)

    def shift(self, k):
        """Multiply by t^k (k >= 0) or divide by t^-k when the low terms vanish."""
        e = self.ctx.e
        if k >= 0:
            arr = np.vstack([np.zeros((k, e), dtype=np.int64), self.coeffs])
            return TruncatedSeries(self.ctx, arr, self.prec + k)
        if self.valuation() < -k:
            raise NonUnitDivisor("cannot divide by t^%d" % (-k))
        return TruncatedSeries(self.ctx, self.coeffs[-k:], self.prec + k)

    def compose(self, r):
        """self(r(t)) for r with zero constant term (Horner scheme)."""
        if r.coeffs[0].any():
            raise ValueError("inner series must have positive valuation")
        n = min(self.prec, r.prec)
        r = r.truncate(n)
        acc = TruncatedSeries.constant(self[n - 1], n)
        for k in range(n - 2, -1, -1):
            acc = acc * r + self[k]
        return acc


def valuation_of(s):
    """Index of the first nonzero coefficient, or s.prec when none is known."""
    return s.valuation()


def series_arith(a, b, op):
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError("unknown operation %r" % op)


def _eval_poly(F, y, prec):
    """Evaluate sum_k F[k] * y^k with coefficients truncated to prec."""
    acc = None
    for k in sorted(F):
        c = F[k]
        term = y ** k
        if isinstance(c, TruncatedSeries):
            term = term * c.truncate(prec)
        else:
            term = term * c
        acc = term if acc is None else acc + term
    return acc.truncate(prec)


def _poly_derivative(F):
    return {k - 1: c * k for k, c in F.items() if k > 0}


def newton_root(F, y0, N, check=True):
    """Lift the simple root y0 of F(0, y) to a series root modulo t^N.

    F maps exponents of y to coefficients (series, field elements or ints).
    """
    ctx = y0.ctx
    dF = _poly_derivative(F)
    y = TruncatedSeries.constant(y0, 1)
    if _eval_poly(F, y, 1).coeffs.any():
        raise NoConvergence("starting value is not a root modulo t")
    d0 = _eval_poly(dF, y, 1) if dF else None
    if d0 is None or not d0.coeffs[0].any():
        raise SingularStart("derivative vanishes at the starting value")
    k = 1
    while k < N:
        k = min(2 * k, N)
        y = TruncatedSeries(ctx, y.coeffs, k)
        y = y - _eval_poly(F, y, k) / _eval_poly(dF, y, k)
    if check and _eval_poly(F, y, N).coeffs.any():
        raise NoConvergence("residual does not vanish to precision %d" % N)
    return y


def reversion(s):
    """Series r with s(r(t)) = t, for s of valuation one."""
    if s.prec < 2 or s.coeffs[0].any() or not s.coeffs[1].any():
        raise NotReversible("series must have valuation exactly one")
    ctx = s.ctx
    N = s.prec
    ds = s.derivative()
    r = TruncatedSeries.from_elements(ctx, [0, s[1].inverse()], 2)
    k = 2
    while k < N:
        k = min(2 * k, N)
        r = TruncatedSeries(ctx, r.coeffs, k)
        t = TruncatedSeries.variable(ctx, k)
        num = s.truncate(k).compose(r) - t
        # num has positive valuation, so s'(r) is only needed to order k - 1
        den = _pad(ds.compose(r.truncate(k - 1)), k)
        r = r - num / den
    return r


def _pad(s, k):
    """Extend a series by zero rows.  Only safe where the missing terms cannot matter."""
    return TruncatedSeries(s.ctx, s.coeffs, k)
