"""Functions on the curve: reduced bivariate polynomials, quotients of them,
local expansions at affine points, and the special functions x_a, t_P, f_j, g_i.
"""

from ..errors import (
    PrecisionExhausted, RecursionPole, UnsupportedPlace, WrongClass,
)
from ..gf import FieldElement
from ..series import TruncatedSeries, newton_root, reversion
from .pq import pq_eval


class BiPoly:
    """Polynomial in x, y with y-degree at most q, reduced by y^{q+1} = -x^{2m} - x^m."""

    __slots__ = ("ctx", "params", "terms")

    def __init__(self, ctx, params, terms=None):
        self.ctx = ctx
        self.params = params
        self.terms = {}
        for (i, j), c in (terms or {}).items():
            self._add_term(i, j, ctx(c))

    def _add_term(self, i, j, c):
        q1 = self.params.q + 1
        m = self.params.m
        if j >= q1:
            # y^j = y^{j-q-1} * (-x^{2m} - x^m)
            self._add_term(i + 2 * m, j - q1, -c)
            self._add_term(i + m, j - q1, -c)
            return
        key = (i, j)
        v = self.terms.get(key)
        v = c if v is None else v + c
        if v:
            self.terms[key] = v
        elif key in self.terms:
            del self.terms[key]

    @classmethod
    def monomial(cls, ctx, params, i, j, c=1):
        return cls(ctx, params, {(i, j): c})

    def copy(self):
        out = BiPoly(self.ctx, self.params)
        out.terms = dict(self.terms)
        return out

    def is_zero(self):
        return not self.terms

    def _coerce(self, other):
        if isinstance(other, BiPoly):
            return other
        return BiPoly(self.ctx, self.params, {(0, 0): other})

    def __add__(self, other):
        other = self._coerce(other)
        out = self.copy()
        for (i, j), c in other.terms.items():
            out._add_term(i, j, c)
        return out

    __radd__ = __add__

    def __neg__(self):
        out = BiPoly(self.ctx, self.params)
        out.terms = {k: -c for k, c in self.terms.items()}
        return out

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, FieldElement)):
            c = self.ctx(other)
            out = BiPoly(self.ctx, self.params)
            if c:
                out.terms = {k: v * c for k, v in self.terms.items()}
            return out
        out = BiPoly(self.ctx, self.params)
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                out._add_term(i1 + i2, j1 + j2, c1 * c2)
        return out

    __rmul__ = __mul__

    def __pow__(self, k):
        result = BiPoly(self.ctx, self.params, {(0, 0): 1})
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self.terms == other.terms

    __hash__ = None

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join("%r*x^%d*y^%d" % (c, i, j) for (i, j), c in sorted(self.terms.items()))

    def pole_bound(self):
        """Upper bound for the pole order at each place over infinity."""
        return max((3 * i + 2 * j for (i, j) in self.terms), default=0)

    def evaluate(self, a, b):
        return sum((c * a ** i * b ** j for (i, j), c in self.terms.items()), self.ctx.zero)

    def eval_series(self, xs, ys):
        """Substitute series for x and y."""
        N = min(xs.prec, ys.prec)
        if not self.terms:
            return TruncatedSeries(self.ctx, [[0] * self.ctx.e], N)
        xp = _power_table(xs, max(i for i, _ in self.terms))
        yp = _power_table(ys, max(j for _, j in self.terms))
        acc = None
        for (i, j), c in sorted(self.terms.items()):
            term = xp[i] * yp[j] * c
            acc = term if acc is None else acc + term
        return acc

    def substitute(self, X, Y):
        """Compose with the rational functions X, Y (FunctionElements)."""
        I = max((i for i, _ in self.terms), default=0)
        J = max((j for _, j in self.terms), default=0)
        xn, xd = _powers(X.num, I), _powers(X.den, I)
        yn, yd = _powers(Y.num, J), _powers(Y.den, J)
        num = BiPoly(self.ctx, self.params)
        for (i, j), c in self.terms.items():
            num = num + xn[i] * xd[I - i] * yn[j] * yd[J - j] * c
        den = xd[I] * yd[J]
        return FunctionElement(num, den)


def _powers(f, n):
    out = [BiPoly(f.ctx, f.params, {(0, 0): 1})]
    for _ in range(n):
        out.append(out[-1] * f)
    return out


def _power_table(s, n):
    out = [TruncatedSeries.constant(s.ctx.one, s.prec)]
    for _ in range(n):
        out.append(out[-1] * s)
    return out


class FunctionElement:
    """A quotient num/den of reduced bivariate polynomials."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if den is None:
            den = BiPoly(num.ctx, num.params, {(0, 0): 1})
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        self.num = num
        self.den = den

    @property
    def ctx(self):
        return self.num.ctx

    @property
    def params(self):
        return self.num.params

    @classmethod
    def x(cls, ctx, params):
        return cls(BiPoly.monomial(ctx, params, 1, 0))

    @classmethod
    def y(cls, ctx, params):
        return cls(BiPoly.monomial(ctx, params, 0, 1))

    @classmethod
    def constant(cls, ctx, params, c):
        return cls(BiPoly(ctx, params, {(0, 0): c}))

    @classmethod
    def monomial(cls, ctx, params, i, j, c=1):
        """c * x^i * y^j with i possibly negative."""
        if i >= 0:
            return cls(BiPoly.monomial(ctx, params, i, j, c))
        return cls(BiPoly.monomial(ctx, params, 0, j, c), BiPoly.monomial(ctx, params, -i, 0))

    def _coerce(self, other):
        if isinstance(other, FunctionElement):
            return other
        return FunctionElement.constant(self.ctx, self.params, other)

    def __add__(self, other):
        other = self._coerce(other)
        if self.den == other.den:
            return FunctionElement(self.num + other.num, self.den)
        return FunctionElement(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return FunctionElement(-self.num, self.den)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, FieldElement)):
            return FunctionElement(self.num * other, self.den)
        return FunctionElement(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, FieldElement)):
            return FunctionElement(self.num * self.ctx(other).inverse(), self.den)
        return FunctionElement(self.num * other.den, self.den * other.num)

    def __pow__(self, k):
        if k < 0:
            return FunctionElement(self.den ** (-k), self.num ** (-k))
        return FunctionElement(self.num ** k, self.den ** k)

    def equals(self, other):
        """Equality in the function field: num*den' - num'*den reduces to zero."""
        other = self._coerce(other)
        return (self.num * other.den - other.num * self.den).is_zero()

    def is_zero(self):
        return self.num.is_zero()

    def substitute(self, X, Y):
        n = self.num.substitute(X, Y)
        d = self.den.substitute(X, Y)
        return n / d

    def evaluate(self, a, b):
        d = self.den.evaluate(a, b)
        if not d:
            raise ZeroDivisionError("denominator vanishes at the point")
        return self.num.evaluate(a, b) / d

    def is_polynomial(self):
        return self.den.terms.keys() == {(0, 0)}

    def pole_bound(self):
        """Upper bound for the pole order at infinity, valid for polynomial elements."""
        if not self.is_polynomial():
            raise ValueError("pole bound is only tracked for polynomials")
        return self.num.pole_bound()

    def __repr__(self):
        if self.is_polynomial():
            return "FunctionElement(%r)" % self.num
        return "FunctionElement((%r) / (%r))" % (self.num, self.den)


# ---------------------------------------------------------------------------
# local expansions

class LocalExpansion:
    """Series for x and y at an affine point in a local parameter.

    The parameter is x_a = (x - a)/a when b != 0 and y when b = 0.
    """

    def __init__(self, P, prec):
        if P.is_symbolic:
            raise UnsupportedPlace("no expansions at %s" % P.kind)
        self.point = P
        self.prec = prec
        params = P.params
        ctx = P.ctx
        a, b = P.a, P.b
        m, q = params.m, params.q
        t = TruncatedSeries.variable(ctx, prec)
        if b:
            self.parameter = "x_a"
            self.x = (t + 1) * a
            xm = self.x ** m
            self.y = newton_root({q + 1: 1, 0: xm * xm + xm}, b, prec)
        else:
            self.parameter = "y"
            self.y = t
            self.x = newton_root({2 * m: 1, m: 1, 0: t ** (q + 1)}, a, prec)

    def expand(self, f):
        """Series of a BiPoly or of a FunctionElement with unit denominator."""
        if isinstance(f, BiPoly):
            return f.eval_series(self.x, self.y)
        return f.num.eval_series(self.x, self.y), f.den.eval_series(self.x, self.y)


_EXPANSION_CACHE = {}


def local_expansion(P, prec=None):
    prec = prec or P.params.default_precision
    key = (P.key(), P.params.q, prec)
    exp = _EXPANSION_CACHE.get(key)
    if exp is None:
        if len(_EXPANSION_CACHE) > 512:
            _EXPANSION_CACHE.clear()
        exp = LocalExpansion(P, prec)
        _EXPANSION_CACHE[key] = exp
    return exp


def fn_series(f, P, prec=None, max_prec=None):
    """Laurent data (valuation, unit-part series) of f at P, escalating precision."""
    prec = prec or P.params.default_precision
    max_prec = max_prec or 8 * prec
    while True:
        exp = local_expansion(P, prec)
        num, den = exp.expand(f)
        vn, vd = num.valuation(), den.valuation()
        if vd < prec and vn < prec:
            return vn - vd, num.shift(-vn) / den.shift(-vd)
        if prec >= max_prec:
            raise PrecisionExhausted("valuation not resolved at precision %d" % prec)
        prec *= 2


def fn_valuation(f, P, prec=None):
    """Valuation of a FunctionElement at an affine point."""
    if P.is_symbolic:
        raise UnsupportedPlace("valuations at %s come from the divisor table" % P.kind)
    return fn_series(f, P, prec)[0]


# ---------------------------------------------------------------------------
# special functions

def _xy(P):
    return FunctionElement.x(P.ctx, P.params), FunctionElement.y(P.ctx, P.params)


def fn_xa(P):
    x, _ = _xy(P)
    return (x - P.a) / P.a


def fn_tP(P):
    """Tangent-line function at P."""
    x, y = _xy(P)
    a, b = P.a, P.b
    m, q = P.params.m, P.params.q
    am = a ** m
    return (x - a) * (a ** (m - 1) * (2 * am + 1) * m) + (y - b) * b ** q


def fn_f0(P):
    """Function with a double zero at P and pole divisor bounded by 3 D_inf."""
    x, y = _xy(P)
    a, b = P.a, P.b
    q, m = P.params.q, P.params.m
    alpha = P.alpha
    am = a ** m
    return ((x - a) * ((2 * am + 1) / a) + (y - b) * (3 * b ** q / am)) * (1 - alpha)


def _is_special(alpha):
    return alpha * alpha - alpha + 1 == 0


class FSequence:
    """The functions f_0, f_1, ... for a point with alpha^2 - alpha + 1 != 0."""

    def __init__(self, P):
        if P.in_orbit_O:
            raise WrongClass("f_j are built only outside the orbit O")
        self.P = P
        self.alpha = P.alpha
        if _is_special(self.alpha):
            raise WrongClass("alpha^2 - alpha + 1 = 0: use the g sequence")
        self.xa = fn_xa(P)
        self.f = [fn_f0(P)]

    def P_(self, k):
        return pq_eval("P", k, self.alpha)

    def _next(self):
        j = len(self.f)
        al = self.alpha
        xa, f = self.xa, self.f
        if j == 1:
            return xa * xa * (-9) + f[0] * 27 + xa * f[0] * (-3 * (al - 5)) + f[0] * f[0] * (al * al - al - 5)
        if j == 2:
            if not al + 1:
                raise RecursionPole("the f_2 construction divides by alpha + 1")
            P2 = self.P_(2)
            inner = f[1] * (-27 * P2) + f[0] * f[0] * xa * (3 * P2 * P2) \
                - f[0] ** 3 * (3 * P2 * (al ** 4 + al ** 3 - 4 * al ** 2 - 4 * al + 3))
            return inner * (al + 1) ** -3 + f[1] * f[0] * (7 * al * al - 16 * al + 7)
        den = (al * al - al + 1) ** 2 * self.P_(j - 2)
        if not den:
            raise RecursionPole("P_%d(alpha) = 0" % (j - 2))
        return (f[j - 2] * f[1] * self.P_(j) - f[j - 1] * f[0] * (self.P_(2) * self.P_(j - 1))) * (-den.inverse())

    def __getitem__(self, j):
        while len(self.f) <= j:
            self.f.append(self._next())
        return self.f[j]


class GSequence:
    """The functions g_0, g_1, ... for a point with alpha^2 - alpha + 1 = 0."""

    def __init__(self, P):
        if P.in_orbit_O:
            raise WrongClass("g_i are built only outside the orbit O")
        self.P = P
        self.alpha = al = P.alpha
        if not _is_special(al):
            raise WrongClass("alpha^2 - alpha + 1 != 0: use the f sequence")
        self.xa = fn_xa(P)
        f0 = fn_f0(P)
        xa = self.xa
        f1 = xa * xa * (-9) + f0 * 27 + xa * f0 * (-3 * (al - 5)) + f0 * f0 * (al * al - al - 5)
        self.g = [f0, f1 * ((2 * al - 1) / 9)]

    def __getitem__(self, i):
        al = self.alpha
        g, xa = self.g, self.xa
        while len(g) <= i:
            k = len(g)
            g.append(g[k - 1] * (6 * al - 3)
                     - g[k - 2] * g[0] * xa * ((2 * al - 1) / 3)
                     + g[k - 2] * g[0] * g[0] * ((3 * al - 2) / 3)
                     - g[k - 1] * g[0] * (al - 2))
        return g[i]


def build_special_fn(kind, P, index=None):
    """kind is one of 'xa', 'tP', 'f0', 'f', 'g'; index selects f_j or g_i."""
    if P.is_symbolic or P.in_orbit_O:
        raise WrongClass("special functions need an affine point outside O")
    if kind == "xa":
        return fn_xa(P)
    if kind == "tP":
        return fn_tP(P)
    if kind == "f0":
        return fn_f0(P)
    if kind == "f":
        return FSequence(P)[index]
    if kind == "g":
        return GSequence(P)[index]
    raise ValueError("unknown special function %r" % kind)


def T_parameter_series(P, prec):
    """The parameter T, with x_a = 3T + 3T^2 + T^3, as a series in x_a."""
    return reversion(TruncatedSeries.from_elements(P.ctx, [0, 3, 3, 1], prec))


def expansion_in_T(f, P, prec=None):
    """Series of the polynomial function f at P in the parameter T."""
    prec = prec or P.params.default_precision
    exp = local_expansion(P, prec)
    if exp.parameter != "x_a":
        raise UnsupportedPlace("the T parameter needs b != 0")
    s = exp.expand(f.num) if f.is_polynomial() else None
    if s is None:
        raise ValueError("only polynomial functions are expanded in T")
    cube = TruncatedSeries.from_elements(P.ctx, [0, 3, 3, 1], prec)
    return s.compose(cube)
