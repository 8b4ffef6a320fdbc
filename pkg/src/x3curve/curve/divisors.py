"""Principal divisors of x^i y^j and x_a from the closed-form valuation table.

Places over (0, 0) and over infinity are kept as the aggregates O0 and Dinf,
each of degree m.
"""

from ..errors import UnsupportedFunction
from ..gf import embed
from .points import CurvePoint, point_from_x

O0 = "O0"
DINF = "Dinf"


class Divisor:
    def __init__(self, params, terms=None):
        self.params = params
        self.terms = {}
        for place, n in (terms or {}).items():
            self._add(place, n)

    def _add(self, place, n):
        v = self.terms.get(place, 0) + n
        if v:
            self.terms[place] = v
        else:
            self.terms.pop(place, None)

    def __add__(self, other):
        out = Divisor(self.params, self.terms)
        for place, n in other.terms.items():
            out._add(place, n)
        return out

    def __neg__(self):
        return Divisor(self.params, {P: -n for P, n in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, k):
        return Divisor(self.params, {P: k * n for P, n in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, Divisor) and self.terms == other.terms

    def multiplicity(self, place):
        return self.terms.get(place, 0)

    @property
    def degree(self):
        m = self.params.m
        return sum(n * (m if place in (O0, DINF) else 1) for place, n in self.terms.items())

    def __repr__(self):
        parts = []
        for place, n in sorted(self.terms.items(), key=lambda t: str(t[0])):
            parts.append("%d*%s" % (n, place if isinstance(place, str) else place.to_text()))
        return "Divisor(%s)" % " + ".join(parts)


def _orbit_m(params):
    from ..autgrp import orbit_m_points
    return orbit_m_points(params)


def _fiber(a, params, k_max=12):
    """The q+1 points over x = a, widening the field until all are present."""
    base_e = a.ctx.e
    for k in range(1, k_max + 1):
        K = params.field(k)
        if K.e % base_e:
            continue
        pts = point_from_x(embed(a, K), params)
        if len(pts) == params.q + 1:
            return pts
    raise UnsupportedFunction("fiber over x = %s not split for k <= %d" % (a.to_text(), k_max))


def divisor_check(f, params):
    """Divisor of f given as ("monomial", i, j), ("x",), ("y",) or ("xa", a)."""
    kind = f[0]
    if kind == "x":
        f = ("monomial", 1, 0)
    elif kind == "y":
        f = ("monomial", 0, 1)
    kind = f[0]
    if kind == "monomial":
        _, i, j = f
        terms = {O0: 3 * i + j, DINF: -(3 * i + 2 * j)}
        for P in _orbit_m(params):
            terms[P] = j
        D = Divisor(params, terms)
    elif kind == "xa":
        a = f[1]
        if not a:
            raise UnsupportedFunction("x_0 is not defined")
        am = a ** params.m
        if am == -1:
            P = CurvePoint(params, a, a.ctx.zero)
            D = Divisor(params, {P: params.q + 1, DINF: -3})
        else:
            D = Divisor(params, {P: 1 for P in _fiber(a, params)})
            D = D + Divisor(params, {DINF: -3})
    else:
        raise UnsupportedFunction(kind)
    if D.degree != 0:
        raise AssertionError("principal divisor %r has degree %d" % (D, D.degree))
    return D
