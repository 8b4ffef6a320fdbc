"""The automorphism group G = A x| S3 of order 2(q+1)^2.

A consists of the maps (x, y) -> (gamma x, delta y) with gamma^m = delta^{q+1} = 1.
Fixing a primitive (q+1)-th root of unity d0 in F_{q^2}, such a map is stored
by exponents (u mod m, w mod q+1) with gamma = d0^{3u} and delta = d0^w.
S3 is generated by t2(x, y) = (1/x, y/x) and t3(x, y) = (y^3/x^2, y/x) and is
stored as t2^e t3^t.

Products are read left to right in order of application: P^(s*t) = (P^s)^t.
In that convention t2 t3 t2 = t3^2, t2 A(g, d) t2 = A(1/g, d/g) and
t3 A(g, d) t3^-1 = A(g/d^3, g/d^2).
"""

import itertools

from .curve.functions import FunctionElement
from .curve.points import CurvePoint, on_curve
from .errors import NotOnCurve, UndefinedAt
from .gf import embed, nth_roots

# set-level action on the three parts of the orbit O
_T2_PLACES = {"O0": "Oinf", "Oinf": "O0", "Om": "Om"}
_T3_PLACES = {"Om": "O0", "O0": "Oinf", "Oinf": "Om"}


class CurveAutomorphism:
    """theta(u, w) followed by t2^e t3^t."""

    __slots__ = ("params", "u", "w", "e", "t")

    def __init__(self, params, u=0, w=0, e=0, t=0):
        self.params = params
        self.u = u % params.m
        self.w = w % (params.q + 1)
        self.e = e % 2
        self.t = t % 3

    @classmethod
    def identity(cls, params):
        return cls(params)

    @classmethod
    def theta(cls, params, u, w):
        return cls(params, u, w)

    @classmethod
    def theta2(cls, params):
        return cls(params, e=1)

    @classmethod
    def theta3(cls, params):
        return cls(params, t=1)

    def _conj(self, u, w):
        """Exponents of s theta(u, w) s^-1 for the S3 part s of self."""
        for _ in range(self.t):
            u, w = u - w, 3 * u - 2 * w
        if self.e:
            u, w = -u, w - 3 * u
        return u, w

    def __mul__(self, other):
        # (a1 s1)(a2 s2) = a1 (s1 a2 s1^-1) s1 s2
        u, w = self._conj(other.u, other.w)
        if other.e:
            e, t = self.e + 1, other.t - self.t
        else:
            e, t = self.e, self.t + other.t
        return CurveAutomorphism(self.params, self.u + u, self.w + w, e, t)

    def __pow__(self, k):
        r = CurveAutomorphism.identity(self.params)
        b = self if k >= 0 else self.inverse()
        for _ in range(abs(k)):
            r = r * b
        return r

    def inverse(self):
        # (t2^e t3^t)^-1 = t3^-t t2^e = t2^e t3^((-1)^(e+1) t)
        s_inv = CurveAutomorphism(self.params, e=self.e, t=self.t if self.e else -self.t)
        a_inv = CurveAutomorphism(self.params, -self.u, -self.w)
        return s_inv * a_inv

    @property
    def is_identity(self):
        return not (self.u or self.w or self.e or self.t)

    def key(self):
        return (self.u, self.w, self.e, self.t)

    def __eq__(self, other):
        return isinstance(other, CurveAutomorphism) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return "CurveAutomorphism(u=%d, w=%d, t2^%d t3^%d)" % self.key()

    def word(self):
        """The generator sequence in order of application."""
        out = []
        if self.u or self.w:
            out.append(("theta", self.u, self.w))
        out.extend([("t2",)] * self.e + [("t3",)] * self.t)
        return out

    def functions(self, ctx=None):
        """Images (X, Y) of x and y as rational functions."""
        params = self.params
        ctx = ctx or params.base_field
        x = FunctionElement.x(ctx, params)
        y = FunctionElement.y(ctx, params)
        X, Y = x, y
        for g in self.word():
            gX, gY = _generator_functions(params, ctx, g)
            X, Y = gX.substitute(X, Y), gY.substitute(X, Y)
        return X, Y


def _delta0(params, ctx):
    base = params.base_field
    d0 = base.root_of_unity(params.q + 1)
    if ctx is base:
        return d0
    return embed(d0, ctx)


def _generator_functions(params, ctx, g):
    x = FunctionElement.x(ctx, params)
    y = FunctionElement.y(ctx, params)
    if g[0] == "theta":
        d0 = _delta0(params, ctx)
        return x * d0 ** (3 * g[1]), y * d0 ** g[2]
    if g[0] == "t2":
        return FunctionElement.constant(ctx, params, ctx.one) / x, y / x
    return y ** 3 / x ** 2, y / x


def group_order(params):
    return 2 * (params.q + 1) ** 2


def all_elements(params):
    m, Q = params.m, params.q + 1
    for u, w, e, t in itertools.product(range(m), range(Q), range(2), range(3)):
        yield CurveAutomorphism(params, u, w, e, t)


def random_element(params, rng):
    return CurveAutomorphism(params, rng.randrange(params.m), rng.randrange(params.q + 1),
                             rng.randrange(2), rng.randrange(3))


def _apply_generator(g, P):
    params = P.params
    if P.is_symbolic:
        if g[0] == "theta":
            return P
        table = _T2_PLACES if g[0] == "t2" else _T3_PLACES
        return CurvePoint.place(params, table[P.kind])
    a, b = P.a, P.b
    if not a:
        raise UndefinedAt("x = 0")
    if g[0] == "theta":
        d0 = _delta0(params, a.ctx)
        return CurvePoint(params, a * d0 ** (3 * g[1]), b * d0 ** g[2], check=False)
    if g[0] == "t2":
        return CurvePoint(params, a.inverse(), b / a, check=False)
    if not b:
        return CurvePoint.place(params, "O0")
    return CurvePoint(params, b ** 3 / (a * a), b / a, check=False)


def apply_auto(sigma, P):
    """Image of P under sigma; symbolic places move at set level."""
    Q = P
    for g in sigma.word():
        Q = _apply_generator(g, Q)
    if not Q.is_symbolic:
        if not on_curve(Q.params, Q.a, Q.b):
            raise NotOnCurve("image %s left the curve" % Q.to_text())
    return Q


def verify_relations(params):
    """Check the defining relations as identities of rational maps.

    Returns (ok, name of the first failing relation or None).
    """
    ctx = params.base_field
    G = lambda *a: CurveAutomorphism(params, *a)
    t2, t3 = G(0, 0, 1, 0), G(0, 0, 0, 1)
    t2f, t3f = _generator_functions(params, ctx, ("t2",)), _generator_functions(params, ctx, ("t3",))
    x = FunctionElement.x(ctx, params)
    y = FunctionElement.y(ctx, params)

    def compose(*maps):
        X, Y = x, y
        for gX, gY in maps:
            X, Y = gX.substitute(X, Y), gY.substitute(X, Y)
        return X, Y

    def same(f, g):
        return f[0].equals(g[0]) and f[1].equals(g[1])

    t3inv = compose(t3f, t3f)
    checks = [
        ("t2^2 = 1", lambda: same(compose(t2f, t2f), (x, y))),
        ("t3^3 = 1", lambda: same(compose(t3f, t3f, t3f), (x, y))),
        ("t2 t3 t2 = t3^2", lambda: same(compose(t2f, t3f, t2f), t3inv)),
    ]
    gens = [(1, 0), (0, 1)] if params.m > 1 else [(0, 1)]
    for u, w in gens:
        th = _generator_functions(params, ctx, ("theta", u, w))
        d0 = _delta0(params, ctx)
        g, d = d0 ** (3 * u), d0 ** w
        rhs2 = (x * g.inverse(), y * (d / g))
        rhs3 = (x * (g / d ** 3), y * (g / d ** 2))
        checks.append(("t2 theta(%d,%d) t2" % (u, w), lambda th=th, r=rhs2: same(compose(t2f, th, t2f), r)))
        checks.append(("t3 theta(%d,%d) t3^-1" % (u, w), lambda th=th, r=rhs3: same(compose(t3f, th, t3inv), r)))
    # the normal-form multiplication must agree with composition of maps
    for s1, s2 in [(t2, t3), (t3, t2), (G(1, 0, 0, 0), t3), (t3, G(1, 2, 0, 0)), (G(0, 1, 1, 2), G(1, 1, 0, 1))]:
        checks.append(("normal form %r * %r" % (s1, s2),
                       lambda s1=s1, s2=s2: same((s1 * s2).functions(ctx),
                                                 compose(s1.functions(ctx), s2.functions(ctx)))))
    for name, check in checks:
        if not check():
            return False, name
    return True, None


def orbit_representative(params):
    """The O_m point (a, 0) over F_{q^2} with the smallest coordinates of a."""
    return orbit_m_points(params)[0]


def orbit_m_points(params):
    """The m points (a, 0) with a^m = -1, sorted by coordinates."""
    K = params.base_field
    xs = sorted(nth_roots(-K.one, params.m), key=lambda z: z.coeffs)
    return [CurvePoint(params, a, K.zero) for a in xs]


def orbit_of_O(params):
    """Closure of one O_m point under the generators."""
    start = orbit_representative(params)
    gens = [CurveAutomorphism(params, 1, 0), CurveAutomorphism(params, 0, 1),
            CurveAutomorphism.theta2(params), CurveAutomorphism.theta3(params)]
    seen = {start}
    todo = [start]
    while todo:
        P = todo.pop()
        for g in gens:
            Q = apply_auto(g, P)
            if Q not in seen:
                seen.add(Q)
                todo.append(Q)
    affine = [P for P in seen if not P.is_symbolic]
    # the set-level tag "Om" is the affine part already collected
    symbolic = sorted({P.kind for P in seen if P.is_symbolic} - {"Om"})
    assert len(affine) == params.m and all(not P.b for P in affine)
    assert symbolic == ["O0", "Oinf"], symbolic
    # O0 and Oinf each stand for m places
    return {"affine": sorted(affine, key=lambda P: P.a.coeffs), "symbolic": symbolic,
            "size": len(affine) + params.m * len(symbolic)}


def stabilizer_order(P):
    return sum(1 for s in all_elements(P.params) if apply_auto(s, P) == P)


def distinctness_premise(params):
    """True iff the orbit semigroup differs from every other rational-class semigroup."""
    from .weierstrass import census
    rows = census(params).rows
    orbit = rows[0].semigroup
    q = params.q
    return all(r.semigroup != orbit and (q - 2) not in r.semigroup for r in rows[1:]) and (q - 2) in orbit

