"""Points and places of the curve."""

from ..errors import AlphaUndefined, NotOnCurve, UnsupportedPlace
from ..gf import embed, nth_roots

SYMBOLIC_KINDS = ("O0", "Oinf", "Om")


class CurvePoint:
    """An affine point (a, b) with a != 0 over F_{q^{2k}}, or a symbolic place tag.

    The tags "O0" and "Oinf" stand for the m places over (0, 0) and over
    infinity; "Om" is only produced as a set-level image when a symbolic
    place is moved into the affine part of the orbit O.
    """

    __slots__ = ("params", "kind", "a", "b", "_alpha")

    def __init__(self, params, a=None, b=None, kind="affine", check=True):
        self.params = params
        self.kind = kind
        self.a = a
        self.b = b
        self._alpha = None
        if kind == "affine":
            if a.ctx is not b.ctx:
                raise NotOnCurve("coordinates live in different fields")
            if not a:
                raise UnsupportedPlace("points over x = 0 are the symbolic places O0")
            if check and not on_curve(params, a, b):
                raise NotOnCurve("(%s, %s) is not on the curve" % (a.to_text(), b.to_text()))
        elif kind not in SYMBOLIC_KINDS:
            raise ValueError("unknown point kind %r" % kind)

    @classmethod
    def place(cls, params, kind):
        return cls(params, kind=kind)

    @property
    def is_symbolic(self):
        return self.kind != "affine"

    @property
    def ctx(self):
        return self.a.ctx if self.a is not None else None

    @property
    def ext(self):
        """k such that the coordinates are stored in F_{q^{2k}}."""
        return self.a.ctx.e // (2 * self.params.n) if self.a is not None else 1

    @property
    def in_orbit_O(self):
        return self.is_symbolic or not self.b

    @property
    def alpha(self):
        if self._alpha is None:
            self._alpha = alpha_of(self)
        return self._alpha

    @property
    def is_rational(self):
        """True iff the point is defined over F_{q^2}."""
        if self.is_symbolic:
            return True
        d = 2 * self.params.n
        return self.a.in_subfield(d) and self.b.in_subfield(d)

    def lift(self, k):
        """The same point with coordinates embedded in F_{q^{2k}}."""
        if self.is_symbolic:
            return self
        K = self.params.field(k)
        return CurvePoint(self.params, embed(self.a, K), embed(self.b, K), check=False)

    def key(self):
        if self.is_symbolic:
            return (self.kind,)
        return (self.kind, self.a.ctx.e, self.a.coeffs, self.b.coeffs)

    def __eq__(self, other):
        return isinstance(other, CurvePoint) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return "CurvePoint(%s)" % self.to_text()

    def to_text(self):
        if self.is_symbolic:
            return self.kind
        return "a=%s;b=%s;ext=%d" % (self.a.to_text(), self.b.to_text(), self.ext)


def on_curve(params, a, b):
    m = params.m
    am = a ** m
    return b ** (params.q + 1) + am * am + am == 0


def parse_point(text, params):
    """Parse "a=<coords>;b=<coords>;ext=k" or one of the tags O0, Oinf."""
    text = text.strip()
    if text in ("O0", "Oinf"):
        return CurvePoint.place(params, text)
    fields = {}
    for part in text.split(";"):
        if "=" not in part:
            raise ValueError("malformed point %r" % text)
        key, val = part.split("=", 1)
        fields[key.strip()] = val.strip()
    if "a" not in fields or "b" not in fields:
        raise ValueError("point needs a= and b= fields")
    k = int(fields.get("ext", "1"))
    if k < 1:
        raise ValueError("ext must be positive")
    K = params.field(k)
    return CurvePoint(params, K.from_text(fields["a"]), K.from_text(fields["b"]))


def point_from_x(a, params):
    """All points of the curve over the field of a lying above x = a."""
    if not a:
        raise UnsupportedPlace("x = 0 is covered by the symbolic places O0")
    am = a ** params.m
    c = -(am * am) - am
    if not c:
        return [CurvePoint(params, a, a.ctx.zero, check=False)]
    roots = sorted(nth_roots(c, params.q + 1), key=lambda z: z.coeffs)
    return [CurvePoint(params, a, b, check=False) for b in roots]


def alpha_of(P):
    """alpha(P) = a^m / (1 + a^m)."""
    if P.is_symbolic:
        raise AlphaUndefined("alpha is not defined at %s" % P.kind)
    am = P.a ** P.params.m
    if am == -1:
        raise AlphaUndefined("alpha is not defined on the orbit O")
    alpha = am / (am + 1)
    assert 1 - alpha != 0
    return alpha
