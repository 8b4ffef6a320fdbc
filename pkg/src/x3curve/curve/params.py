"""Curve parameters for y^{q+1} + x^{2m} + x^m = 0."""

from sympy import factorint

from ..errors import BadCongruence, NotPrimePower, TooSmall
from ..gf import embed, make_field


class CurveParams:
    """q = p^n with q = 2 mod 3, m = (q+1)/3 and genus (q^2 - q + 4)/6."""

    def __init__(self, q):
        if not isinstance(q, int) or q < 2:
            raise NotPrimePower(q)
        fac = factorint(q)
        if len(fac) != 1:
            raise NotPrimePower(q)
        (p, n), = fac.items()
        if q % 3 != 2:
            raise BadCongruence("q = %d is not 2 mod 3" % q)
        if q < 5:
            raise TooSmall("q = %d gives an elliptic curve" % q)
        self.q = q
        self.p = p
        self.n = n
        self.m = (q + 1) // 3
        self.genus = (q * q - q + 4) // 6
        assert 3 * self.m == q + 1
        assert self.genus == 1 + 3 * self.m * (self.m - 1) // 2

    def __repr__(self):
        return "CurveParams(q=%d)" % self.q

    def __eq__(self, other):
        return isinstance(other, CurveParams) and other.q == self.q

    def __hash__(self):
        return hash(self.q)

    @property
    def base_field(self):
        """F_{q^2}."""
        return make_field(self.p, 2 * self.n)

    def field(self, k=1):
        """F_{q^{2k}}."""
        return make_field(self.p, 2 * self.n * k)

    def lift(self, x, k):
        """Embed an element of a subfield into F_{q^{2k}}."""
        return embed(x, self.field(k))

    @property
    def n_rational_points(self):
        return self.q ** 2 + 1 + 2 * self.q * self.genus

    @property
    def default_precision(self):
        return 2 * self.genus + 8


def curve_params(q):
    return CurveParams(q)
