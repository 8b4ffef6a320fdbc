"""Finite fields F_p and F_{p^e} with dense coordinate vectors.

Every field is a flat extension of its prime field, defined by the
lexicographically smallest monic irreducible polynomial of degree e
(coefficients compared from the constant term upward).  Contexts are cached,
so two requests for the same (p, e) return the same object.
"""

import functools
import itertools
import array
import math

from sympy import factorint, isprime

from .errors import ContextMismatch, DegreeTooLarge, NoEmbedding, NotPrime, ZeroElement

MAX_FIELD_BITS = 256
EXHAUSTIVE_LIMIT = 10 ** 6


# ---------------------------------------------------------------------------
# polynomials over F_p, as coefficient lists (low degree first)

def _trim(f):
    while f and f[-1] == 0:
        f.pop()
    return f


def _pmod(f, g, p):
    """Remainder of f modulo g over F_p; g must have a unit leading coefficient."""
    f = [c % p for c in f]
    _trim(f)
    dg = len(g) - 1
    inv = pow(g[-1], -1, p)
    while len(f) - 1 >= dg:
        c = f[-1] * inv % p
        shift = len(f) - 1 - dg
        for i, gi in enumerate(g):
            f[shift + i] = (f[shift + i] - c * gi) % p
        _trim(f)
    return f


def _pmulmod(f, g, mod, p):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return _pmod(out, mod, p)


def _ppowmod(f, k, mod, p):
    result = [1]
    base = _pmod(list(f), mod, p)
    while k:
        if k & 1:
            result = _pmulmod(result, base, mod, p)
        base = _pmulmod(base, base, mod, p)
        k >>= 1
    return result


def _pgcd(f, g, p):
    f = _trim([c % p for c in f])
    g = _trim([c % p for c in g])
    while g:
        f, g = g, _pmod(f, g, p)
    return f


def is_irreducible(f, p):
    """Ben-Or test: f of degree e is irreducible iff gcd(X^{p^i} - X, f) = 1 for i <= e/2."""
    e = len(f) - 1
    if e <= 0:
        return False
    if e == 1:
        return True
    xp = [0, 1]
    for _ in range(e // 2):
        xp = _ppowmod(xp, p, f, p)
        h = list(xp) + [0] * max(0, 2 - len(xp))
        h[1] = (h[1] - 1) % p
        if len(_pgcd(f, h, p)) > 1:
            return False
    return True


def smallest_irreducible(p, e):
    """Monic irreducible of degree e with the smallest (c0, c1, ..., c_{e-1})."""
    if e == 1:
        return [0, 1]
    for c0 in range(1, p):
        for rest in itertools.product(range(p), repeat=e - 1):
            f = [c0] + list(rest) + [1]
            if is_irreducible(f, p):
                return f
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


# ---------------------------------------------------------------------------

class FieldCtx:
    """The field F_{p^e}.  Build through make_field()."""

    def __init__(self, p, e):
        self.p = p
        self.e = e
        self.size = p ** e
        self.modulus = tuple(smallest_irreducible(p, e))
        # X^{e+k} expressed in the power basis, for k = 0..e-2
        red = []
        cur = [(-c) % p for c in self.modulus[:e]]
        for _ in range(max(0, e - 1)):
            red.append(tuple(cur))
            nxt = [0] + cur[:-1]
            top = cur[-1]
            if top:
                for i in range(e):
                    nxt[i] = (nxt[i] - top * self.modulus[i]) % p
            cur = nxt
        self._red = tuple(red)
        self._setup_packing()
        self.zero = FieldElement(self, (0,) * e)
        self.one = FieldElement(self, (1,) + (0,) * (e - 1))
        self._prim = None
        self._embeddings = {}
        self.zeta3 = self._find_zeta3() if (self.size - 1) % 3 == 0 else None

    def __repr__(self):
        return "GF(%d^%d)" % (self.p, self.e)

    def __call__(self, value):
        """Coerce an int, a coordinate sequence, or an element of this field."""
        if isinstance(value, FieldElement):
            if value.ctx is not self:
                raise ContextMismatch("element of %r used in %r" % (value.ctx, self))
            return value
        if isinstance(value, int):
            return FieldElement(self, (value % self.p,) + (0,) * (self.e - 1))
        coeffs = [int(c) % self.p for c in value]
        if len(coeffs) > self.e:
            raise ValueError("too many coordinates for %r" % self)
        return FieldElement(self, tuple(coeffs) + (0,) * (self.e - len(coeffs)))

    @property
    def gen(self):
        """The class of X (equal to 0 in a prime field by the X - 0 convention)."""
        if self.e == 1:
            return self.zero
        return self((0, 1))

    def from_int(self, k):
        """Element whose coordinates are the base-p digits of k."""
        digits = []
        for _ in range(self.e):
            k, r = divmod(k, self.p)
            digits.append(r)
        return FieldElement(self, tuple(digits))

    def elements(self):
        for k in range(self.size):
            yield self.from_int(k)

    def random(self, rng):
        return FieldElement(self, tuple(rng.randrange(self.p) for _ in range(self.e)))

    def random_nonzero(self, rng):
        while True:
            x = self.random(rng)
            if x:
                return x

    def from_text(self, text):
        return self([int(t) for t in text.split(",")])

    # -- arithmetic kernels on coordinate tuples --

    def _setup_packing(self):
        p, e = self.p, self.e
        bound = e * (p - 1) ** 2 * (1 + (e - 1) * (p - 1)) + 1
        self._slot = 32 if bound < 2 ** 32 else 64
        self._fmt = "I" if self._slot == 32 else "Q"
        self._low_mask = (1 << (self._slot * e)) - 1
        self._red_packed = [self._pack(row) for row in self._red]

    def _pack(self, coeffs):
        return int.from_bytes(array.array(self._fmt, coeffs).tobytes(), "little")

    def _mul(self, a, b):
        p, e = self.p, self.e
        if e == 1:
            return ((a[0] * b[0]) % p,)
        # Kronecker substitution: one big-int product, then fold X^{e+k} back
        c = self._pack(a) * self._pack(b)
        w = self._slot
        res = c & self._low_mask
        hi = c >> (w * e)
        mask = (1 << w) - 1
        for red in self._red_packed:
            if not hi:
                break
            ck = hi & mask
            if ck:
                res += ck * red
            hi >>= w
        raw = res.to_bytes(w // 8 * e, "little")
        return tuple(x % p for x in memoryview(raw).cast(self._fmt))

    # -- group structure --

    @functools.cached_property
    def order_factors(self):
        return factorint(self.size - 1)

    @property
    def primitive(self):
        """Deterministic generator of the multiplicative group."""
        if self._prim is None:
            n = self.size - 1
            k = 1
            while True:
                g = self.from_int(k)
                if g and all(g ** (n // r) != self.one for r in self.order_factors):
                    self._prim = g
                    break
                k += 1
        return self._prim

    def _find_zeta3(self):
        n = self.size - 1
        k = 1
        while True:
            z = self.from_int(k) ** (n // 3)
            if z and z != self.one:
                return min(z, z * z, key=lambda w: w.coeffs)
            k += 1

    def root_of_unity(self, d):
        """A primitive d-th root of unity (d must divide size - 1)."""
        if (self.size - 1) % d:
            raise ValueError("%d does not divide %d" % (d, self.size - 1))
        return self.primitive ** ((self.size - 1) // d)


@functools.lru_cache(maxsize=None)
def make_field(p, e=1):
    """Return the cached context for F_{p^e}."""
    if not isinstance(p, int) or p < 2 or not isprime(p):
        raise NotPrime(p)
    if e < 1:
        raise DegreeTooLarge("degree must be positive, got %r" % e)
    if (p ** e).bit_length() > MAX_FIELD_BITS:
        raise DegreeTooLarge("F_%d^%d exceeds %d bits" % (p, e, MAX_FIELD_BITS))
    return FieldCtx(p, e)


class FieldElement:
    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx, coeffs):
        self.ctx = ctx
        self.coeffs = coeffs

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.ctx is not self.ctx:
                raise ContextMismatch("%r vs %r" % (self.ctx, other.ctx))
            return other
        if isinstance(other, int):
            return self.ctx(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.ctx.p
        return FieldElement(self.ctx, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.ctx.p
        return FieldElement(self.ctx, tuple((a - b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __neg__(self):
        p = self.ctx.p
        return FieldElement(self.ctx, tuple((-a) % p for a in self.coeffs))

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.ctx, self.ctx._mul(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def inverse(self):
        if not self:
            raise ZeroElement("zero has no inverse")
        return self ** (self.ctx.size - 2)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        if not self:
            return self.ctx.one if k == 0 else self
        k %= self.ctx.size - 1
        mul = self.ctx._mul
        result = self.ctx.one.coeffs
        base = self.coeffs
        while k:
            if k & 1:
                result = mul(result, base)
            k >>= 1
            if k:
                base = mul(base, base)
        return FieldElement(self.ctx, result)

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.ctx is other.ctx and self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == self.ctx(other).coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.ctx.p, self.ctx.e, self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    def __repr__(self):
        if self.ctx.e == 1:
            return "%d" % self.coeffs[0]
        return "[%s]" % self.to_text()

    def to_text(self):
        return ",".join(str(c) for c in self.coeffs)

    def in_subfield(self, d):
        """True iff the element lies in the subfield of size p^d."""
        return self ** (self.ctx.p ** d) == self


# ---------------------------------------------------------------------------

def _embedding_root(source, target):
    """Root of the source modulus in target with the smallest coordinate vector."""
    if source.e == 1:
        return None
    qs, qt = source.size, target.size
    if qs > EXHAUSTIVE_LIMIT:
        raise DegreeTooLarge("subfield of size %d too large to search" % qs)
    w = target.primitive ** ((qt - 1) // (qs - 1))
    mod = source.modulus
    z = target.one
    for _ in range(qs - 1):
        # Horner evaluation of the source modulus at z
        acc = target.zero
        for c in reversed(mod):
            acc = acc * z + c
        if not acc:
            conj = [z]
            for _ in range(source.e - 1):
                conj.append(conj[-1] ** source.p)
            return min(conj, key=lambda v: v.coeffs)
        z = z * w
    raise AssertionError("source modulus has no root in target")  # pragma: no cover


def embed(x, target):
    """Image of x under the deterministic embedding F_{p^e} -> target."""
    src = x.ctx
    if src is target:
        return x
    if src.p != target.p or target.e % src.e:
        raise NoEmbedding("%r does not embed in %r" % (src, target))
    powers = target._embeddings.get(src.e)
    if powers is None:
        r = _embedding_root(src, target)
        powers = [target.one]
        for _ in range(src.e - 1):
            powers.append(powers[-1] * r)
        target._embeddings[src.e] = powers
    acc = target.zero
    for c, pw in zip(x.coeffs, powers):
        if c:
            acc = acc + pw * c
    return acc


def mult_order(x):
    """Multiplicative order of a nonzero element."""
    if not x:
        raise ZeroElement("zero has no multiplicative order")
    ctx = x.ctx
    t = ctx.size - 1
    for r in ctx.order_factors:
        while t % r == 0 and x ** (t // r) == ctx.one:
            t //= r
    return t


def _dlog_prime_power(h, gen, r, t, one):
    """Discrete log of h to base gen, where gen has order r^t (Pohlig-Hellman)."""
    L = 0
    gamma = gen ** (r ** (t - 1))
    table = {}
    acc = one
    for d in range(r):
        table[acc] = d
        acc = acc * gamma
    gen_inv = gen.inverse()
    for k in range(t):
        hk = (h * gen_inv ** L) ** (r ** (t - 1 - k))
        d = table.get(hk)
        if d is None:
            return None
        L += d * r ** k
    return L


def _root_prime_power(c, r, a):
    """Some z with z^(r^a) = c, assuming one exists."""
    ctx = c.ctx
    n = ctx.size - 1
    t = 0
    s = n
    while s % r == 0:
        s //= r
        t += 1
    ra = r ** a
    z0 = c ** pow(ra, -1, s) if s > 1 else ctx.one
    if t == 0:
        return z0
    err = c / z0 ** ra  # lies in the Sylow r-subgroup
    gen = ctx.primitive ** s
    L = _dlog_prime_power(err, gen, r, t, ctx.one)
    if L is None or L % ra:
        raise AssertionError("r-power root does not exist")  # pragma: no cover
    return z0 * gen ** (L // ra)


def nth_roots(c, n):
    """All z in the field of c with z^n = c."""
    ctx = c.ctx
    if n < 1:
        raise ValueError("n must be positive")
    if not c:
        return {ctx.zero}
    N = ctx.size - 1
    d = math.gcd(n, N)
    if c ** (N // d) != ctx.one:
        return set()
    # w with w^d = c, assembled prime by prime
    w = c
    dd = 1
    for r, a in factorint(d).items():
        ra = r ** a
        zr = _root_prime_power(c, r, a)
        if dd == 1:
            w, dd = zr, ra
        else:
            _, u1, u2 = _xgcd(dd, ra)
            # u1*dd + u2*ra = 1
            w = w ** u2 * zr ** u1
            dd *= ra
    u = n // d
    z0 = w ** pow(u, -1, N // d) if N // d > 1 else ctx.one
    mu = ctx.root_of_unity(d)
    roots = set()
    z = z0
    for _ in range(d):
        roots.add(z)
        z = z * mu
    return roots


def _xgcd(a, b):
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        qt, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - qt * x1
        y0, y1 = y1, y0 - qt * y1
    return a, x0, y0


def nth_roots_exhaustive(c, n):
    """Brute-force reference for nth_roots on small fields."""
    ctx = c.ctx
    if ctx.size > EXHAUSTIVE_LIMIT:
        raise DegreeTooLarge("field too large for exhaustive search")
    return {z for z in ctx.elements() if z ** n == c}


def frobenius_q2(x, params):
    """x^{q^2}; requires x to live in an extension of F_{q^2}."""
    ctx = x.ctx
    if ctx.p != params.p or ctx.e % (2 * params.n):
        raise ContextMismatch("%r is not an extension of F_{%d^2}" % (ctx, params.q))
    return x ** (params.q ** 2)
