"""Brute-force gap computation from the canonical space L((q-2) D_inf).

A monomial x^i y^j lies in L(n D_inf) when it has no pole at the places over
(0,0) (3i + j >= 0), none at the points (a, 0) (j >= 0), and pole order
3i + 2j <= n at infinity.  The valuations attained by L((q-2) D_inf) at a
point P are exactly the gaps minus one, so row-reducing the local expansions
of a basis by leading order reads off the gap set.
"""

from .curve.functions import BiPoly, FunctionElement, local_expansion
from .errors import DimensionMismatch, PrecisionExhausted, UnsupportedPlace
from .numsg import sg_from_gaps
from .series import TruncatedSeries


def lattice_monomials(params, n):
    """Exponents (i, j) with j >= max(0, -3i), 0 <= j <= q and 3i + 2j <= n."""
    q = params.q
    out = []
    # j >= -3i and 3i + 2j <= n force i >= -n/3
    for i in range(-(n // 3) - 1, n // 3 + 1):
        for j in range(max(0, -3 * i), q + 1):
            if 3 * i + 2 * j <= n:
                out.append((i, j))
    return sorted(out, key=lambda ij: (3 * ij[0] + 2 * ij[1], ij))


def riemann_roch_dim(params, n):
    return len(lattice_monomials(params, n))


class CanonicalBasis:
    """Monomial basis of L((q-2) D_inf)."""

    def __init__(self, params):
        self.params = params
        self.monomials = lattice_monomials(params, params.q - 2)
        if len(self.monomials) != params.genus:
            raise DimensionMismatch("%d monomials for genus %d" % (len(self.monomials), params.genus))
        for i, j in self.monomials:
            if not (3 * i + j >= 0 and j >= 0 and 3 * i + 2 * j <= params.q - 2):
                raise DimensionMismatch("monomial x^%d y^%d is not regular" % (i, j))

    def __len__(self):
        return len(self.monomials)


def canonical_basis(params):
    return CanonicalBasis(params)


class GapReport:
    def __init__(self, point, gaps, pivots, precision, matched_closed_form=None, transferred_from=None):
        self.point = point
        self.gaps = gaps
        self.pivots = pivots
        self.precision = precision
        self.matched_closed_form = matched_closed_form
        self.transferred_from = transferred_from

    def to_json(self):
        return {
            "point": self.transferred_from or self.point.to_text(),
            "gaps": list(self.gaps),
            "pivots": list(self.pivots),
            "precision": self.precision,
            "matched_closed_form": self.matched_closed_form,
        }


def _monomial_series(exp, monomials):
    """Local series of each x^i y^j at the expansion point."""
    imin = min(i for i, _ in monomials)
    imax = max(i for i, _ in monomials)
    jmax = max(j for _, j in monomials)
    one = TruncatedSeries.constant(exp.x.ctx.one, exp.prec)
    xp = {0: one}
    for i in range(1, imax + 1):
        xp[i] = xp[i - 1] * exp.x
    if imin < 0:
        xinv = exp.x.inverse()
        for i in range(-1, imin - 1, -1):
            xp[i] = xp[i + 1] * xinv
    yp = [one]
    for _ in range(jmax):
        yp.append(yp[-1] * exp.y)
    return [xp[i] * yp[j] for i, j in monomials]


def _echelon(rows, track=False):
    """Reduce rows by leading order.

    Returns ({valuation: (row, combination)}, dead) where dead is the index of
    the first row that vanished to the working precision, or None.
    """
    pivots = {}
    n = len(rows)
    for idx, row in enumerate(rows):
        comb = None
        if track:
            comb = [0] * n
            comb[idx] = row.ctx.one
        while True:
            v = row.valuation()
            if v >= row.prec:
                return pivots, idx
            if v not in pivots:
                lead_inv = row[v].inverse()
                row = row * lead_inv
                if track:
                    comb = [c * lead_inv if c else c for c in comb]
                pivots[v] = (row, comb)
                break
            prow, pcomb = pivots[v]
            c = row[v]
            row = row - prow * c
            if track:
                comb = [u - w * c if w else u for u, w in zip(comb, pcomb)]
    return pivots, None


def _transfer_to_Om(P):
    """Orbit representative on the affine part of O for a symbolic place."""
    from .autgrp import orbit_representative
    return orbit_representative(P.params)


def oracle_gaps(P, basis=None, prec=None, compare=True):
    """Gap set at P computed by valuation echelonisation of the canonical space."""
    params = P.params
    basis = basis or CanonicalBasis(params)
    transferred = None
    if P.is_symbolic:
        if P.kind not in ("O0", "Oinf", "Om"):
            raise UnsupportedPlace(P.kind)
        transferred = P.kind
        P = _transfer_to_Om(P)
    N = prec or params.default_precision
    for attempt in range(2):
        exp = local_expansion(P, N)
        rows = _monomial_series(exp, basis.monomials)
        pivots, dead = _echelon(rows)
        if dead is None and max(pivots) < N - 1:
            break
        N *= 2
    else:
        raise PrecisionExhausted("pivots not resolved below precision %d" % (N // 2))
    pv = sorted(pivots)
    gaps = [v + 1 for v in pv]
    report = GapReport(P, gaps, pv, N, transferred_from=transferred)
    if compare:
        from .weierstrass import semigroup_at
        report.matched_closed_form = list(semigroup_at(P, params).gaps) == gaps
    return report


def oracle_semigroup(P, basis=None):
    return sg_from_gaps(oracle_gaps(P, basis, compare=False).gaps)


class NotFound:
    """Returned by find_with_valuation when no function attains the target."""

    def __init__(self, attained):
        self.attained = attained

    def __bool__(self):
        return False

    def __repr__(self):
        return "NotFound(attained=%s)" % sorted(self.attained)


def find_with_valuation(P, n, target_v, prec=None):
    """An element of L(n D_inf) with valuation exactly target_v at P, if one exists."""
    if P.is_symbolic:
        raise UnsupportedPlace("explicit functions need an affine point")
    params = P.params
    if n > params.q - 2:
        raise ValueError("pole bound %d exceeds q - 2" % n)
    monos = lattice_monomials(params, n)
    N = prec or max(params.default_precision, target_v + 4)
    exp = local_expansion(P, N)
    rows = _monomial_series(exp, monos)
    pivots, dead = _echelon(rows, track=True)
    if dead is not None:
        raise PrecisionExhausted("basis of L(%d D_inf) degenerate at precision %d" % (n, N))
    if target_v not in pivots:
        return NotFound(set(pivots))
    _, comb = pivots[target_v]
    # common denominator x^K
    K = max(0, -min(i for i, _ in monos))
    terms = {(i + K, j): c for (i, j), c in zip(monos, comb) if c}
    return FunctionElement(BiPoly(P.ctx, params, terms), BiPoly.monomial(P.ctx, params, K, 0))
