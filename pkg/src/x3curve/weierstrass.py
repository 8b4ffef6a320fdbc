"""Closed-form Weierstrass semigroups per point class, the rational census,
the Weierstrass point count and the multiplicity criterion.
"""

import math

from sympy import divisors, totient

from .curve.classify import GENERIC, ORBIT, PORDER, SPECIAL, PointClass, classify
from .curve.points import CurvePoint
from .curve.pq import pq_eval
from .errors import BadPOrder, UnclassifiedPoint, WrongClass
from .numsg import sg_from_gaps, sg_from_generators


def _phi(n):
    return int(totient(n))


def _check_genus(S, params):
    if S.genus != params.genus:
        raise AssertionError("semigroup %r has genus %d, expected %d" % (S, S.genus, params.genus))
    return S


def orbit_generators(params):
    q = params.q
    return [q - 2, q, q + 1]


def special_generators(params):
    q, m = params.q, params.m
    return [q, q + 1] + [(q - 1) + j * (q - 2) for j in range(m - 1)]


def porder_generators(params, i):
    """Generators for a rational point of P-order i <= m - 2."""
    q = params.q
    return [q, q + 1] + [(q - 1) + j * (q - 2) for j in range(i)] + [(q - 1) + i * (q - 2) - 1]


def generic_gapset(params):
    q, m = params.q, params.m
    gaps = {j * q + k for j in range(m - 1) for k in range(1, q - 3 * j - 1)}
    gaps.add((m - 1) * q + 1)
    assert 1 + sum(q - 3 * j - 2 for j in range(m - 1)) == params.genus == len(gaps)
    return sorted(gaps)


def swapped_gaps(params, i):
    """The gaps removed from the generic set for a non-rational point of P-order i."""
    q, m = params.q, params.m
    return [(m - 2 - i - l * (i + 1)) * q + (l + 1) * (3 * i + 3) for l in range((m - 2 - i) // (i + 1) + 1)]


def nonrational_gapset(params, i):
    if not (1 <= i <= params.m - 2) or math.gcd(i + 1, params.p) != 1:
        raise BadPOrder("P-order %d is not a non-rational Weierstrass class" % i)
    removed = swapped_gaps(params, i)
    added = [v + 1 for v in removed]
    gaps = (set(generic_gapset(params)) - set(removed)) | set(added)
    assert len(gaps) == params.genus
    return sorted(gaps)


def semigroup_for_class(cls, params):
    if cls.tag == ORBIT:
        S = sg_from_generators(orbit_generators(params))
    elif cls.tag == SPECIAL:
        S = sg_from_generators(special_generators(params))
    elif cls.tag == PORDER and cls.rational:
        if cls.i == params.m - 1:
            S = sg_from_generators(special_generators(params))
        else:
            S = sg_from_generators(porder_generators(params, cls.i))
    elif cls.tag == PORDER:
        S = sg_from_gaps(nonrational_gapset(params, cls.i))
    elif cls.tag == GENERIC:
        S = sg_from_gaps(generic_gapset(params))
    else:
        raise UnclassifiedPoint(cls)
    return _check_genus(S, params)


def semigroup_at(P, params=None):
    """Closed-form semigroup at a point or for a PointClass."""
    if isinstance(P, PointClass):
        return semigroup_for_class(P, params)
    if isinstance(P, CurvePoint):
        return semigroup_for_class(classify(P, params or P.params), params or P.params)
    raise UnclassifiedPoint(P)


# ---------------------------------------------------------------------------

class CensusRow:
    def __init__(self, label, semigroup, count):
        self.label = label
        self.semigroup = semigroup
        self.count = count

    def to_json(self):
        return {"class": self.label, "generators": list(self.semigroup.generators), "count": self.count}


class CensusReport:
    def __init__(self, params, rows):
        self.params = params
        self.q = params.q
        self.rows = rows
        self.total = sum(r.count for r in rows)
        self.expected_total = params.n_rational_points

    @property
    def identity_holds(self):
        return self.total == self.expected_total

    @property
    def distinct_semigroups(self):
        return len({r.semigroup for r in self.rows})

    def to_json(self):
        return {
            "q": self.q,
            "rows": [r.to_json() for r in self.rows],
            "total": self.total,
            "expected_total": self.expected_total,
            "identity_holds": self.identity_holds,
            "distinct_semigroups": self.distinct_semigroups,
            "divisors_of_m": len(divisors(self.params.m)),
        }

    def to_csv(self):
        lines = ["class,semigroup_generators,point_count"]
        for r in self.rows:
            lines.append("%s,\"%s\",%d" % (r.label, " ".join(map(str, r.semigroup.generators)), r.count))
        lines.append("total,,%d" % self.total)
        return "\n".join(lines)


def census(params):
    """Rational points grouped by semigroup."""
    q, m = params.q, params.m
    rows = [CensusRow("O", semigroup_for_class(PointClass(ORBIT), params), q + 1)]
    for i in range(1, m - 1):
        if m % (i + 1) == 0:
            rows.append(CensusRow("porder%d" % i, semigroup_for_class(PointClass(PORDER, i, True), params),
                                  (q + 1) ** 2 * _phi(i + 1)))
    top = semigroup_for_class(PointClass(SPECIAL), params)
    assert top == semigroup_for_class(PointClass(PORDER, m - 1, True), params)
    rows.append(CensusRow("porder%d+alpha_special" % (m - 1), top, (q + 1) ** 2 * _phi(m) + 2 * m * (q + 1)))
    report = CensusReport(params, rows)
    if not report.identity_holds:
        raise AssertionError("census total %d != %d" % (report.total, report.expected_total))
    return report


class WeierstrassCount:
    def __init__(self, params, exact, rational, nonrational):
        self.q = params.q
        self.exact = exact
        self.rational = rational
        self.nonrational = nonrational
        p = params.p
        self.asymptotic = params.q ** 4 / (3 * math.pi ** 2) * p / (p + 1)

    def to_json(self):
        return {
            "q": self.q,
            "exact": self.exact,
            "rational": self.rational,
            "nonrational_by_porder": {str(k): v for k, v in sorted(self.nonrational.items())},
            "asymptotic_estimate": round(self.asymptotic, 6),
        }


def weierstrass_count(params):
    """Total number of Weierstrass points, by the closed finite sum."""
    q, m, p = params.q, params.m, params.p
    exact = (-(q + 1) ** 2 + (q + 1) + 2 * (q + 1) * m
             + (q + 1) ** 2 * (sum(_phi(i) for i in range(1, m + 1))
                               - sum(_phi(p * i) for i in range(1, (m - 1) // p + 1))))
    rational = census(params).total
    nonrational = {}
    for i in range(1, m - 1):
        if math.gcd(i + 1, p) == 1 and m % (i + 1):
            nonrational[i] = (q + 1) ** 2 * _phi(i + 1)
    assert exact >= rational
    return WeierstrassCount(params, exact, rational, nonrational)


def weierstrass_count_by_classes(params):
    """Independent recount: O, alpha-special points, and all P-orders below m."""
    q, m, p = params.q, params.m, params.p
    total = (q + 1) + 2 * m * (q + 1)
    for i in range(1, m):
        if (i + 1) % p:
            total += (q + 1) ** 2 * _phi(i + 1)
    return total


def all_weierstrass_rational(params):
    m, p = params.m, params.p
    return not any(math.gcd(i + 1, p) == 1 and m % (i + 1) for i in range(1, m - 1))


class MultiplicityRecord:
    def __init__(self, multiplicity, equivalences, tangent_geometric):
        self.multiplicity = multiplicity
        self.equivalences = equivalences
        self.tangent_geometric = tangent_geometric

    def to_json(self):
        return {"multiplicity": self.multiplicity, "equivalences": list(self.equivalences),
                "tangent_geometric": self.tangent_geometric}


def multiplicity_criterion(P, params=None):
    """Evaluate the four equivalent conditions for multiplicity q - 2 at a non-rational point."""
    params = params or P.params
    cls = classify(P, params)
    if cls.rational:
        raise WrongClass("the criterion concerns non-rational points")
    q, m = params.q, params.m
    S = semigroup_for_class(cls, params)
    c1 = S.multiplicity == q - 2
    c2 = cls.tag == PORDER and (m - 1) % (cls.i + 1) == 0
    alpha = P.alpha
    c3 = pq_eval("P", m - 1, alpha) == 0
    c4 = alpha ** (q - 1) + (alpha - 1) ** (q - 1) + 1 == 0
    # Frobenius image on the tangent line, checked directly in coordinates
    a, b = P.a, P.b
    Q2 = q * q
    am = a ** m
    tangent = a ** (m - 1) * (2 * am + 1) * (a ** Q2 - a) + 3 * b ** q * (b ** Q2 - b)
    geo = tangent == 0
    flags = (c1, c2, c3, c4)
    if len(set(flags + (geo,))) != 1:
        raise AssertionError("multiplicity conditions disagree: %s, geometric %s" % (flags, geo))
    assert S.conductor == (m - 1) * q + 2
    return MultiplicityRecord(q - 2 if c1 else q - 1, flags, geo)
