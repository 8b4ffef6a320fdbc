from math import gcd, pi

import pytest
from sympy import divisors, totient

from x3curve.curve import CurveParams, PointClass, sample_points
from x3curve.curve.classify import GENERIC, ORBIT, PORDER, SPECIAL
from x3curve.errors import BadPOrder, UnclassifiedPoint, WrongClass
from x3curve.numsg import sg_from_gaps, sg_from_generators
from x3curve.weierstrass import (all_weierstrass_rational, census, generic_gapset, multiplicity_criterion,
                                 nonrational_gapset, semigroup_at, swapped_gaps, weierstrass_count,
                                 weierstrass_count_by_classes)

QS = [5, 8, 11, 17, 23]


def test_q11_semigroups():
    P = CurveParams(11)
    S = semigroup_at(PointClass(ORBIT), P)
    assert S == sg_from_generators([9, 11, 12]) and S.genus == 19
    assert semigroup_at(PointClass(PORDER, 1, True), P).generators == (10, 11, 12, 18)
    T = semigroup_at(PointClass(SPECIAL), P)
    assert T.generators == (10, 11, 12, 19, 28)
    assert list(T.gaps) == list(range(1, 10)) + list(range(13, 19)) + [25, 26, 27, 37]
    assert T.is_symmetric() and max(T.gaps) == 2 * 19 - 1
    assert semigroup_at(PointClass(PORDER, 3, True), P) == T


def test_generic_gapsets():
    assert generic_gapset(CurveParams(5)) == [1, 2, 3, 6]
    assert generic_gapset(CurveParams(11)) == list(range(1, 10)) + list(range(12, 18)) + [23, 24, 25, 34]
    assert len(generic_gapset(CurveParams(17))) == 46


def test_nonrational_gapsets():
    P = CurveParams(11)
    assert swapped_gaps(P, 2) == [9]
    assert nonrational_gapset(P, 2) == list(range(1, 9)) + [10] + list(range(12, 18)) + [23, 24, 25, 34]
    P17 = CurveParams(17)
    assert sorted(swapped_gaps(P17, 1)) == [29, 57]
    G = set(nonrational_gapset(P17, 1))
    assert {30, 58} <= G and not {29, 57} & G
    with pytest.raises(BadPOrder):
        nonrational_gapset(P, 3)
    with pytest.raises(BadPOrder):
        nonrational_gapset(CurveParams(8), 1)


@pytest.mark.parametrize("q", QS)
def test_every_class_has_genus_g_and_closes(q):
    P = CurveParams(q)
    classes = [PointClass(ORBIT), PointClass(SPECIAL), PointClass(GENERIC)]
    for i in range(1, P.m):
        if (i + 1) % P.p:
            classes.append(PointClass(PORDER, i, P.m % (i + 1) == 0))
    for c in classes:
        S = semigroup_at(c, P)
        assert S.genus == P.genus
        assert sg_from_gaps(S.gaps) == S
        if c.rational:
            assert S.is_symmetric()
    gen = semigroup_at(PointClass(GENERIC), P)
    assert not gen.is_symmetric() and max(gen.gaps) == (P.m - 1) * q + 1 < 2 * P.genus - 1


def test_unclassified():
    with pytest.raises(UnclassifiedPoint):
        semigroup_at("nonsense", CurveParams(5))


@pytest.mark.parametrize("q", [5, 8, 11, 17, 23, 29])
def test_census_identity(q):
    P = CurveParams(q)
    rep = census(P)
    assert rep.total == q * q + 1 + 2 * q * P.genus
    assert rep.distinct_semigroups == len(divisors(P.m)) == len(rep.rows)
    assert sum(int(totient(d)) for d in divisors(P.m)) == P.m


def test_census_rows():
    rep = census(CurveParams(11))
    assert [(r.label, r.count) for r in rep.rows] == [("O", 12), ("porder1", 144), ("porder3+alpha_special", 384)]
    assert [r.count for r in census(CurveParams(5)).rows] == [6, 60]
    csv = rep.to_csv().splitlines()
    assert csv[0] == "class,semigroup_generators,point_count" and csv[-1] == "total,,540"


def test_weierstrass_counts():
    P5, P11 = CurveParams(5), CurveParams(11)
    assert weierstrass_count(P5).exact == 66 == census(P5).total
    w = weierstrass_count(P11)
    assert w.exact == 828 == census(P11).total + 144 * int(totient(3))
    assert w.nonrational == {2: 288}
    for q in (5, 11, 17):
        P = CurveParams(q)
        assert weierstrass_count(P).exact == weierstrass_count_by_classes(P)
    p = 11
    assert w.asymptotic == pytest.approx(11 ** 4 / (3 * pi ** 2) * p / (p + 1))


def test_all_rational_scan():
    got = {q: all_weierstrass_rational(CurveParams(q)) for q in (5, 8, 11, 17, 23, 29, 32, 41, 47, 53)}
    assert {q for q, v in got.items() if v} == {5, 8}


def test_multiplicity_criterion_q11():
    P = CurveParams(11)
    for x in sample_points("porder2_nonrational", P, 3):
        r = multiplicity_criterion(x)
        assert r.multiplicity == 9 and all(r.equivalences) and r.tangent_geometric
    for x in sample_points("generic", P, 5):
        r = multiplicity_criterion(x)
        assert r.multiplicity in (9, 10)
        assert len(set(r.equivalences)) == 1
    with pytest.raises(WrongClass):
        multiplicity_criterion(sample_points("alpha_special", P, 1)[0])


def test_multiplicity_criterion_divisibility():
    # i + 1 | m - 1 exactly for the non-rational classes of multiplicity q - 2
    for q in (11, 17, 23):
        P = CurveParams(q)
        for i in range(1, P.m - 1):
            if gcd(i + 1, P.p) == 1 and P.m % (i + 1):
                S = semigroup_at(PointClass(PORDER, i, False), P)
                assert (S.multiplicity == q - 2) == ((P.m - 1) % (i + 1) == 0)
                assert S.conductor == (P.m - 1) * q + 2
