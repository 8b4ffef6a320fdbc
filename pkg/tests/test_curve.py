import random

import pytest
from hypothesis import given, strategies as st

from x3curve.curve import (CurveParams, CurvePoint, PointClass, classify, curve_params, divisor_check,
                           p_order, parse_point, point_from_x, pq_eval, pq_identity_check, pq_poly,
                           sample_points)
from x3curve.curve.classify import GENERIC, ORBIT, PORDER, SPECIAL
from x3curve.curve.divisors import DINF, O0
from x3curve.curve.functions import (FSequence, FunctionElement, GSequence, build_special_fn,
                                     expansion_in_T, fn_valuation, fn_xa, T_parameter_series)
from x3curve.curve.pq import excluded_alphas, pq_integer_poly
from x3curve.errors import (AlphaUndefined, BadCongruence, ClassInfeasible, ExcludedAlpha,
                            ExtensionBoundTooSmall, NotOnCurve, NotPrimePower, PoleAt, TooSmall,
                            UnsupportedFunction, UnsupportedPlace, WrongClass)
from x3curve.gf import make_field
from x3curve.series import TruncatedSeries

# polynomials printed for the rational field, coefficients low degree first
KNOWN_PQ = {
    ("P", 1): (1,),
    ("P", 2): (2, -3, -3, 2),
    ("P", 3): (3, -9, -9, 33, -9, -9, 3),
    ("Q", 1): (1, 1),
    ("Q", 2): (1, 1, -9, 1, 1),
    ("Q", 3): (1, 1, -27, 29, 29, -27, 1, 1),
}


def _strip(c):
    while len(c) > 1 and not c[-1]:
        c.pop()
    return c


# -- parameters --

@pytest.mark.parametrize("q,p,n,m,g", [(5, 5, 1, 2, 4), (8, 2, 3, 3, 10), (11, 11, 1, 4, 19), (17, 17, 1, 6, 46),
                                       (23, 23, 1, 8, 85), (32, 2, 5, 11, 166)])
def test_params(q, p, n, m, g):
    P = curve_params(q)
    assert (P.p, P.n, P.m, P.genus) == (p, n, m, g)
    assert P.genus == 1 + 3 * m * (m - 1) // 2
    assert P.n_rational_points == q * q + 1 + 2 * q * g


def test_params_errors():
    with pytest.raises(BadCongruence):
        CurveParams(7)
    with pytest.raises(NotPrimePower):
        CurveParams(6)
    with pytest.raises(TooSmall):
        CurveParams(2)


# -- points --

def test_orbit_points_q5():
    P = CurveParams(5)
    pts = sample_points("O", P, 10)
    affine = [x for x in pts if not x.is_symbolic]
    assert len(affine) == 2 and all(x.a ** 2 == -1 and not x.b for x in affine)
    assert all(classify(x) == PointClass(ORBIT) for x in pts)
    with pytest.raises(AlphaUndefined):
        affine[0].alpha


def test_point_from_x_counts():
    P = CurveParams(5)
    K = P.base_field
    for a in K.elements():
        if not a:
            continue
        pts = point_from_x(a, P)
        c = -(a ** 4) - a ** 2
        brute = [b for b in K.elements() if b ** 6 == c]
        assert sorted(x.b.coeffs for x in pts) == sorted(b.coeffs for b in brute)
        assert len(pts) in (0, 1, 6)
    with pytest.raises(UnsupportedPlace):
        point_from_x(K.zero, P)


def test_parse_point_roundtrip_and_errors():
    P = CurveParams(11)
    x = sample_points("porder2_nonrational", P, 1)[0]
    assert parse_point(x.to_text(), P) == x
    with pytest.raises(NotOnCurve):
        parse_point("a=1,0;b=1,0;ext=1", P)
    assert parse_point("O0", P).is_symbolic


def test_alpha_values():
    P = CurveParams(11)
    K = P.base_field
    for a in K.elements():
        if not a or a ** 4 == -1:
            continue
        for x in point_from_x(a, P)[:1]:
            am = a ** 4
            assert x.alpha == am / (1 + am) and x.alpha != 1
            if am == 1:
                assert x.alpha == K(2).inverse()
            if am * am + am + 1 == 0:
                assert x.alpha * x.alpha - x.alpha + 1 == 0
                assert x.b ** 12 == 1


# -- P and Q --

@pytest.mark.parametrize("which,i", sorted(KNOWN_PQ))
def test_pq_rational_route_matches_printed(which, i):
    assert pq_integer_poly(which, i) == KNOWN_PQ[(which, i)]


@pytest.mark.parametrize("p,e", [(5, 2), (11, 2), (43, 1), (2, 2), (17, 2), (11, 4)])
def test_pq_finite_field_matches_rational_route(p, e):
    K = make_field(p, e)
    for w in "PQ":
        for i in range(1, 7):
            assert _strip([K(c) for c in pq_integer_poly(w, i)]) == pq_poly(w, i, K)


def test_pq_values():
    K = make_field(43)
    s = K(3)
    assert pq_eval("P", 1, s) == 1
    assert pq_eval("P", 2, K(2)) == 0
    assert pq_eval("Q", 1, s) == 4
    assert pq_eval("P", 0, s) == 0
    z = K.zeta3
    with pytest.raises(PoleAt):
        pq_eval("Q", 0, -z)


def test_pq_degrees_large_prime():
    K = make_field(43)
    for i in range(1, 13):
        assert len(pq_poly("Q", i, K)) - 1 == 3 * i - 2
        assert len(pq_poly("P", i, K)) - 1 <= 3 * i - 3


def test_pq_identity_symbolic_instance():
    # P2 Q1 - P1 Q2 = (s^2 - s + 1)^2 at every s
    K = make_field(11, 2)
    for s in K.elements():
        lhs = pq_eval("P", 2, s) * pq_eval("Q", 1, s) - pq_eval("Q", 2, s)
        assert lhs == (s * s - s + 1) ** 2


@given(st.integers(-3, 8), st.integers(-3, 8), st.integers(-3, 8), st.integers(0, 10 ** 6))
def test_pq_identities_property(i, j, l, seed):
    K = make_field(11, 2)
    s = K.random(random.Random(seed))
    try:
        assert pq_identity_check(i, j, l, s)
    except PoleAt:
        pass


def test_pq_identity_trivial_case():
    K = make_field(5, 2)
    for s in K.elements():
        if s * s - s + 1:
            assert pq_identity_check(2, 2, 1, s)


def test_p_order():
    K = make_field(11, 2)
    assert p_order(K(2)) == 1
    for alpha in K.elements():
        if alpha in excluded_alphas(K):
            continue
        i = p_order(alpha)
        assert pq_eval("P", i + 1, alpha) == 0
        assert all(pq_eval("P", j, alpha) != 0 for j in range(2, i + 1))
        assert (i + 1) % 11
    with pytest.raises(ExcludedAlpha):
        p_order(-K.zeta3)


# -- classification --

def test_rational_census_q11_by_classification():
    P = CurveParams(11)
    counts = {}
    for a in P.base_field.elements():
        if a:
            for x in point_from_x(a, P):
                lab = classify(x).label
                counts[lab] = counts.get(lab, 0) + 1
    assert counts == {"O": 4, "alpha_special": 96, "porder1_rational": 144, "porder3_rational": 288}
    assert sum(counts.values()) + 2 * P.m == P.n_rational_points


def test_q5_nonrational_points_are_generic():
    P = CurveParams(5)
    for x in sample_points("generic", P, 10, seed=3):
        assert classify(x) == PointClass(GENERIC, rational=False)
        assert not x.is_rational


def test_class_label_roundtrip():
    for lab in ("O", "alpha_special", "generic", "porder2_nonrational", "porder3_rational"):
        assert PointClass.from_label(lab).label == lab
    with pytest.raises(ValueError):
        PointClass.from_label("porder2")


# -- sampling --

def test_sampling_deterministic_and_on_curve():
    P = CurveParams(11)
    a = sample_points("porder2_nonrational", P, 5, seed=4)
    b = sample_points("porder2_nonrational", P, 5, seed=4)
    assert a == b
    for x in a:
        assert not x.is_rational and x.ext == 3
        assert x.b ** 12 + x.a ** 8 + x.a ** 4 == 0


def test_sampling_errors():
    P = CurveParams(11)
    with pytest.raises(ClassInfeasible):
        sample_points(PointClass(PORDER, 2, True), P)
    with pytest.raises(ClassInfeasible):
        sample_points(PointClass(PORDER, 10, False), P)
    with pytest.raises(ExtensionBoundTooSmall):
        sample_points("porder2_nonrational", P, k_max=2)


def test_special_count_q11():
    from x3curve.curve.sampling import class_candidates
    P = CurveParams(11)
    _, pts = class_candidates(PointClass(SPECIAL), P)
    assert len(pts) == 96 == 2 * P.m * (P.q + 1)


# -- functions --

def test_function_arithmetic_and_reduction():
    P = CurveParams(5)
    K = P.base_field
    x = FunctionElement.x(K, P)
    y = FunctionElement.y(K, P)
    # y^(q+1) reduces to -x^2m - x^m
    assert (y ** 6).equals(-(x ** 4) - x ** 2)
    f = (x * y + 1) / (x - 2)
    assert (f * (x - 2)).equals(x * y + 1)
    pt = sample_points("alpha_special", P, 1)[0]
    assert f.evaluate(pt.a, pt.b) == (pt.a * pt.b + 1) / (pt.a - 2)


def test_basic_valuations():
    P = CurveParams(11)
    K = P.base_field
    pt = sample_points("porder1_rational", P, 1)[0]
    y = FunctionElement.y(K, P)
    assert fn_valuation(fn_xa(pt), pt) == 1
    if pt.alpha != -1:
        assert fn_valuation(y - pt.b, pt) == 1
    assert fn_valuation(build_special_fn("f0", pt), pt) == 2
    orbit = [x for x in sample_points("O", P, 4) if not x.is_symbolic][0]
    xa = (FunctionElement.x(K, P) - orbit.a) / orbit.a
    assert fn_valuation(xa, orbit) == P.q + 1
    with pytest.raises(UnsupportedPlace):
        fn_valuation(xa, CurvePoint.place(P, "O0"))


@pytest.mark.parametrize("label", ["porder1_rational", "porder2_nonrational", "porder3_rational", "generic"])
def test_f_sequence_valuations_q11(label):
    P = CurveParams(11)
    for pt in sample_points(label, P, 2, seed=5):
        if pt.alpha == -1:
            continue
        i = p_order(pt.alpha)
        F = FSequence(pt)
        for j in range(min(i, P.m - 1)):
            assert fn_valuation(F[j], pt) == 3 * j + 2
            s = expansion_in_T(F[j], pt)
            assert s.valuation() == 3 * j + 2
            assert s[3 * j + 2] == 3 * pq_eval("P", j + 1, pt.alpha)
            assert s[3 * j + 3] == pq_eval("Q", j + 1, pt.alpha)
        if i <= P.m - 2:
            assert fn_valuation(F[i], pt) == 3 * i + 3


def test_g_sequence_valuations_q11():
    P = CurveParams(11)
    for pt in sample_points("alpha_special", P, 3, seed=2):
        G = GSequence(pt)
        assert [fn_valuation(G[i], pt) for i in range(P.m - 1)] == [3 * i + 2 for i in range(P.m - 1)]
        with pytest.raises(WrongClass):
            FSequence(pt)


def test_T_parameter_consistency():
    P = CurveParams(11)
    pt = sample_points("porder1_rational", P, 1)[0]
    N = 20
    T = T_parameter_series(pt, N)
    cube = TruncatedSeries.from_elements(pt.ctx, [0, 3, 3, 1], N)
    assert cube.compose(T) == TruncatedSeries.variable(pt.ctx, N)


# -- divisors --

def test_divisors():
    P = CurveParams(11)
    Dx = divisor_check(("x",), P)
    assert Dx.multiplicity(O0) == 3 and Dx.multiplicity(DINF) == -3 and Dx.degree == 0
    Dy = divisor_check(("y",), P)
    assert Dy.multiplicity(O0) == 1 and Dy.multiplicity(DINF) == -2
    assert sum(1 for k in Dy.terms if isinstance(k, CurvePoint)) == P.m
    K = P.base_field
    D = divisor_check(("xa", K(2)), P)
    assert D.degree == 0 and sum(1 for k in D.terms if isinstance(k, CurvePoint)) == P.q + 1
    with pytest.raises(UnsupportedFunction):
        divisor_check(("tP",), P)
    # multiplicativity of the table
    assert divisor_check(("monomial", 2, 3), P) == 2 * Dx + 3 * Dy
