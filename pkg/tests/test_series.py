import random

import pytest
from hypothesis import given, strategies as st

from x3curve.errors import NonUnitDivisor, NoConvergence, NotReversible, SingularStart
from x3curve.gf import make_field
from x3curve.series import TruncatedSeries, newton_root, reversion, series_arith, valuation_of


def rand_series(K, prec, rng, unit=False):
    els = [K.random(rng) for _ in range(prec)]
    if unit:
        els[0] = K.random_nonzero(rng)
    return TruncatedSeries.from_elements(K, els, prec)


def naive_mul(a, b):
    K, n = a.ctx, min(a.prec, b.prec)
    out = []
    for k in range(n):
        acc = K.zero
        for i in range(k + 1):
            acc = acc + a[i] * b[k - i]
        out.append(acc)
    return out


@pytest.mark.parametrize("p,e", [(5, 1), (5, 2), (11, 4), (2, 8), (11, 6)])
def test_mul_matches_convolution(p, e):
    K = make_field(p, e)
    rng = random.Random(e)
    for prec in (1, 5, 17):
        a, b = rand_series(K, prec, rng), rand_series(K, prec, rng)
        assert (a * b).elements() == naive_mul(a, b)


@given(st.integers(0, 10 ** 6))
def test_inverse_and_division(seed):
    K = make_field(11, 2)
    rng = random.Random(seed)
    a = rand_series(K, 12, rng, unit=True)
    b = rand_series(K, 12, rng)
    assert (a * a.inverse()).elements() == [K.one] + [K.zero] * 11
    assert series_arith(series_arith(b, a, "div"), a, "mul") == b
    assert series_arith(series_arith(b, a, "add"), a, "sub") == b


def test_non_unit_division_fails():
    K = make_field(5)
    t = TruncatedSeries.variable(K, 5)
    with pytest.raises(NonUnitDivisor):
        t.inverse()


def test_sqrt_one_plus_t():
    # (1 + 3t + 3t^2 + t^3)^2 = 1 + t mod (5, t^4): binomial series of sqrt(1+t) over F_5
    K = make_field(5)
    t = TruncatedSeries.variable(K, 4)
    y = newton_root({2: 1, 0: -(t + 1)}, K.one, 4)
    assert y * y == t + 1
    assert [int(c.coeffs[0]) for c in y.elements()] == [1, 3, 3, 1]


def test_newton_errors():
    K = make_field(5)
    t = TruncatedSeries.variable(K, 4)
    with pytest.raises(NoConvergence):
        newton_root({2: 1, 0: -(t + 1)}, K(2), 4)
    with pytest.raises(SingularStart):
        newton_root({2: 1, 0: t}, K.zero, 4)


@given(st.integers(0, 10 ** 6))
def test_reversion_roundtrip(seed):
    K = make_field(11, 2)
    rng = random.Random(seed)
    prec = 15
    els = [K.zero, K.random_nonzero(rng)] + [K.random(rng) for _ in range(prec - 2)]
    s = TruncatedSeries.from_elements(K, els, prec)
    r = reversion(s)
    t = TruncatedSeries.variable(K, prec)
    assert s.compose(r) == t
    assert r.compose(s) == t


def test_reversion_rejects_bad_input():
    K = make_field(5)
    with pytest.raises(NotReversible):
        reversion(TruncatedSeries.from_elements(K, [0, 0, 1], 4))


def test_valuation_and_shift():
    K = make_field(5, 2)
    s = TruncatedSeries.from_elements(K, [0, 0, 0, 2, 1], 6)
    assert valuation_of(s) == 3
    assert s.shift(-3)[0] == K(2)
    assert valuation_of(TruncatedSeries.from_elements(K, [], 6)) == 6


def test_compose_with_polynomial():
    K = make_field(7)
    t = TruncatedSeries.variable(K, 8)
    s = t * 2 + t * t
    # s(t + t^2) expanded by hand: 2(t + t^2) + (t + t^2)^2 = 2t + 3t^2 + 2t^3 + t^4
    r = s.compose(t + t * t)
    assert [int(c.coeffs[0]) for c in r.elements()[:5]] == [0, 2, 3, 2, 1]


def test_derivative():
    K = make_field(7)
    s = TruncatedSeries.from_elements(K, [1, 2, 3, 4], 4)
    assert [int(c.coeffs[0]) for c in s.derivative().elements()] == [2, 6, 12 % 7]
