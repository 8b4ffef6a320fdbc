import json
from math import gcd
from functools import reduce

import pytest
from hypothesis import assume, given, strategies as st

from x3curve.errors import InfiniteGaps, NotASemigroup, NotTelescopic
from x3curve.numsg import sg_from_gaps, sg_from_generators, sg_is_symmetric, telescopic_genus


def brute_gaps(gens, bound=700):
    """Non-members below bound by dynamic programming over sums of generators."""
    reach = [False] * (bound + 1)
    reach[0] = True
    for n in range(1, bound + 1):
        reach[n] = any(n >= g and reach[n - g] for g in gens)
    return [n for n in range(1, bound + 1) if not reach[n]]


gen_lists = st.lists(st.integers(2, 25), min_size=1, max_size=5).filter(lambda g: reduce(gcd, g) == 1)


@given(gen_lists)
def test_gaps_match_brute_force(gens):
    S = sg_from_generators(gens)
    assert list(S.gaps) == brute_gaps(gens)


@given(gen_lists)
def test_generators_minimal_and_regenerate(gens):
    S = sg_from_generators(gens)
    mins = S.generators
    assert sg_from_generators(mins) == S
    for g in mins:
        rest = [h for h in mins if h != g]
        if rest and reduce(gcd, rest) == 1:
            assert sg_from_generators(rest) != S
    assert set(mins) <= set(gens)


@given(gen_lists)
def test_gap_roundtrip_and_invariants(gens):
    S = sg_from_generators(gens)
    T = sg_from_gaps(S.gaps)
    assert T == S and hash(T) == hash(S)
    assert S.genus == len(S.gaps)
    assert S.conductor == (max(S.gaps) + 1 if S.gaps else 0)
    assert S.multiplicity == min(g for g in range(1, 100) if g in S)
    # symmetric iff the genus is half the conductor
    assert S.is_symmetric() == (2 * S.genus == S.conductor)


def test_examples():
    S = sg_from_generators([3, 5, 6])
    assert list(S.gaps) == [1, 2, 4, 7]
    assert S.generators == (3, 5)
    assert S.is_symmetric()
    T = sg_from_generators([4, 5, 6])
    assert list(T.gaps) == [1, 2, 3, 7]
    U = sg_from_generators([9, 11, 12])
    assert U.genus == 19 and max(U.gaps) == 37


def test_json_schema():
    d = sg_from_generators([4, 5, 6]).to_json()
    assert set(d) == {"gaps", "generators", "genus", "conductor", "multiplicity", "symmetric"}
    json.dumps(d)


def test_errors():
    with pytest.raises(InfiniteGaps):
        sg_from_generators([4, 6])
    with pytest.raises(NotASemigroup) as exc:
        sg_from_gaps([2, 3])
    assert exc.value.witness is not None
    with pytest.raises(NotTelescopic):
        telescopic_genus((4, 6, 9, 5))


def test_telescopic_genus_against_gap_count():
    for q in (5, 11, 17, 23, 29):
        g = (q * q - q + 4) // 6
        assert telescopic_genus((q - 2, q + 1, q)) == g == sg_from_generators([q - 2, q, q + 1]).genus


@given(st.integers(2, 12), st.integers(2, 12))
def test_two_generator_genus(a, b):
    assume(gcd(a, b) == 1)
    # Sylvester: (a-1)(b-1)/2 gaps
    assert telescopic_genus((a, b)) == (a - 1) * (b - 1) // 2 == sg_from_generators([a, b]).genus
    assert sg_is_symmetric(sg_from_generators([a, b]))
