"""Numerical semigroups, stored canonically by their finite gap set."""

import math
from functools import reduce

from .errors import InfiniteGaps, NotASemigroup, NotTelescopic


class NumericalSemigroup:
    """A cofinite submonoid of the non-negative integers.

    Construct with sg_from_gaps or sg_from_generators; equality and hashing
    go through the gap tuple.
    """

    __slots__ = ("gaps", "_gapset", "_gens")

    def __init__(self, gaps):
        self.gaps = tuple(gaps)
        self._gapset = frozenset(self.gaps)
        self._gens = None

    @property
    def genus(self):
        return len(self.gaps)

    @property
    def conductor(self):
        return self.gaps[-1] + 1 if self.gaps else 0

    @property
    def multiplicity(self):
        k = 1
        while k in self._gapset:
            k += 1
        return k

    def __contains__(self, n):
        return n >= 0 and n not in self._gapset

    def members_upto(self, bound):
        return [n for n in range(bound + 1) if n not in self._gapset]

    @property
    def generators(self):
        """Minimal generating set: members that are not a sum of two positive members."""
        if self._gens is None:
            top = self.conductor + self.multiplicity
            members = [n for n in range(1, top) if n not in self._gapset]
            gens = []
            for n in members:
                if not any((n - a) in self and n - a > 0 for a in members if a < n):
                    gens.append(n)
            self._gens = tuple(gens)
        return self._gens

    def is_symmetric(self):
        return sg_is_symmetric(self)

    def __eq__(self, other):
        if not isinstance(other, NumericalSemigroup):
            return NotImplemented
        return self.gaps == other.gaps

    def __hash__(self):
        return hash(self.gaps)

    def __repr__(self):
        return "<%s>" % ",".join(map(str, self.generators))

    def to_json(self):
        return {
            "gaps": list(self.gaps),
            "generators": list(self.generators),
            "genus": self.genus,
            "conductor": self.conductor,
            "multiplicity": self.multiplicity,
            "symmetric": self.is_symmetric(),
        }


def _sieve(gens, bound):
    member = [False] * (bound + 1)
    member[0] = True
    for n in range(1, bound + 1):
        member[n] = any(g <= n and member[n - g] for g in gens)
    return member


def sg_from_generators(gens):
    gens = sorted(set(int(g) for g in gens))
    if not gens or gens[0] <= 0:
        raise ValueError("generators must be positive")
    if reduce(math.gcd, gens) != 1:
        raise InfiniteGaps("gcd of %s is not 1" % gens)
    B = gens[0] * gens[-1]
    member = _sieve(gens, B + gens[-1])
    if not all(member[B + 1:]):
        raise AssertionError("sieve did not stabilise")  # pragma: no cover
    return NumericalSemigroup(n for n in range(1, B + 1) if not member[n])


def sg_from_gaps(gaps):
    gaps = sorted(set(int(g) for g in gaps))
    if gaps and gaps[0] <= 0:
        raise ValueError("gaps must be positive")
    S = NumericalSemigroup(gaps)
    c = S.conductor
    members = [n for n in range(1, c) if n in S]
    for i, a in enumerate(members):
        for b in members[i:]:
            if a + b >= c:
                break
            if a + b not in S:
                raise NotASemigroup("%d + %d = %d is a gap" % (a, b, a + b), witness=(a, b))
    return S


def _in_generated(n, gens):
    if n < 0:
        return False
    return _sieve([g for g in gens if g > 0], n)[n]


def telescopic_genus(seq):
    """Genus of the semigroup of a telescopic sequence via its gcd chain."""
    seq = [int(a) for a in seq]
    if not seq or any(a <= 0 for a in seq):
        raise NotTelescopic("sequence must be positive")
    d = [0, seq[0]]
    for a in seq[1:]:
        d.append(math.gcd(d[-1], a))
    if d[-1] != 1:
        raise NotTelescopic("gcd chain of %s does not end at 1" % seq)
    for i in range(2, len(seq) + 1):
        target = seq[i - 1] // d[i]
        base = [seq[j] // d[i - 1] for j in range(i - 1)]
        if not _in_generated(target, base):
            raise NotTelescopic("%d/%d not generated by %s" % (seq[i - 1], d[i], base))
    total = 1
    for i in range(1, len(seq) + 1):
        ratio = 0 if i == 1 else d[i - 1] // d[i]
        total += (ratio - 1) * seq[i - 1]
    return total // 2


def sg_is_symmetric(S):
    g = S.genus
    if g == 0:
        return True
    top = 2 * g - 1
    return all((t in S) != ((top - t) in S) for t in range(top + 1))
