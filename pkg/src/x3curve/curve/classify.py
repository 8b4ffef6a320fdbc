"""Classification of points by the alpha invariant and its P-order."""

from ..errors import InternalInconsistency
from .pq import p_order

ORBIT = "O"
SPECIAL = "alpha_special"
PORDER = "porder"
GENERIC = "generic"


class PointClass:
    """One of: the orbit O, alpha^2 - alpha + 1 = 0, P-order i <= m-1, or generic."""

    __slots__ = ("tag", "i", "rational")

    def __init__(self, tag, i=None, rational=None):
        self.tag = tag
        self.i = i
        # the orbit and alpha-special classes are always rational, generic never
        if tag in (ORBIT, SPECIAL):
            rational = True
        elif tag == GENERIC:
            rational = False
        self.rational = rational

    @property
    def label(self):
        if self.tag == PORDER:
            return "porder%d_%s" % (self.i, "rational" if self.rational else "nonrational")
        return self.tag

    def __eq__(self, other):
        return isinstance(other, PointClass) and (self.tag, self.i, self.rational) == (other.tag, other.i, other.rational)

    def __hash__(self):
        return hash((self.tag, self.i, self.rational))

    def __repr__(self):
        return "PointClass(%s)" % self.label

    def to_json(self):
        return {"tag": self.tag, "porder": self.i, "rational": self.rational, "label": self.label}

    @classmethod
    def from_label(cls, label):
        if label in (ORBIT, SPECIAL):
            return cls(label, rational=True)
        if label == GENERIC:
            return cls(GENERIC, rational=False)
        if label.startswith(PORDER):
            num, _, kind = label[len(PORDER):].partition("_")
            if kind not in ("rational", "nonrational"):
                raise ValueError("unknown class label %r" % label)
            return cls(PORDER, int(num), kind == "rational")
        raise ValueError("unknown class label %r" % label)


def classify(P, params=None):
    params = params or P.params
    if P.in_orbit_O:
        return PointClass(ORBIT, rational=True)
    alpha = P.alpha
    rational = P.is_rational
    if alpha * alpha - alpha + 1 == 0:
        if not rational:
            raise InternalInconsistency("alpha-special point %s is not rational" % P.to_text())
        return PointClass(SPECIAL, rational=True)
    i = p_order(alpha)
    predicted = params.m % (i + 1) == 0
    if predicted != rational:
        raise InternalInconsistency(
            "P-order %d predicts rational=%s but coordinates say %s" % (i, predicted, rational))
    if i % params.p == params.p - 1:
        raise InternalInconsistency("P-order %d has p | i+1" % i)
    if i <= params.m - 1:
        return PointClass(PORDER, i, rational)
    return PointClass(GENERIC, rational=False)
