"""Weierstrass semigroups on the maximal curve y^(q+1) + x^(2m) + x^m = 0, q = 2 mod 3."""

from .curve import (CurveParams, CurvePoint, PointClass, classify, curve_params, p_order,
                    parse_point, point_from_x, pq_eval)
from .gf import FieldElement, embed, make_field, mult_order, nth_roots
from .numsg import NumericalSemigroup, sg_from_gaps, sg_from_generators, telescopic_genus
from .oracle import canonical_basis, oracle_gaps, oracle_semigroup
from .weierstrass import all_weierstrass_rational, census, semigroup_at, weierstrass_count

__version__ = "0.1.0"
