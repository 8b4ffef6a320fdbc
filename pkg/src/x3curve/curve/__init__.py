"""The curve y^{q+1} + x^{2m} + x^m = 0 with q = 2 mod 3."""

from .params import CurveParams, curve_params
from .points import CurvePoint, alpha_of, on_curve, parse_point, point_from_x
from .pq import p_order, pq_eval, pq_identity_check, pq_poly, pq_rational
from .classify import GENERIC, ORBIT, PORDER, SPECIAL, PointClass, classify
from .functions import (
    BiPoly, FunctionElement, build_special_fn, expansion_in_T, fn_valuation,
    local_expansion,
)
from .divisors import Divisor, divisor_check
from .sampling import sample_points
