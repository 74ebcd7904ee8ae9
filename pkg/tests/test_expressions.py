import math
from math import factorial

import numpy as np
import pytest

from nevlab.errors import DegenerateCurveError, PreconditionError
from nevlab.expressions import Curve, ExpPoly, curve_compose, wronskian
from nevlab.parsing import parse_expr, parse_form
from nevlab.rationals import gauss

from oracles import central_difference

Z = ExpPoly.variable()
ONE = ExpPoly.constant(1)


def test_differentiation_rules():
    assert parse_expr("z^2*exp(z)").diff() == parse_expr("(2*z+z^2)*exp(z)")
    assert parse_expr("5").diff().is_zero
    assert parse_expr("1+z+exp(z)").diff() == parse_expr("1+exp(z)")
    # chain rule through a polynomial exponent
    assert parse_expr("exp(z^2)").diff() == parse_expr("(2*z)*exp(z^2)")


def test_diff_matches_central_differences():
    exprs = ["z^3 - 2*z", "exp(z)*z", "exp(2*z) + z^2", "(1+z)*exp(z^2)"]
    rng = np.random.default_rng(7)
    for text in exprs:
        g = parse_expr(text)
        dg = g.diff()
        for _ in range(10):
            z = complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
            numeric = central_difference(lambda w: complex(g.eval_complex(w)), z)
            symbolic = complex(dg.eval_complex(z))
            assert abs(numeric - symbolic) <= 1e-6 * max(1.0, abs(symbolic))


def test_canonical_form_merges_terms():
    a = parse_expr("exp(z) + exp(z)")
    assert a == parse_expr("2*exp(z)")
    b = parse_expr("exp(z)*exp(z)")
    assert b == parse_expr("exp(2*z)")
    assert (parse_expr("exp(z)") - parse_expr("exp(z)")).is_zero


def test_zero_test_is_exact():
    g = parse_expr("(1+z)*exp(z) - exp(z) - z*exp(z)")
    assert g.is_zero


def test_polynomial_metadata():
    p = parse_expr("1 + 3*z^4")
    assert p.is_polynomial and p.degree == 4
    q = parse_expr("exp(z)")
    assert not q.is_polynomial
    with pytest.raises(PreconditionError):
        q.poly_coeffs()


def test_order_at_exact_points():
    g = parse_expr("z^2*(z-1)")
    assert g.order_at(0) == 2
    assert g.order_at(1) == 1
    assert g.order_at(2) == 0
    # transcendental: e^z - 1 - z vanishes to order 2 at 0
    h = parse_expr("exp(z) - 1 - z")
    assert h.order_at(0) == 2
    assert h.order_at(1) == 0


def test_wronskian_values():
    assert wronskian([ONE, Z]) == ONE
    assert wronskian([parse_expr("z^2"), ONE]) == parse_expr("-2*z")
    assert wronskian([ONE, Z, parse_expr("exp(z)")]) == parse_expr("exp(z)")


def test_wronskian_of_monomials_constant():
    for m in range(2, 6):
        gs = [parse_expr(f"z^{k}") if k else ONE for k in range(m)]
        w = wronskian(gs)
        expected = 1
        for k in range(m):
            expected *= factorial(k)
        assert w == ExpPoly.constant(expected)


def test_wronskian_detects_dependence():
    gs = [parse_expr("1+z"), parse_expr("2+2*z"), parse_expr("z^2")]
    assert wronskian(gs).is_zero
    gs2 = [parse_expr("exp(z)"), parse_expr("2*exp(z)")]
    assert wronskian(gs2).is_zero


def test_curve_validation():
    with pytest.raises(DegenerateCurveError):
        Curve(1, (ExpPoly.constant(0), ExpPoly.constant(0)))
    with pytest.raises(DegenerateCurveError):
        Curve(1, (parse_expr("z^2-z"), parse_expr("z")))  # common zero z=0
    Curve(1, (parse_expr("z"), ONE))  # fine


def test_compose_examples():
    f = Curve(1, (Z, ONE))
    assert curve_compose(parse_form("x0", 2), f) == Z
    fe = Curve(2, (ONE, Z, parse_expr("exp(z)")))
    assert curve_compose(parse_form("x0+x1+x2", 3), fe) == parse_expr("1+z+exp(z)")
    # degeneracy witness: conic through the rational normal curve
    fp = Curve(2, (ONE, Z, parse_expr("z^2")))
    assert curve_compose(parse_form("x0*x2 - x1^2", 3), fp).is_zero


def test_compose_is_multiplicative_and_linear():
    f = Curve(2, (ONE, Z, parse_expr("exp(z)")))
    p = parse_form("x0 + 2*x1", 3)
    q = parse_form("x2 - x0", 3)
    assert curve_compose(p * q, f) == curve_compose(p, f) * curve_compose(q, f)
    assert curve_compose(p + q, f) == curve_compose(p, f) + curve_compose(q, f)
    rng = np.random.default_rng(11)
    pq = curve_compose(p * q, f)
    pf, qf = curve_compose(p, f), curve_compose(q, f)
    for _ in range(10):
        z = complex(rng.uniform(-2, 2), rng.uniform(-2, 2))
        assert abs(complex(pq.eval_complex(z))
                   - complex(pf.eval_complex(z)) * complex(qf.eval_complex(z))) < 1e-9


def test_compose_arity_mismatch():
    f = Curve(1, (Z, ONE))
    with pytest.raises(PreconditionError):
        curve_compose(parse_form("x0+x1+x2", 3), f)


def test_numeric_log_abs_is_stable_for_large_radii():
    g = parse_expr("exp(z)")
    fe = g.numeric()
    # e^{1000} overflows a double, but log|e^z| = Re z is exact
    value = fe.log_abs(np.array([1000.0 + 0j]))
    assert abs(value[0] - 1000.0) < 1e-9


def test_exp_requires_polynomial_argument():
    with pytest.raises(PreconditionError):
        ExpPoly.exp_of(parse_expr("exp(z)"))
