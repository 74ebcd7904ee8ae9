#!/usr/bin/env python3
"""Exact forms and analytic expressions: parse, differentiate, Wronskians."""
from nevlab import monomial_basis, parse_expr, parse_form, wronskian

# Homogeneous forms live over the Gaussian rationals and stay exact.
q = parse_form("x0^2 + 2*x1*x2 - 1/3*x2^2")
print("form:        ", q)
print("degree:      ", q.degree, " variables:", q.nvars)
print("squared:     ", q * q)

# The degree-4 monomial basis in three variables, descending lex order.
basis = monomial_basis(3, 4)
print("\n|basis(3,4)| =", len(basis), " first:", basis[0], " last:", basis[-1])

# Analytic expressions are exp-polynomials in canonical form: the zero
# test, differentiation, and vanishing orders are all exact.
g = parse_expr("z^2*exp(z) + 1 + z")
print("\nexpression:  ", g)
print("derivative:  ", g.diff())
print("ord at 0 of exp(z)-1-z:", parse_expr("exp(z) - 1 - z").order_at(0))

# Wronskians are computed symbolically in the same ring.
w = wronskian([parse_expr("1"), parse_expr("z"), parse_expr("exp(z)")])
print("\nW(1, z, e^z) =", w)
w2 = wronskian([parse_expr("1+z"), parse_expr("2+2*z")])
print("W of a dependent pair is zero:", w2.is_zero)
