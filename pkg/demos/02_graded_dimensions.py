#!/usr/bin/env python3
"""Graded ideal pieces, Hilbert quotients, and membership certificates."""
from nevlab import (hilbert_quotient, ideal_graded_dim, is_general_position,
                    is_zero_dimensional, nullstellensatz_certificate,
                    parse_form)

g = [parse_form("x1^2", 3), parse_form("x2^2", 3)]

# dim of the degree-4 piece of the ideal (x1^2, x2^2) inside 15 monomials
print("ideal piece dim at degree 4:", ideal_graded_dim(g, 4))
print("Hilbert quotient at 4,5,6: ",
      [hilbert_quotient(g, a) for a in (4, 5, 6)],
      " (stabilizes at deg(g1)*deg(g2) = 4)")
print("cuts out a 0-dimensional set:", is_zero_dimensional(g))

# A family with a common zero keeps a positive quotient forever.
bad = [parse_form("x1", 3), parse_form("x1^2 + x1*x2", 3)]
print("degenerate family is 0-dimensional:", is_zero_dimensional(bad))

# General position: every (n+1)-subset of targets has empty common zero set.
targets = [parse_form(t, 3) for t in ("x0", "x1", "x2", "x0+x1+x2")]
print("\n{x0, x1, x2, x0+x1+x2} in general position:",
      is_general_position(targets, 2))

# An effective membership certificate: the smallest m with x0^m inside
# the ideal of three quadrics, with cofactors verified by exact expansion.
forms = [parse_form(t, 3) for t in ("x1^2", "x2^2", "x0^2+x1*x2")]
cert = nullstellensatz_certificate(forms, 0)
print("\nsmallest exponent with x0^m in the ideal:", cert.exponent)
for form, cof in zip(forms, cert.cofactors):
    print(f"  cofactor of {form}:  {cof}")
print("identity verified exactly:", cert.verify())
