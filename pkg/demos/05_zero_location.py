#!/usr/bin/env python3
"""Zero location with certified multiplicities.

Polynomials take the exact route (square-free decomposition pins the
multiplicities; only locations are numeric).  Transcendental
exp-polynomials go through the argument principle with quad-tree
isolation and per-zero winding certification.
"""
from nevlab import locate_zeros, parse_expr


def show(label, expr_text, radius):
    records = locate_zeros(parse_expr(expr_text), radius)
    total = sum(r.multiplicity for r in records)
    print(f"{label}: {len(records)} zeros, total multiplicity {total} "
          f"in |z| <= {radius}")
    for rec in records:
        print(f"   z = {rec.location:.10g}   mult {rec.multiplicity}   "
              f"isolated within {rec.certified_radius:.3g}")


show("z^2 (z-1)", "z^2*(z-1)", 2.0)
show("e^z      ", "exp(z)", 10.0)
show("1+z+e^z  ", "1+z+exp(z)", 3.0)
show("1+z+e^z  ", "1+z+exp(z)", 12.0)
show("(e^z-1)^2", "(exp(z)-1)*(exp(z)-1)", 7.0)
