#!/usr/bin/env python3
"""Nevanlinna functionals on circles, and the first-main-theorem check.

m(r) + N(r) - d*T(r) is constant in r (it equals -log of the leading
Taylor coefficient of the composition at the origin), so its spread over
a radius grid measures the combined error of quadrature and zero
location.
"""
import math

from nevlab import (Curve, characteristic, counting, fmt_residual, parse_expr,
                    parse_form, proximity)

line = Curve(1, (parse_expr("z"), parse_expr("1")))
exp_curve = Curve(2, (parse_expr("1"), parse_expr("z"), parse_expr("exp(z)")))

print("T(r) for (z:1) at r = e:", characteristic(line, math.e), " (log r = 1)")
print("T(r) for (1:z:e^z):")
for r in (4.0, 8.0, 12.0, 50.0):
    print(f"   r = {r:>4}: T = {characteristic(exp_curve, r):.6f}")

target = parse_form("x0+x1+x2", 3)
print("\nfunctionals against x0+x1+x2 at r = 8:")
print("   m(8) =", proximity(exp_curve, target, 8.0))
print("   N(8) =", counting(exp_curve, target, 8.0))
print("   T(8) =", characteristic(exp_curve, 8.0))

for label, curve, tgt, grid in [
        ("(z:1) vs x0-x1   ", line, parse_form("x0-x1", 2), [2, 4, 8, 16]),
        ("(1:z:e^z) vs sum ", exp_curve, target, [4, 8, 12])]:
    spread = fmt_residual(curve, tgt, grid)
    print(f"\nFMT residual spread for {label} over {grid}: {spread:.3e}")
