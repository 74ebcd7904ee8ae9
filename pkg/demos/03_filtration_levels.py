#!/usr/bin/env python3
"""The weight filtration of V_alpha by powers of the defining forms.

Levels are indexed by lex-ordered multi-indices; each quotient dimension
equals d^n in the stable range, and one descending sweep yields an
adapted basis g_1^{i_1} g_2^{i_2} * eta of the whole graded piece.
"""
from nevlab import (filtration_basis, filtration_levels, parse_form,
                    weighted_quotient_sum)

gammas = [parse_form("x1^2", 3), parse_form("x2^2", 3)]
alpha = 4

filt = filtration_levels(gammas, alpha)
print(f"filtration of V_{alpha} by powers of (x1^2, x2^2):")
print(f"{'index':>8} {'weight':>6} {'dim W':>6} {'delta':>6}")
for lv in filt.levels:
    print(f"{str(lv.index):>8} {sum(lv.index):>6} {lv.dim:>6} {lv.delta:>6}")

print("\nsum of quotients:", sum(lv.delta for lv in filt.levels),
      "= dim V_alpha =", filt.total_dim)

delta = weighted_quotient_sum(gammas, alpha)
print("weighted quotient sum (order amplification factor):", delta)

print("\nadapted basis, built from the last level upward:")
for el in filtration_basis(gammas, alpha):
    print(f"  index {el.index}, eta = {('1' if not sum(el.eta) else el.eta)}:  {el.psi}")
