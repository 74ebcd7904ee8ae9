#!/usr/bin/env python3
"""Truncation-level arithmetic for the counting-function inequality.

For each (n, d, epsilon): the working degree alpha, the level
M_exact = C(alpha+n, n) the construction supports, and the closed-form
cap 2d*ceil(2^n (n+1) n (d+1)/eps)^n.  The two disagree for some
parameters; the report flags that instead of asserting either value.
"""
from nevlab import parse_form, ratio_bounds, truncation_report, weighted_quotient_sum

print(f"{'n':>2} {'d':>2} {'eps':>5} {'alpha':>6} {'M_exact':>9} "
      f"{'M_cap':>9}  flag")
for n, d, eps in [(1, 1, "1/2"), (1, 2, "1/2"), (2, 1, "1/2"),
                  (2, 2, "1/2"), (1, 1, "1/4"), (2, 2, "1/4")]:
    r = truncation_report(n, d, eps)
    flag = "M_exact > cap" if r.closed_form_exceeded else ""
    print(f"{n:>2} {d:>2} {eps:>5} {r.alpha:>6} {r.m_exact:>9} "
          f"{r.m_closed_form:>9}  {flag}")

# With defining forms supplied, the exact weighted quotient sum and the
# ratio chain that feeds the margin arithmetic come along.
r = truncation_report(1, 1, "1/2", gammas=[parse_form("x1", 2)])
print(f"\n(n=1, d=1, eps=1/2) with forms: delta = {r.delta}, "
      f"lower bound = {r.delta_lower}, M*alpha/delta = {r.ratio}")

chain = ratio_bounds(1, 1, r.alpha, r.delta, r.m_exact, q=5, epsilon="1/2")
print(f"ratio {chain.ratio} <= bound {chain.ratio_bound}: {chain.ratio_ok}")
print(f"growth {chain.growth} <= 1 + eps/(2d(n+1)) = {chain.growth_bound}: "
      f"{chain.growth_ok}")
