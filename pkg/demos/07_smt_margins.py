#!/usr/bin/env python3
"""The truncated inequality on a desk-scale scenario.

Five point targets on the line (z:1) with truncation level 1: every
truncated counting function is log(r/|a|) exactly, so the margin
rhs - lhs = 2.5 log r - log 120 is positive from r ~ 6.8 onward.
"""
from pathlib import Path

from nevlab import load_scenario, run_smt_scenario

scenario = load_scenario(Path(__file__).parent.parent / "scenarios"
                         / "smt_five_points.json")
report = run_smt_scenario(scenario)

print(f"n = {report.n}, q = {report.q}, lcm degree = {report.lcm_degree}, "
      f"epsilon = {report.epsilon}")
print(f"alpha = {report.alpha}, M_exact = {report.m_exact}, "
      f"closed-form cap = {report.m_closed_form}")
print(f"truncation used: {report.truncation} "
      f"({'override' if report.truncation_overridden else 'M_exact'})")
print(report.nondegeneracy)
print(f"\n{'r':>6} {'T':>10} {'rhs':>10} {'lhs':>10} {'margin':>10}")
for row in report.rows:
    print(f"{row.r:>6g} {row.characteristic:>10.5f} {row.rhs:>10.5f} "
          f"{row.lhs:>10.5f} {row.margin:>10.5f}"
          + ("   <-- flagged" if row.flagged else ""))
