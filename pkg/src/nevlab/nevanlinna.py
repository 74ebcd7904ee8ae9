"""Numerical value-distribution functionals on circles.

characteristic  T(r)  = circle average of log max_k |f_k|
proximity       m(r)  = circle average of log(||f||^d / |Q o f|)
counting        N(r)  = sum of mult * log(r/|zero|) + (order at 0) * log r
                N^M   = the same with every multiplicity capped at M

The counting origin term is *added*, which is the convention under which
m + N = d*T + O(1) holds exactly (fmt_residual measures the spread of
that combination over a radius grid, so it doubles as an end-to-end
check of quadrature and zero location at once).

Quadrature is the composite trapezoid rule on the circle with node
doubling until two successive estimates agree within tol; periodic
smooth integrands converge geometrically, and integrable log kinks
(zeros near the circle) either converge slowly or trip the node cap.
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np

from .errors import (PreconditionError, QuadratureError,
                     RadiusPerturbedWarning)
from .expressions import Curve, ExpPoly, NumericEval, curve_compose
from .polynomials import HomogeneousPoly
from .univariate import u_deg, u_squarefree
from .zeros import ZeroRecord, locate_zeros

_MAX_NODES = 2 ** 20
_MIN_NODES = 64
_MODULUS_BAND = 1e-9
_PERTURB_FACTOR = 1 + 1e-6

INFINITE_TRUNCATION = math.inf


def circle_average(values: Callable[[np.ndarray], np.ndarray], tol: float,
                   max_nodes: int = _MAX_NODES) -> float:
    """Mean of values(theta) over [0, 2pi) by trapezoid node doubling."""
    if tol <= 0:
        raise PreconditionError("tolerance must be positive")
    n = _MIN_NODES
    theta = 2 * math.pi * np.arange(n) / n
    vals = values(theta)
    if not np.all(np.isfinite(vals)):
        raise QuadratureError("integrand is singular on the circle")
    estimate = float(np.mean(vals))
    while n < max_nodes:
        fresh = 2 * math.pi * (np.arange(n) + 0.5) / n
        vals = values(fresh)
        if not np.all(np.isfinite(vals)):
            raise QuadratureError("integrand is singular on the circle")
        refined = 0.5 * (estimate + float(np.mean(vals)))
        n *= 2
        done = abs(refined - estimate) < tol
        estimate = refined
        if done:
            return estimate
    raise QuadratureError(
        f"no convergence within {max_nodes} nodes; a zero may lie near the circle")


def _curve_log_norm(f: Curve) -> Callable[[np.ndarray], np.ndarray]:
    evals = [c.numeric() for c in f.components]

    def log_norm(z: np.ndarray) -> np.ndarray:
        return np.maximum.reduce([e.log_abs(z) for e in evals])
    return log_norm


def characteristic(f: Curve, r: float, tol: float = 1e-4) -> float:
    """T(r), the circle average of the log of the sup-norm of f."""
    if r <= 0:
        raise PreconditionError("radius must be positive")
    log_norm = _curve_log_norm(f)

    def integrand(theta: np.ndarray) -> np.ndarray:
        return log_norm(r * np.exp(1j * theta))
    return circle_average(integrand, tol)


def _polynomial_root_moduli(g: ExpPoly) -> list[float]:
    coeffs = g.poly_coeffs()
    if u_deg(coeffs) <= 0:
        return []
    moduli = []
    stripped = coeffs
    lead = 0
    while not stripped[lead]:
        lead += 1
    if lead:
        moduli.append(0.0)
        stripped = stripped[lead:]
    for factor, _ in u_squarefree(stripped):
        for z in np.roots(np.array([complex(c) for c in factor[::-1]])):
            moduli.append(abs(z))
    return moduli


def _clear_radius(r: float, moduli: Sequence[float]) -> float:
    band = _MODULUS_BAND * max(r, 1.0)
    r_used = r
    for _ in range(60):
        if all(abs(m - r_used) > band for m in moduli):
            break
        r_used *= _PERTURB_FACTOR
    if r_used != r:
        warnings.warn(RadiusPerturbedWarning(
            f"radius perturbed from {r} to {r_used} off a zero modulus"))
    return r_used


def proximity(f: Curve, target: HomogeneousPoly, r: float,
              tol: float = 1e-4) -> float:
    """m(r, Q): circle average of log(||f||^d / |Q o f|).

    The radius is nudged off any zero modulus of Q o f (polynomial case:
    exactly; transcendental case: by one retry after a quadrature
    failure), and the perturbation is reported as a warning.
    """
    if r <= 0:
        raise PreconditionError("radius must be positive")
    g = curve_compose(target, f)
    if g.is_zero:
        raise PreconditionError(
            "composition is identically zero; the curve lies in the target")
    if g.is_polynomial:
        r = _clear_radius(r, _polynomial_root_moduli(g))
        return _proximity_at(f, g, target.degree, r, tol)
    try:
        return _proximity_at(f, g, target.degree, r, tol)
    except QuadratureError as err:
        suggested = r * _PERTURB_FACTOR
        warnings.warn(RadiusPerturbedWarning(
            f"quadrature failed at r={r}; retrying at {suggested}"))
        try:
            return _proximity_at(f, g, target.degree, suggested, tol)
        except QuadratureError:
            raise QuadratureError(str(err), suggested_radius=suggested) from err


def _proximity_at(f: Curve, g: ExpPoly, degree: int, r: float,
                  tol: float) -> float:
    log_norm = _curve_log_norm(f)
    ge = g.numeric()

    def integrand(theta: np.ndarray) -> np.ndarray:
        z = r * np.exp(1j * theta)
        return degree * log_norm(z) - ge.log_abs(z)
    return circle_average(integrand, tol)


def counting_value(records: Sequence[ZeroRecord], r: float,
                   truncation: Optional[float] = None) -> float:
    """Integrated counting function from located zeros with |z| <= r."""
    if r <= 0:
        raise PreconditionError("radius must be positive")
    cap = math.inf if truncation is None else truncation
    if cap != math.inf and (int(cap) != cap or cap < 1):
        raise PreconditionError("truncation level must be a positive integer or inf")
    total = 0.0
    for rec in records:
        mult = min(rec.multiplicity, cap)
        a = abs(rec.location)
        if a == 0:
            total += mult * math.log(r)
        elif a <= r:
            total += mult * math.log(r / a)
    return total


def zero_count(records: Sequence[ZeroRecord], r: float,
               truncation: Optional[float] = None) -> int:
    """Unintegrated count n(r): zeros with |z| <= r, multiplicity capped."""
    cap = math.inf if truncation is None else truncation
    return int(sum(min(rec.multiplicity, cap) for rec in records
                   if abs(rec.location) <= r))


def counting(f: Curve, target: HomogeneousPoly, r: float,
             truncation: Optional[float] = None, tol: float = 1e-9) -> float:
    """N(r, Q) or N^M(r, Q) for the composition Q o f."""
    g = curve_compose(target, f)
    if g.is_zero:
        raise PreconditionError(
            "composition is identically zero; the curve lies in the target")
    records = locate_zeros(g, r, tol)
    return counting_value(records, r, truncation)


def fmt_residual(f: Curve, target: HomogeneousPoly, r_grid: Sequence[float],
                 tol: float = 1e-4) -> float:
    """Spread (max - min) of m + N - d*T over the radius grid.

    A small spread certifies the first-main-theorem identity
    numerically; the underlying combination is an exact constant in r.
    """
    grid = list(r_grid)
    if len(grid) < 2:
        raise PreconditionError("need at least two radii to measure a spread")
    if any(r <= 0 for r in grid) or sorted(grid) != grid:
        raise PreconditionError("radius grid must be positive and ascending")
    g = curve_compose(target, f)
    if g.is_zero:
        raise PreconditionError(
            "composition is identically zero; the curve lies in the target")
    records = locate_zeros(g, max(grid) * 1.0000001, 1e-9)
    moduli = [abs(rec.location) for rec in records]
    values = []
    for r in grid:
        r_used = _clear_radius(r, moduli)
        m = _proximity_at(f, g, target.degree, r_used, tol)
        n = counting_value(records, r_used)
        t = characteristic(f, r_used, tol)
        values.append(m + n - target.degree * t)
    return max(values) - min(values)


@dataclass(frozen=True)
class NevanlinnaRow:
    """Per-radius functional table for a curve against several targets."""

    r: float
    characteristic: float
    proximity: Tuple[float, ...]
    count: Tuple[int, ...]
    count_truncated: Tuple[int, ...]
    counting: Tuple[float, ...]
    counting_truncated: Tuple[float, ...]


def nevanlinna_rows(f: Curve, targets: Sequence[HomogeneousPoly],
                    r_grid: Sequence[float], truncation: Optional[float],
                    tol: float = 1e-4) -> List[NevanlinnaRow]:
    """Functional table over a radius grid; zeros are located once per
    target at the largest radius and reused."""
    grid = list(r_grid)
    if any(r <= 0 for r in grid) or sorted(grid) != grid:
        raise PreconditionError("radius grid must be positive and ascending")
    located: List[Tuple[ExpPoly, List[ZeroRecord]]] = []
    for target in targets:
        g = curve_compose(target, f)
        if g.is_zero:
            raise PreconditionError(
                "composition is identically zero; the curve lies in the target")
        located.append((g, locate_zeros(g, max(grid) * 1.0000001, 1e-9)))
    rows = []
    for r in grid:
        moduli = [abs(rec.location) for _, recs in located for rec in recs]
        r_used = _clear_radius(r, moduli)
        t = characteristic(f, r_used, tol)
        prox, n_plain, n_trunc, big_n, big_n_trunc = [], [], [], [], []
        for target, (g, records) in zip(targets, located):
            prox.append(_proximity_at(f, g, target.degree, r_used, tol))
            n_plain.append(zero_count(records, r_used))
            n_trunc.append(zero_count(records, r_used, truncation))
            big_n.append(counting_value(records, r_used))
            big_n_trunc.append(counting_value(records, r_used, truncation))
        rows.append(NevanlinnaRow(
            r=r_used, characteristic=t, proximity=tuple(prox),
            count=tuple(n_plain), count_truncated=tuple(n_trunc),
            counting=tuple(big_n), counting_truncated=tuple(big_n_trunc)))
    return rows
