"""Zero location in closed disks, with certified multiplicities.

Polynomial inputs take the exact route: the vanishing order at the
origin is read off the coefficients, Yun's square-free decomposition
pins every multiplicity exactly, and only the locations within each
square-free factor are numeric (polished by Newton).

Transcendental exp-polynomials go through the argument principle: the
winding number of g over the circle counts the zeros, a quad-tree over
an enclosing square isolates them (with deterministic split jitter so
subdivision lines never trap a zero), Newton polishes each cluster, and
every multiplicity is certified by the winding number around a small
isolation circle.  Clusters tighter than the subdivision resolution are
reported as a single zero carrying the cluster's total multiplicity.

Both routes perturb the disk radius off any zero modulus (reported via
RadiusPerturbedWarning) and check that the reported multiplicities sum
to the outer winding number.
"""
from __future__ import annotations

import cmath
import math
import warnings
from dataclasses import dataclass
from typing import Callable, List, Sequence, Tuple

import numpy as np

from .errors import (InternalCheckError, PreconditionError,
                     RadiusPerturbedWarning, WindingError)
from .expressions import ExpPoly, NumericEval
from .univariate import U, u_deg, u_diff, u_eval_complex, u_squarefree

_MAX_ARG_STEP = 0.8          # radians allowed between consecutive path samples
_WINDING_INT_TOL = 1e-3
_BOUNDARY_BAND = 1e-9        # relative no-zero band around the circle
_PERTURB_FACTOR = 1 + 1e-6
_MAX_PERTURB = 60
_SPLIT_JITTERS = (0.0, 0.0371, -0.0287, 0.0523, -0.0441, 0.0671)
_CERT_RADIUS = 1e-3


@dataclass(frozen=True)
class ZeroRecord:
    """One zero: numeric location, exact or certified multiplicity, and
    the radius of the disk in which it is the only zero."""

    location: complex
    multiplicity: int
    certified_radius: float


def locate_zeros(g: ExpPoly, radius: float, tol: float = 1e-9) -> List[ZeroRecord]:
    """All zeros of g with |z| <= radius (radius auto-perturbed off zero
    moduli), sorted by modulus then real/imaginary part."""
    if g.is_zero:
        raise PreconditionError("cannot locate zeros of the zero expression")
    if radius <= 0:
        raise PreconditionError("radius must be positive")
    if g.is_polynomial:
        records = _polynomial_zeros(g.poly_coeffs(), radius, tol)
    else:
        records = _winding_zeros(g, radius, tol)
    return sorted(records, key=lambda rec: (abs(rec.location),
                                            rec.location.real,
                                            rec.location.imag))


# -- exact route -----------------------------------------------------------------


def _polynomial_zeros(coeffs: U, radius: float, tol: float) -> List[ZeroRecord]:
    if u_deg(coeffs) == 0:
        return []
    origin_order = 0
    while not coeffs[origin_order]:
        origin_order += 1
    stripped = coeffs[origin_order:]

    roots: List[Tuple[complex, int]] = []
    if origin_order:
        roots.append((0j, origin_order))
    if u_deg(stripped) > 0:
        for factor, mult in u_squarefree(stripped):
            numeric = np.roots(np.array([complex(c) for c in factor[::-1]]))
            dfactor = u_diff(factor)
            for z in numeric:
                roots.append((_newton_polish_poly(factor, dfactor, complex(z)), mult))

    radius_used = radius
    band = _BOUNDARY_BAND * max(radius, 1.0)
    for _ in range(_MAX_PERTURB):
        if all(abs(abs(z) - radius_used) > band for z, _ in roots):
            break
        radius_used *= _PERTURB_FACTOR
    else:
        raise WindingError("could not perturb the radius off a zero modulus")
    if radius_used != radius:
        warnings.warn(RadiusPerturbedWarning(
            f"radius perturbed from {radius} to {radius_used}"))

    inside = [(z, m) for z, m in roots if abs(z) <= radius_used]
    return [ZeroRecord(z, m, _separation_radius(z, [w for w, _ in roots]))
            for z, m in inside]


def _newton_polish_poly(factor: U, dfactor: U, z: complex) -> complex:
    for _ in range(8):
        fz = complex(u_eval_complex(factor, z))
        dz = complex(u_eval_complex(dfactor, z))
        if dz == 0:
            break
        step = fz / dz
        z -= step
        if abs(step) < 1e-15 * max(1.0, abs(z)):
            break
    return z


def _separation_radius(z: complex, all_roots: Sequence[complex]) -> float:
    distances = [abs(z - w) for w in all_roots if w != z]
    return min(distances) / 2 if distances else math.inf


# -- argument-principle route -----------------------------------------------------


def _wrap(a: np.ndarray) -> np.ndarray:
    return (a + math.pi) % (2 * math.pi) - math.pi


def _path_winding(fe: NumericEval, path: Callable[[np.ndarray], np.ndarray],
                  initial: int = 128) -> int:
    """Winding number of fe along the closed path (t in [0,1]).

    Samples adaptively until consecutive argument steps are all small;
    a vanishing sample or a segment refined below 2^-46 means the path
    runs through (or numerically touches) a zero.
    """
    ts = np.linspace(0.0, 1.0, initial + 1)
    _, s = fe.scaled(path(ts))
    if np.any(s == 0) or not np.all(np.isfinite(s)):
        raise WindingError("function vanishes on the integration path")
    args = np.angle(s)
    for _ in range(64):
        steps = _wrap(np.diff(args))
        bad = np.abs(steps) > _MAX_ARG_STEP
        if not bad.any():
            total = steps.sum() / (2 * math.pi)
            nearest = round(total)
            if abs(total - nearest) > _WINDING_INT_TOL:
                raise WindingError(
                    f"winding integral {total:.6f} is not close to an integer")
            return int(nearest)
        idx = np.nonzero(bad)[0]
        if (ts[idx + 1] - ts[idx]).min() < 2 ** -46:
            raise WindingError("zero on or numerically touching the path")
        mids = (ts[idx] + ts[idx + 1]) / 2
        _, ms = fe.scaled(path(mids))
        if np.any(ms == 0) or not np.all(np.isfinite(ms)):
            raise WindingError("function vanishes on the integration path")
        ts = np.insert(ts, idx + 1, mids)
        args = np.insert(args, idx + 1, np.angle(ms))
    raise WindingError("argument refinement budget exhausted")


def _circle_path(center: complex, r: float) -> Callable[[np.ndarray], np.ndarray]:
    def path(t: np.ndarray) -> np.ndarray:
        return center + r * np.exp(2j * math.pi * np.asarray(t))
    return path


def _rect_path(x0: float, x1: float, y0: float, y1: float
               ) -> Callable[[np.ndarray], np.ndarray]:
    corners = np.array([x0 + 1j * y0, x1 + 1j * y0, x1 + 1j * y1,
                        x0 + 1j * y1, x0 + 1j * y0])

    def path(t: np.ndarray) -> np.ndarray:
        t = np.asarray(t, dtype=float)
        seg = np.minimum((t * 4).astype(int), 3)
        frac = t * 4 - seg
        return corners[seg] * (1 - frac) + corners[seg + 1] * frac
    return path


def _rect_zeros(fe: NumericEval, x0: float, x1: float, y0: float, y1: float,
                resolution: float) -> List[Tuple[complex, int]]:
    w = _path_winding(fe, _rect_path(x0, x1, y0, y1))
    if w == 0:
        return []
    if max(x1 - x0, y1 - y0) <= resolution:
        return [(complex((x0 + x1) / 2, (y0 + y1) / 2), w)]
    last_error: WindingError | None = None
    for jitter in _SPLIT_JITTERS:
        xm = x0 + (x1 - x0) * (0.5 + jitter)
        ym = y0 + (y1 - y0) * (0.5 + jitter * 0.83)
        try:
            found: List[Tuple[complex, int]] = []
            for cx0, cx1 in ((x0, xm), (xm, x1)):
                for cy0, cy1 in ((y0, ym), (ym, y1)):
                    found.extend(_rect_zeros(fe, cx0, cx1, cy0, cy1, resolution))
            if sum(m for _, m in found) != w:
                raise WindingError("children do not account for the parent count")
            return found
        except WindingError as err:
            last_error = err
            continue
    raise WindingError(f"subdivision failed near [{x0},{x1}]x[{y0},{y1}]: {last_error}")


def _winding_zeros(g: ExpPoly, radius: float, tol: float) -> List[ZeroRecord]:
    fe = g.numeric()
    radius_used = radius
    total = None
    for _ in range(_MAX_PERTURB):
        try:
            total = _path_winding(fe, _circle_path(0j, radius_used), initial=256)
            break
        except WindingError:
            radius_used *= _PERTURB_FACTOR
    if total is None:
        raise WindingError("no admissible circle radius found near the requested one")
    if radius_used != radius:
        warnings.warn(RadiusPerturbedWarning(
            f"radius perturbed from {radius} to {radius_used}"))
    if total < 0:
        raise InternalCheckError("negative winding for an entire function")

    records: List[ZeroRecord] = []
    if total > 0:
        # enclose the disk in a slightly larger, slightly off-center square so
        # that no subdivision line coincides with a symmetry axis of the zeros
        half = radius_used * 1.00251
        cx, cy = radius_used * 3.7e-4, radius_used * 6.1e-4
        resolution = max(tol, 1e-6) * max(1.0, radius_used)
        clusters = _rect_zeros(fe, cx - half, cx + half, cy - half, cy + half,
                               resolution)
        records = _certify_clusters(g, fe, clusters, resolution)

    inside = [rec for rec in records if abs(rec.location) <= radius_used]
    if sum(rec.multiplicity for rec in inside) != total:
        raise WindingError(
            "isolated multiplicities do not sum to the outer winding number")
    return inside


def _certify_clusters(g: ExpPoly, fe: NumericEval,
                      clusters: List[Tuple[complex, int]],
                      resolution: float) -> List[ZeroRecord]:
    de = g.diff().numeric()
    polished: List[Tuple[complex, int]] = []
    for center, mult in clusters:
        polished.append((_newton_polish(fe, de, center, mult, resolution), mult))

    merged: List[Tuple[complex, int]] = []
    for z, m in sorted(polished, key=lambda t: (t[0].real, t[0].imag)):
        if merged and abs(merged[-1][0] - z) < resolution / 4:
            merged[-1] = (merged[-1][0], merged[-1][1] + m)
        else:
            merged.append((z, m))

    origin_snapped: List[Tuple[complex, int]] = []
    if g.is_zero_at(0):
        origin_order = g.order_at(0)
        kept = [(z, m) for z, m in merged if abs(z) > resolution]
        dropped = sum(m for z, m in merged if abs(z) <= resolution)
        if dropped != origin_order:
            raise WindingError(
                f"winding multiplicity {dropped} at the origin disagrees with "
                f"the exact order {origin_order}")
        origin_snapped = [(0j, origin_order)] + kept
    else:
        origin_snapped = merged

    records = []
    locations = [z for z, _ in origin_snapped]
    for z, m in origin_snapped:
        r_iso = _CERT_RADIUS
        others = [abs(z - w) for w in locations if w is not z]
        if others:
            r_iso = min(r_iso, 0.45 * min(others))
        check = _path_winding(fe, _circle_path(z, r_iso))
        if check != m:
            raise WindingError(
                f"isolation circle at {z} gives multiplicity {check}, expected {m}")
        records.append(ZeroRecord(z, m, r_iso))
    return records


def _newton_polish(fe: NumericEval, de: NumericEval, z: complex, mult: int,
                   resolution: float) -> complex:
    start = z
    for _ in range(60):
        mg, sg = fe.scaled(np.array([z]))
        md, sd = de.scaled(np.array([z]))
        if sd[0] == 0:
            break
        ratio = (sg[0] / sd[0]) * cmath.exp(complex(mg[0] - md[0]))
        step = mult * ratio
        if not cmath.isfinite(step):
            break
        z -= step
        if abs(z - start) > 16 * resolution:
            return start  # diverged; keep the subdivision estimate
        if abs(step) < 1e-15 * max(1.0, abs(z)):
            break
    return z
