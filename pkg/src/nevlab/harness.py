"""End-to-end checks: the truncated inequality on scenarios, the
hyperplane-bound check, the Wronskian vanishing-order bound, and the
batch regression suite over the exact-algebra lemmas.
"""
from __future__ import annotations

import math
import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import comb, lcm, prod
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .errors import (DegenerateCurveError, GeneralPositionError,
                     InternalCheckError, PreconditionError)
from .expressions import Curve, curve_compose, wronskian
from .filtration import (_validated_epsilon, choose_alpha, filtration_basis,
                         quotient_dims, ratio_bounds, truncation_cap,
                         weighted_quotient_sum)
from .graded import general_position_witness, hilbert_quotient
from .linalg import independent_subsets
from .nevanlinna import (characteristic, circle_average, counting_value,
                         zero_count, fmt_residual, _curve_log_norm)
from .parsing import parse_expr, parse_form
from .polynomials import HomogeneousPoly, monomial_basis
from .rationals import GR_ONE, GaussianRational, gauss
from .scenario import Scenario
from .univariate import u_order_at
from .zeros import ZeroRecord, locate_zeros

_THEOREM_R_FORM_CAP = 12


def _map_ordered(fn: Callable, items: Sequence, threads: int) -> list:
    if threads <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))


def _require_nondegenerate(curve: Curve) -> str:
    """Gate scenarios on algebraic nondegeneracy as far as it is decidable.

    Polynomial curves into P^n with n >= 2 always lie on an algebraic
    hypersurface (their image is an algebraic curve), so they are
    rejected outright.  For everything else the component Wronskian is a
    decidable necessary condition; the rest is a declared assumption for
    transcendental curves, which the report notes.
    """
    if curve.is_polynomial and curve.n >= 2:
        raise DegenerateCurveError(
            "polynomial curves into P^n with n >= 2 are algebraically degenerate; "
            "use a transcendental component or n = 1")
    if curve.component_wronskian().is_zero:
        raise DegenerateCurveError(
            "components are linearly dependent; the curve is degenerate")
    if curve.n == 1:
        return "nondegeneracy certified (nonconstant map to P^1)"
    return ("linear nondegeneracy certified by the component Wronskian; "
            "algebraic nondegeneracy assumed")


@dataclass(frozen=True)
class SmtReportRow:
    r: float
    characteristic: float
    counting_truncated: Tuple[float, ...]
    rhs: float
    lhs: float
    margin: float
    flagged: bool


@dataclass(frozen=True)
class SmtReport:
    n: int
    q: int
    lcm_degree: int
    epsilon: str
    alpha: int
    alpha_overridden: bool
    m_exact: int
    m_closed_form: int
    truncation: float
    truncation_overridden: bool
    closed_form_exceeded: bool
    nondegeneracy: str
    rows: Tuple[SmtReportRow, ...]


def run_smt_scenario(scenario: Scenario, threads: int = 1) -> SmtReport:
    """Evaluate (q - n - 1 - eps) * T against the truncated counting sum.

    Negative margins are flagged, never fatal: the inequality allows an
    exceptional set of radii and only binds for large r.
    """
    if scenario.epsilon is None:
        raise PreconditionError("scenario needs an epsilon for the inequality check")
    epsilon = _validated_epsilon(scenario.epsilon)
    curve = scenario.parsed_curve()
    targets = scenario.parsed_targets()
    n, q = scenario.n, len(targets)
    if q <= n:
        raise PreconditionError(f"need more targets than n={n}, got {q}")
    note = _require_nondegenerate(curve)
    witness = general_position_witness(targets, n)
    if witness is not None:
        raise GeneralPositionError(
            "targets are not in general position; witness subset "
            f"{{{', '.join(scenario.targets[i].form for i in witness)}}}",
            witness)

    d = lcm(*[t.degree for t in targets])
    alpha = scenario.alpha_override if scenario.alpha_override is not None \
        else choose_alpha(n, d, epsilon)
    m_exact = comb(alpha + n, n)
    m_closed = truncation_cap(n, d, epsilon)
    truncation = scenario.m_override if scenario.m_override is not None else m_exact

    located: List[List[ZeroRecord]] = []
    for target in targets:
        g = curve_compose(target, curve)
        if g.is_zero:
            raise PreconditionError(
                f"curve lies in target {target}; composition is identically zero")
        located.append(locate_zeros(g, max(scenario.r_grid) * 1.0000001))

    eps_float = float(epsilon.numerator) / float(epsilon.denominator)

    def row_for(r: float) -> SmtReportRow:
        t = characteristic(curve, r, scenario.tol)
        per_target = tuple(counting_value(records, r, truncation)
                           for records in located)
        rhs = sum(v / targets[j].degree for j, v in enumerate(per_target))
        lhs = (q - n - 1 - eps_float) * t
        margin = rhs - lhs
        return SmtReportRow(r, t, per_target, rhs, lhs, margin, margin < 0)

    rows = tuple(_map_ordered(row_for, list(scenario.r_grid), threads))
    return SmtReport(
        n=n, q=q, lcm_degree=d, epsilon=str(epsilon), alpha=alpha,
        alpha_overridden=scenario.alpha_override is not None,
        m_exact=m_exact, m_closed_form=m_closed,
        truncation=truncation,
        truncation_overridden=scenario.m_override is not None,
        closed_form_exceeded=m_exact > m_closed,
        nondegeneracy=note, rows=rows)


@dataclass(frozen=True)
class TheoremRRow:
    r: float
    lhs: float
    rhs: float
    gap: float


@dataclass(frozen=True)
class TheoremRReport:
    m: int
    q: int
    subsets: int
    wronskian_zeros: int
    rows: Tuple[TheoremRRow, ...]


def theorem_r_check(curve: Curve, forms: Sequence[HomogeneousPoly],
                    r_grid: Sequence[float], tol: float = 1e-4,
                    threads: int = 1) -> TheoremRReport:
    """Check the hyperplane bound: circle average of the largest
    independent-subset sum of log(||F|| ||L|| / |L(F)|), plus the
    Wronskian counting term, against (m+1) * T(r)."""
    m = curve.n
    q = len(forms)
    if q == 0:
        raise PreconditionError("need at least one linear form")
    if q > _THEOREM_R_FORM_CAP:
        raise PreconditionError(
            f"independent-subset enumeration caps at {_THEOREM_R_FORM_CAP} forms")
    for form in forms:
        if form.degree != 1:
            raise PreconditionError(f"nonlinear form of degree {form.degree}")
        if form.nvars != m + 1 or form.is_zero:
            raise PreconditionError("forms must be nonzero linear forms on the target")
    w = curve.component_wronskian()
    if w.is_zero:
        raise DegenerateCurveError(
            "component Wronskian vanishes identically; the curve is linearly degenerate")

    order = monomial_basis(m + 1, 1)
    vectors = [form.coefficient_vector(order) for form in forms]
    subsets = independent_subsets(vectors, m + 1)

    compositions = []
    norms = []
    for form in forms:
        g = curve_compose(form, curve)
        if g.is_zero:
            raise PreconditionError("curve lies in one of the hyperplanes")
        compositions.append(g.numeric())
        norms.append(math.log(form.max_abs_coefficient()))
    log_norm = _curve_log_norm(curve)
    w_records = locate_zeros(w, max(r_grid) * 1.0000001)

    def row_for(r: float) -> TheoremRRow:
        def integrand(theta):
            import numpy as np
            z = r * np.exp(1j * theta)
            base = log_norm(z)
            terms = [base + norms[j] - compositions[j].log_abs(z)
                     for j in range(q)]
            best = np.zeros_like(base)
            for subset in subsets:
                if not subset:
                    continue
                acc = terms[subset[0]].copy()
                for j in subset[1:]:
                    acc += terms[j]
                np.maximum(best, acc, out=best)
            return best

        lhs = circle_average(integrand, tol) + counting_value(w_records, r)
        rhs = (m + 1) * characteristic(curve, r, tol)
        return TheoremRRow(r, lhs, rhs, lhs - rhs)

    rows = tuple(_map_ordered(row_for, list(r_grid), threads))
    return TheoremRReport(m=m, q=q, subsets=len(subsets),
                          wronskian_zeros=zero_count(w_records, max(r_grid)),
                          rows=rows)


@dataclass(frozen=True)
class WronskianOrderReport:
    observed: Optional[int]
    claimed: int
    delta: int
    truncation: int
    orders: Tuple[int, ...]
    degenerate: bool


def wronskian_order_check(gammas: Sequence[HomogeneousPoly], alpha: int,
                          curve: Curve, point) -> WronskianOrderReport:
    """Compare ord_z W(psi_1 o f, ..., psi_M o f) with the amplification
    bound Delta * sum over j with k_j >= M of (k_j - M).

    Everything is exact: the curve must be polynomial and the point an
    exact Gaussian rational.  An identically vanishing Wronskian (the
    curve is too degenerate for this instance) is reported, not asserted
    against.
    """
    if not curve.is_polynomial:
        raise PreconditionError("the order check needs a polynomial curve")
    point = gauss(point)
    elements = filtration_basis(gammas, alpha)
    n = len(gammas)
    m_level = comb(alpha + n, n)
    delta = weighted_quotient_sum(gammas, alpha)

    orders = []
    for g in gammas:
        composed = curve_compose(g, curve)
        if composed.is_zero:
            raise PreconditionError(
                "curve lies inside one of the defining hypersurfaces")
        orders.append(u_order_at(composed.poly_coeffs(), point))
    claimed = delta * sum(k - m_level for k in orders if k >= m_level)

    images = [curve_compose(el.psi, curve) for el in elements]
    w = wronskian(images)
    if w.is_zero:
        return WronskianOrderReport(None, claimed, delta, m_level,
                                    tuple(orders), True)
    observed = u_order_at(w.poly_coeffs(), point)
    if observed < claimed:
        raise InternalCheckError(
            f"Wronskian order {observed} violates the claimed bound {claimed}")
    return WronskianOrderReport(observed, claimed, delta, m_level,
                                tuple(orders), False)


# -- batch regression suite ---------------------------------------------------


@dataclass(frozen=True)
class SuiteLimits:
    """Size caps for the regression blocks; zero disables a block."""

    random_systems: int = 20
    random_max_dim: int = 3
    random_max_degree: int = 3
    filtration_max_dim: int = 2
    filtration_max_degree: int = 3
    filtration_max_alpha: int = 8
    zero_polynomials: int = 20
    zero_max_degree: int = 10
    fmt_checks: int = 2
    seed: int = 20250809

    @classmethod
    def none(cls) -> "SuiteLimits":
        return cls(random_systems=0, filtration_max_dim=0,
                   zero_polynomials=0, fmt_checks=0)


@dataclass(frozen=True)
class SuiteResult:
    name: str
    passed: bool
    detail: str
    seconds: float


def random_zero_dimensional_system(rng: random.Random, n: int,
                                   max_degree: int) -> List[HomogeneousPoly]:
    """n forms x_j^{d_j} + (mixing divisible by a later variable), which
    always cut out exactly the point (1:0:...:0) scheme-theoretically."""
    nvars = n + 1
    forms = []
    for j in range(1, n + 1):
        d = rng.randint(1, max_degree)
        mono = tuple(d if i == j else 0 for i in range(nvars))
        terms = {mono: GR_ONE}
        for k in range(j + 1, n + 1):
            if rng.random() < 0.7:
                # a degree-d monomial divisible by x_k
                rest = [0] * nvars
                rest[k] = 1
                for _ in range(d - 1):
                    rest[rng.randint(0, nvars - 1)] += 1
                coeff = gauss(rng.randint(-3, 3))
                if coeff:
                    key = tuple(rest)
                    terms[key] = terms.get(key, gauss(0)) + coeff
        forms.append(HomogeneousPoly(nvars, d, {m: c for m, c in terms.items() if c}))
    return forms


def lemma_suite(limits: SuiteLimits = SuiteLimits()) -> List[SuiteResult]:
    """Run the exact-property regression blocks within the given caps."""
    results: List[SuiteResult] = []

    def run(name: str, size_gate: int, block: Callable[[], str]) -> None:
        if size_gate <= 0:
            return
        start = time.perf_counter()
        try:
            detail = block()
            results.append(SuiteResult(name, True, detail,
                                       time.perf_counter() - start))
        except Exception as err:  # a failing block is a summary entry
            results.append(SuiteResult(name, False, f"{type(err).__name__}: {err}",
                                       time.perf_counter() - start))

    rng = random.Random(limits.seed)

    def random_systems_block() -> str:
        count = 0
        for _ in range(limits.random_systems):
            n = rng.randint(1, limits.random_max_dim)
            gammas = random_zero_dimensional_system(rng, n, limits.random_max_degree)
            total = sum(g.degree for g in gammas)
            expected = prod(g.degree for g in gammas)
            for alpha in (total, total + 1):
                got = hilbert_quotient(gammas, alpha)
                if got != expected:
                    raise InternalCheckError(
                        f"quotient {got} != degree product {expected} at alpha={alpha}")
            count += 1
        return f"{count} randomized systems, quotient == degree product at both degrees"

    def _filtration_instances():
        for n in range(1, limits.filtration_max_dim + 1):
            for d in range(1, limits.filtration_max_degree + 1):
                for alpha in range(d, limits.filtration_max_alpha + 1, d):
                    gammas = [HomogeneousPoly.monomial(
                        tuple(d if i == j else 0 for i in range(n + 1)))
                        for j in range(1, n + 1)]
                    yield n, d, alpha, gammas

    def level_quotient_block() -> str:
        checked = 0
        for n, d, alpha, gammas in _filtration_instances():
            deltas = quotient_dims(gammas, alpha)
            for index, value in deltas.items():
                if value != hilbert_quotient(gammas, alpha - d * sum(index)):
                    raise InternalCheckError(
                        f"level {index} of (n={n}, d={d}, alpha={alpha}) "
                        "disagrees with the graded quotient")
                checked += 1
        return f"{checked} levels match the graded quotient dimension"

    def stable_range_block() -> str:
        checked = 0
        for n, d, alpha, gammas in _filtration_instances():
            deltas = quotient_dims(gammas, alpha)
            stable = {i: v for i, v in deltas.items()
                      if d * sum(i) <= alpha - n * d}
            for index, value in stable.items():
                if value != d ** n:
                    raise InternalCheckError(
                        f"stable level {index} has quotient {value}, wanted {d ** n}")
            if sum(deltas.values()) != comb(alpha + n, n):
                raise InternalCheckError("quotients do not telescope to dim V_alpha")
            checked += len(stable)
        return f"{checked} stable levels equal d^n; totals telescope"

    def delta_block() -> str:
        checked = 0
        for n, d, alpha, gammas in _filtration_instances():
            value = weighted_quotient_sum(gammas, alpha)  # asserts internally
            if alpha > n * d:
                m_level = comb(alpha + n, n)
                report = ratio_bounds(n, d, alpha, value, m_level,
                                      q=n + 2, epsilon="1/2")
                if not report.ratio_ok:
                    raise InternalCheckError(
                        f"ratio bound fails at (n={n}, d={d}, alpha={alpha})")
            checked += 1
        return f"{checked} instances: symmetry, lower bound and ratio chain hold"

    def fmt_block() -> str:
        details = []
        if limits.fmt_checks >= 1:
            f = Curve(1, (parse_expr("z"), parse_expr("1")))
            worst = max(fmt_residual(f, parse_form(t, 2), [2, 4, 8, 16])
                        for t in ("x0", "x1", "x0-x1"))
            if worst > 1e-3:
                raise InternalCheckError(f"rational-curve residual spread {worst}")
            details.append(f"line spread {worst:.2e}")
        if limits.fmt_checks >= 2:
            f = Curve(2, (parse_expr("1"), parse_expr("z"), parse_expr("exp(z)")))
            spread = fmt_residual(f, parse_form("x0+x1+x2", 3), [4, 8, 12])
            if spread > 0.05:
                raise InternalCheckError(f"exp-curve residual spread {spread}")
            details.append(f"exp spread {spread:.2e}")
        return "; ".join(details)

    def zero_block() -> str:
        from .expressions import ExpPoly
        from .univariate import U_ONE, u_mul, u_pow

        for trial in range(limits.zero_polynomials):
            # well-separated roots on a coarse grid, random multiplicities
            budget = limits.zero_max_degree
            truth: Dict[complex, int] = {}
            coeffs = U_ONE
            while budget > 0:
                mult = rng.randint(1, min(3, budget))
                root = GaussianRational(rng.randint(-6, 6),
                                        rng.randint(-6, 6))
                key = complex(root)
                if key in truth:
                    continue
                truth[key] = mult
                budget -= mult
                coeffs = u_mul(coeffs, u_pow((-root, GR_ONE), mult))
            g = ExpPoly.from_poly(coeffs)
            records = locate_zeros(g, 12.0)
            key = lambda pair: (round(pair[0].real, 6), round(pair[0].imag, 6))
            got = sorted(((rec.location, rec.multiplicity) for rec in records),
                         key=key)
            want = sorted(truth.items(), key=key)
            if len(got) != len(want):
                raise InternalCheckError(
                    f"trial {trial}: found {len(got)} zeros, expected {len(want)}")
            for (gz, gm), (wz, wm) in zip(got, want):
                if gm != wm or abs(gz - wz) > 1e-8:
                    raise InternalCheckError(
                        f"trial {trial}: got ({gz}, {gm}), want ({wz}, {wm})")
        return f"{limits.zero_polynomials} exact multiplicity multisets match"

    run("random_systems_quotient_stabilization", limits.random_systems, random_systems_block)
    run("level_quotients_match_graded_piece", limits.filtration_max_dim, level_quotient_block)
    run("stable_range_quotients", limits.filtration_max_dim, stable_range_block)
    run("delta_weighted_sum", limits.filtration_max_dim, delta_block)
    run("fmt_residual", limits.fmt_checks, fmt_block)
    run("zero_counter", limits.zero_polynomials, zero_block)
    return results
