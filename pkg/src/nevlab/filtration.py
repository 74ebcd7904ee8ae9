"""The weight filtration of a graded piece by powers of n defining forms.

Given forms g_1, ..., g_n of one degree d cutting out a 0-dimensional
subset of P^n, the space V_alpha of degree-alpha forms is filtered by

    W_(i) = sum over (e) >= (i) of g_1^{e_1} ... g_n^{e_n} V_{alpha - d*sigma(e)}

with multi-indices ordered lexicographically and sigma the coordinate
sum.  Since the lex successor (i') of (i) satisfies
W_(i) = g^i * V_{alpha - d*sigma(i)} + W_(i'), one descending sweep that
feeds candidate products into an incremental echelon computes every
level dimension, every quotient dimension Delta_(i), and a canonical
basis of V_alpha adapted to the filtration, all in a single pass.

Quotient dimensions equal d^n on the stable range
sigma(i) <= alpha/d - n; this is asserted, not assumed, and the tail
levels always use actual ranks.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb, factorial
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import InternalCheckError, PreconditionError
from .graded import GradedPieceBasis, is_zero_dimensional
from .linalg import IncrementalEchelon, rank
from .polynomials import (HomogeneousPoly, Monomial, monomial_basis,
                          monomial_count)
from .rationals import rational

MultiIndex = Tuple[int, ...]


def sigma(index: MultiIndex) -> int:
    """Coordinate sum (the weight) of a multi-index."""
    return sum(index)


def multi_indices(n: int, bound: int) -> List[MultiIndex]:
    """All n-tuples of nonnegative integers with weight <= bound,
    strictly ascending in lexicographic order; count C(bound+n, n)."""
    if n < 1:
        raise PreconditionError("tuple arity must be at least 1")
    if bound < 0:
        raise PreconditionError("weight bound must be nonnegative")
    out: List[MultiIndex] = []

    def rec(prefix: List[int], remaining: int, k: int) -> None:
        if k == n:
            out.append(tuple(prefix))
            return
        for value in range(remaining + 1):
            rec(prefix + [value], remaining - value, k + 1)

    rec([], bound, 0)
    return out


@dataclass(frozen=True)
class FiltrationBasisElement:
    """One adapted basis vector psi = g_1^{i_1}...g_n^{i_n} * eta."""

    index: MultiIndex
    eta: Monomial
    psi: HomogeneousPoly


@dataclass(frozen=True)
class FiltrationLevel:
    """A level W_(i): its dimension, quotient dimension to the lex
    successor, and the new quotient representatives chosen here."""

    index: MultiIndex
    dim: int
    delta: int
    elements: Tuple[FiltrationBasisElement, ...]


@dataclass(frozen=True)
class Filtration:
    n: int
    degree: int
    alpha: int
    gammas: Tuple[HomogeneousPoly, ...]
    levels: Tuple[FiltrationLevel, ...]  # ascending lex order

    @property
    def total_dim(self) -> int:
        return monomial_count(self.n + 1, self.alpha)

    def delta_map(self) -> Dict[MultiIndex, int]:
        return {lv.index: lv.delta for lv in self.levels}

    def basis(self) -> List[FiltrationBasisElement]:
        """Adapted basis in construction order (last level first)."""
        out: List[FiltrationBasisElement] = []
        for lv in reversed(self.levels):
            out.extend(lv.elements)
        return out

    def weighted_sums(self) -> Tuple[int, ...]:
        """For each coordinate j: sum over levels of Delta_(i) * i_j."""
        return tuple(sum(lv.delta * lv.index[j] for lv in self.levels)
                     for j in range(self.n))

    def span_of(self, index: MultiIndex) -> GradedPieceBasis:
        """Spanning vectors of W_(index): representatives of all levels
        at or above it in lex order."""
        order = monomial_basis(self.n + 1, self.alpha)
        vectors = []
        for lv in self.levels:
            if lv.index >= index:
                for el in lv.elements:
                    vectors.append(tuple(el.psi.coefficient_vector(order)))
        return GradedPieceBasis(self.n + 1, self.alpha, tuple(vectors))


def _validated_family(gammas: Sequence[HomogeneousPoly]) -> tuple[int, int]:
    n = len(gammas)
    if n < 1:
        raise PreconditionError("need at least one defining form")
    nvars = gammas[0].nvars
    if nvars != n + 1:
        raise PreconditionError(
            f"{n} defining forms must live in {n + 1} variables, got {nvars}")
    degrees = {g.degree for g in gammas}
    if len(degrees) != 1:
        raise PreconditionError("defining forms must share one common degree")
    d = degrees.pop()
    if d < 1:
        raise PreconditionError("defining forms must have positive degree")
    if not is_zero_dimensional(gammas):
        raise PreconditionError("defining forms do not cut out a 0-dimensional set")
    return n, d


@lru_cache(maxsize=32)
def _scan(gammas: Tuple[HomogeneousPoly, ...], alpha: int) -> Filtration:
    n, d = _validated_family(gammas)
    if alpha < 0:
        raise PreconditionError("alpha must be nonnegative")
    nvars = n + 1
    order = monomial_basis(nvars, alpha)
    index_of = {m: i for i, m in enumerate(order)}
    bound = alpha // d

    powers: List[List[HomogeneousPoly]] = []
    for g in gammas:
        cache = [HomogeneousPoly.constant(nvars, 1)]
        for _ in range(bound):
            cache.append(cache[-1] * g)
        powers.append(cache)

    echelon = IncrementalEchelon()
    descending: List[FiltrationLevel] = []
    prev_dim = 0
    for idx in reversed(multi_indices(n, bound)):
        weight = sigma(idx)
        gpow = powers[0][idx[0]]
        for j in range(1, n):
            if idx[j]:
                gpow = gpow * powers[j][idx[j]]
        chosen: List[FiltrationBasisElement] = []
        for eta in monomial_basis(nvars, alpha - d * weight):
            psi = gpow * HomogeneousPoly.monomial(eta)
            row = {index_of[m]: c for m, c in psi.terms.items()}
            if echelon.insert(row):
                chosen.append(FiltrationBasisElement(idx, eta, psi))
        dim = echelon.rank
        delta = dim - prev_dim
        if len(chosen) != delta:
            raise InternalCheckError("level quotient count mismatch")
        if d * weight <= alpha - n * d and delta != d ** n:
            raise InternalCheckError(
                f"stable-range quotient at {idx} is {delta}, expected {d ** n}")
        descending.append(FiltrationLevel(idx, dim, delta, tuple(chosen)))
        prev_dim = dim

    if prev_dim != monomial_count(nvars, alpha):
        raise InternalCheckError("filtration did not exhaust the graded piece")
    return Filtration(n, d, alpha, tuple(gammas), tuple(reversed(descending)))


def filtration_levels(gammas: Sequence[HomogeneousPoly], alpha: int) -> Filtration:
    """Full scan; the returned object is shared and must not be mutated."""
    return _scan(tuple(gammas), alpha)


def level_dim(gammas: Sequence[HomogeneousPoly], alpha: int,
              index: MultiIndex) -> int:
    """Exact dimension of W_(index)."""
    filt = filtration_levels(gammas, alpha)
    if len(index) != filt.n:
        raise PreconditionError("multi-index arity mismatch")
    if filt.degree * sigma(index) > alpha:
        raise PreconditionError(
            f"d*sigma(index) = {filt.degree * sigma(index)} exceeds alpha = {alpha}")
    for lv in filt.levels:
        if lv.index == index:
            return lv.dim
    raise InternalCheckError("index not found in filtration")


def quotient_dims(gammas: Sequence[HomogeneousPoly], alpha: int) -> Dict[MultiIndex, int]:
    """All quotient dimensions Delta_(i), keyed by multi-index."""
    return filtration_levels(gammas, alpha).delta_map()


def filtration_basis(gammas: Sequence[HomogeneousPoly],
                     alpha: int) -> List[FiltrationBasisElement]:
    """The adapted basis of V_alpha, verified independent by exact rank.

    Exactly C(alpha+n, n) elements; every element satisfies
    d*sigma(index) + deg(eta) = alpha by construction.
    """
    filt = filtration_levels(gammas, alpha)
    if alpha < filt.n * filt.degree:
        raise PreconditionError("alpha must be at least n*d for the adapted basis")
    elements = filt.basis()
    order = monomial_basis(filt.n + 1, alpha)
    vectors = [el.psi.coefficient_vector(order) for el in elements]
    if rank(vectors) != filt.total_dim:
        raise InternalCheckError("adapted basis is not independent")
    return elements


def weighted_quotient_sum(gammas: Sequence[HomogeneousPoly], alpha: int) -> int:
    """The weight Delta = sum over levels of Delta_(i) * i_j.

    The value is independent of the coordinate j (the quotient dimension
    only depends on the weight of the index); all coordinates are
    computed and compared, and the closed-form lower bound
    alpha*(alpha-d)*...*(alpha-nd) / (d*(n+1)!) is asserted whenever d
    divides alpha and alpha >= n*d.
    """
    filt = filtration_levels(gammas, alpha)
    sums = filt.weighted_sums()
    if any(s != sums[0] for s in sums):
        raise InternalCheckError(f"coordinate sums differ: {sums}")
    value = sums[0]
    n, d = filt.n, filt.degree
    if alpha % d == 0 and alpha >= n * d:
        if rational(value) < delta_lower_bound(n, d, alpha):
            raise InternalCheckError(
                f"weighted sum {value} below closed-form lower bound")
    return value


def delta_lower_bound(n: int, d: int, alpha: int):
    """alpha*(alpha-d)*...*(alpha-n*d) / (d*(n+1)!) as an exact rational."""
    num = 1
    for k in range(n + 1):
        num *= alpha - k * d
    return rational(num, d * factorial(n + 1))


def _ceil(value) -> int:
    num, den = value.numerator, value.denominator
    return int(-((-num) // den))


def choose_alpha(n: int, d: int, epsilon) -> int:
    """The working degree alpha = d*ceil(2(n+1)(nd+n)(2^n-1)/eps) + 3nd.

    Divisible by d and larger than n*d by construction.
    """
    epsilon = _validated_epsilon(epsilon)
    if n < 1 or d < 1:
        raise PreconditionError("n and d must be positive")
    inner = rational(2 * (n + 1) * (n * d + n) * (2 ** n - 1)) / epsilon
    alpha = d * _ceil(inner) + 3 * n * d
    if alpha % d != 0 or alpha <= n * d:
        raise InternalCheckError("alpha fails its divisibility or size guarantees")
    return alpha


def truncation_cap(n: int, d: int, epsilon) -> int:
    """Closed-form truncation level 2d*ceil(2^n (n+1) n (d+1)/eps)^n."""
    epsilon = _validated_epsilon(epsilon)
    inner = rational(2 ** n * (n + 1) * n * (d + 1)) / epsilon
    return 2 * d * _ceil(inner) ** n


def _validated_epsilon(epsilon):
    from fractions import Fraction

    from .rationals import parse_rational
    if isinstance(epsilon, str):
        epsilon = parse_rational(epsilon)
    elif isinstance(epsilon, float):
        epsilon = rational(Fraction(str(epsilon)))
    else:
        epsilon = rational(epsilon)
    if not (0 < epsilon < 1):
        raise PreconditionError("epsilon must lie strictly between 0 and 1")
    return epsilon


@dataclass(frozen=True)
class TruncationReport:
    """Side-by-side truncation arithmetic for one (n, d, epsilon).

    m_exact = C(alpha+n, n) is the level the construction actually
    yields; m_closed_form is the closed-form cap.  The two can disagree
    (m_exact exceeds the cap for some parameters); closed_form_exceeded
    reports the discrepancy instead of asserting either side.
    """

    n: int
    d: int
    epsilon: object
    alpha: int
    m_exact: int
    m_closed_form: int
    delta_lower: object
    delta: Optional[int]
    ratio: Optional[object]  # m_exact*alpha/delta when delta is known
    closed_form_exceeded: bool


def truncation_report(n: int, d: int, epsilon,
                      gammas: Optional[Sequence[HomogeneousPoly]] = None
                      ) -> TruncationReport:
    epsilon = _validated_epsilon(epsilon)
    alpha = choose_alpha(n, d, epsilon)
    m_exact = comb(alpha + n, n)
    m_closed = truncation_cap(n, d, epsilon)
    delta: Optional[int] = None
    ratio = None
    if gammas is not None:
        filt = filtration_levels(gammas, alpha)
        if filt.n != n or filt.degree != d:
            raise PreconditionError("defining forms do not match (n, d)")
        delta = weighted_quotient_sum(gammas, alpha)
        ratio = rational(m_exact * alpha) / rational(delta)
    return TruncationReport(
        n=n, d=d, epsilon=epsilon, alpha=alpha,
        m_exact=m_exact, m_closed_form=m_closed,
        delta_lower=delta_lower_bound(n, d, alpha),
        delta=delta, ratio=ratio,
        closed_form_exceeded=m_exact > m_closed,
    )


@dataclass(frozen=True)
class RatioBoundReport:
    """Exact verdicts for the ratio chain at one parameter point."""

    ratio: object            # M*alpha/Delta
    ratio_bound: object      # d*(n+1)*((alpha+n)/(alpha-nd))^n
    ratio_ok: bool
    growth: object           # ((alpha+n)/(alpha-nd))^n
    growth_bound: object     # 1 + eps/(2d(n+1))
    growth_ok: bool
    margin: object           # q*d - M*alpha/Delta
    margin_bound: object     # d*(q - n - 1 - eps/2)
    margin_ok: bool
    is_chosen_alpha: bool


def ratio_bounds(n: int, d: int, alpha: int, delta: int, m: int, q: int,
                 epsilon) -> RatioBoundReport:
    """Verify M*alpha/Delta <= d(n+1)((alpha+n)/(alpha-nd))^n and the
    epsilon margins, all in exact rational arithmetic."""
    epsilon = _validated_epsilon(epsilon)
    if alpha <= n * d:
        raise PreconditionError("alpha must exceed n*d")
    if alpha % d != 0:
        raise PreconditionError("alpha must be divisible by d")
    if delta <= 0:
        raise PreconditionError("delta must be positive")
    ratio = rational(m * alpha) / rational(delta)
    growth = (rational(alpha + n) / rational(alpha - n * d)) ** n
    ratio_bound = rational(d * (n + 1)) * growth
    growth_bound = 1 + epsilon / rational(2 * d * (n + 1))
    margin = rational(q * d) - ratio
    margin_bound = rational(d) * (rational(q - n - 1) - epsilon / 2)
    return RatioBoundReport(
        ratio=ratio, ratio_bound=ratio_bound, ratio_ok=ratio <= ratio_bound,
        growth=growth, growth_bound=growth_bound, growth_ok=growth <= growth_bound,
        margin=margin, margin_bound=margin_bound, margin_ok=margin >= margin_bound,
        is_chosen_alpha=alpha == choose_alpha(n, d, epsilon),
    )
