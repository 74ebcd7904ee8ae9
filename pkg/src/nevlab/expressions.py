"""Entire-function expressions closed under differentiation.

The grammar (constants, z, +, *, integer powers, exp of a polynomial)
generates exactly the exp-polynomials, and every such function has a
canonical form

    sum_j  q_j(z) * exp(p_j(z))

with q_j, p_j polynomials over the Gaussian rationals and the p_j
pairwise distinct.  We store that canonical form directly: a mapping
from the exponent polynomial p (a coefficient tuple) to the coefficient
polynomial q.  Distinct keys are linearly independent over the
polynomial ring (Lindemann-Weierstrass for constant differences), so

 * the zero test is exact: all coefficient polynomials vanish;
 * differentiation is closed: (q e^p)' = (q' + q p') e^p;
 * vanishing orders at exact points are computable exactly.

Purely polynomial values are the single key () ... well, the key p = 0;
their degree metadata is exact.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, Sequence, Tuple

import numpy as np

from .errors import DegenerateCurveError, PreconditionError
from .polynomials import HomogeneousPoly
from .rationals import GR_ONE, GR_ZERO, GaussianRational, gauss
from .univariate import (U, U_ONE, U_ZERO, U_Z, u_add, u_deg, u_diff, u_eval,
                         u_eval_complex, u_gcd, u_mul, u_neg, u_pow, u_scale,
                         u_str, u_trim)

_ORDER_SEARCH_CAP = 10_000
_WRONSKIAN_MAX = 14


class ExpPoly:
    """Canonical exp-polynomial; immutable value semantics."""

    __slots__ = ("terms",)

    def __init__(self, terms: Dict[U, U] | None = None):
        clean: Dict[U, U] = {}
        for p, q in (terms or {}).items():
            q = u_trim(q)
            if q:
                clean[u_trim(p)] = q
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("ExpPoly is immutable")

    # -- constructors ---------------------------------------------------------

    @classmethod
    def constant(cls, value) -> "ExpPoly":
        c = gauss(value)
        return cls({U_ZERO: (c,)}) if c else cls({})

    @classmethod
    def variable(cls) -> "ExpPoly":
        return cls({U_ZERO: U_Z})

    @classmethod
    def from_poly(cls, coeffs: Sequence[GaussianRational]) -> "ExpPoly":
        return cls({U_ZERO: tuple(coeffs)})

    @classmethod
    def exp_of(cls, argument: "ExpPoly") -> "ExpPoly":
        if not argument.is_polynomial:
            raise PreconditionError("exp argument must be a polynomial expression")
        return cls({argument.poly_coeffs(): U_ONE})

    # -- ring operations ------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms = dict(self.terms)
        for p, q in other.terms.items():
            s = u_add(terms.get(p, U_ZERO), q)
            if s:
                terms[p] = s
            else:
                terms.pop(p, None)
        return ExpPoly(terms)

    __radd__ = __add__

    def __neg__(self):
        return ExpPoly({p: u_neg(q) for p, q in self.terms.items()})

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms: Dict[U, U] = {}
        for p1, q1 in self.terms.items():
            for p2, q2 in other.terms.items():
                p = u_add(p1, p2)
                s = u_add(terms.get(p, U_ZERO), u_mul(q1, q2))
                if s:
                    terms[p] = s
                else:
                    terms.pop(p, None)
        return ExpPoly(terms)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise PreconditionError("expression exponent must be a nonnegative integer")
        result = ExpPoly.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def diff(self) -> "ExpPoly":
        """Exact derivative; d/dz (q e^p) = (q' + q p') e^p."""
        terms: Dict[U, U] = {}
        for p, q in self.terms.items():
            dq = u_add(u_diff(q), u_mul(q, u_diff(p)))
            if dq:
                prev = terms.get(p)
                terms[p] = u_add(prev, dq) if prev else dq
        return ExpPoly(terms)

    # -- structure queries ----------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_polynomial(self) -> bool:
        return not self.terms or set(self.terms) == {U_ZERO}

    def poly_coeffs(self) -> U:
        if not self.is_polynomial:
            raise PreconditionError("expression is not purely polynomial")
        return self.terms.get(U_ZERO, U_ZERO)

    @property
    def degree(self) -> int:
        """Exact degree of a purely polynomial expression (-1 for zero)."""
        return u_deg(self.poly_coeffs())

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset((p, q) for p, q in self.terms.items()))

    # -- exact values and orders ----------------------------------------------

    def value_groups_at(self, z0: GaussianRational) -> Dict[GaussianRational, GaussianRational]:
        """Group term values by the exact exponent value p_j(z0).

        The function value is sum over groups of coeff * e^{exponent};
        by Lindemann-Weierstrass it vanishes iff every group coefficient
        does, which makes the exactness of is_zero_at possible.
        """
        groups: Dict[GaussianRational, GaussianRational] = {}
        for p, q in self.terms.items():
            e = u_eval(p, z0)
            c = u_eval(q, z0)
            s = groups.get(e, GR_ZERO) + c
            if s:
                groups[e] = s
            else:
                groups.pop(e, None)
        return groups

    def is_zero_at(self, z0) -> bool:
        return not self.value_groups_at(gauss(z0))

    def order_at(self, z0) -> int:
        """Exact vanishing order at an exact point (0 if nonvanishing)."""
        if self.is_zero:
            raise PreconditionError("vanishing order of the zero expression")
        z0 = gauss(z0)
        if self.is_polynomial:
            from .univariate import u_order_at
            return u_order_at(self.poly_coeffs(), z0)
        cur = self
        for order in range(_ORDER_SEARCH_CAP):
            if not cur.is_zero_at(z0):
                return order
            cur = cur.diff()
        raise PreconditionError("vanishing order exceeds search cap")

    # -- numerics ---------------------------------------------------------------

    def numeric(self) -> "NumericEval":
        return NumericEval(self)

    def eval_complex(self, z):
        """Plain complex evaluation (may overflow for large exponents;
        use numeric().log_abs for stable magnitudes)."""
        z = np.asarray(z, dtype=complex)
        acc = np.zeros_like(z)
        for p, q in self.terms.items():
            acc = acc + u_eval_complex(q, z) * np.exp(u_eval_complex(p, z))
        return acc

    def __str__(self):
        if not self.terms:
            return "0"
        keys = sorted(self.terms, key=lambda p: (len(p), [c.sort_key() for c in p]))
        parts = []
        for p in keys:
            q = self.terms[p]
            q_txt = u_str(q)
            if not p:
                parts.append(q_txt)
            elif q == U_ONE:
                parts.append(f"exp({u_str(p)})")
            else:
                parts.append(f"({q_txt})*exp({u_str(p)})")
        return " + ".join(parts)

    def __repr__(self):
        return f"ExpPoly(<{len(self.terms)} exp-terms>)"


def _coerce(value):
    if isinstance(value, ExpPoly):
        return value
    if isinstance(value, (int, GaussianRational)):
        return ExpPoly.constant(value)
    return NotImplemented


class NumericEval:
    """Vectorized, overflow-safe evaluation of an ExpPoly.

    scaled(z) returns (m, s) with f(z) = s * e^m elementwise, where m is
    the largest Re p_j(z); log|f| = m + log|s| never overflows for desk
    scale radii even when e^{p(z)} itself would.
    """

    def __init__(self, expr: ExpPoly):
        self.expr = expr
        self._terms = [
            (np.array([complex(c) for c in p], dtype=complex),
             np.array([complex(c) for c in q], dtype=complex))
            for p, q in expr.terms.items()
        ]

    @staticmethod
    def _horner(coeffs: np.ndarray, z: np.ndarray) -> np.ndarray:
        acc = np.zeros_like(z)
        for c in coeffs[::-1]:
            acc = acc * z + c
        return acc

    def scaled(self, z) -> tuple[np.ndarray, np.ndarray]:
        z = np.asarray(z, dtype=complex)
        if not self._terms:
            return np.zeros(z.shape, dtype=float), np.zeros_like(z)
        pvals = [self._horner(p, z) if p.size else np.zeros_like(z)
                 for p, _ in self._terms]
        m = np.maximum.reduce([pv.real for pv in pvals])
        s = np.zeros_like(z)
        for (p, q), pv in zip(self._terms, pvals):
            s = s + self._horner(q, z) * np.exp(pv - m)
        return m, s

    def log_abs(self, z) -> np.ndarray:
        m, s = self.scaled(z)
        with np.errstate(divide="ignore"):
            return m + np.log(np.abs(s))

    def value(self, z) -> np.ndarray:
        m, s = self.scaled(z)
        return s * np.exp(m)


@dataclass(frozen=True)
class Curve:
    """A holomorphic curve into P^n given by n+1 entire components.

    The components must not all vanish identically; when all components
    are polynomials the representation is checked to be reduced (no
    common zero, i.e. the componentwise gcd is constant).
    """

    n: int
    components: Tuple[ExpPoly, ...]

    def __post_init__(self):
        if self.n < 1:
            raise PreconditionError("target projective dimension must be >= 1")
        if len(self.components) != self.n + 1:
            raise PreconditionError(
                f"curve into P^{self.n} needs {self.n + 1} components, got {len(self.components)}")
        if all(c.is_zero for c in self.components):
            raise DegenerateCurveError("all curve components are identically zero")
        if self.is_polynomial:
            g = U_ZERO
            for c in self.components:
                g = u_gcd(g, c.poly_coeffs())
            if u_deg(g) > 0:
                raise DegenerateCurveError(
                    "components share a polynomial zero; representation is not reduced")

    @property
    def is_polynomial(self) -> bool:
        return all(c.is_polynomial for c in self.components)

    def component_wronskian(self) -> ExpPoly:
        return wronskian(self.components)


def curve_compose(form: HomogeneousPoly, curve: Curve) -> ExpPoly:
    """Exact composition Q(f_0, ..., f_n) as an expression in z."""
    if form.nvars != curve.n + 1:
        raise PreconditionError(
            f"form in {form.nvars} variables cannot compose with a curve into P^{curve.n}")
    powers: list[dict[int, ExpPoly]] = [{} for _ in range(form.nvars)]

    def comp_pow(k: int, e: int) -> ExpPoly:
        cache = powers[k]
        if e not in cache:
            cache[e] = curve.components[k] ** e
        return cache[e]

    total = ExpPoly.constant(0)
    for mono, coeff in form.terms.items():
        term = ExpPoly.constant(coeff)
        for k, e in enumerate(mono):
            if e:
                term = term * comp_pow(k, e)
        total = total + term
    return total


def wronskian(gs: Sequence[ExpPoly]) -> ExpPoly:
    """Wronskian determinant of the given expressions, computed exactly.

    Row k holds the k-th derivatives; the determinant is expanded by a
    subset dynamic program over columns, which stays exact in the
    expression ring for polynomial and transcendental entries alike.
    """
    m = len(gs)
    if m < 1:
        raise PreconditionError("wronskian needs at least one function")
    if m > _WRONSKIAN_MAX:
        raise PreconditionError(f"wronskian size {m} exceeds supported maximum {_WRONSKIAN_MAX}")
    rows: list[list[ExpPoly]] = [list(gs)]
    for _ in range(m - 1):
        rows.append([g.diff() for g in rows[-1]])
    # dp maps a used-column bitmask to the signed minor over processed rows
    dp: Dict[int, ExpPoly] = {0: ExpPoly.constant(1)}
    for r in range(m):
        ndp: Dict[int, ExpPoly] = {}
        for mask, minor in dp.items():
            for c in range(m):
                bit = 1 << c
                if mask & bit:
                    continue
                entry = rows[r][c]
                if entry.is_zero:
                    continue
                sign = -1 if bin(mask >> (c + 1)).count("1") & 1 else 1
                contrib = minor * entry if sign > 0 else -(minor * entry)
                key = mask | bit
                prev = ndp.get(key)
                ndp[key] = contrib if prev is None else prev + contrib
        dp = ndp
        if not dp:
            return ExpPoly.constant(0)
    return dp.get((1 << m) - 1, ExpPoly.constant(0))
