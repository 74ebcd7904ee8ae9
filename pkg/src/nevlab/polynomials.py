"""Homogeneous multivariate polynomials over the Gaussian rationals.

A monomial is a bare exponent tuple; tuple comparison is plain
lexicographic, and within a fixed total degree that coincides with the
graded-lexicographic order used everywhere in this package.  Bases are
always emitted in descending order, i.e. x0^d first and xn^d last.
"""
from __future__ import annotations

from math import comb
from typing import Dict, Iterable, Mapping, Sequence, Tuple

from .errors import PreconditionError
from .rationals import GR_ONE, GR_ZERO, GaussianRational, gauss

Monomial = Tuple[int, ...]


def monomial_degree(m: Monomial) -> int:
    return sum(m)


def monomial_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def monomial_basis(nvars: int, degree: int) -> list[Monomial]:
    """All exponent tuples of the given total degree, descending lex.

    The count is C(degree + nvars - 1, nvars - 1).
    """
    if nvars < 1:
        raise PreconditionError("nvars must be at least 1")
    if degree < 0:
        raise PreconditionError("degree must be nonnegative")
    out: list[Monomial] = []

    def rec(prefix: list[int], remaining: int, k: int) -> None:
        if k == nvars - 1:
            out.append(tuple(prefix + [remaining]))
            return
        for e in range(remaining, -1, -1):
            rec(prefix + [e], remaining - e, k + 1)

    rec([], degree, 0)
    return out


def monomial_count(nvars: int, degree: int) -> int:
    return comb(degree + nvars - 1, nvars - 1)


class HomogeneousPoly:
    """Exact homogeneous form in ``nvars`` variables of fixed ``degree``.

    Terms map monomials to nonzero GaussianRational coefficients; zero
    coefficients are never stored, so equality is structural.
    """

    __slots__ = ("nvars", "degree", "terms")

    def __init__(self, nvars: int, degree: int,
                 terms: Mapping[Monomial, GaussianRational] | None = None):
        if nvars < 1:
            raise PreconditionError("nvars must be at least 1")
        if degree < 0:
            raise PreconditionError("degree must be nonnegative")
        clean: Dict[Monomial, GaussianRational] = {}
        for mono, coeff in (terms or {}).items():
            if len(mono) != nvars:
                raise PreconditionError(f"monomial {mono} has wrong arity for nvars={nvars}")
            if any(e < 0 for e in mono):
                raise PreconditionError(f"negative exponent in monomial {mono}")
            if sum(mono) != degree:
                raise PreconditionError(
                    f"monomial {mono} has degree {sum(mono)}, expected {degree}")
            if not isinstance(coeff, GaussianRational):
                coeff = gauss(coeff)
            if coeff:
                clean[mono] = coeff
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("HomogeneousPoly is immutable")

    # -- constructors --------------------------------------------------------

    @classmethod
    def variable(cls, nvars: int, index: int) -> "HomogeneousPoly":
        if not 0 <= index < nvars:
            raise PreconditionError(f"variable index {index} out of range for nvars={nvars}")
        mono = tuple(1 if i == index else 0 for i in range(nvars))
        return cls(nvars, 1, {mono: GR_ONE})

    @classmethod
    def constant(cls, nvars: int, value) -> "HomogeneousPoly":
        return cls(nvars, 0, {(0,) * nvars: gauss(value)})

    @classmethod
    def monomial(cls, mono: Monomial, coeff=GR_ONE) -> "HomogeneousPoly":
        return cls(len(mono), sum(mono), {mono: gauss(coeff)})

    @classmethod
    def zero(cls, nvars: int, degree: int = 0) -> "HomogeneousPoly":
        return cls(nvars, degree, {})

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other: "HomogeneousPoly") -> "HomogeneousPoly":
        if not isinstance(other, HomogeneousPoly):
            return NotImplemented
        if self.nvars != other.nvars:
            raise PreconditionError("cannot add forms in different variable counts")
        if self.degree != other.degree:
            raise PreconditionError(
                f"degree mismatch on add: {self.degree} vs {other.degree}")
        terms = dict(self.terms)
        for mono, coeff in other.terms.items():
            s = terms.get(mono, GR_ZERO) + coeff
            if s:
                terms[mono] = s
            else:
                terms.pop(mono, None)
        return HomogeneousPoly(self.nvars, self.degree, terms)

    def __sub__(self, other: "HomogeneousPoly") -> "HomogeneousPoly":
        return self + (-other)

    def __neg__(self) -> "HomogeneousPoly":
        return HomogeneousPoly(self.nvars, self.degree,
                               {m: -c for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, HomogeneousPoly):
            if self.nvars != other.nvars:
                raise PreconditionError("cannot multiply forms in different variable counts")
            terms: Dict[Monomial, GaussianRational] = {}
            for m1, c1 in self.terms.items():
                for m2, c2 in other.terms.items():
                    mono = monomial_mul(m1, m2)
                    s = terms.get(mono, GR_ZERO) + c1 * c2
                    if s:
                        terms[mono] = s
                    else:
                        terms.pop(mono, None)
            return HomogeneousPoly(self.nvars, self.degree + other.degree, terms)
        coeff = gauss(other)
        return HomogeneousPoly(self.nvars, self.degree,
                               {m: c * coeff for m, c in self.terms.items()})

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, k: int) -> "HomogeneousPoly":
        if not isinstance(k, int) or k < 0:
            raise PreconditionError("form exponent must be a nonnegative integer")
        result = HomogeneousPoly.constant(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    # -- queries --------------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, HomogeneousPoly):
            return NotImplemented
        return (self.nvars == other.nvars and self.degree == other.degree
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.nvars, self.degree, frozenset(self.terms.items())))

    def coefficient_vector(self, order: Sequence[Monomial] | None = None) -> list[GaussianRational]:
        """Dense coefficients over the monomial basis of this degree."""
        if order is None:
            order = monomial_basis(self.nvars, self.degree)
        return [self.terms.get(m, GR_ZERO) for m in order]

    def evaluate(self, point: Sequence[GaussianRational]) -> GaussianRational:
        """Exact value at an exact point."""
        if len(point) != self.nvars:
            raise PreconditionError("point arity mismatch")
        point = [gauss(x) for x in point]
        total = GR_ZERO
        for mono, coeff in self.terms.items():
            v = coeff
            for x, e in zip(point, mono):
                if e:
                    v = v * x ** e
            total = total + v
        return total

    def max_abs_coefficient(self) -> float:
        """max_j |coefficient_j| as a float (used for hyperplane norms)."""
        best = 0.0
        for coeff in self.terms.values():
            best = max(best, abs(complex(coeff)))
        return best

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for mono in sorted(self.terms, reverse=True):
            coeff = self.terms[mono]
            factors = []
            for k, e in enumerate(mono):
                if e == 1:
                    factors.append(f"x{k}")
                elif e > 1:
                    factors.append(f"x{k}^{e}")
            mono_txt = "*".join(factors)
            txt = _coeff_times(coeff, mono_txt)
            parts.append(txt)
        return _join_signed(parts)

    def __repr__(self):
        return f"HomogeneousPoly({self.nvars}, {self.degree}, <{len(self.terms)} terms>)"


def _coeff_times(coeff: GaussianRational, tail: str) -> str:
    """Render coeff*tail; the result always re-parses to the same value."""
    body = str(coeff)
    if not tail:
        return f"({body})" if ("+" in body[1:] or "-" in body[1:]) and body[0] != "(" else body
    if coeff == GR_ONE:
        return tail
    if coeff == -GR_ONE:
        return "-" + tail
    if "+" in body[1:] or "-" in body[1:]:
        body = f"({body})"
    return f"{body}*{tail}"


def _join_signed(parts: Iterable[str]) -> str:
    out = ""
    for part in parts:
        if not out:
            out = part
        elif part.startswith("-"):
            out += " - " + part[1:]
        else:
            out += " + " + part
    return out
