"""Exact dimensions of graded pieces of polynomial ideals.

Everything here is a statement about spans of monomial multiples of
given forms inside the space of forms of one degree, so the central
object is an exact rank.  A zero common zero locus and a zero quotient
at the Macaulay degree are equivalent for n+1 forms in n+1 variables,
which turns general position into a finite, exact test.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb, prod
from typing import Dict, Optional, Sequence, Tuple

from .errors import GeneralPositionError, PreconditionError
from .linalg import IncrementalEchelon, solve
from .polynomials import (HomogeneousPoly, Monomial, monomial_basis,
                          monomial_count, monomial_mul)
from .rationals import GR_ONE, GR_ZERO, GaussianRational


@dataclass(frozen=True)
class GradedPieceBasis:
    """A spanning set of vectors inside the degree-`degree` piece.

    Vectors are dense coefficient rows over monomial_basis(nvars, degree)
    in its canonical (descending lex) order.
    """

    nvars: int
    degree: int
    vectors: Tuple[Tuple[GaussianRational, ...], ...]

    def rank(self) -> int:
        from .linalg import rank as exact_rank
        return exact_rank(self.vectors)


def _check_family(gammas: Sequence[HomogeneousPoly]) -> int:
    if not gammas:
        raise PreconditionError("empty family of forms")
    nvars = gammas[0].nvars
    for g in gammas:
        if g.nvars != nvars:
            raise PreconditionError("forms live in different variable counts")
    return nvars


def _multiple_rows(gammas: Sequence[HomogeneousPoly], alpha: int,
                   index_of: Dict[Monomial, int]):
    """Sparse coefficient rows of all monomial multiples g*m of degree alpha."""
    nvars = gammas[0].nvars
    for g in gammas:
        if g.is_zero or g.degree > alpha:
            continue
        for mult in monomial_basis(nvars, alpha - g.degree):
            yield {index_of[monomial_mul(mono, mult)]: coeff
                   for mono, coeff in g.terms.items()}


def ideal_graded_dim(gammas: Sequence[HomogeneousPoly], alpha: int) -> int:
    """dim of the degree-alpha piece of the ideal generated by gammas."""
    nvars = _check_family(gammas)
    if alpha < 0:
        raise PreconditionError("alpha must be nonnegative")
    index_of = {m: i for i, m in enumerate(monomial_basis(nvars, alpha))}
    echelon = IncrementalEchelon()
    for row in _multiple_rows(gammas, alpha, index_of):
        echelon.insert(row)
    return echelon.rank


def hilbert_quotient(gammas: Sequence[HomogeneousPoly], alpha: int) -> int:
    """dim V_alpha minus the ideal piece; the Hilbert function value."""
    nvars = _check_family(gammas)
    return monomial_count(nvars, alpha) - ideal_graded_dim(gammas, alpha)


def is_zero_dimensional(gammas: Sequence[HomogeneousPoly]) -> bool:
    """Whether n forms in n+1 variables cut out a 0-dimensional set.

    Tested through the stabilized Hilbert value: the quotient equals the
    degree product at both sum(deg) and sum(deg)+1 exactly when the cut
    is a finite set of points (with multiplicity).
    """
    nvars = _check_family(gammas)
    if len(gammas) != nvars - 1:
        raise PreconditionError(
            f"need exactly {nvars - 1} forms in {nvars} variables, got {len(gammas)}")
    if any(g.is_zero for g in gammas):
        return False
    total = sum(g.degree for g in gammas)
    expected = prod(g.degree for g in gammas)
    return (hilbert_quotient(gammas, total) == expected
            and hilbert_quotient(gammas, total + 1) == expected)


def macaulay_degree(forms: Sequence[HomogeneousPoly]) -> int:
    return sum(f.degree - 1 for f in forms) + 1


def general_position_witness(forms: Sequence[HomogeneousPoly],
                             n: int) -> Optional[Tuple[int, ...]]:
    """Indices of an (n+1)-subset with a common projective zero, or None.

    A subset has no common zero iff its Hilbert quotient vanishes at the
    Macaulay degree sum(deg_i - 1) + 1; a common zero keeps the quotient
    positive in every degree.
    """
    if len(forms) <= n:
        raise PreconditionError(f"need more than n={n} forms, got {len(forms)}")
    for f in forms:
        if f.nvars != n + 1:
            raise PreconditionError(
                f"form in {f.nvars} variables does not live on P^{n}")
        if f.is_zero:
            raise PreconditionError("zero form supplied")
    for subset in combinations(range(len(forms)), n + 1):
        chosen = [forms[i] for i in subset]
        if hilbert_quotient(chosen, macaulay_degree(chosen)) != 0:
            return subset
    return None


def is_general_position(forms: Sequence[HomogeneousPoly], n: int) -> bool:
    return general_position_witness(forms, n) is None


@dataclass(frozen=True)
class NullstellensatzCertificate:
    """Witness that x_k^exponent lies in the ideal of the given forms.

    cofactors[j] pairs with forms[j]; verify() re-expands the identity
    x_k^exponent = sum_j cofactor_j * form_j coefficient by coefficient.
    """

    variable_index: int
    exponent: int
    forms: Tuple[HomogeneousPoly, ...]
    cofactors: Tuple[HomogeneousPoly, ...]

    def verify(self) -> bool:
        nvars = self.forms[0].nvars
        total = HomogeneousPoly.zero(nvars, self.exponent)
        for cof, form in zip(self.cofactors, self.forms):
            if cof.is_zero:
                continue
            total = total + cof * form
        mono = tuple(self.exponent if j == self.variable_index else 0
                     for j in range(nvars))
        return total == HomogeneousPoly(nvars, self.exponent, {mono: GR_ONE})


def nullstellensatz_certificate(forms: Sequence[HomogeneousPoly],
                                k: int) -> NullstellensatzCertificate:
    """Smallest-exponent membership certificate for x_k.

    Expects n+1 forms of one common degree d in n+1 variables with empty
    common zero locus; searches exponents m = d .. Macaulay degree and
    solves the exact linear system x_k^m = sum_j b_j * Q_j with the b_j
    of degree m-d.
    """
    nvars = _check_family(forms)
    if len(forms) != nvars:
        raise PreconditionError(
            f"need exactly {nvars} forms in {nvars} variables, got {len(forms)}")
    degrees = {f.degree for f in forms}
    if len(degrees) != 1:
        raise PreconditionError("forms must share a common degree")
    d = degrees.pop()
    if not 0 <= k < nvars:
        raise PreconditionError(f"variable index {k} out of range")
    bound = macaulay_degree(forms)
    for m in range(d, bound + 1):
        solution = _membership_solve(forms, d, k, m)
        if solution is not None:
            cert = NullstellensatzCertificate(k, m, tuple(forms), solution)
            if not cert.verify():
                raise PreconditionError("certificate failed exact verification")
            return cert
    raise GeneralPositionError(
        f"x{k} has no power in the ideal up to the Macaulay degree {bound}; "
        "the forms are not in general position")


def _membership_solve(forms: Sequence[HomogeneousPoly], d: int, k: int,
                      m: int) -> Optional[Tuple[HomogeneousPoly, ...]]:
    nvars = forms[0].nvars
    target_rows = monomial_basis(nvars, m)
    index_of = {mono: i for i, mono in enumerate(target_rows)}
    multipliers = monomial_basis(nvars, m - d)
    columns: list[tuple[int, Monomial]] = [
        (j, mult) for j in range(len(forms)) for mult in multipliers]
    matrix = [[GR_ZERO] * len(columns) for _ in target_rows]
    for col, (j, mult) in enumerate(columns):
        for mono, coeff in forms[j].terms.items():
            matrix[index_of[monomial_mul(mono, mult)]][col] = coeff
    rhs = [GR_ZERO] * len(target_rows)
    rhs[index_of[tuple(m if i == k else 0 for i in range(nvars))]] = GR_ONE
    x = solve(matrix, rhs)
    if x is None:
        return None
    cofactors = []
    for j in range(len(forms)):
        terms = {}
        for col, (jj, mult) in enumerate(columns):
            if jj == j and x[col]:
                terms[mult] = x[col]
        cofactors.append(HomogeneousPoly(nvars, m - d, terms))
    return tuple(cofactors)
