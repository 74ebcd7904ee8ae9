"""Univariate polynomial helpers over GaussianRational.

Polynomials are coefficient tuples in ascending power order with no
trailing zeros; () is the zero polynomial.  These are the workhorse for
the expression layer, the square-free zero counter and exact vanishing
orders, so everything here must stay exact.
"""
from __future__ import annotations

from typing import Sequence, Tuple

import numpy as np

from .errors import PreconditionError
from .rationals import GR_ONE, GR_ZERO, GaussianRational, gauss

U = Tuple[GaussianRational, ...]

U_ZERO: U = ()
U_ONE: U = (GR_ONE,)
U_Z: U = (GR_ZERO, GR_ONE)


def u_trim(coeffs: Sequence[GaussianRational]) -> U:
    n = len(coeffs)
    while n and not coeffs[n - 1]:
        n -= 1
    return tuple(coeffs[:n])


def u_const(value) -> U:
    c = gauss(value)
    return (c,) if c else U_ZERO


def u_deg(u: U) -> int:
    """Degree; -1 for the zero polynomial."""
    return len(u) - 1


def u_add(a: U, b: U) -> U:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = out[i] + c
    return u_trim(out)


def u_neg(a: U) -> U:
    return tuple(-c for c in a)


def u_sub(a: U, b: U) -> U:
    return u_add(a, u_neg(b))


def u_scale(a: U, c: GaussianRational) -> U:
    if not c:
        return U_ZERO
    return tuple(x * c for x in a)


def u_mul(a: U, b: U) -> U:
    if not a or not b:
        return U_ZERO
    out = [GR_ZERO] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if not ca:
            continue
        for j, cb in enumerate(b):
            if cb:
                out[i + j] = out[i + j] + ca * cb
    return u_trim(out)


def u_pow(a: U, k: int) -> U:
    if k < 0:
        raise PreconditionError("negative power of a polynomial")
    result = U_ONE
    base = a
    while k:
        if k & 1:
            result = u_mul(result, base)
        k >>= 1
        if k:
            base = u_mul(base, base)
    return result


def u_diff(a: U) -> U:
    return u_trim([a[i] * i for i in range(1, len(a))])


def u_eval(a: U, x: GaussianRational) -> GaussianRational:
    acc = GR_ZERO
    for c in reversed(a):
        acc = acc * x + c
    return acc


def u_eval_complex(a: U, z) -> np.ndarray:
    """Horner evaluation at complex points (scalar or ndarray)."""
    z = np.asarray(z, dtype=complex)
    acc = np.zeros_like(z)
    for c in reversed(a):
        acc = acc * z + complex(c)
    return acc


def u_divmod(a: U, b: U) -> tuple[U, U]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a)
    quo = [GR_ZERO] * max(0, len(a) - len(b) + 1)
    db = len(b) - 1
    lead = b[-1]
    for i in range(len(a) - 1, db - 1, -1):
        c = rem[i]
        if not c:
            continue
        f = c / lead
        quo[i - db] = f
        for j, cb in enumerate(b):
            rem[i - db + j] = rem[i - db + j] - f * cb
    return u_trim(quo), u_trim(rem)


def u_monic(a: U) -> U:
    if not a:
        return a
    lead = a[-1]
    if lead == GR_ONE:
        return a
    return tuple(c / lead for c in a)


def u_gcd(a: U, b: U) -> U:
    """Monic gcd by the Euclidean algorithm."""
    while b:
        _, r = u_divmod(a, b)
        a, b = b, r
    return u_monic(a)


def u_squarefree(a: U) -> list[tuple[U, int]]:
    """Yun's square-free decomposition: [(factor_i, multiplicity_i), ...].

    Factors are monic, pairwise coprime, and the product of factor^mult
    equals the input up to the leading coefficient.  Degree-0 factors are
    dropped.
    """
    if not a:
        raise PreconditionError("square-free decomposition of the zero polynomial")
    a = u_monic(a)
    if u_deg(a) == 0:
        return []
    d = u_diff(a)
    g = u_gcd(a, d)
    out: list[tuple[U, int]] = []
    if u_deg(g) == 0:
        return [(a, 1)]
    x, _ = u_divmod(a, g)
    y, _ = u_divmod(d, g)
    i = 1
    while True:
        z = u_sub(y, u_diff(x))
        if not z:
            if u_deg(x) > 0:
                out.append((u_monic(x), i))
            break
        gi = u_gcd(x, z)
        if u_deg(gi) > 0:
            out.append((u_monic(gi), i))
        x, _ = u_divmod(x, gi)
        y, _ = u_divmod(z, gi)
        i += 1
    return out


def u_order_at(a: U, z0: GaussianRational) -> int:
    """Exact vanishing order at an exact point (0 when a(z0) != 0)."""
    if not a:
        raise PreconditionError("vanishing order of the zero polynomial")
    order = 0
    cur = list(a)
    while True:
        # synthetic division by (z - z0): quotient in quo, remainder = value at z0
        quo = [GR_ZERO] * (len(cur) - 1)
        acc = GR_ZERO
        for i in range(len(cur) - 1, 0, -1):
            acc = acc * z0 + cur[i]
            quo[i - 1] = acc
        value = acc * z0 + cur[0]
        if value:
            return order
        order += 1
        cur = quo
        if not cur:
            return order


def u_str(a: U, var: str = "z") -> str:
    """Deterministic text form; always re-parses to the same polynomial."""
    from .polynomials import _coeff_times, _join_signed

    if not a:
        return "0"
    parts = []
    for k in range(len(a) - 1, -1, -1):
        c = a[k]
        if not c:
            continue
        if k == 0:
            tail = ""
        elif k == 1:
            tail = var
        else:
            tail = f"{var}^{k}"
        parts.append(_coeff_times(c, tail))
    return _join_signed(parts)
