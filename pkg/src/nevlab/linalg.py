"""Exact linear algebra over the Gaussian rationals.

Two engines:

 * rank(): dense fraction-free (Bareiss) elimination after clearing each
   row to Gaussian integers.  All intermediate divisions are exact, and
   entries stay minors of the scaled input, which controls growth.
 * IncrementalEchelon: sparse row reduction over the field, used where
   rows arrive one by one and membership of each new row in the current
   span is the question (graded ideal pieces, filtration levels, greedy
   basis extension).  On all-monomial input it degenerates to set
   membership, which the filtration suites rely on for speed.

solve() is a small dense field-elimination solver returning one exact
solution (free variables pinned to zero) or None if inconsistent.
"""
from __future__ import annotations

from math import lcm
from typing import Dict, List, Optional, Sequence

from .rationals import GR_ONE, GR_ZERO, GaussianRational, rational

_GInt = tuple  # (a, b) meaning a + bi with python ints


def _to_gaussian_integers(row: Sequence[GaussianRational]) -> list[_GInt]:
    denom = 1
    for c in row:
        denom = lcm(denom, int(c.re.denominator), int(c.im.denominator))
    return [(int(c.re.numerator) * (denom // int(c.re.denominator)),
             int(c.im.numerator) * (denom // int(c.im.denominator))) for c in row]


def _gmul(x: _GInt, y: _GInt) -> _GInt:
    a, b = x
    c, d = y
    if b == 0 and d == 0:
        return (a * c, 0)
    return (a * c - b * d, a * d + b * c)


def _gdiv_exact(x: _GInt, y: _GInt) -> _GInt:
    a, b = x
    c, d = y
    n = c * c + d * d
    re = a * c + b * d
    im = b * c - a * d
    q_re, r_re = divmod(re, n)
    q_im, r_im = divmod(im, n)
    if r_re or r_im:
        raise ArithmeticError("inexact division in fraction-free elimination")
    return (q_re, q_im)


def rank(rows: Sequence[Sequence[GaussianRational]]) -> int:
    """Exact rank by fraction-free elimination."""
    m = [_to_gaussian_integers(r) for r in rows if any(c for c in r)]
    if not m:
        return 0
    nrows, ncols = len(m), len(m[0])
    prev: _GInt = (1, 0)
    r = 0
    for col in range(ncols):
        pivot = None
        for i in range(r, nrows):
            if m[i][col] != (0, 0):
                pivot = i
                break
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        piv = m[r][col]
        row_r = m[r]
        for i in range(r + 1, nrows):
            row_i = m[i]
            head = row_i[col]
            for j in range(col + 1, ncols):
                t = _gmul(row_i[j], piv)
                if head != (0, 0):
                    s = _gmul(head, row_r[j])
                    t = (t[0] - s[0], t[1] - s[1])
                row_i[j] = _gdiv_exact(t, prev) if t != (0, 0) else (0, 0)
            row_i[col] = (0, 0)
        prev = piv
        r += 1
        if r == nrows:
            break
    return r


def solve(matrix: Sequence[Sequence[GaussianRational]],
          rhs: Sequence[GaussianRational]) -> Optional[List[GaussianRational]]:
    """One exact solution of matrix*x = rhs, or None when inconsistent."""
    nrows = len(matrix)
    if nrows == 0:
        return [] if not any(rhs) else None
    ncols = len(matrix[0])
    m = [list(row) + [rhs[i]] for i, row in enumerate(matrix)]
    pivot_cols: list[int] = []
    r = 0
    for col in range(ncols):
        pivot = None
        for i in range(r, nrows):
            if m[i][col]:
                pivot = i
                break
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = GR_ONE / m[r][col]
        m[r] = [c * inv for c in m[r]]
        for i in range(nrows):
            if i != r and m[i][col]:
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivot_cols.append(col)
        r += 1
        if r == nrows:
            break
    for i in range(r, nrows):
        if m[i][ncols]:
            return None
    x = [GR_ZERO] * ncols
    for row_index, col in enumerate(pivot_cols):
        x[col] = m[row_index][ncols]
    return x


class IncrementalEchelon:
    """Sparse reduced rows keyed by pivot column; supports insert-or-reject.

    Rows are dicts column->coefficient.  insert() reduces the candidate
    against the current pivots; a candidate that reduces to zero is
    rejected (it was already in the span), otherwise it is normalized
    and becomes a new pivot.
    """

    def __init__(self):
        self.pivots: Dict[int, Dict[int, GaussianRational]] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def insert(self, row: Dict[int, GaussianRational]) -> bool:
        row = {c: v for c, v in row.items() if v}
        while row:
            col = min(row)
            pivot_row = self.pivots.get(col)
            if pivot_row is None:
                inv = GR_ONE / row[col]
                self.pivots[col] = {c: v * inv for c, v in row.items()}
                return True
            factor = row.pop(col)
            for c, v in pivot_row.items():
                if c == col:
                    continue
                nv = row.get(c, GR_ZERO) - factor * v
                if nv:
                    row[c] = nv
                else:
                    row.pop(c, None)
        return False

    def contains(self, row: Dict[int, GaussianRational]) -> bool:
        """Span-membership test without mutating the echelon."""
        row = dict(row)
        while row:
            col = min(row)
            pivot_row = self.pivots.get(col)
            if pivot_row is None:
                return False
            factor = row.pop(col)
            for c, v in pivot_row.items():
                if c == col:
                    continue
                nv = row.get(c, GR_ZERO) - factor * v
                if nv:
                    row[c] = nv
                else:
                    row.pop(c, None)
        return True


def independent_subsets(vectors: Sequence[Sequence[GaussianRational]],
                        max_size: int) -> list[tuple[int, ...]]:
    """All index subsets (including the empty one) whose vectors are
    linearly independent, capped at max_size elements."""
    n = len(vectors)
    out: list[tuple[int, ...]] = [()]
    # grow subsets breadth-first; independence is hereditary
    frontier: list[tuple[int, ...]] = [()]
    for _ in range(max_size):
        nxt: list[tuple[int, ...]] = []
        for subset in frontier:
            start = subset[-1] + 1 if subset else 0
            for j in range(start, n):
                candidate = subset + (j,)
                if rank([vectors[k] for k in candidate]) == len(candidate):
                    nxt.append(candidate)
        out.extend(nxt)
        frontier = nxt
        if not frontier:
            break
    return out
