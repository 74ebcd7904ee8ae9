from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from nevlab.errors import PreconditionError
from nevlab.filtration import (choose_alpha, delta_lower_bound,
                               filtration_basis, filtration_levels, level_dim,
                               multi_indices, quotient_dims, ratio_bounds,
                               truncation_cap, truncation_report,
                               weighted_quotient_sum)
from nevlab.graded import hilbert_quotient
from nevlab.linalg import rank
from nevlab.parsing import parse_form
from nevlab.polynomials import HomogeneousPoly, monomial_basis
from nevlab.rationals import rational


def axis_forms(n, d):
    """gamma_j = x_j^d for j = 1..n inside P^n."""
    return [HomogeneousPoly.monomial(tuple(d if i == j else 0
                                           for i in range(n + 1)))
            for j in range(1, n + 1)]


def test_multi_index_examples():
    assert multi_indices(2, 1) == [(0, 0), (0, 1), (1, 0)]
    assert multi_indices(1, 3) == [(0,), (1,), (2,), (3,)]
    six = multi_indices(2, 2)
    assert len(six) == 6 and six[-1] == (2, 0)


@given(st.integers(min_value=1, max_value=4), st.integers(min_value=0, max_value=6))
def test_multi_index_count_and_order(n, bound):
    seq = multi_indices(n, bound)
    assert len(seq) == comb(bound + n, n)
    assert all(a < b for a, b in zip(seq, seq[1:]))
    assert all(sum(i) <= bound for i in seq)


def test_level_dims_line_example():
    g = [parse_form("x1", 2)]
    dims = [level_dim(g, 3, (k,)) for k in range(4)]
    assert dims == [4, 3, 2, 1]
    assert level_dim(g, 3, (0,)) == comb(3 + 1, 1)
    with pytest.raises(PreconditionError):
        level_dim(g, 3, (4,))


def test_level_dim_ideal_piece_example():
    g = [parse_form("x1^2", 3), parse_form("x2^2", 3)]
    assert level_dim(g, 4, (0, 1)) == 11
    assert level_dim(g, 4, (0, 0)) == 15


def test_quotient_dims_examples():
    g = [parse_form("x1", 2)]
    assert quotient_dims(g, 3) == {(0,): 1, (1,): 1, (2,): 1, (3,): 1}
    d2 = quotient_dims(axis_forms(2, 2), 8)
    for index, value in d2.items():
        if sum(index) <= 2:
            assert value == 4
    assert sum(d2.values()) == comb(8 + 2, 2)


def test_filtration_nesting_and_level_quotients():
    for n, d, alpha in ((1, 2, 6), (2, 1, 5), (2, 2, 8), (2, 3, 9)):
        gammas = axis_forms(n, d)
        filt = filtration_levels(gammas, alpha)
        dims = [lv.dim for lv in filt.levels]
        assert all(a >= b for a, b in zip(dims, dims[1:]))
        for lv in filt.levels:
            assert lv.delta == hilbert_quotient(gammas, alpha - d * sum(lv.index))


def test_level_quotients_match_for_mixed_forms():
    gammas = [parse_form("x1^2 + x2^2", 3), parse_form("x2^2 - x1*x2", 3)]
    filt = filtration_levels(gammas, 6)
    for lv in filt.levels:
        assert lv.delta == hilbert_quotient(gammas, 6 - 2 * sum(lv.index))


def test_basis_line_example():
    basis = filtration_basis([parse_form("x1", 2)], 2)
    assert [(el.index, str(el.psi)) for el in basis] == [
        ((2,), "x1^2"), ((1,), "x0*x1"), ((0,), "x0^2")]


def test_basis_count_tags_and_rank():
    gammas = [parse_form("x1^2", 3), parse_form("x2^2", 3)]
    basis = filtration_basis(gammas, 4)
    assert len(basis) == 15
    assert sum(1 for el in basis if el.index == (0, 0)) == 4
    for el in basis:
        assert 2 * sum(el.index) + sum(el.eta) == 4
        assert el.psi.degree == 4
    order = monomial_basis(3, 4)
    assert rank([el.psi.coefficient_vector(order) for el in basis]) == 15


def test_weighted_sum_line_example():
    g = [parse_form("x1", 2)]
    assert weighted_quotient_sum(g, 3) == 6
    assert delta_lower_bound(1, 1, 3) == rational(3)
    m = comb(3 + 1, 1)
    assert rational(m * 3) / rational(6) == rational(2)


def test_weighted_sum_symmetry_nonsymmetric_instance():
    gammas = [parse_form("x1^2 + x2^2", 3), parse_form("x2^2 - x1*x2", 3)]
    value = weighted_quotient_sum(gammas, 8)  # internal symmetry assertion
    filt = filtration_levels(gammas, 8)
    assert value == filt.weighted_sums()[0] == filt.weighted_sums()[1]


def test_weighted_sum_lower_bound_on_suite():
    for n in (1, 2):
        for d in (1, 2, 3):
            for alpha in range(d, 13, d):
                gammas = axis_forms(n, d)
                value = weighted_quotient_sum(gammas, alpha)
                if alpha >= n * d:
                    assert rational(value) >= delta_lower_bound(n, d, alpha)


def test_choose_alpha_values():
    assert choose_alpha(1, 1, "1/2") == 19
    assert choose_alpha(2, 2, "1/2") == 444
    assert choose_alpha(1, 2, "1/2") == 54
    with pytest.raises(PreconditionError):
        choose_alpha(1, 1, "3/2")
    with pytest.raises(PreconditionError):
        choose_alpha(1, 1, 0)


def test_truncation_report_values():
    r = truncation_report(1, 1, "1/2")
    assert (r.alpha, r.m_exact, r.m_closed_form) == (19, 20, 32)
    assert not r.closed_form_exceeded
    r = truncation_report(1, 2, "1/2")
    assert (r.alpha, r.m_exact, r.m_closed_form) == (54, 55, 96)
    assert not r.closed_form_exceeded
    r = truncation_report(2, 2, "1/2")
    assert (r.alpha, r.m_exact, r.m_closed_form) == (444, 99235, 82944)
    assert r.closed_form_exceeded


def test_truncation_report_with_defining_forms():
    r = truncation_report(1, 1, "1/2", gammas=[parse_form("x1", 2)])
    assert r.delta is not None
    assert rational(r.delta) >= r.delta_lower
    assert r.ratio == rational(r.m_exact * r.alpha) / rational(r.delta)


def test_ratio_bounds_examples():
    rep = ratio_bounds(1, 1, 3, delta=6, m=4, q=5, epsilon="1/2")
    assert rep.ratio == rational(2)
    assert rep.ratio_bound == rational(4)
    assert rep.ratio_ok
    rep = ratio_bounds(1, 1, 19, delta=weighted_quotient_sum([parse_form("x1", 2)], 19),
                       m=comb(20, 1), q=5, epsilon="1/2")
    assert rep.is_chosen_alpha
    assert rep.growth == rational(20, 18)
    assert rep.growth_bound == rational(9, 8)
    assert rep.growth_ok and rep.margin_ok
    with pytest.raises(PreconditionError):
        ratio_bounds(1, 1, 1, delta=1, m=2, q=3, epsilon="1/2")  # alpha == nd


def test_growth_bound_grid():
    from nevlab.filtration import _validated_epsilon
    for n in (1, 2):
        for d in (1, 2):
            for eps in ("1/2", "1/4"):
                alpha = choose_alpha(n, d, eps)
                growth = (rational(alpha + n) / rational(alpha - n * d)) ** n
                e = _validated_epsilon(eps)
                assert growth <= 1 + e / rational(2 * d * (n + 1))


def test_scan_rejects_bad_families():
    with pytest.raises(PreconditionError):
        quotient_dims([parse_form("x1", 3), parse_form("x2^2", 3)], 4)  # degree mix
    with pytest.raises(PreconditionError):
        quotient_dims([parse_form("x1", 3), parse_form("x1^2+x1*x2", 3)], 4)
    with pytest.raises(PreconditionError):
        filtration_basis([parse_form("x1^2", 3), parse_form("x2^2", 3)], 3)  # alpha < nd
