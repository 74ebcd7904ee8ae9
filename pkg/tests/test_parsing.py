import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nevlab.errors import InhomogeneousFormError, ParseError
from nevlab.parsing import parse_expr, parse_form, parse_inputs
from nevlab.polynomials import HomogeneousPoly, monomial_basis
from nevlab.rationals import gauss


def test_form_basic():
    p = parse_form("x0^2 + x1*x2")
    assert p.nvars == 3 and p.degree == 2 and len(p.terms) == 2


def test_form_rational_and_gaussian_coefficients():
    p = parse_form("1/2*x0 - x1", 2)
    assert p.terms[(1, 0)] == gauss("1/2")
    q = parse_form("x0 - 2*x1 + x0", 2)
    assert q.terms[(1, 0)] == gauss(2)


def test_form_rejects_inhomogeneous():
    with pytest.raises(InhomogeneousFormError):
        parse_form("x0 + x1^2")


def test_form_rejects_expression_tokens():
    for text in ("z + x0", "exp(x0)"):
        with pytest.raises(ParseError):
            parse_form(text)


def test_form_accepts_gaussian_coefficients():
    p = parse_form("(1+2i)*x0 - i*x1", 2)
    assert p.terms[(1, 0)] == gauss(1, 2)
    assert p.terms[(0, 1)] == gauss(0, -1)


def test_syntax_error_carries_position():
    with pytest.raises(ParseError) as err:
        parse_form("x0 + @x1")
    assert err.value.position == 5
    with pytest.raises(ParseError) as err:
        parse_expr("1 + * z")
    assert err.value.position == 4


def test_expr_basics():
    e = parse_expr("1 + z + exp(z)")
    assert not e.is_polynomial
    assert len(e.terms) == 2
    assert parse_expr("(1+2i)*z").eval_complex(1j) == complex(gauss(1, 2) * gauss(0, 1))


def test_gaussian_literals():
    e = parse_expr("2+3i")
    assert e == parse_expr("2 + 3i")
    assert complex(e.eval_complex(0)) == 2 + 3j
    assert complex(parse_expr("i^2").eval_complex(0)) == -1


def test_unary_minus_and_powers():
    assert parse_form("-x0^2", 1) == HomogeneousPoly(1, 2, {(2,): gauss(-1)})
    assert parse_expr("-z^2 + z^2").is_zero
    with pytest.raises(ParseError):
        parse_expr("z^-2")


def test_parenthesized_arithmetic():
    p = parse_form("(x0 + x1)*(x0 - x1)", 2)
    q = parse_form("x0^2 - x1^2", 2)
    assert p == q


def test_parse_inputs_dispatch():
    assert parse_inputs("x0", "form") == parse_form("x0")
    assert parse_inputs("z", "expr") == parse_expr("z")


def _form_strategy(draw):
    nvars = draw(st.integers(min_value=1, max_value=3))
    degree = draw(st.integers(min_value=0, max_value=3))
    basis = monomial_basis(nvars, degree)
    terms = {}
    for mono in basis:
        re = draw(st.integers(min_value=-4, max_value=4))
        im = draw(st.integers(min_value=-2, max_value=2))
        if re or im:
            terms[mono] = gauss(re, im)
    return HomogeneousPoly(nvars, degree, terms)


@settings(max_examples=60)
@given(st.data())
def test_form_print_parse_roundtrip(data):
    form = _form_strategy(data.draw)
    if form.is_zero:
        return
    assert parse_form(str(form), form.nvars) == form


@settings(max_examples=60)
@given(st.lists(st.tuples(st.integers(-3, 3), st.integers(-2, 2),
                          st.integers(0, 3), st.integers(0, 2)),
                min_size=1, max_size=4))
def test_expr_print_parse_roundtrip(spec):
    from nevlab.expressions import ExpPoly
    from nevlab.univariate import u_trim

    terms = {}
    for re, im, qdeg, pdeg in spec:
        coeff = gauss(re, im)
        if not coeff:
            continue
        q = tuple([gauss(0)] * qdeg + [coeff])
        p = u_trim([gauss(0)] * pdeg + [gauss(1)] if pdeg else [])
        terms[p] = q
    expr = ExpPoly(terms)
    if expr.is_zero:
        return
    assert parse_expr(str(expr)) == expr
