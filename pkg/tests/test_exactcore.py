from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from otarrange.errors import DimensionMismatchError, PoleAtOriginError
from otarrange.exactcore import (
    Monomial,
    MultiPoly,
    RatFun,
    TermOrder,
    UniPoly,
    exact_rank,
    format_rational,
    in_span,
    nullspace,
    parse_rational,
    rref,
    series_expand,
    substitute_t_over_1mt,
)

t = UniPoly.t()


def test_parse_and_format_rationals():
    assert parse_rational("6/4") == Fraction(3, 2)
    assert parse_rational(-3) == -3
    assert format_rational(Fraction(-6, 4)) == "-3/2"
    assert format_rational(Fraction(5)) == "5"
    with pytest.raises(TypeError):
        parse_rational(0.5)
    with pytest.raises(TypeError):
        parse_rational(True)


def test_exact_rank_examples():
    assert exact_rank([]) == 0
    assert exact_rank([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == 3
    assert exact_rank([[1, 1, 0], [0, 1, 1], [1, 2, 1]]) == 2
    assert exact_rank([[Fraction(1, 2), Fraction(1, 3)], [3, 2]]) == 1


def test_exact_rank_ragged():
    with pytest.raises(DimensionMismatchError):
        exact_rank([[1, 2], [3]])


def test_rref_and_nullspace():
    rows, piv = rref([[2, 4, 0], [1, 2, 1]])
    assert piv == [0, 2]
    assert rows[0] == [1, 2, 0]
    ns = nullspace([[1, 1, 0], [0, 1, 1]], 3)
    assert len(ns) == 1
    v = ns[0]
    assert v[0] + v[1] == 0 and v[1] + v[2] == 0
    assert in_span([1, 2, 1], [[1, 1, 0], [0, 1, 1]])
    assert not in_span([1, 0, 0], [[1, 1, 0], [0, 1, 1]])


def test_series_expand_examples():
    assert series_expand(RatFun(1, 1 - t), 3) == [1, 1, 1, 1]
    assert series_expand(RatFun(1 + t, (1 - t) ** 2), 3) == [1, 3, 5, 7]
    assert series_expand(RatFun((1 + t) ** 4), 2) == [1, 4, 6]


def test_series_pole():
    with pytest.raises(PoleAtOriginError):
        series_expand(RatFun(1, t), 3)


def test_zero_denominator():
    with pytest.raises(ZeroDivisionError):
        RatFun(1, 0)


def test_substitution_examples():
    assert substitute_t_over_1mt(UniPoly((1,))) == RatFun(1)
    assert substitute_t_over_1mt(UniPoly((1, 3, 2))) == RatFun(1 + t, (1 - t) ** 2)
    for ell in range(1, 6):
        assert substitute_t_over_1mt((1 + t) ** ell) == RatFun(1, (1 - t) ** ell)


def test_unipoly_arithmetic():
    p = (1 + t) * (1 + 2 * t) * (1 + 3 * t)
    assert p == UniPoly((1, 6, 11, 6))
    assert str(p) == "1 + 6t + 11t^2 + 6t^3"
    q, r = divmod(p, 1 + t)
    assert not r and q == UniPoly((1, 5, 6))
    assert p(Fraction(-1)) == 0
    assert p.negate_variable() == UniPoly((1, -6, 11, -6))


def test_monomials_and_orders():
    m = Monomial.of(0, 2, 2)
    assert m.degree == 3 and m.exponent(2) == 2 and str(m) == "y1*y3^2"
    assert Monomial.of(0).divides(m) and not Monomial.of(1).divides(m)
    lex = TermOrder.lex_descending(3)
    assert lex.ground_order() == (0, 1, 2)
    # y3 is the largest variable under lex_descending
    assert lex.key(Monomial.of(2)) > lex.key(Monomial.of(1, 1))
    grevlex = TermOrder("grevlex", (2, 1, 0))
    assert grevlex.key(Monomial.of(1, 1)) > grevlex.key(Monomial.of(2))
    assert grevlex.key(Monomial.of(2, 1)) > grevlex.key(Monomial.of(0, 2))
    with pytest.raises(ValueError):
        TermOrder("lex", (0, 0, 1))


def test_multipoly_basics():
    y = [MultiPoly.variable(i) for i in range(3)]
    p = y[1] * y[2] + y[0] * y[2] - y[0] * y[1]
    assert p.homogeneous_degree() == 2
    assert (p + y[0]).homogeneous_degree() is None
    assert p.set_zero([0]) == y[1] * y[2]
    assert p.rename({0: 1, 1: 0, 2: 2}) == y[0] * y[2] + y[1] * y[2] - y[0] * y[1]
    lt, c = p.leading_term(TermOrder.lex_descending(3))
    assert lt == Monomial.of(1, 2) and c == 1
    assert (p - p) == MultiPoly()


small = st.integers(-5, 5)
polys = st.lists(small, min_size=1, max_size=5).map(UniPoly)
unit_polys = st.lists(small, min_size=0, max_size=4).map(lambda cs: UniPoly([1] + cs))


@settings(max_examples=60, deadline=None)
@given(polys, unit_polys, polys, unit_polys, st.integers(0, 12))
def test_series_of_product_is_cauchy_product(n1, d1, n2, d2, D):
    a = series_expand(RatFun(n1, d1), D)
    b = series_expand(RatFun(n2, d2), D)
    ab = series_expand(RatFun(n1, d1) * RatFun(n2, d2), D)
    assert ab == [sum(a[i] * b[k - i] for i in range(k + 1)) for k in range(D + 1)]


matrices = st.integers(1, 4).flatmap(
    lambda c: st.lists(st.lists(small, min_size=c, max_size=c), min_size=1, max_size=5)
)


@settings(max_examples=60, deadline=None)
@given(matrices, st.randoms(use_true_random=False), st.lists(st.integers(1, 7), min_size=5, max_size=5))
def test_rank_invariant_under_row_operations(rows, rnd, scales):
    r = exact_rank(rows)
    shuffled = list(rows)
    rnd.shuffle(shuffled)
    assert exact_rank(shuffled) == r
    scaled = [[Fraction(x, s) * (-1) ** s for x in row] for row, s in zip(rows, scales)]
    assert exact_rank(scaled) == r


@settings(max_examples=40, deadline=None)
@given(st.lists(small, min_size=1, max_size=7), st.integers(0, 12))
def test_substitution_matches_truncated_evaluation(coeffs, D):
    p = UniPoly(coeffs)
    got = series_expand(substitute_t_over_1mt(p), D)
    # evaluate p at the truncated series s = t + t^2 + ... + t^D
    s = UniPoly([0] + [1] * D)
    acc = UniPoly()
    power = UniPoly((1,))
    for c in p.coeffs:
        acc = acc + c * power
        power = UniPoly((power * s).coeffs[: D + 1])
    want = [acc[k] for k in range(D + 1)]
    assert got == want
