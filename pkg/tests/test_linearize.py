import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from nilalg.linearize import binomial_term, delta, delta_repeated
from nilalg.magma import Polynomial, X, Y, parse, render, substitute_x

from conftest import coeffs, monomials, polynomials


@pytest.mark.parametrize("args, target, expected", [
    (["y"], "x^2(xy)", "2(xy)^2 + x^2y^2"),
    (["x^2", "y"], "x^2", "2x^2y"),
    (["y", "xy^2", "x"], "x^2", "0"),
    (["y"], "x^4", "y x^3 + x(y x^2) + 2x(x(xy))"),
    (["y"], "xx", "2xy"),
])
def test_examples(args, target, expected):
    assert delta([parse(a) for a in args], parse(target)) == parse(expected)


def test_rendered_example():
    assert render(delta([parse("y")], parse("x^2(xy)"))) == "2(xy)^2 + x^2y^2"


def test_repeated():
    assert delta_repeated(parse("y"), 2, parse("xx")) == parse("2y^2")
    assert delta_repeated(parse("y"), 5, parse("x^4")) == Polynomial()
    assert delta_repeated(parse("y"), 1, parse("xx")) == parse("2xy")
    with pytest.raises(ValueError):
        delta_repeated(parse("y"), 0, parse("xx"))


def test_literal_binomial_sum_overcounts():
    # identical arguments are ordered, so the y^2 part of (x+y)^2 is delta/2!
    p = parse("x^2")
    literal = p + delta_repeated(Y, 1, p) + delta_repeated(Y, 2, p)
    assert substitute_x(p, parse("x + y")) != literal
    assert binomial_term(Y, 2, p) == parse("y^2")


@settings(max_examples=150)
@given(polynomials(max_degree=6, gens="x", max_terms=5))
def test_binomial_property(p):
    lhs = substitute_x(p, parse("x + y"))
    rhs = p
    for j in range(1, 7):
        rhs = rhs + binomial_term(Y, j, p)
    assert lhs - rhs == Polynomial()


@given(polynomials(4, "x", 3), polynomials(3), polynomials(3), polynomials(3))
def test_symmetric_in_arguments(target, a, b, c):
    assert delta([a, b], target) == delta([b, a], target)
    assert delta([a, b, c], target) == delta([c, a, b], target)


@given(polynomials(5, "xy", 3), polynomials(3), polynomials(3), polynomials(3), coeffs)
def test_multilinear(target, a, b, c, k):
    assert delta([a + b, c], target) == delta([a, c], target) + delta([b, c], target)
    assert delta([a.scale(k), c], target) == delta([a, c], target).scale(k)


@given(monomials(6), st.lists(monomials(3), min_size=1, max_size=3))
def test_degree_bookkeeping(m, args):
    out = delta([Polynomial.monomial(a) for a in args], Polynomial.monomial(m))
    if m.xdeg < len(args):
        assert not out
    for t in out:
        assert t.xdeg == m.xdeg - len(args) + sum(a.xdeg for a in args)
        assert t.ydeg == m.ydeg + sum(a.ydeg for a in args)


@given(monomials(6))
def test_term_count_without_collisions(m):
    # fresh distinct arguments never collide: k!/(k-r)! placements survive
    args = [parse("y"), parse("(yy)y")]
    total = sum(delta(args, Polynomial.monomial(m)).values())
    k = m.xdeg
    expected = math.perm(k, 2) if k >= 2 else 0
    assert total == expected


def test_linearize_in_y():
    assert delta([X], parse("y^2"), "y") == parse("2xy")
    with pytest.raises(ValueError):
        delta([X], parse("x"), "z")
