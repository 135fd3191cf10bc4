from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from nilalg.ratlinalg import (
    Echelon,
    RatMatrix,
    denominator_primes,
    format_rational,
    in_row_space,
    primes_of,
    rat,
    rat_arith,
    rref,
)

from conftest import coeffs


def test_rat_parses_text_and_reduces():
    assert rat("6/8") == Fraction(3, 4)
    assert rat(-3) == Fraction(-3)
    assert format_rational(Fraction(-6, 4)) == "-3/2"
    assert format_rational(Fraction(4, 2)) == "2"


def test_rat_arith_ops():
    a, b = Fraction(1, 2), Fraction(1, 3)
    assert rat_arith(a, b, "add") == Fraction(5, 6)
    assert rat_arith(a, b, "sub") == Fraction(1, 6)
    assert rat_arith(a, b, "mul") == Fraction(1, 6)
    assert rat_arith(a, b, "div") == Fraction(3, 2)
    with pytest.raises(ZeroDivisionError):
        rat_arith(a, Fraction(0), "div")


def test_rref_small_example():
    m = RatMatrix.from_dense([[2, 4, 6], [1, 2, 4], [3, 6, 10]])
    red, pivots, rank = rref(m)
    assert rank == 2
    assert pivots == [0, 2]
    assert red.to_dense() == [[1, 2, 0], [0, 0, 1], [0, 0, 0]]


def test_rref_singular_two_by_two_system():
    # the (L^8U, L^10) relations of the degree-10 argument
    red, pivots, rank = rref(RatMatrix.from_dense([[27, 170], [141, 818], [17880, 28685]]))
    assert rank == 2
    assert red.to_dense()[:2] == [[1, 0], [0, 1]]


def test_zero_matrix():
    red, pivots, rank = rref(RatMatrix(3, 4))
    assert rank == 0 and pivots == []
    assert red == RatMatrix(3, 4)


dense = st.integers(1, 5).flatmap(
    lambda n: st.lists(st.lists(coeffs, min_size=n, max_size=n), min_size=1, max_size=5)
)


@given(dense)
def test_rref_idempotent(rows):
    red, pivots, rank = rref(RatMatrix.from_dense(rows))
    again, pivots2, rank2 = rref(red)
    assert again == red and pivots == pivots2 and rank == rank2


@given(dense)
def test_rref_shape_and_pivots(rows):
    m = RatMatrix.from_dense(rows)
    red, pivots, rank = rref(m)
    assert (red.nrows, red.ncols) == (m.nrows, m.ncols)
    for i, p in enumerate(pivots):
        assert red[i, p] == 1
        assert all(red[j, p] == 0 for j in range(red.nrows) if j != i)
    assert all(not red.rows[i] for i in range(rank, red.nrows))


@given(dense, st.data())
def test_combinations_lie_in_row_space(rows, data):
    m = RatMatrix.from_dense(rows)
    c = data.draw(st.lists(coeffs, min_size=len(rows), max_size=len(rows)))
    v = [sum((c[i] * rows[i][j] for i in range(len(rows))), Fraction(0)) for j in range(m.ncols)]
    found = in_row_space(v, m)
    assert found is not None
    back = [sum((found[i] * rows[i][j] for i in range(len(rows))), Fraction(0)) for j in range(m.ncols)]
    assert back == v


def test_vector_outside_row_space():
    m = RatMatrix.from_dense([[1, 1, 0], [0, 1, 1]])
    assert in_row_space([1, 0, 0], m) is None
    assert in_row_space([1, 2, 1], m) == [1, 1]
    with pytest.raises(ValueError):
        in_row_space([1, 2], m)


def test_echelon_incremental():
    e = Echelon()
    assert e.add({0: Fraction(2), 1: Fraction(4)})
    assert not e.add({0: Fraction(1), 1: Fraction(2)})
    assert e.add({1: Fraction(3)})
    assert e.rows == {0: {0: 1}, 1: {1: 1}}
    assert e.contains({0: Fraction(7), 1: Fraction(-1, 3)})
    assert e.residual({2: Fraction(5)}) == {2: 5}


def test_exactness_no_float_drift():
    # a Hilbert matrix is invertible; floats lose the identity
    n = 6
    h = [[Fraction(1, i + j + 1) for j in range(n)] for i in range(n)]
    red, _, rank = rref(RatMatrix.from_dense(h))
    assert rank == n
    assert red.to_dense() == [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def test_primes():
    assert primes_of(360) == [2, 3, 5]
    assert primes_of(1) == []
    assert primes_of(10567) == [10567]
    assert denominator_primes([Fraction(1, 6), Fraction(3), Fraction(-7, 10)]) == {2, 3, 5}
