"""Exact linear algebra, cross-checked against sympy where it has an equivalent."""
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_form

from lie_centralizer.lattice import (
    determinant,
    finite_abelian_invariants,
    hermite_form,
    identity,
    integer_relations,
    integer_solve,
    inverse,
    mat_mul,
    primitive_integer_vector,
    quotient_invariants,
    rational_solve,
    smith_diagonal,
)

small = st.integers(min_value=-6, max_value=6)


def int_matrix(rows, cols):
    return st.lists(st.lists(small, min_size=cols, max_size=cols), min_size=rows, max_size=rows)


def sympy_smith(rows):
    m = Matrix(rows)
    d = smith_normal_form(m, domain=ZZ)
    return tuple(sorted(abs(d[i, i]) for i in range(min(d.shape)) if d[i, i] != 0))


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 4).flatmap(lambda m: st.integers(1, 4).flatmap(lambda n: int_matrix(m, n))))
def test_smith_matches_sympy(rows):
    assert tuple(sorted(smith_diagonal(rows))) == sympy_smith(rows)


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 4).flatmap(lambda n: int_matrix(n, n)))
def test_smith_diagonal_divisibility(rows):
    d = smith_diagonal(rows)
    assert all(b % a == 0 for a, b in zip(d, d[1:]))


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 4).flatmap(lambda m: st.integers(1, 4).flatmap(lambda n: int_matrix(m, n))))
def test_hermite_form(rows):
    h, u, rank, pivots = hermite_form(rows)
    assert mat_mul(u, rows) == h
    assert abs(determinant(u)) == 1
    assert rank == Matrix(rows).rank()
    for k, col in enumerate(pivots):
        assert h[k][col] > 0
        assert all(0 <= h[i][col] < h[k][col] for i in range(k))
        assert all(h[i][col] == 0 for i in range(k + 1, len(h)))
    assert all(not any(row) for row in h[rank:])


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 4).flatmap(lambda m: st.integers(1, 4).flatmap(lambda n: int_matrix(m, n))),
       st.data())
def test_integer_solve_roundtrip(rows, data):
    c = data.draw(st.lists(small, min_size=len(rows), max_size=len(rows)))
    v = [sum(c[i] * rows[i][j] for i in range(len(rows))) for j in range(len(rows[0]))]
    x = integer_solve(rows, v)
    assert x is not None
    assert [sum(x[i] * rows[i][j] for i in range(len(rows))) for j in range(len(v))] == v


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 4).flatmap(lambda m: st.integers(1, 4).flatmap(lambda n: int_matrix(m, n))))
def test_integer_relations(rows):
    rel = integer_relations(rows)
    assert len(rel) == len(rows) - Matrix(rows).rank()
    for r in rel:
        assert all(sum(r[i] * rows[i][j] for i in range(len(rows))) == 0 for j in range(len(rows[0])))


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 4).flatmap(lambda n: int_matrix(n, n)))
def test_inverse_and_determinant_match_sympy(rows):
    m = Matrix(rows)
    assert determinant(rows) == Fraction(int(m.det()))
    if m.det() != 0:
        inv = inverse(rows)
        assert mat_mul(rows, inv) == identity(len(rows))
        assert all(Fraction(inv[i][j]) == Fraction(str(m.inv()[i, j])) for i in range(len(rows)) for j in range(len(rows)))
    else:
        with pytest.raises(ValueError):
            inverse(rows)


def test_rational_solve():
    rows = [(1, 0, 1), (0, 2, 0)]
    assert rational_solve(rows, (Fraction(1, 2), 3, Fraction(1, 2))) == (Fraction(1, 2), Fraction(3, 2))
    assert rational_solve(rows, (1, 0, 0)) is None


def test_quotient_invariants():
    assert quotient_invariants([(2, 0), (0, 3)], 2) == (6,)
    assert quotient_invariants([(2, 0), (0, 2)], 2) == (2, 2)
    assert quotient_invariants([(1, 0), (0, 1)], 2) == ()
    with pytest.raises(ValueError):
        quotient_invariants([(1, 0)], 2)


def test_primitive_integer_vector():
    assert primitive_integer_vector((Fraction(1, 2), Fraction(3, 4))) == (2, 3)
    assert primitive_integer_vector((0, -4, 6)) == (0, -2, 3)


@pytest.mark.parametrize("factors", [(2,), (6,), (2, 2), (2, 4), (3, 3), (2, 6), (30,)])
def test_finite_abelian_invariants(factors):
    import itertools
    elements = list(itertools.product(*(range(d) for d in factors)))

    def add(a, b):
        return tuple((x + y) % d for x, y, d in zip(a, b, factors))

    assert finite_abelian_invariants(elements, add, tuple(0 for _ in factors)) == factors
