from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from foldcob.intmat import (IntMatrix, cokernel_is_trivial, diagonal,
                            kernel_basis, smith_normal_form,
                            snf_with_inverses, solve)


def frac_det(m: IntMatrix) -> Fraction:
    """Independent determinant via fraction-free Gaussian elimination."""
    assert m.rows == m.cols
    n = m.rows
    a = [[Fraction(x) for x in row] for row in m.entries]
    det = Fraction(1)
    for c in range(n):
        pivot = next((r for r in range(c, n) if a[r][c] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            a[c], a[pivot] = a[pivot], a[c]
            det = -det
        det *= a[c][c]
        inv = 1 / a[c][c]
        for r in range(c + 1, n):
            f = a[r][c] * inv
            a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return det


def frac_rank(m: IntMatrix) -> int:
    a = [[Fraction(x) for x in row] for row in m.entries]
    rank = 0
    col = 0
    for col in range(m.cols):
        pivot = next((r for r in range(rank, m.rows) if a[r][col] != 0), None)
        if pivot is None:
            continue
        a[rank], a[pivot] = a[pivot], a[rank]
        inv = 1 / a[rank][col]
        for r in range(m.rows):
            if r != rank and a[r][col] != 0:
                f = a[r][col] * inv
                a[r] = [x - f * y for x, y in zip(a[r], a[rank])]
        rank += 1
    return rank


matrices = st.integers(1, 8).flatmap(
    lambda r: st.integers(1, 8).flatmap(
        lambda c: st.lists(
            st.lists(st.integers(-5, 5), min_size=c, max_size=c),
            min_size=r, max_size=r)))


@settings(max_examples=150, deadline=None)
@given(matrices)
def test_snf_contract(rows):
    m = IntMatrix.from_rows(rows)
    u, s, v, uinv, vinv = snf_with_inverses(m)
    assert u.mul(m).mul(v) == s
    assert u.mul(uinv) == IntMatrix.identity(m.rows)
    assert v.mul(vinv) == IntMatrix.identity(m.cols)
    assert abs(frac_det(u)) == 1
    assert abs(frac_det(v)) == 1
    diag = diagonal(s)
    for i in range(s.rows):
        for j in range(s.cols):
            if i != j:
                assert s.entries[i][j] == 0
    assert all(d >= 0 for d in diag)
    for a, b in zip(diag, diag[1:]):
        if a != 0:
            assert b % a == 0
        else:
            assert b == 0
    assert sum(1 for d in diag if d != 0) == frac_rank(m)


@settings(max_examples=80, deadline=None)
@given(matrices)
def test_kernel_basis(rows):
    m = IntMatrix.from_rows(rows)
    k = kernel_basis(m)
    assert m.mul(k).is_zero()
    assert k.cols == m.cols - frac_rank(m)
    assert frac_rank(k) == k.cols


@settings(max_examples=80, deadline=None)
@given(matrices, st.lists(st.integers(-4, 4), min_size=1, max_size=8))
def test_solve_roundtrip(rows, xs):
    m = IntMatrix.from_rows(rows)
    x = IntMatrix.from_rows([[v] for v in (xs * 8)[:m.cols]], 1)
    b = m.mul(x)
    sol = solve(m, b)
    assert sol is not None
    assert m.mul(sol) == b


def test_snf_identity_and_zero():
    i3 = IntMatrix.identity(3)
    u, s, v = smith_normal_form(i3)
    assert s == i3
    z = IntMatrix.zero(2, 3)
    u, s, v = smith_normal_form(z)
    assert s == z
    assert u == IntMatrix.identity(2)
    assert v == IntMatrix.identity(3)


def test_snf_dense_wide_matrix():
    # regression: naive remainder-swap elimination blew up on this one
    m = IntMatrix.from_rows([
        [0, 3, -3, -4, 4, 2, -3], [4, 1, 5, 5, 1, 3, 2],
        [5, 0, 2, 2, 5, 5, -2], [3, 4, -2, -5, 0, 0, 0],
        [-5, 3, -3, -1, 4, -3, 1], [4, -1, 2, -4, -4, 3, -5],
        [-4, -2, -3, -5, -1, -5, 2], [0, -3, -3, 5, 2, 0, 3]])
    u, s, v, uinv, vinv = snf_with_inverses(m)
    assert diagonal(s) == [1, 1, 1, 1, 1, 1, 1]
    assert u.mul(m).mul(v) == s
    assert uinv.mul(u) == IntMatrix.identity(8)
    assert vinv.mul(v) == IntMatrix.identity(7)


def test_snf_frozen_example():
    m = IntMatrix.from_rows([[2, 4], [6, 8]])
    u, s, v = smith_normal_form(m)
    assert diagonal(s) == [2, 4]
    assert u.mul(m).mul(v) == s


def test_solve_unsolvable():
    m = IntMatrix.from_rows([[2]])
    b = IntMatrix.from_rows([[1]])
    assert solve(m, b) is None


def test_cokernel():
    assert cokernel_is_trivial(IntMatrix.identity(3))
    assert not cokernel_is_trivial(IntMatrix.from_rows([[2]]))
    assert not cokernel_is_trivial(IntMatrix.zero(2, 1))
    assert cokernel_is_trivial(IntMatrix.zero(0, 3))


def test_shape_errors():
    with pytest.raises(ValueError):
        IntMatrix(1, 2, ((1,),))
    with pytest.raises(ValueError):
        IntMatrix.identity(2).mul(IntMatrix.identity(3))
