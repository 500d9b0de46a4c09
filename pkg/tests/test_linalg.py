import pytest
from hypothesis import given, strategies as st

from conftest import qts
from nsshuffle.linalg import identity, inverse, is_zero_matrix, matmul, matvec, nullspace, rank, scalar_shift, solve
from nsshuffle.qtfield import ONE, ZERO, q, t


def test_small_system():
    A = [[ONE, q], [t, ONE]]
    x = solve(A, [ONE, ZERO])
    assert matvec(A, x) == [ONE, ZERO]
    assert matmul(A, inverse(A)) == identity(2)


def test_singular_and_inconsistent():
    A = [[ONE, q], [t, q * t]]
    assert rank(A, 2) == 1
    (v,) = nullspace(A, 2)
    assert matvec(A, v) == [ZERO, ZERO]
    with pytest.raises(ValueError):
        inverse(A)
    with pytest.raises(ValueError):
        solve(A, [ONE, ONE])


@given(st.lists(qts(), min_size=9, max_size=9))
def test_random_3x3(vals):
    A = [vals[0:3], vals[3:6], vals[6:9]]
    k = rank(A, 3)
    ns = nullspace(A, 3)
    assert k + len(ns) == 3
    for v in ns:
        assert all(not x for x in matvec(A, v))
    if k == 3:
        assert matmul(inverse(A), A) == identity(3)


def test_scalar_shift():
    M = identity(2)
    assert is_zero_matrix(scalar_shift(M, ONE))
