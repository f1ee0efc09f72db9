from __future__ import annotations

import math

from hypothesis import given
from hypothesis import strategies as st

from abcross.snf import determinant, invariant_factors, matmul, smith_normal_form


def _check(A):
    U, S, V = smith_normal_form(A)
    assert matmul(matmul(U, A), V) == S
    assert abs(determinant(U)) == 1 and abs(determinant(V)) == 1
    diag = [S[i][i] for i in range(min(len(S), len(S[0])))]
    for i, row in enumerate(S):
        for j, a in enumerate(row):
            if i != j:
                assert a == 0
    for a, b in zip(diag, diag[1:]):
        assert a >= 0 and (b == 0 or (a != 0 and b % a == 0))
    return diag


def test_diag_2_3():
    assert _check([[2, 0], [0, 3]]) == [1, 6]


def test_gcd_and_determinant_4_2_2_2():
    assert _check([[4, 2], [2, 2]]) == [2, 2]


def test_zero_matrix_is_fixed():
    assert smith_normal_form([[0]]) == ([[1]], [[0]], [[1]])


@given(st.integers(1, 4), st.integers(1, 4), st.data())
def test_random_matrices(m, n, data):
    A = [[data.draw(st.integers(-30, 30)) for _ in range(n)] for _ in range(m)]
    diag = _check(A)
    nz = [a for a in diag if a]
    # the first invariant is the gcd of all entries
    g = math.gcd(*[a for r in A for a in r])
    assert (nz[0] if nz else 0) == g
    if m == n:
        assert math.prod(diag) == abs(determinant(A))


def test_invariant_factors_of_relations():
    # Z^2 / <(2, 0), (0, 3)> is Z/6
    assert invariant_factors([[2, 0], [0, 3]], 2) == (6,)
    assert invariant_factors([[4, 0], [0, 2]], 2) == (2, 4)
    # unit invariants are dropped
    assert invariant_factors([[1, 0], [0, 2]], 2) == (2,)
