"""Smith normal form of integer matrices.

Exact elimination on Python integers, accumulating the unimodular row and
column transforms.  Intended for the small presentation matrices met when
reading off invariant factors; the heavy lifting for cochain spaces is done
modulo the group exponent in :mod:`abcross._modlin`.
"""

from __future__ import annotations


def _egcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, x, y)`` with ``x*a + y*b == g == gcd(a, b) >= 0``."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        return -a, -x0, -y0
    return a, x0, y0


def _pivot_gcd(a: int, b: int) -> tuple[int, int, int]:
    # keep the pivot in place when it already divides b, otherwise elimination cycles
    if a and b % a == 0:
        return a, 1, 0
    return _egcd(a, b)


def identity(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(A, B):
    """Integer matrix product; shapes are taken from the arguments."""
    if not A:
        return []
    inner = len(B)
    cols = len(B[0]) if inner else 0
    return [[sum(A[i][k] * B[k][j] for k in range(inner)) for j in range(cols)]
            for i in range(len(A))]


def determinant(A) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = len(A)
    if n == 0:
        return 1
    M = [list(row) for row in A]
    sign, prev = 1, 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k]:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def smith_normal_form(A, ncols: int | None = None):
    """Smith normal form ``(U, S, V)`` of the integer matrix ``A``.

    ``U @ A @ V == S`` with ``U`` and ``V`` unimodular, ``S`` diagonal with
    non-negative entries and ``S[i][i]`` dividing ``S[i+1][i+1]``.  ``ncols``
    is only needed for matrices with no rows.

    >>> U, S, V = smith_normal_form([[2, 0], [0, 3]])
    >>> S
    [[1, 0], [0, 6]]
    """
    A = [[int(x) for x in row] for row in A]
    r = len(A)
    c = len(A[0]) if r else (ncols or 0)
    U = identity(r)
    V = identity(c)

    def row_combine(t, i):
        a, b = A[t][t], A[i][t]
        g, x, y = _pivot_gcd(a, b)
        p, q = a // g, b // g
        for M in (A, U):
            rt, ri = M[t], M[i]
            M[t] = [x * u + y * v for u, v in zip(rt, ri)]
            M[i] = [-q * u + p * v for u, v in zip(rt, ri)]

    def col_combine(t, j):
        a, b = A[t][t], A[t][j]
        g, x, y = _pivot_gcd(a, b)
        p, q = a // g, b // g
        for M in (A, V):
            for row in M:
                u, v = row[t], row[j]
                row[t] = x * u + y * v
                row[j] = -q * u + p * v

    for t in range(min(r, c)):
        nz = [(abs(A[i][j]), i, j) for i in range(t, r) for j in range(t, c) if A[i][j]]
        if not nz:
            break
        _, i0, j0 = min(nz)
        A[t], A[i0] = A[i0], A[t]
        U[t], U[i0] = U[i0], U[t]
        for M in (A, V):
            for row in M:
                row[t], row[j0] = row[j0], row[t]
        while True:
            for i in range(t + 1, r):
                if A[i][t]:
                    row_combine(t, i)
            for j in range(t + 1, c):
                if A[t][j]:
                    col_combine(t, j)
            if any(A[i][t] for i in range(t + 1, r)):
                continue
            p = A[t][t]
            bad = next((i for i in range(t + 1, r)
                        for j in range(t + 1, c) if A[i][j] % p), None)
            if bad is None:
                break
            A[t] = [u + v for u, v in zip(A[t], A[bad])]
            U[t] = [u + v for u, v in zip(U[t], U[bad])]
        if A[t][t] < 0:
            A[t] = [-u for u in A[t]]
            U[t] = [-u for u in U[t]]
    return U, A, V


def invariant_factors(relations, ngens: int) -> tuple[int, ...]:
    """Invariant factors of ``Z^ngens`` modulo the span of ``relations``.

    ``relations`` are integer vectors of length ``ngens``.  Raises
    ``ValueError`` when the quotient is infinite.
    """
    rels = [list(r) for r in relations]
    A = [[rel[i] for rel in rels] for i in range(ngens)]
    _, S, _ = smith_normal_form(A, ncols=len(rels))
    diag = [S[i][i] if i < len(rels) else 0 for i in range(ngens)]
    if any(s == 0 for s in diag):
        raise ValueError("relations do not present a finite group")
    return tuple(s for s in diag if s != 1)
