"""Linear algebra over Z/e on numpy int64 arrays.

Every finite abelian group of exponent dividing ``e`` is a Z/e-module, so
kernels, images and quotients can be computed with entries bounded by ``e``
instead of fighting coefficient growth over the integers.
"""

from __future__ import annotations

from math import gcd

import numpy as np

INT = np.int64


def unit_normalizer(p: int, e: int) -> tuple[int, int, int]:
    """Return ``(s, w, w_inv)`` with ``p*w = s (mod e)``, ``s | e`` and ``w`` a unit."""
    s = gcd(p, e)
    e1 = e // s
    w = pow(p // s, -1, e1) if e1 > 1 else 1
    while gcd(w, e) != 1:
        w += e1
    w %= e
    return s, w, pow(w, -1, e)


class ModSmith:
    """Smith form ``U @ A @ V = diag(d) (mod e)``.

    ``d[i]`` is a divisor of ``e`` or 0 (meaning the entry vanishes mod e);
    non-zero entries come first and form a divisibility chain.  ``U`` and its
    inverse are only tracked when ``with_u`` is set, since the condition
    matrices of cochain complexes have far more rows than columns.
    """

    def __init__(self, A, e: int, with_u: bool = False):
        A = np.array(A, dtype=INT).reshape(len(A), -1) if len(A) else np.zeros((0, 0), INT)
        self.e = e
        self.shape = A.shape
        self._run(A % e, with_u)

    @classmethod
    def of_shape(cls, A, shape, e, with_u=False):
        obj = cls.__new__(cls)
        obj.e = e
        obj.shape = shape
        obj._run(np.array(A, dtype=INT).reshape(shape) % e, with_u)
        return obj

    def _run(self, A, with_u):
        e = self.e
        r, c = A.shape
        V = np.eye(c, dtype=INT)
        U = np.eye(r, dtype=INT) if with_u else None
        Ui = np.eye(r, dtype=INT) if with_u else None
        diag = []

        def swap_rows(i, j):
            if i == j:
                return
            A[[i, j]] = A[[j, i]]
            if with_u:
                U[[i, j]] = U[[j, i]]
                Ui[:, [i, j]] = Ui[:, [j, i]]

        def swap_cols(i, j):
            if i != j:
                A[:, [i, j]] = A[:, [j, i]]
                V[:, [i, j]] = V[:, [j, i]]

        for t in range(min(r, c)):
            sub = A[t:, t:]
            nz = np.nonzero(sub)
            if len(nz[0]) == 0:
                break
            k = int(np.argmin(sub[nz]))
            swap_rows(t, t + int(nz[0][k]))
            swap_cols(t, t + int(nz[1][k]))
            while True:
                # clear column t below the pivot
                while True:
                    col = A[t + 1:, t]
                    if not col.any():
                        break
                    q = col // A[t, t]
                    A[t + 1:, t:] = (A[t + 1:, t:] - np.outer(q, A[t, t:])) % e
                    if with_u:
                        U[t + 1:] = (U[t + 1:] - np.outer(q, U[t])) % e
                        Ui[:, t] = (Ui[:, t] + Ui[:, t + 1:] @ q) % e
                    col = A[t + 1:, t]
                    nzc = np.nonzero(col)[0]
                    if len(nzc):
                        i = nzc[int(np.argmin(col[nzc]))]
                        swap_rows(t, t + 1 + int(i))
                # clear row t right of the pivot
                row = A[t, t + 1:]
                if row.any():
                    q = row // A[t, t]
                    A[t:, t + 1:] = (A[t:, t + 1:] - np.outer(A[t:, t], q)) % e
                    V[:, t + 1:] = (V[:, t + 1:] - np.outer(V[:, t], q)) % e
                    row = A[t, t + 1:]
                    nzr = np.nonzero(row)[0]
                    if len(nzr):
                        j = nzr[int(np.argmin(row[nzr]))]
                        swap_cols(t, t + 1 + int(j))
                    continue
                if A[t + 1:, t].any():
                    continue
                s, w, winv = unit_normalizer(int(A[t, t]), e)
                if w != 1:
                    A[t] = A[t] * w % e
                    if with_u:
                        U[t] = U[t] * w % e
                        Ui[:, t] = Ui[:, t] * winv % e
                rest = A[t + 1:, t + 1:]
                bad = np.argwhere(rest % s != 0)
                if len(bad) == 0:
                    break
                i = t + 1 + int(bad[0][0])
                A[t] = (A[t] + A[i]) % e
                if with_u:
                    U[t] = (U[t] + U[i]) % e
                    Ui[:, i] = (Ui[:, i] - Ui[:, t]) % e
            diag.append(int(A[t, t]))
        self.diag = diag
        self.U, self.Ui, self.V = U, Ui, V
        self.S = A

    def factor(self, i: int) -> int:
        """Order of the i-th cyclic summand of the cokernel ``(Z/e)^r / Im A``."""
        if i < len(self.diag) and self.diag[i]:
            return self.diag[i]
        return self.e


def _exact_matmul(A, B, e):
    # float64 products are exact while every partial sum stays below 2**53
    bound = A.shape[1] * max(int(np.abs(A).max(initial=0)), 1) * max(int(np.abs(B).max(initial=0)), 1)
    if bound < 2 ** 52:
        return np.rint(A.astype(np.float64) @ B.astype(np.float64)).astype(INT) % e
    return (A @ B) % e


def _kernel_cols(A, e, c):
    sm = ModSmith.of_shape(A, (A.shape[0], c), e)
    cols = []
    for i in range(c):
        if i < len(sm.diag) and sm.diag[i]:
            mult = e // sm.diag[i]
            if mult == e:
                continue
            v = sm.V[:, i] * mult % e
        else:
            v = sm.V[:, i]
        if v.any():
            cols.append(v)
    if not cols:
        return np.zeros((c, 0), dtype=INT)
    return np.stack(cols, axis=1)


SLACK = 24


def kernel(A, e: int, ncols: int | None = None) -> np.ndarray:
    """Generators (as columns) of ``{x in (Z/e)^c : A x = 0}``.

    Tall matrices are first compressed to ``c + SLACK`` random combinations
    of their rows (seeded, so results are reproducible).  The compressed
    kernel contains the true one, and it is accepted only after checking
    ``A K = 0`` exactly; otherwise a fresh combination is tried.
    """
    r = len(A)
    c = ncols if ncols is not None else (len(A[0]) if r else 0)
    A = np.asarray(A, dtype=INT).reshape(r, c) % e if r else np.zeros((0, c), INT)
    if r <= c + SLACK:
        return _kernel_cols(A, e, c)
    rng = np.random.default_rng(0x5EED)
    for _ in range(8):
        R = rng.integers(0, e, size=(c + SLACK, r), dtype=INT)
        K = _kernel_cols(_exact_matmul(R, A, e), e, c)
        if not _exact_matmul(A, K, e).any():
            return K
    return _kernel_cols(A, e, c)


class Solver:
    """Particular solutions of ``A x = y (mod e)`` for a fixed ``A``."""

    def __init__(self, A, e: int, shape):
        self.e = e
        self.shape = shape
        self._sm = ModSmith.of_shape(A, shape, e, with_u=True)

    def solve(self, y) -> np.ndarray | None:
        sm, e = self._sm, self.e
        r, c = self.shape
        t = sm.U @ (np.asarray(y, dtype=INT) % e) % e if r else np.zeros(0, INT)
        k = len(sm.diag)
        if t[k:].any():
            return None
        w = np.zeros(c, dtype=INT)
        for i, s in enumerate(sm.diag):
            ti = int(t[i])
            if s == 0:
                if ti:
                    return None
            elif ti % s:
                return None
            else:
                w[i] = ti // s
        return sm.V @ w % e

    def solve_many(self, Y) -> np.ndarray:
        """Solutions for the columns of ``Y``, all of which must be solvable."""
        sm, e = self._sm, self.e
        r, c = self.shape
        Y = np.asarray(Y, dtype=INT).reshape(r, -1) % e
        T = sm.U @ Y % e if r else np.zeros((0, Y.shape[1]), INT)
        k = len(sm.diag)
        W = np.zeros((c, Y.shape[1]), dtype=INT)
        for i, s in enumerate(sm.diag):
            if s == 0:
                if T[i].any():
                    raise ValueError("system has no solution")
            else:
                if (T[i] % s).any():
                    raise ValueError("system has no solution")
                W[i] = T[i] // s
        if T[k:].any():
            raise ValueError("system has no solution")
        return sm.V @ W % e


class Echelon:
    """Triangular basis of a lattice ``L`` with ``n Z^m <= L <= Z^m``.

    Built from generators of ``L / n Z^m``.  Gives membership tests and the
    lexicographically least representative of a coset ``y + L`` with
    coordinates in ``[0, n_j)``.
    """

    def __init__(self, gens, moduli):
        moduli = np.array(moduli, dtype=INT)
        m = len(moduli)
        self.moduli = moduli
        pivots = np.zeros((m, m), dtype=INT)
        active = np.array(gens, dtype=INT).reshape(-1, m) % moduli if m else np.zeros((0, 0), INT)
        for j in range(m):
            unit = np.zeros((1, m), dtype=INT)
            unit[0, j] = moduli[j]
            active = np.vstack([active, unit])
            while True:
                col = active[:, j]
                nz = np.nonzero(col)[0]
                if len(nz) <= 1:
                    break
                r = nz[int(np.argmin(col[nz]))]
                q = col // col[r]
                q[r] = 0
                active = active - np.outer(q, active[r])
                active[:, j + 1:] %= moduli[j + 1:]
            r = int(nz[0])
            pivots[j] = active[r]
            keep = np.ones(len(active), dtype=bool)
            keep[r] = False
            keep &= active.any(axis=1)
            active = active[keep]
        self.pivots = pivots

    def reduce(self, y) -> np.ndarray:
        y = np.array(y, dtype=INT) % self.moduli
        P, mod = self.pivots, self.moduli
        for j in range(len(mod)):
            q = y[j] // P[j, j]
            if q:
                y = y - q * P[j]
                y[j + 1:] %= mod[j + 1:]
        return y

    def contains(self, y) -> bool:
        return not self.reduce(y).any()
