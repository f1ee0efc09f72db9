"""Normalized cochain tables, symmetric cocycle tests and coboundaries.

A cochain of arity ``n`` is a table ``M^n -> N`` stored as an integer array
of shape ``(|M|,) * n + (rank N,)`` indexed by element indices of ``M`` (the
position of an element in ``M.elements()``).  Index 0 is always the zero
element, so normalization means every slice with a zero index vanishes.

The residual formulas below are written on raw integer arrays with an
arbitrary trailing axis.  They are linear, so the same code evaluates a
condition on a concrete table and, fed one-hot tables, produces the
coefficient matrix of the condition for the cohomology computations.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .errors import PASS, Check, DomainMismatch, NotNormalized, fail
from .groups import FinAbGroup, GroupHom, check_size

INT = np.int64


@lru_cache(maxsize=256)
def add_table(M: FinAbGroup) -> np.ndarray:
    """``A[i, j]`` is the index of ``x_i + x_j``."""
    els = M.elements()
    m = len(els)
    if not M.factors:
        return np.zeros((1, 1), dtype=INT)
    arr = np.array(els, dtype=INT)
    s = (arr[:, None, :] + arr[None, :, :]) % np.array(M.factors, dtype=INT)
    radix = np.cumprod((1,) + M.factors[:0:-1])[::-1].astype(INT)
    out = s @ radix
    out.setflags(write=False)
    assert out.shape == (m, m)
    return out


@lru_cache(maxsize=256)
def _elements_array(M: FinAbGroup) -> np.ndarray:
    return np.array(M.elements(), dtype=INT).reshape(M.order, M.rank)


def _hom_index_map(phi: GroupHom) -> np.ndarray:
    """Index of ``phi(x)`` for every element index ``x`` of the domain."""
    cod = phi.cod
    dom_els = _elements_array(phi.dom)
    if not cod.rank:
        return np.zeros(phi.dom.order, dtype=INT)
    img = (dom_els @ phi._arr.T) % np.array(cod.factors, dtype=INT) if phi.dom.rank \
        else np.zeros((phi.dom.order, cod.rank), dtype=INT)
    radix = np.cumprod((1,) + cod.factors[:0:-1])[::-1].astype(INT)
    return img @ radix


def _free_mask(m: int, arity: int) -> np.ndarray:
    """Flat positions of table entries whose arguments are all non-zero."""
    idx = np.indices((m,) * arity).reshape(arity, -1)
    return np.flatnonzero((idx != 0).all(axis=0))


class Cochain:
    """A table ``M^arity -> N``.

    Subclasses fix the arity and require normalization; the plain class is
    used for the symmetry part of a degree-3 pair, whose normalization is a
    consequence of the cocycle conditions rather than an assumption.
    """

    arity: int = 0
    normalized: bool = False

    def __init__(self, M: FinAbGroup, N: FinAbGroup, values, arity: int | None = None):
        if arity is not None:
            self.arity = arity
        check_size(M.order)
        self.M, self.N = M, N
        shape = (M.order,) * self.arity + (N.rank,)
        v = np.array(values, dtype=INT).reshape(shape)
        if N.rank:
            v = v % np.array(N.factors, dtype=INT)
        v.setflags(write=False)
        self.values = v
        if self.normalized:
            bad = self.first_unnormalized()
            if bad is not None:
                raise NotNormalized(f"entry at {bad} must vanish")

    # construction -------------------------------------------------------

    @classmethod
    def _make(cls, M, N, values, arity):
        if cls is Cochain:
            return Cochain(M, N, values, arity=arity)
        return cls(M, N, values)

    @classmethod
    def zero(cls, M: FinAbGroup, N: FinAbGroup, arity: int | None = None):
        a = cls.arity if arity is None else arity
        return cls._make(M, N, np.zeros((M.order,) * a + (N.rank,), dtype=INT), a)

    @classmethod
    def from_function(cls, M: FinAbGroup, N: FinAbGroup, fn, arity: int | None = None):
        """Tabulate ``fn`` (taking ``arity`` elements of ``M``) on all arguments."""
        import itertools
        a = cls.arity if arity is None else arity
        els = M.elements()
        vals = [N.reduce(fn(*args)) for args in itertools.product(els, repeat=a)]
        return cls._make(M, N, np.array(vals, dtype=INT).reshape((M.order,) * a + (N.rank,)), a)

    @classmethod
    def from_entries(cls, M: FinAbGroup, N: FinAbGroup, entries, arity: int | None = None):
        """Build from ``{(x, y, ...): value}``; missing arguments map to zero."""
        a = cls.arity if arity is None else arity
        v = np.zeros((M.order,) * a + (N.rank,), dtype=INT)
        for args, val in dict(entries).items():
            if a == 1 and not (isinstance(args, tuple) and args and isinstance(args[0], tuple)):
                args = (args,)
            v[tuple(M.index(M.reduce(x)) for x in args)] = N.reduce(val)
        return cls._make(M, N, v, a)

    @classmethod
    def from_vector(cls, M: FinAbGroup, N: FinAbGroup, vec, arity: int | None = None):
        """Inverse of :meth:`to_vector`: fill the entries with non-zero arguments."""
        a = cls.arity if arity is None else arity
        r = N.rank
        v = np.zeros((M.order ** a, r), dtype=INT)
        free = _free_mask(M.order, a)
        v[free] = np.array(vec, dtype=INT).reshape(len(free), r)
        return cls._make(M, N, v.reshape((M.order,) * a + (r,)), a)

    # access -------------------------------------------------------------

    def __call__(self, *args):
        M = self.M
        return tuple(int(a) for a in self.values[tuple(M.index(x) for x in args)])

    def first_unnormalized(self):
        """Arguments of the first entry with a zero argument and non-zero value."""
        v = self.values
        m = self.M.order
        mask = np.zeros((m,) * self.arity, dtype=bool)
        for ax in range(self.arity):
            sl = [slice(None)] * self.arity
            sl[ax] = 0
            mask[tuple(sl)] = True
        bad = np.argwhere(mask & v.any(axis=-1))
        if len(bad) == 0:
            return None
        els = self.M.elements()
        return tuple(els[i] for i in bad[0])

    def to_vector(self) -> tuple:
        """Entries with non-zero arguments, flattened in lexicographic order."""
        if self.first_unnormalized() is not None:
            raise NotNormalized("only normalized tables have a free-entry vector")
        flat = self.values.reshape(self.M.order ** self.arity, self.N.rank)
        return tuple(int(a) for a in flat[_free_mask(self.M.order, self.arity)].ravel())

    def entries(self) -> list:
        """``[(args, value)]`` for every non-zero entry, in lexicographic order."""
        els = self.M.elements()
        out = []
        for pos in np.argwhere(self.values.any(axis=-1)):
            out.append((tuple(els[i] for i in pos), tuple(int(a) for a in self.values[tuple(pos)])))
        return out

    @property
    def is_zero(self) -> bool:
        return not self.values.any()

    # algebra ------------------------------------------------------------

    def _like(self, values):
        return type(self)._make(self.M, self.N, values, self.arity)

    def _check_same(self, other):
        if type(other) is not type(self) or (self.M, self.N, self.arity) != (other.M, other.N, other.arity):
            raise DomainMismatch("cochains live on different groups")

    def __add__(self, other):
        self._check_same(other)
        return self._like(self.values + other.values)

    def __sub__(self, other):
        self._check_same(other)
        return self._like(self.values - other.values)

    def __neg__(self):
        return self._like(-self.values)

    def scale(self, k: int):
        return self._like(self.values * k)

    def __eq__(self, other):
        return (type(other) is type(self) and (self.M, self.N, self.arity) == (other.M, other.N, other.arity)
                and np.array_equal(self.values, other.values))

    def __hash__(self):
        return hash((type(self).__name__, self.M, self.N, self.arity, self.values.tobytes()))

    def pullback(self, phi: GroupHom):
        """``(phi^* c)(u, ...) = c(phi u, ...)``."""
        if phi.cod != self.M:
            raise DomainMismatch(f"pullback along a map into {phi.cod}, cochain lives on {self.M}")
        idx = _hom_index_map(phi)
        v = self.values[np.ix_(*([idx] * self.arity))] if self.arity else self.values
        return type(self)._make(phi.dom, self.N, v, self.arity)

    def pushforward(self, h: GroupHom):
        """``(h_* c)(...) = h(c(...))``."""
        if h.dom != self.N:
            raise DomainMismatch(f"pushforward along a map out of {h.dom}, cochain takes values in {self.N}")
        shape = self.values.shape[:-1] + (h.cod.rank,)
        if h.cod.rank and self.N.rank:
            v = self.values @ h._arr.T
        else:
            v = np.zeros(shape, dtype=INT)
        return type(self)._make(self.M, h.cod, v, self.arity)

    def __repr__(self):
        body = ", ".join(f"{a}: {v}" for a, v in self.entries())
        return f"{type(self).__name__}({self.M} -> {self.N}; {{{body}}})"


class SymCochain1(Cochain):
    """Normalized function ``M -> N`` (``g(0) = 0``)."""

    arity = 1
    normalized = True


class SymCochain2(Cochain):
    """Normalized table ``M x M -> N``."""

    arity = 2
    normalized = True


class Cochain3(Cochain):
    """Normalized table ``M^3 -> N``; the associativity part of a degree-3 pair."""

    arity = 3
    normalized = True


class Cochain3Pair:
    """Degree-3 cochain ``(xi, eta)``: ``xi`` normalized, ``eta`` an arbitrary table."""

    def __init__(self, xi: Cochain3, eta: Cochain):
        if not isinstance(xi, Cochain3):
            xi = Cochain3(xi.M, xi.N, xi.values)
        if eta.arity != 2 or (eta.M, eta.N) != (xi.M, xi.N):
            raise DomainMismatch("xi and eta must share their groups")
        if type(eta) is not Cochain:
            eta = Cochain(eta.M, eta.N, eta.values, arity=2)
        self.xi, self.eta = xi, eta

    @property
    def M(self) -> FinAbGroup:
        return self.xi.M

    @property
    def N(self) -> FinAbGroup:
        return self.xi.N

    @classmethod
    def zero(cls, M, N) -> "Cochain3Pair":
        return cls(Cochain3.zero(M, N), Cochain.zero(M, N, arity=2))

    @classmethod
    def from_functions(cls, M, N, xi=None, eta=None) -> "Cochain3Pair":
        x = Cochain3.from_function(M, N, xi) if xi else Cochain3.zero(M, N)
        e = Cochain.from_function(M, N, eta, arity=2) if eta else Cochain.zero(M, N, arity=2)
        return cls(x, e)

    @classmethod
    def from_entries(cls, M, N, xi=None, eta=None) -> "Cochain3Pair":
        return cls(Cochain3.from_entries(M, N, xi or {}), Cochain.from_entries(M, N, eta or {}, arity=2))

    @classmethod
    def from_vector(cls, M, N, vec) -> "Cochain3Pair":
        m, r = M.order, N.rank
        k = (m - 1) ** 3 * r
        vec = list(vec)
        return cls(Cochain3.from_vector(M, N, vec[:k]), Cochain.from_vector(M, N, vec[k:], arity=2))

    def to_vector(self) -> tuple:
        return self.xi.to_vector() + self.eta.to_vector()

    @property
    def is_zero(self) -> bool:
        return self.xi.is_zero and self.eta.is_zero

    def __add__(self, other):
        return Cochain3Pair(self.xi + other.xi, self.eta + other.eta)

    def __sub__(self, other):
        return Cochain3Pair(self.xi - other.xi, self.eta - other.eta)

    def __neg__(self):
        return Cochain3Pair(-self.xi, -self.eta)

    def scale(self, k: int):
        return Cochain3Pair(self.xi.scale(k), self.eta.scale(k))

    def pullback(self, phi: GroupHom):
        return Cochain3Pair(self.xi.pullback(phi), self.eta.pullback(phi))

    def pushforward(self, h: GroupHom):
        return Cochain3Pair(self.xi.pushforward(h), self.eta.pushforward(h))

    def __eq__(self, other):
        return isinstance(other, Cochain3Pair) and self.xi == other.xi and self.eta == other.eta

    def __hash__(self):
        return hash((self.xi, self.eta))

    def __repr__(self):
        return f"Cochain3Pair(xi={self.xi!r}, eta={self.eta!r})"


# residual formulas on raw arrays ---------------------------------------------


def delta1_array(g, A):
    """``g(u) + g(v) - g(u+v)``."""
    return g[:, None] + g[None, :] - g[A]


def delta2_arrays(g, A):
    """``(xi, eta)`` of the coboundary of a 2-cochain table."""
    m = A.shape[0]
    X, Y, Z = np.indices((m, m, m))
    xi = g[Y, Z] - g[A[X, Y], Z] + g[X, A[Y, Z]] - g[X, Y]
    eta = np.swapaxes(g, 0, 1) - g
    return xi, eta


def cocycle2_residuals(f, A):
    """Residuals of the 2-cocycle law over ``(u, v, t)`` and of symmetry over ``(u, v)``."""
    m = A.shape[0]
    U, V, T = np.indices((m, m, m))
    assoc = f[V, T] + f[U, A[V, T]] - f[U, V] - f[A[U, V], T]
    sym = f - np.swapaxes(f, 0, 1)
    return assoc, sym


def cocycle3_residuals(xi, eta, A):
    """Residuals of the pentagon, antisymmetry and hexagon laws."""
    m = A.shape[0]
    X, Y, Z, T = np.indices((m, m, m, m))
    pent = xi[Y, Z, T] - xi[A[X, Y], Z, T] + xi[X, A[Y, Z], T] - xi[X, Y, A[Z, T]] + xi[X, Y, Z]
    anti = eta + np.swapaxes(eta, 0, 1)
    X, Y, Z = np.indices((m, m, m))
    hexa = xi[X, Y, Z] - xi[Y, X, Z] + xi[Y, Z, X] + eta[X, A[Y, Z]] - eta[X, Y] - eta[X, Z]
    return pent, anti, hexa


def _first_violation(res, N: FinAbGroup, M: FinAbGroup):
    if not N.rank:
        return None
    r = res % np.array(N.factors, dtype=INT)
    bad = np.argwhere(r.any(axis=-1))
    if len(bad) == 0:
        return None
    els = M.elements()
    return tuple(els[i] for i in bad[0])


# public operations ------------------------------------------------------------


def is_sym_2cocycle(f: SymCochain2) -> Check:
    """Check the 2-cocycle law ``f(v,t) + f(u,v+t) = f(u,v) + f(u+v,t)`` and symmetry.

    On failure the witness is the first offending argument tuple in
    lexicographic order.
    """
    bad = f.first_unnormalized()
    if bad is not None:
        return fail("normalized", *bad)
    assoc, sym = cocycle2_residuals(f.values, add_table(f.M))
    for name, res in (("cocycle", assoc), ("symmetric", sym)):
        w = _first_violation(res, f.N, f.M)
        if w is not None:
            return fail(name, *w)
    return PASS


def is_sym_3cocycle(k: Cochain3Pair) -> Check:
    """Check the pentagon law for ``xi``, antisymmetry of ``eta`` and the hexagon law."""
    bad = k.xi.first_unnormalized()
    if bad is not None:
        return fail("normalized", *bad)
    pent, anti, hexa = cocycle3_residuals(k.xi.values, k.eta.values, add_table(k.M))
    for name, res in (("pentagon", pent), ("antisymmetric", anti), ("hexagon", hexa)):
        w = _first_violation(res, k.N, k.M)
        if w is not None:
            return fail(name, *w)
    return PASS


def coboundary(g: SymCochain1) -> SymCochain2:
    """``(dg)(u, v) = g(u) + g(v) - g(u+v)``."""
    return SymCochain2(g.M, g.N, delta1_array(g.values, add_table(g.M)))


def coboundary2(g: SymCochain2) -> Cochain3Pair:
    """``xi(x,y,z) = g(y,z) - g(x+y,z) + g(x,y+z) - g(x,y)``, ``eta(x,y) = g(y,x) - g(x,y)``."""
    xi, eta = delta2_arrays(g.values, add_table(g.M))
    return Cochain3Pair(Cochain3(g.M, g.N, xi), Cochain(g.M, g.N, eta, arity=2))


def transport(c, phi: GroupHom | None = None, h: GroupHom | None = None):
    """Pull ``c`` back along ``phi`` and/or push it forward along ``h``."""
    if phi is not None:
        c = c.pullback(phi)
    if h is not None:
        c = c.pushforward(h)
    return c
