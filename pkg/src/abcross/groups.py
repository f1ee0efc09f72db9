"""Finite abelian groups, homomorphisms and their kernels/images/cokernels.

Groups are direct sums ``Z/n_1 + ... + Z/n_k``; elements are plain tuples of
residues.  In canonical form the ``n_i`` are at least 2 and form a
divisibility chain, which makes equality of groups a comparison of tuples.
Non-canonical factor lists (with 1s, or not a chain) are allowed as
presentations; :meth:`FinAbGroup.canonical` converts them.

Every choice made here (preimages, coset representatives) returns the
lexicographically least candidate in generator coordinates, so downstream
cocycles and reports are reproducible.
"""

from __future__ import annotations

import contextlib
import itertools
from dataclasses import dataclass
from functools import cached_property, reduce
from math import gcd, lcm, prod

import numpy as np

from . import _modlin
from .errors import DomainMismatch, IllDefinedHom, SizeExceeded
from .snf import smith_normal_form

DEFAULT_MAX_ORDER = 4096
_max_order = DEFAULT_MAX_ORDER


def max_order() -> int:
    return _max_order


@contextlib.contextmanager
def limit_max_order(n: int):
    """Temporarily lower the enumeration guard (it can never be raised)."""
    global _max_order
    old = _max_order
    _max_order = min(old, int(n))
    try:
        yield
    finally:
        _max_order = old


def check_size(n: int, what: str = "group", limit: int | None = None):
    limit = _max_order if limit is None else limit
    if n > limit:
        raise SizeExceeded(f"{what} of size {n} exceeds the guard {limit}")


Element = tuple


@dataclass(frozen=True)
class FinAbGroup:
    """The group ``Z/n_1 + ... + Z/n_k`` on the given factors.

    >>> G = FinAbGroup((2, 4))
    >>> G.add((1, 3), (1, 2))
    (0, 1)
    >>> G.order
    8
    """

    factors: tuple = ()

    def __post_init__(self):
        fs = tuple(int(n) for n in self.factors)
        if any(n < 1 for n in fs):
            raise ValueError(f"factors must be positive: {fs}")
        object.__setattr__(self, "factors", fs)

    @classmethod
    def cyclic(cls, n: int) -> "FinAbGroup":
        return cls(() if n == 1 else (n,))

    @classmethod
    def trivial(cls) -> "FinAbGroup":
        return cls(())

    @classmethod
    def direct_sum(cls, *groups: "FinAbGroup") -> "FinAbGroup":
        return cls(tuple(n for G in groups for n in G.factors))

    @property
    def rank(self) -> int:
        return len(self.factors)

    @property
    def order(self) -> int:
        return prod(self.factors)

    @property
    def exponent(self) -> int:
        return lcm(*self.factors) if self.factors else 1

    @property
    def is_canonical(self) -> bool:
        fs = self.factors
        return all(n >= 2 for n in fs) and all(b % a == 0 for a, b in zip(fs, fs[1:]))

    @property
    def zero(self) -> Element:
        return (0,) * len(self.factors)

    def reduce(self, coords) -> Element:
        return tuple(int(x) % n for x, n in zip(coords, self.factors))

    def contains(self, x) -> bool:
        return (isinstance(x, tuple) and len(x) == len(self.factors)
                and all(isinstance(a, int) and 0 <= a < n for a, n in zip(x, self.factors)))

    def add(self, x, y) -> Element:
        return tuple((a + b) % n for a, b, n in zip(x, y, self.factors))

    def sub(self, x, y) -> Element:
        return tuple((a - b) % n for a, b, n in zip(x, y, self.factors))

    def neg(self, x) -> Element:
        return tuple(-a % n for a, n in zip(x, self.factors))

    def mul(self, k: int, x) -> Element:
        return tuple(k * a % n for a, n in zip(x, self.factors))

    def sum(self, xs) -> Element:
        return reduce(self.add, xs, self.zero)

    def element_order(self, x) -> int:
        return lcm(*(n // gcd(a, n) for a, n in zip(x, self.factors))) if x else 1

    def gens(self) -> list[Element]:
        k = len(self.factors)
        return [tuple(int(i == j) for j in range(k)) for i in range(k)]

    def elements(self) -> list[Element]:
        """All elements in lexicographic order (guarded by the size limit)."""
        check_size(self.order)
        return self._elements

    @cached_property
    def _elements(self) -> list[Element]:
        return list(itertools.product(*(range(n) for n in self.factors)))

    def index(self, x) -> int:
        i = 0
        for a, n in zip(x, self.factors):
            i = i * n + a
        return i

    def element(self, i: int) -> Element:
        out = []
        for n in reversed(self.factors):
            i, a = divmod(i, n)
            out.append(a)
        return tuple(reversed(out))

    def canonical(self) -> tuple["FinAbGroup", "GroupHom"]:
        """Canonical form and the isomorphism from this presentation onto it."""
        k = len(self.factors)
        U, S, _ = smith_normal_form([[n if i == j else 0 for j in range(k)]
                                     for i, n in enumerate(self.factors)], ncols=k)
        keep = [i for i in range(k) if S[i][i] != 1]
        G = FinAbGroup(tuple(S[i][i] for i in keep))
        return G, GroupHom(self, G, [U[i] for i in keep])

    def __str__(self) -> str:
        if not self.factors:
            return "0"
        return " + ".join(f"Z/{n}" for n in self.factors)


def Z(n: int) -> FinAbGroup:
    """Shorthand for the cyclic group of order ``n``."""
    return FinAbGroup.cyclic(n)


def _reduce_rows(matrix, cod: FinAbGroup):
    if not matrix or not len(matrix[0]):
        return tuple(() for _ in matrix)
    try:
        arr = np.array(matrix, dtype=np.int64)
    except OverflowError:
        return tuple(tuple(int(a) % n for a in row) for row, n in zip(matrix, cod.factors))
    arr = arr % np.array(cod.factors, dtype=np.int64)[:, None]
    return tuple(map(tuple, arr.tolist()))


@dataclass(frozen=True)
class GroupHom:
    """Homomorphism given by an integer matrix.

    Column ``j`` is the image of the ``j``-th generator of ``dom`` written in
    the generators of ``cod``.  Construction validates that each column is
    killed by the order of its generator and raises :class:`IllDefinedHom`
    otherwise.
    """

    dom: FinAbGroup
    cod: FinAbGroup
    matrix: tuple

    def __post_init__(self):
        m, r = self.dom.rank, self.cod.rank
        rows = list(self.matrix)
        if len(rows) != r or any(len(row) != m for row in rows):
            raise IllDefinedHom(f"matrix shape does not match {r}x{m}")
        mat = _reduce_rows(rows, self.cod)
        object.__setattr__(self, "matrix", mat)
        if m and r:
            arr = np.array(mat, dtype=np.int64)
            n = np.array(self.dom.factors, dtype=np.int64)
            c = np.array(self.cod.factors, dtype=np.int64)
            bad = np.argwhere((arr * n[None, :]) % c[:, None] != 0)
            if len(bad):
                i, j = bad[0]
                raise IllDefinedHom(
                    f"generator {j} has order {n[j]} but its image has non-zero "
                    f"coordinate {arr[i, j]} mod {c[i]} after multiplying by {n[j]}")

    @classmethod
    def from_images(cls, dom, cod, images) -> "GroupHom":
        """Build from the images of the generators of ``dom``."""
        images = list(images)
        return cls(dom, cod, [[img[i] for img in images] for i in range(cod.rank)])

    @classmethod
    def identity(cls, G: FinAbGroup) -> "GroupHom":
        return cls(G, G, [[int(i == j) for j in range(G.rank)] for i in range(G.rank)])

    @classmethod
    def zero(cls, dom: FinAbGroup, cod: FinAbGroup) -> "GroupHom":
        return cls(dom, cod, [[0] * dom.rank for _ in range(cod.rank)])

    @cached_property
    def _arr(self) -> np.ndarray:
        return np.array(self.matrix, dtype=np.int64).reshape(self.cod.rank, self.dom.rank)

    def apply(self, x) -> Element:
        if not self.cod.rank:
            return ()
        if not self.dom.rank:
            return self.cod.zero
        y = self._arr @ np.asarray(x, dtype=np.int64)
        return tuple(int(a) % n for a, n in zip(y, self.cod.factors))

    __call__ = apply

    def images(self) -> list[Element]:
        return [self.apply(g) for g in self.dom.gens()]

    @property
    def is_zero(self) -> bool:
        return not any(any(row) for row in self.matrix)

    def __add__(self, other: "GroupHom") -> "GroupHom":
        if (self.dom, self.cod) != (other.dom, other.cod):
            raise DomainMismatch("cannot add homomorphisms with different shapes")
        return GroupHom(self.dom, self.cod, [[a + b for a, b in zip(r, s)]
                                             for r, s in zip(self.matrix, other.matrix)])

    def __neg__(self) -> "GroupHom":
        return GroupHom(self.dom, self.cod, [[-a for a in r] for r in self.matrix])

    def __sub__(self, other: "GroupHom") -> "GroupHom":
        return self + (-other)

    @cached_property
    def decomposition(self) -> "ExactDecomposition":
        return ExactDecomposition(self)

    def __repr__(self) -> str:
        return f"GroupHom({self.dom} -> {self.cod}, {[list(r) for r in self.matrix]})"


hom_new = GroupHom


def compose_hom(g: GroupHom, h: GroupHom) -> GroupHom:
    """``g`` after ``h``."""
    if h.cod != g.dom:
        raise DomainMismatch(f"cannot compose: {h.cod} is not {g.dom}")
    return GroupHom.from_images(h.dom, g.cod, [g(y) for y in h.images()])


def hom_from_function(dom: FinAbGroup, cod: FinAbGroup, fn) -> GroupHom:
    """The homomorphism agreeing with the additive function ``fn`` on generators."""
    return GroupHom.from_images(dom, cod, [cod.reduce(fn(g)) for g in dom.gens()])


def homs(G: FinAbGroup, H: FinAbGroup, limit: int = 1 << 16):
    """Every homomorphism ``G -> H`` (generator images range over the n-torsion)."""
    choices = []
    for n in G.factors:
        choices.append([y for y in H.elements() if not any(H.mul(n, y))])
    total = prod(len(c) for c in choices)
    check_size(total, "hom set", limit)
    for imgs in itertools.product(*choices):
        yield GroupHom.from_images(G, H, imgs)


class Subgroup:
    """Subgroup of ``ambient`` generated by ``gens``.

    Exposes its canonical structure ``group`` with the inclusion ``incl``,
    coordinates of members in that structure, and lexicographically least
    coset representatives in the ambient group.
    """

    def __init__(self, ambient: FinAbGroup, gens):
        self.ambient = ambient
        n = ambient.factors
        gens = [tuple(g) for g in gens]
        gens = [g for g in gens if any(g)]
        self.gens = gens
        self._echelon = _modlin.Echelon(gens, n) if n else None
        e = ambient.exponent
        m, p = len(n), len(gens)
        if not p or e == 1:
            self.group = FinAbGroup()
            self.incl = GroupHom.zero(self.group, ambient)
            self._solver = None
            return
        G = np.array(gens, dtype=np.int64).T
        emb = np.array([e // k for k in n], dtype=np.int64)
        A = G * emb[:, None] % e
        self._solver = _modlin.Solver(A, e, (m, p))
        R = _modlin.kernel(A, e, ncols=p)
        sm = _modlin.ModSmith.of_shape(R, (p, R.shape[1]), e, with_u=True)
        facs = [sm.factor(i) for i in range(p)]
        keep = [i for i in range(p) if facs[i] != 1]
        self._e = e
        self._emb = emb
        self._U = sm.U[keep]
        self._s = np.array([facs[i] for i in keep], dtype=np.int64)
        self.group = FinAbGroup(tuple(facs[i] for i in keep))
        images = [(G @ sm.Ui[:, i]) % np.array(n) for i in keep]
        self.incl = GroupHom.from_images(self.group, ambient, [tuple(int(a) for a in v) for v in images])

    def lexmin(self, y) -> Element:
        """Least element of the coset ``y + self``."""
        if self._echelon is None:
            return ()
        return tuple(int(a) for a in self._echelon.reduce(y))

    def contains(self, y) -> bool:
        return self._echelon is None or self._echelon.contains(y)

    def coords(self, y) -> Element | None:
        """Coordinates of ``y`` in :attr:`group`, or None if ``y`` is not a member."""
        if not self.contains(y):
            return None
        if self._solver is None:
            return ()
        a = self._solver.solve(np.asarray(y, dtype=np.int64) * self._emb % self._e)
        return tuple(int(v) for v in (self._U @ a) % self._s)

    def coords_many(self, Y) -> np.ndarray:
        """Coordinates (as rows) of the members given as rows of ``Y``."""
        Y = np.asarray(Y, dtype=np.int64)
        Y = Y.reshape(Y.shape[0], self.ambient.rank)
        if self._solver is None:
            return np.zeros((len(Y), 0), dtype=np.int64)
        A = self._solver.solve_many((Y * self._emb % self._e).T)
        return ((self._U @ A) % self._s[:, None]).T

    def as_hom_coords(self, hom: GroupHom) -> GroupHom:
        """Corestrict ``hom`` (whose image lies in this subgroup) to :attr:`group`."""
        imgs = []
        for y in hom.images():
            c = self.coords(y)
            if c is None:
                raise DomainMismatch("image does not lie in the subgroup")
            imgs.append(c)
        return GroupHom.from_images(hom.dom, self.group, imgs)


class ExactDecomposition:
    """Kernel, image and cokernel of a homomorphism ``h``.

    All three groups are in canonical form.  The pieces are computed lazily,
    since the condition maps of cochain complexes only ever need the kernel.
    """

    def __init__(self, h: GroupHom):
        self.hom = h

    @cached_property
    def _ker(self) -> Subgroup:
        h = self.hom
        e = lcm(h.dom.exponent, h.cod.exponent)
        m, r = h.dom.rank, h.cod.rank
        if m == 0:
            return Subgroup(h.dom, [])
        if r == 0 or e == 1:
            return Subgroup(h.dom, h.dom.gens())
        emb = np.array([e // c for c in h.cod.factors], dtype=np.int64)
        A = h._arr * emb[:, None] % e
        K = _modlin.kernel(A, e, ncols=m)
        return Subgroup(h.dom, [h.dom.reduce(K[:, i]) for i in range(K.shape[1])])

    @cached_property
    def _img(self) -> Subgroup:
        return Subgroup(self.hom.cod, self.hom.images())

    @property
    def ker(self) -> FinAbGroup:
        return self._ker.group

    @property
    def ker_incl(self) -> GroupHom:
        return self._ker.incl

    @property
    def img(self) -> FinAbGroup:
        return self._img.group

    @property
    def img_incl(self) -> GroupHom:
        return self._img.incl

    def ker_coords(self, x) -> Element | None:
        return self._ker.coords(x)

    def img_coords(self, y) -> Element | None:
        return self._img.coords(y)

    def ker_lexmin(self, x) -> Element:
        return self._ker.lexmin(x)

    def img_lexmin(self, y) -> Element:
        """Least element of the coset ``y + Im h``."""
        return self._img.lexmin(y)

    def img_contains(self, y) -> bool:
        return self._img.contains(y)

    @cached_property
    def _coker(self):
        h = self.hom
        cod = h.cod
        r, m = cod.rank, h.dom.rank
        e = lcm(h.dom.exponent, cod.exponent)
        if r == 0 or e == 1:
            G = FinAbGroup()
            return G, GroupHom.zero(cod, G), []
        A = np.zeros((r, m + r), dtype=np.int64)
        A[:, :m] = h._arr
        A[:, m:] = np.diag(cod.factors)
        sm = _modlin.ModSmith.of_shape(A, (r, m + r), e, with_u=True)
        facs = [sm.factor(i) for i in range(r)]
        keep = [i for i in range(r) if facs[i] != 1]
        G = FinAbGroup(tuple(facs[i] for i in keep))
        proj = GroupHom(cod, G, [[int(a) for a in sm.U[i]] for i in keep])
        lifts = [cod.reduce(sm.Ui[:, i]) for i in keep]
        return G, proj, lifts

    @property
    def coker(self) -> FinAbGroup:
        return self._coker[0]

    @property
    def coker_proj(self) -> GroupHom:
        return self._coker[1]

    def coker_section(self, c) -> Element:
        """Least element of ``cod`` in the class ``c`` of the cokernel."""
        cod = self.hom.cod
        lifts = self._coker[2]
        y = cod.sum(cod.mul(k, v) for k, v in zip(c, lifts))
        return self._img.lexmin(y)

    def coker_section_max(self, c) -> Element:
        """Lexicographically greatest representative, with ``0 -> 0``.

        A second deterministic section, used to test that constructions do
        not depend on the choice of representatives.
        """
        if not any(c):
            return self.hom.cod.zero
        cod = self.hom.cod
        lo = self.coker_section(c)
        # x -> -1-x reverses the lexicographic order and maps cosets to cosets
        top = tuple(n - 1 - a for a, n in zip(lo, cod.factors))
        least = self._img.lexmin(top)
        return tuple(n - 1 - a for a, n in zip(least, cod.factors))


def exact_decomposition(h: GroupHom) -> ExactDecomposition:
    return h.decomposition


def solve_preimage(h: GroupHom, y) -> Element | None:
    """Least ``x`` with ``h(x) == y``, or None when ``y`` is not in the image."""
    dec = h.decomposition
    if not dec._img.contains(y):
        return None
    x0 = _particular_preimage(h, y)
    return dec.ker_lexmin(x0)


def _particular_preimage(h: GroupHom, y):
    solver = h.__dict__.get("_preimage_solver")
    e = lcm(h.dom.exponent, h.cod.exponent)
    m, r = h.dom.rank, h.cod.rank
    if m == 0 or r == 0 or e == 1:
        return h.dom.zero
    emb = np.array([e // c for c in h.cod.factors], dtype=np.int64)
    if solver is None:
        solver = _modlin.Solver(h._arr * emb[:, None] % e, e, (r, m))
        h.__dict__["_preimage_solver"] = solver
    x = solver.solve(np.asarray(y, dtype=np.int64) * emb % e)
    return h.dom.reduce(x)
