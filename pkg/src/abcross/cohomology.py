"""Symmetric cohomology ``H^2_s`` and ``H^3_s`` by linear algebra over ``N``.

Normalized cochains are determined by their entries with non-zero
arguments, so the cochain space of degree ``n`` is the group
``N^(free entries)``.  The cocycle laws and the coboundary are integer
linear maps between such groups; ``Z`` is a kernel, ``B`` an image and
``H = Z / B`` a cokernel, all computed with :mod:`abcross.groups`.

A brute-force enumerator is included as an independent check.
"""

from __future__ import annotations

import itertools
from functools import cached_property, lru_cache

import numpy as np

from .cochains import (Cochain, Cochain3, Cochain3Pair, SymCochain1, SymCochain2, add_table,
                       cocycle2_residuals, cocycle3_residuals, delta1_array, delta2_arrays,
                       is_sym_2cocycle, is_sym_3cocycle, _free_mask)
from .errors import PASS, Check, DomainMismatch, NotACocycle, SizeExceeded, fail
from .groups import FinAbGroup, GroupHom, Subgroup, check_size, solve_preimage

INT = np.int64

# dense condition matrices larger than this (rows x columns) are refused
MATRIX_BUDGET = 1 << 23


def _one_hot(m: int, arity: int, offset: int, total: int) -> np.ndarray:
    free = _free_mask(m, arity)
    T = np.zeros((m ** arity, total), dtype=INT)
    T[free, offset + np.arange(len(free))] = 1
    return T.reshape((m,) * arity + (total,))


def _rows(*residuals) -> np.ndarray:
    """Stack residual arrays into a coefficient matrix without zero or repeated rows."""
    cols = residuals[0].shape[-1]
    if cols == 0:
        return np.zeros((0, 0), dtype=INT)
    K = np.vstack([r.reshape(-1, cols) for r in residuals])
    K = K[K.any(axis=1)]
    if len(K):
        K = np.unique(K, axis=0)
    return K


def _restrict(res, arity: int) -> np.ndarray:
    m = res.shape[0]
    return res.reshape(m ** arity, res.shape[-1])[_free_mask(m, arity)]


def _lift(K: np.ndarray, dom_count: int, N: FinAbGroup, cod: FinAbGroup | None = None) -> GroupHom:
    """The map ``N^cols -> N^rows`` given by the integer matrix ``K``."""
    r = N.rank
    dom = FinAbGroup(N.factors * dom_count)
    if cod is None:
        cod = FinAbGroup(N.factors * len(K))
    if len(K) == 0 or r == 0:
        return GroupHom.zero(dom, cod)
    return GroupHom(dom, cod, np.kron(K, np.eye(r, dtype=INT)).tolist())


def free_count(degree: int, m: int) -> int:
    """Number of free entries of a normalized ``degree``-cochain on a group of order ``m``."""
    if degree == 3:
        return (m - 1) ** 3 + (m - 1) ** 2
    return (m - 1) ** degree


def cochain_space(degree: int, M: FinAbGroup, N: FinAbGroup) -> FinAbGroup:
    return FinAbGroup(N.factors * free_count(degree, M.order))


def _guard(rows: int, cols: int, what: str):
    if rows * cols > MATRIX_BUDGET:
        raise SizeExceeded(f"{what}: a {rows} x {cols} system exceeds the budget of {MATRIX_BUDGET} entries")


@lru_cache(maxsize=128)
def cocycle_map(degree: int, M: FinAbGroup, N: FinAbGroup) -> GroupHom:
    """Linear map on ``C^degree`` whose kernel is ``Z^degree_s``."""
    check_size(M.order)
    m = M.order
    A = add_table(M)
    if degree == 2:
        F = free_count(2, m)
        _guard(m ** 3, F * max(N.rank, 1), "2-cocycle conditions")
        f = _one_hot(m, 2, 0, F)
        K = _rows(*cocycle2_residuals(f, A))
    elif degree == 3:
        Fx = (m - 1) ** 3
        F = free_count(3, m)
        _guard(m ** 4, F * max(N.rank, 1), "3-cocycle conditions")
        xi = _one_hot(m, 3, 0, F)
        eta = _one_hot(m, 2, Fx, F)
        K = _rows(*cocycle3_residuals(xi, eta, A))
    else:
        raise ValueError("degree must be 2 or 3")
    return _lift(K, F, N)


@lru_cache(maxsize=128)
def coboundary_map(degree: int, M: FinAbGroup, N: FinAbGroup) -> GroupHom:
    """Coboundary ``C^(degree-1) -> C^degree`` in free-entry coordinates."""
    check_size(M.order)
    m = M.order
    A = add_table(M)
    cod = cochain_space(degree, M, N)
    if degree == 2:
        F1 = m - 1
        g = _one_hot(m, 1, 0, F1)
        K = _restrict(delta1_array(g, A), 2)
        return _lift(K, F1, N, cod)
    if degree == 3:
        F2 = (m - 1) ** 2
        _guard(m ** 3, F2 * max(N.rank, 1), "coboundary")
        g = _one_hot(m, 2, 0, F2)
        xi, eta = delta2_arrays(g, A)
        K = np.vstack([_restrict(xi, 3), _restrict(eta, 2)])
        return _lift(K, F2, N, cod)
    raise ValueError("degree must be 2 or 3")


def _vector(k) -> tuple:
    return k.to_vector()


def _cochain(degree: int, M, N, vec):
    if degree == 2:
        return SymCochain2.from_vector(M, N, vec)
    return Cochain3Pair.from_vector(M, N, vec)


def _lower_cochain(degree: int, M, N, vec):
    if degree == 2:
        return SymCochain1.from_vector(M, N, vec)
    return SymCochain2.from_vector(M, N, vec)


def is_cocycle(k, degree: int | None = None):
    if isinstance(k, Cochain3Pair):
        return is_sym_3cocycle(k)
    return is_sym_2cocycle(k)


class CohomologyGroup:
    """``H^degree_s(M, N)`` together with the maps needed to use it.

    ``group`` is the abstract quotient; :meth:`classify` sends a cocycle to
    its class; :meth:`representative` returns the lexicographically least
    cocycle of a class (in free-entry coordinates).  ``representatives``
    holds one cocycle per generator of ``group``.
    """

    def __init__(self, degree: int, M: FinAbGroup, N: FinAbGroup):
        if degree not in (2, 3):
            raise ValueError("degree must be 2 or 3")
        self.degree, self.M, self.N = degree, M, N
        self.space = cochain_space(degree, M, N)
        self.cond = cocycle_map(degree, M, N)
        self.delta = coboundary_map(degree, M, N)

    @cached_property
    def _cocycles(self) -> Subgroup:
        return self.cond.decomposition._ker

    @cached_property
    def _quotient(self):
        Zs = self._cocycles
        dz = Zs.as_hom_coords(self.delta)
        return dz.decomposition

    @property
    def cocycle_group(self) -> FinAbGroup:
        """Abstract structure of ``Z^degree_s``."""
        return self._cocycles.group

    def cocycle(self, z):
        """The cocycle with coordinates ``z`` in :attr:`cocycle_group`."""
        return _cochain(self.degree, self.M, self.N, self._cocycles.incl(z))

    @property
    def group(self) -> FinAbGroup:
        return self._quotient.coker

    @property
    def order(self) -> int:
        return self.group.order

    @property
    def coboundary_group(self) -> FinAbGroup:
        return self.delta.decomposition.img

    def check_shape(self, k):
        want = Cochain3Pair if self.degree == 3 else SymCochain2
        if not isinstance(k, want) or (k.M, k.N) != (self.M, self.N):
            raise DomainMismatch(f"expected a degree-{self.degree} cochain on ({self.M}, {self.N})")

    def classify(self, k):
        """Class of the cocycle ``k``; raises :class:`NotACocycle` otherwise."""
        self.check_shape(k)
        chk = is_cocycle(k)
        if not chk:
            raise NotACocycle(f"{chk.condition} fails at {chk.witness}")
        z = self._cocycles.coords(_vector(k))
        return self._quotient.coker_proj(z)

    def classify_many(self, cochains) -> list:
        """Classes of many cocycles at once (membership checked in bulk)."""
        ks = list(cochains)
        if not ks:
            return []
        for k in ks:
            self.check_shape(k)
        V = np.array([_vector(k) for k in ks], dtype=INT).reshape(len(ks), self.space.rank)
        if self.cond.cod.rank and self.space.rank:
            R = (V @ self.cond._arr.T) % np.array(self.cond.cod.factors, dtype=INT)
            bad = np.flatnonzero(R.any(axis=1))
            if len(bad):
                chk = is_cocycle(ks[bad[0]])
                raise NotACocycle(f"{chk.condition} fails at {chk.witness}")
        Zc = self._cocycles.coords_many(V)
        proj = self._quotient.coker_proj
        if not proj.cod.rank:
            return [()] * len(ks)
        H = (Zc @ proj._arr.T) % np.array(proj.cod.factors, dtype=INT) if proj.dom.rank \
            else np.zeros((len(ks), proj.cod.rank), dtype=INT)
        return [tuple(int(a) for a in row) for row in H]

    def representative(self, h):
        """Lexicographically least cocycle in the class ``h``."""
        q = self._quotient
        z = self._cocycles.incl(q.coker_section(self.group.reduce(h)))
        least = self.delta.decomposition.img_lexmin(z)
        return _cochain(self.degree, self.M, self.N, least)

    @cached_property
    def representatives(self) -> list:
        return [self.representative(g) for g in self.group.gens()]

    def classes(self):
        """``(class, least representative)`` for every element of the group."""
        return [(h, self.representative(h)) for h in self.group.elements()]

    def coboundary_witness(self, k):
        """Least lower cochain ``g`` with ``coboundary(g) = k``, or None."""
        self.check_shape(k)
        x = solve_preimage(self.delta, _vector(k))
        if x is None:
            return None
        return _lower_cochain(self.degree, self.M, self.N, x)

    def __repr__(self):
        return f"H^{self.degree}_s({self.M}, {self.N}) = {self.group}"


@lru_cache(maxsize=128)
def sym_cohomology(degree: int, M: FinAbGroup, N: FinAbGroup) -> CohomologyGroup:
    """``H^degree_s(M, N)`` for degree 2 or 3."""
    return CohomologyGroup(degree, M, N)


def class_of(k, H: CohomologyGroup | None = None):
    if H is None:
        H = sym_cohomology(3 if isinstance(k, Cochain3Pair) else 2, k.M, k.N)
    return H.classify(k)


def is_cohomologous(k, k2):
    """Least ``g`` with ``coboundary(g) = k - k2``, or None.

    Works directly with the coboundary map, so it is usable on groups too
    large for the full cocycle computation.
    """
    if type(k) is not type(k2) or (k.M, k.N) != (k2.M, k2.N):
        raise DomainMismatch("cochains live on different groups")
    degree = 3 if isinstance(k, Cochain3Pair) else 2
    for c in (k, k2):
        chk = is_cocycle(c)
        if not chk:
            raise NotACocycle(f"{chk.condition} fails at {chk.witness}")
    delta = coboundary_map(degree, k.M, k.N)
    x = solve_preimage(delta, _vector(k - k2))
    if x is None:
        return None
    return _lower_cochain(degree, k.M, k.N, x)


# brute-force oracle ---------------------------------------------------------

ORACLE_LIMIT = 1 << 24


class OracleResult:
    """Every symmetric cocycle of a degree and its partition into classes.

    ``tables`` holds the cocycles as tuples of indices into ``N.elements()``
    over ``keys``; :attr:`cocycles` converts them to cochain objects.
    """

    def __init__(self, degree, M, N, keys, tables, labels, coboundary_count):
        self.degree, self.M, self.N = degree, M, N
        self.keys = keys
        self.tables = tables
        self.labels = labels
        self.coboundary_count = coboundary_count

    @cached_property
    def cocycles(self) -> list:
        Nel = self.N.elements()
        return [_to_cochain(self.degree, self.M, self.N, self.keys, t, Nel) for t in self.tables]

    @property
    def class_count(self) -> int:
        return len(set(self.labels))

    def classes(self) -> list[list]:
        out: dict[int, list] = {}
        for c, lab in zip(self.cocycles, self.labels):
            out.setdefault(lab, []).append(c)
        return [out[k] for k in sorted(out)]


def _conditions(degree: int, M: FinAbGroup):
    """Cocycle laws as lists of ``(coefficient, entry key)``, written out directly.

    Entry keys are ``('f', x, y)``, ``('xi', x, y, z)`` or ``('eta', x, y)``
    with element indices.  Entries of ``f`` and ``xi`` with a zero argument
    are omitted (normalization); every ``eta`` entry is kept.
    """
    m = M.order
    els = M.elements()

    def s(a, b):
        return M.index(M.add(els[a], els[b]))

    rng = range(m)
    conds = []
    if degree == 2:
        for u, v, t in itertools.product(rng, repeat=3):
            conds.append([(1, ("f", v, t)), (1, ("f", u, s(v, t))),
                          (-1, ("f", u, v)), (-1, ("f", s(u, v), t))])
        for u, v in itertools.product(rng, repeat=2):
            conds.append([(1, ("f", u, v)), (-1, ("f", v, u))])
    else:
        for x, y, z, t in itertools.product(rng, repeat=4):
            conds.append([(1, ("xi", y, z, t)), (-1, ("xi", s(x, y), z, t)),
                          (1, ("xi", x, s(y, z), t)), (-1, ("xi", x, y, s(z, t))),
                          (1, ("xi", x, y, z))])
        for x, y in itertools.product(rng, repeat=2):
            conds.append([(1, ("eta", x, y)), (1, ("eta", y, x))])
        for x, y, z in itertools.product(rng, repeat=3):
            conds.append([(1, ("xi", x, y, z)), (-1, ("xi", y, x, z)), (1, ("xi", y, z, x)),
                          (1, ("eta", x, s(y, z))), (-1, ("eta", x, y)), (-1, ("eta", x, z))])
    out = []
    for c in conds:
        terms: dict = {}
        for coef, key in c:
            if key[0] in ("f", "xi") and 0 in key[1:]:
                continue
            terms[key] = terms.get(key, 0) + coef
        terms = {k: v for k, v in terms.items() if v}
        if terms:
            out.append(terms)
    return out


def _entry_keys(degree: int, m: int):
    nz = range(1, m)
    if degree == 2:
        return [("f", x, y) for x, y in itertools.product(nz, repeat=2)]
    return ([("xi",) + a for a in itertools.product(nz, repeat=3)]
            + [("eta", x, y) for x, y in itertools.product(range(m), repeat=2)])


def _backtrack(keys, conds, N: FinAbGroup):
    """All assignments of ``N``-elements to ``keys`` satisfying ``conds``."""
    Nel = N.elements()
    n = len(Nel)
    addt = [[N.index(N.add(a, b)) for b in Nel] for a in Nel]
    mult = {}

    def mul_table(c):
        if c not in mult:
            mult[c] = [N.index(N.mul(c, a)) for a in Nel]
        return mult[c]

    pos = {k: i for i, k in enumerate(keys)}
    trigger: list[list] = [[] for _ in keys]
    for c in conds:
        items = [(pos[k], mul_table(coef)) for k, coef in c.items()]
        trigger[max(p for p, _ in items)].append(items)
    assign = [0] * len(keys)
    out = []

    def ok(i):
        for items in trigger[i]:
            acc = 0
            for p, tab in items:
                acc = addt[acc][tab[assign[p]]]
            if acc:
                return False
        return True

    def rec(i):
        if i == len(keys):
            out.append(tuple(assign))
            return
        for a in range(n):
            assign[i] = a
            if ok(i):
                rec(i + 1)
        assign[i] = 0

    rec(0)
    return out, Nel


def _to_cochain(degree, M, N, keys, assignment, Nel):
    m = M.order
    if degree == 2:
        v = np.zeros((m, m, N.rank), dtype=INT)
        for k, a in zip(keys, assignment):
            v[k[1], k[2]] = Nel[a]
        return SymCochain2(M, N, v)
    xi = np.zeros((m, m, m, N.rank), dtype=INT)
    eta = np.zeros((m, m, N.rank), dtype=INT)
    for k, a in zip(keys, assignment):
        if k[0] == "xi":
            xi[k[1:]] = Nel[a]
        else:
            eta[k[1:]] = Nel[a]
    return Cochain3Pair(Cochain3(M, N, xi), Cochain(M, N, eta, arity=2))


def _coboundary_forms(degree: int, M: FinAbGroup, keys):
    """For each entry key, the coboundary formula as ``{lower key: coefficient}``."""
    els = M.elements()

    def s(a, b):
        return M.index(M.add(els[a], els[b]))

    forms = []
    for k in keys:
        if degree == 2:
            _, u, v = k
            terms = [(1, ("g", u)), (1, ("g", v)), (-1, ("g", s(u, v)))]
        elif k[0] == "xi":
            _, x, y, z = k
            terms = [(1, ("g", y, z)), (-1, ("g", s(x, y), z)), (1, ("g", x, s(y, z))), (-1, ("g", x, y))]
        else:
            _, x, y = k
            terms = [(1, ("g", y, x)), (-1, ("g", x, y))]
        form: dict = {}
        for coef, key in terms:
            if 0 in key[1:]:
                continue
            form[key] = form.get(key, 0) + coef
        forms.append({key: c for key, c in form.items() if c})
    return forms


def oracle_enumerate(degree: int, M: FinAbGroup, N: FinAbGroup) -> OracleResult:
    """Enumerate all symmetric cocycles and group them into cohomology classes.

    Cocycles are found by backtracking over table entries, checking each
    law as soon as all its entries are assigned.  Coboundaries are
    obtained by applying the coboundary formula to every normalized lower
    cochain, and classes are cosets of that set.
    """
    if degree not in (2, 3):
        raise ValueError("degree must be 2 or 3")
    check_size(M.order)
    m = M.order
    nz = range(1, m)
    lower_keys = [("g",) + a for a in itertools.product(nz, repeat=degree - 1)]
    if N.order ** len(lower_keys) > ORACLE_LIMIT:
        raise SizeExceeded(f"{N.order}^{len(lower_keys)} lower cochains exceed the oracle limit")
    keys = _entry_keys(degree, m)
    tables, Nel = _backtrack(keys, _conditions(degree, M), N)

    n = len(Nel)
    addt = [[N.index(N.add(a, b)) for b in Nel] for a in Nel]
    lpos = {k: i for i, k in enumerate(lower_keys)}
    forms = [[(lpos[k], [N.index(N.mul(c, a)) for a in Nel]) for k, c in f.items()]
             for f in _coboundary_forms(degree, M, keys)]
    coboundaries = set()
    for g in itertools.product(range(n), repeat=len(lower_keys)):
        out = []
        for form in forms:
            acc = 0
            for p, tab in form:
                acc = addt[acc][tab[g[p]]]
            out.append(acc)
        coboundaries.add(tuple(out))

    index = {t: i for i, t in enumerate(tables)}
    labels = [-1] * len(tables)
    label = 0
    for i, t in enumerate(tables):
        if labels[i] >= 0:
            continue
        for b in coboundaries:
            labels[index[tuple(addt[a][c] for a, c in zip(t, b))]] = label
        label += 1
    return OracleResult(degree, M, N, keys, tables, labels, len(coboundaries))


def oracle_check(k) -> Check:
    """Test a cochain against the directly written laws (independent of the residual code).

    Normalization is tested entry by entry; ``eta`` is not required to be
    normalized beforehand, the laws decide.
    """
    M, N = k.M, k.N
    m = M.order
    els = M.elements()
    if isinstance(k, Cochain3Pair):
        degree = 3
        tabs = {"xi": k.xi.values, "eta": k.eta.values}
    else:
        degree = 2
        tabs = {"f": k.values}
    for name, v in tabs.items():
        if name == "eta":
            continue
        for idx in itertools.product(range(m), repeat=v.ndim - 1):
            if 0 in idx and any(int(a) % n for a, n in zip(v[idx], N.factors)):
                return fail("normalized", *(els[i] for i in idx))
    for terms in _conditions(degree, M):
        acc = N.zero
        for (name, *idx), coef in terms.items():
            acc = N.add(acc, N.mul(coef, tuple(int(a) for a in tabs[name][tuple(idx)])))
        if any(acc):
            return fail("law", *((name,) + tuple(els[i] for i in idx) for (name, *idx) in terms))
    return PASS
