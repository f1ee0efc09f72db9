"""Extensions ``0 -> B -> E -> Q -> 0`` of the type of a crossed module ``d: B -> D``.

An extension is stored in normal form: ``E = B x Q`` with
``(b, u) + (c, v) = (b + c + f(u, v), u + v)`` for a symmetric 2-cocycle
``f: Q x Q -> B``, together with ``F: Q -> D`` such that
``eps(b, u) = d(b) + F(u)`` is a homomorphism.  Such pairs ``(f, F)`` are
exactly the functors ``Dis Q -> P`` (see :class:`abcross.picard.DisFunctor`).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .cochains import SymCochain1, SymCochain2, add_table, is_sym_2cocycle
from .cohomology import coboundary_map, oracle_enumerate, sym_cohomology
from .crossed import AbCrossedModule
from .errors import (PASS, BaseMismatch, Check, DomainMismatch, InvalidExtension, InvalidFunctor,
                     NotMono, fail)
from .groups import (FinAbGroup, GroupHom, check_size, compose_hom, hom_from_function,
                     solve_preimage)
from .picard import (DisFunctor, RegularSMFunctor, dis_functor_of,
                     dis_homotopy_rhs, dis_homotopy_system, picard_of, reduce,
                     validate_dis_functor)
from .snf import invariant_factors

INT = np.int64


@dataclass(frozen=True)
class Extension:
    """Normal form ``(f, Fmap)`` of an extension of ``B`` by ``Q`` over ``d: B -> D``."""

    base: AbCrossedModule
    Q: FinAbGroup
    f: SymCochain2
    Fmap: SymCochain1

    def __post_init__(self):
        M = self.base
        if (self.f.M, self.f.N) != (self.Q, M.B):
            raise DomainMismatch(f"f must be a table on {self.Q} with values in {M.B}")
        if (self.Fmap.M, self.Fmap.N) != (self.Q, M.D):
            raise DomainMismatch(f"Fmap must map {self.Q} to {M.D}")

    @property
    def B(self) -> FinAbGroup:
        return self.base.B

    def add(self, x, y):
        """Sum in the total group; elements are pairs ``(b, u)``."""
        (b, u), (c, v) = x, y
        B, Q = self.B, self.Q
        return (B.add(B.add(b, c), self.f(u, v)), Q.add(u, v))

    def neg(self, x):
        b, u = x
        B, Q = self.B, self.Q
        return (B.neg(B.add(b, self.f(u, Q.neg(u)))), Q.neg(u))

    @property
    def zero(self):
        return (self.B.zero, self.Q.zero)

    def elements(self) -> list:
        check_size(self.B.order * self.Q.order)
        return [(b, u) for b in self.B.elements() for u in self.Q.elements()]

    def j(self, b):
        return (b, self.Q.zero)

    def p(self, x):
        return x[1]

    def eps(self, x):
        b, u = x
        return self.base.D.add(self.base.d(b), self.Fmap(u))


def validate_extension(E: Extension) -> Check:
    """``f`` is a symmetric 2-cocycle and ``d(f(u, v)) = F(u) + F(v) - F(u + v)``.

    Together these make ``E`` an abelian group, ``eps`` a homomorphism and
    ``(id, eps)`` a morphism of crossed modules; the sequence
    ``B -> E -> Q`` is exact by construction.
    """
    chk = is_sym_2cocycle(E.f)
    if not chk:
        return fail(f"f {chk.condition}", *chk.witness)
    chk = validate_dis_functor(functor_of_extension(E, check=False))
    if not chk:
        return fail("eps is a homomorphism", *chk.witness)
    return PASS


def induced_psi(E: Extension) -> GroupHom:
    """``Q -> pi0``, ``u -> class of eps(0, u)``."""
    M = E.base
    return hom_from_function(E.Q, M.pi0, lambda u: M.proj(E.Fmap(u)))


def total_group_type(E: Extension) -> FinAbGroup:
    """Isomorphism type of ``E`` in invariant factors.

    ``E`` is generated by ``(b_i, 0)`` and ``(0, u_j)``; besides the orders
    of the ``b_i``, the only relations are
    ``q_j (0, u_j) = (f(u_j, u_j) + f(2u_j, u_j) + ... + f((q_j-1)u_j, u_j), 0)``.
    """
    B, Q = E.B, E.Q
    nb, nq = B.rank, Q.rank
    rels = []
    for i, n in enumerate(B.factors):
        rels.append([n if k == i else 0 for k in range(nb + nq)])
    for j, q in enumerate(Q.factors):
        u = Q.gens()[j]
        tele = B.sum(E.f(Q.mul(k, u), u) for k in range(1, q))
        rels.append([-a for a in tele] + [q if k == j else 0 for k in range(nq)])
    return FinAbGroup(invariant_factors(rels, nb + nq))


def extension_of_functor(F) -> Extension:
    """The extension with ``f = F~`` and ``Fmap = F`` on objects."""
    if isinstance(F, RegularSMFunctor):
        F = dis_functor_of(F)
    if not isinstance(F, DisFunctor):
        raise InvalidFunctor("expected a functor out of a discrete category")
    chk = validate_dis_functor(F)
    if not chk:
        raise InvalidFunctor(f"{chk.condition} fails at {chk.witness}")
    return Extension(F.target.base, F.Q, F.tilde, F.obj)


def functor_of_extension(E: Extension, check: bool = True) -> DisFunctor:
    """The functor ``u -> eps(0, u)`` with structure arrows ``f``."""
    if check:
        chk = validate_extension(E)
        if not chk:
            raise InvalidExtension(f"{chk.condition} fails at {chk.witness}")
    return DisFunctor(E.Q, picard_of(E.base), E.Fmap, E.f)


def are_equivalent(E: Extension, E2: Extension):
    """Least ``alpha: Q -> B`` with ``alpha_0 = 0``, ``d(alpha_u) = F(u) - F'(u)`` and
    ``f(u,v) + alpha_{u+v} = alpha_u + alpha_v + f'(u,v)``; None if there is none.

    ``(b, u) -> (b + alpha_u, u)`` is then an isomorphism ``E -> E'`` over
    ``B`` and ``Q`` compatible with ``eps``.
    """
    if E.base != E2.base or E.Q != E2.Q:
        raise BaseMismatch("extensions over different crossed modules or quotients")
    hom = dis_homotopy_system(E.Q, E.base)
    sol = solve_preimage(hom, dis_homotopy_rhs(E.Q, E.base, E.Fmap, E2.Fmap, E.f, E2.f))
    if sol is None:
        return None
    return SymCochain1.from_vector(E.Q, E.B, sol)


def extension_from_groups(base: AbCrossedModule, E: FinAbGroup, j: GroupHom, p: GroupHom,
                          eps: GroupHom, Q: FinAbGroup | None = None) -> Extension:
    """Normal form of an extension given as homomorphisms ``j: B -> E``, ``p: E -> Q``, ``eps: E -> D``.

    Uses the least preimage ``e_u`` of each ``u`` as set-theoretic section.
    """
    Q = p.cod if Q is None else Q
    B, D = base.B, base.D
    if (j.dom, j.cod, p.dom, eps.dom, eps.cod) != (B, E, E, E, D):
        raise DomainMismatch("maps do not fit together")
    if E.order != B.order * Q.order or j.decomposition.ker.order != 1 or p.decomposition.coker.order != 1:
        raise InvalidExtension("B -> E -> Q is not short exact")
    if not compose_hom(p, j).is_zero:
        raise InvalidExtension("p j is not zero")
    if compose_hom(eps, j) != base.d:
        raise InvalidExtension("eps j is not d")
    sec = {u: solve_preimage(p, u) for u in Q.elements()}

    def f(u, v):
        b = solve_preimage(j, E.sub(E.add(sec[u], sec[v]), sec[Q.add(u, v)]))
        return b

    return Extension(base, Q, SymCochain2.from_function(Q, B, f),
                     SymCochain1.from_function(Q, D, lambda u: eps(sec[u])))


# obstruction and classification ----------------------------------------------


def _pulled_invariant(M: AbCrossedModule, psi: GroupHom):
    if psi.cod != M.pi0:
        raise DomainMismatch(f"psi must land in pi0 = {M.pi0}")
    S = reduce(picard_of(M))
    return S, S.k.pullback(psi)


def obstruction_class(M: AbCrossedModule, Q: FinAbGroup, psi: GroupHom):
    """Class of ``psi^* k`` in ``H^3_s(Q, pi1)``."""
    if psi.dom != Q:
        raise DomainMismatch("psi must be defined on Q")
    _, kq = _pulled_invariant(M, psi)
    return sym_cohomology(3, Q, M.pi1).classify(kq)


@dataclass(frozen=True)
class Obstructed:
    cls: tuple
    h3: object

    @property
    def obstructed(self) -> bool:
        return True


@dataclass(frozen=True)
class Classes:
    """One extension per element of ``h2.group`` (listed in lexicographic order)."""

    extensions: tuple
    h2: object

    @property
    def obstructed(self) -> bool:
        return False

    @property
    def labels(self) -> list:
        return self.h2.group.elements()

    def __len__(self) -> int:
        return len(self.extensions)


ClassificationResult = Obstructed | Classes


def base_functor(M: AbCrossedModule, Q: FinAbGroup, psi: GroupHom) -> DisFunctor | None:
    """The functor at the zero class, or None when the obstruction does not vanish.

    Objects go to ``u(psi(q))`` for the least section ``u``; structure
    arrows are ``g0(q, r) + b(psi q, psi r)``, where ``b`` are the arrows
    used to reduce ``P`` and ``g0`` is the least cochain with coboundary
    ``-psi^* k``.
    """
    S, kq = _pulled_invariant(M, psi)
    x = solve_preimage(coboundary_map(3, Q, M.pi1), (-kq).to_vector())
    if x is None:
        return None
    g0 = SymCochain2.from_vector(Q, M.pi1, x).pushforward(M.incl)
    obj = S.section.pullback(psi)
    tilde = g0 + S.b.pullback(psi)
    return DisFunctor(Q, picard_of(M), obj, tilde)


def classify_extensions(M: AbCrossedModule, Q: FinAbGroup, psi: GroupHom):
    """Equivalence classes of extensions of type ``M`` inducing ``psi``."""
    if psi.dom != Q:
        raise DomainMismatch("psi must be defined on Q")
    F0 = base_functor(M, Q, psi)
    if F0 is None:
        H3 = sym_cohomology(3, Q, M.pi1)
        _, kq = _pulled_invariant(M, psi)
        return Obstructed(H3.classify(kq), H3)
    H2 = sym_cohomology(2, Q, M.pi1)
    exts = []
    for _, rep in H2.classes():
        F = DisFunctor(Q, F0.target, F0.obj, F0.tilde + rep.pushforward(M.incl))
        exts.append(extension_of_functor(F))
    return Classes(tuple(exts), H2)


def canonical_extension(M: AbCrossedModule) -> Extension:
    """``B -> D -> pi0`` in normal form, for injective ``d``."""
    if M.pi1.order != 1:
        raise NotMono("d is not injective")
    P0 = M.pi0
    e = SymCochain1.from_function(P0, M.D, M.section)
    D = M.D

    def f(s, t):
        return solve_preimage(M.d, D.sub(D.add(e(s), e(t)), e(P0.add(s, t))))

    return Extension(M, P0, SymCochain2.from_function(P0, M.B, f), e)


def pullback_extension(Dext: Extension, psi: GroupHom) -> Extension:
    """The extension induced from ``Dext`` (over ``pi0``) along ``psi: Q -> pi0``."""
    M = Dext.base
    if M.pi1.order != 1:
        raise NotMono("d is not injective")
    if psi.cod != Dext.Q:
        raise DomainMismatch("psi must land in the quotient of the extension")
    return Extension(M, psi.dom, Dext.f.pullback(psi), Dext.Fmap.pullback(psi))


# exhaustive oracle --------------------------------------------------------------


def enumerate_extensions(M: AbCrossedModule, Q: FinAbGroup, psi: GroupHom | None = None) -> list:
    """Every normal-form extension of type ``M`` (inducing ``psi`` if given).

    Cocycles come from the backtracking enumerator; object maps are
    enumerated over all normalized maps ``Q -> D``.
    """
    B, D = M.B, M.D
    cocycles = oracle_enumerate(2, Q, B).cocycles
    m = Q.order
    check_size(D.order ** max(m - 1, 0), "object maps")
    A = add_table(Q)
    Del = np.array(D.elements(), dtype=INT).reshape(D.order, D.rank)
    cands = np.array(list(itertools.product(range(D.order), repeat=m - 1)), dtype=INT).reshape(D.order ** (m - 1), m - 1)
    tabs = np.concatenate([np.zeros((len(cands), 1), dtype=INT), cands], axis=1)
    vals = Del[tabs]                                      # (n, m, rank D)
    fac = np.array(D.factors, dtype=INT)
    dF = vals[:, :, None] + vals[:, None, :] - vals[:, A]  # (n, m, m, rank D)
    if psi is not None:
        want = np.array([psi(u) for u in Q.elements()], dtype=INT).reshape(m, M.pi0.rank)
        proj = M.proj
        cls = (vals @ proj._arr.T) % np.array(M.pi0.factors, dtype=INT) if M.pi0.rank and D.rank \
            else np.zeros((len(vals), m, M.pi0.rank), dtype=INT)
        keep_psi = (cls == want[None]).all(axis=(1, 2))
    else:
        keep_psi = np.ones(len(vals), dtype=bool)
    out = []
    for f in cocycles:
        df = f.pushforward(M.d).values
        ok = keep_psi & (((dF - df[None]) % fac) == 0).all(axis=(1, 2, 3)) if D.rank else keep_psi
        for i in np.flatnonzero(ok):
            out.append(Extension(M, Q, f, SymCochain1(Q, D, vals[i])))
    return out


def partition_by_equivalence(exts) -> list[list]:
    """Group extensions into equivalence classes using :func:`are_equivalent`."""
    classes: list[list] = []
    for E in exts:
        for c in classes:
            if are_equivalent(c[0], E) is not None:
                c.append(E)
                break
        else:
            classes.append([E])
    return classes
