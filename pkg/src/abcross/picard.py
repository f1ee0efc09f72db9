"""Strict Picard categories of abelian crossed modules, their functors and reductions.

The category ``P`` of ``d: B -> D`` has the elements of ``D`` as objects
and ``Hom(x, y) = {b : d(b) = x - y}``; composition and tensor product are
addition.  Regular symmetric monoidal functors ``P -> P'`` are the same
data as morphisms of crossed modules, and :func:`reduce` computes the
invariant ``(pi0, pi1, k)`` of ``P``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache

import numpy as np

from .cochains import (Cochain3Pair, SymCochain1, SymCochain2, add_table,
                       coboundary2, is_sym_2cocycle, is_sym_3cocycle)
from .cohomology import coboundary_map, is_cohomologous, sym_cohomology
from .crossed import (AbCrossedModule, AbCrossMorphism, _induced_pi0, _induced_pi1,
                      validate_morphism)
from .errors import (PASS, Check, DomainMismatch, InvalidFunctor, InvalidMorphism, NotACocycle,
                     fail)
from .groups import FinAbGroup, GroupHom, check_size, compose_hom, hom_from_function, solve_preimage

INT = np.int64


@dataclass(frozen=True)
class StrictPicard:
    """The strict Picard category of an abelian crossed module."""

    base: AbCrossedModule

    @property
    def objects(self) -> FinAbGroup:
        return self.base.D

    @property
    def arrows(self) -> FinAbGroup:
        return self.base.B

    def is_arrow(self, b, x, y) -> bool:
        D = self.base.D
        return self.base.d(b) == D.sub(x, y)

    def compose(self, b, c):
        """``b: x -> y`` followed by ``c: y -> z``."""
        return self.base.B.add(b, c)

    def tensor(self, b, c):
        return self.base.B.add(b, c)

    def unit(self):
        return self.base.D.zero


def picard_of(M: AbCrossedModule) -> StrictPicard:
    return StrictPicard(M)


def base_of(P: StrictPicard) -> AbCrossedModule:
    return P.base


@lru_cache(maxsize=256)
def dis(Q: FinAbGroup) -> StrictPicard:
    """The discrete category on ``Q``: the crossed module ``0 -> Q``."""
    O = FinAbGroup()
    return StrictPicard(AbCrossedModule(O, Q, GroupHom.zero(O, Q)))


def is_discrete(P: StrictPicard) -> bool:
    return P.base.B.order == 1


def hom_set(P: StrictPicard, x, y) -> list:
    """All ``b`` with ``d(b) = x - y``, in lexicographic order."""
    M = P.base
    b0 = solve_preimage(M.d, M.D.sub(x, y))
    if b0 is None:
        return []
    check_size(M.pi1.order, "automorphism group")
    return sorted(M.B.add(b0, M.incl(a)) for a in M.pi1.elements())


# regular functors ------------------------------------------------------------


@dataclass(frozen=True)
class RegularSMFunctor:
    """Functor ``x -> f0(x)``, ``b -> f1(b)`` with ``F~_{x,y} = phi(x mod Im d, y mod Im d)``."""

    source: StrictPicard
    target: StrictPicard
    f0: GroupHom
    f1: GroupHom
    phi: SymCochain2

    def __post_init__(self):
        S, T = self.source.base, self.target.base
        if (self.f0.dom, self.f0.cod) != (S.D, T.D) or (self.f1.dom, self.f1.cod) != (S.B, T.B):
            raise DomainMismatch("object and arrow maps do not match the categories")
        if (self.phi.M, self.phi.N) != (S.pi0, T.pi1):
            raise DomainMismatch(f"phi must be a cochain on {S.pi0} with values in {T.pi1}")

    def obj(self, x):
        return self.f0(x)

    def mor(self, b):
        return self.f1(b)

    def tilde(self, x, y):
        """The structure arrow ``F(x) + F(y) -> F(x + y)`` as an element of ``B'``."""
        S, T = self.source.base, self.target.base
        return T.incl(self.phi(S.proj(x), S.proj(y)))

    @classmethod
    def identity(cls, P: StrictPicard) -> "RegularSMFunctor":
        return functor_of_morphism(AbCrossMorphism.identity(P.base))

    @property
    def is_strict(self) -> bool:
        return self.phi.is_zero


def functor_of_morphism(m: AbCrossMorphism) -> RegularSMFunctor:
    chk = validate_morphism(m)
    if not chk:
        raise InvalidMorphism(f"{chk.condition} fails at {chk.witness}")
    return RegularSMFunctor(picard_of(m.source), picard_of(m.target), m.f0, m.f1, m.phi)


def morphism_of_functor(F: RegularSMFunctor) -> AbCrossMorphism:
    return AbCrossMorphism(F.source.base, F.target.base, F.f1, F.f0, F.phi)


def validate_functor(F: RegularSMFunctor) -> Check:
    return validate_morphism(morphism_of_functor(F))


def compose_functors(G: RegularSMFunctor, F: RegularSMFunctor) -> RegularSMFunctor:
    """``G`` after ``F``; the structure arrows are ``G(F~_{x,y}) + G~_{Fx,Fy}``."""
    if F.target != G.source:
        raise DomainMismatch("F does not land in the source of G")
    S, T = F.source.base, G.target.base
    P0 = S.pi0

    def phi(s, t):
        x, y = S.section(s), S.section(t)
        arrow = T.B.add(G.f1(F.tilde(x, y)), G.tilde(F.f0(x), F.f0(y)))
        c = T.decomposition.ker_coords(arrow)
        if c is None:
            raise InvalidFunctor("composite structure arrow is not an automorphism of the unit")
        return c

    table = SymCochain2.from_function(P0, T.pi1, phi)
    return RegularSMFunctor(F.source, G.target, compose_hom(G.f0, F.f0), compose_hom(G.f1, F.f1), table)


# functors out of a discrete category ------------------------------------------


@dataclass(frozen=True)
class DisFunctor:
    """Symmetric monoidal functor ``Dis Q -> P`` with ``F(0) = 0``.

    ``obj`` is any normalized map ``Q -> D`` (not necessarily additive) and
    ``tilde(u, v)`` an arrow ``F(u) + F(v) -> F(u + v)`` of ``P``, i.e. an
    element of ``B`` with ``d(tilde(u, v)) = F(u) + F(v) - F(u + v)``.
    """

    Q: FinAbGroup
    target: StrictPicard
    obj: SymCochain1
    tilde: SymCochain2

    def __post_init__(self):
        M = self.target.base
        if (self.obj.M, self.obj.N) != (self.Q, M.D) or (self.tilde.M, self.tilde.N) != (self.Q, M.B):
            raise DomainMismatch("object map or structure arrows have the wrong shape")

    @property
    def source(self) -> StrictPicard:
        return dis(self.Q)

    @cached_property
    def psi(self) -> GroupHom:
        """Induced map ``Q -> pi0``."""
        M = self.target.base
        return hom_from_function(self.Q, M.pi0, lambda u: M.proj(self.obj(u)))


def validate_dis_functor(F: DisFunctor) -> Check:
    """Structure arrows are arrows of ``P``, and satisfy the coherence laws."""
    M = F.target.base
    Q = F.Q
    lhs = F.tilde.pushforward(M.d)
    A = add_table(Q)
    o = F.obj.values
    dobj = o[:, None] + o[None, :] - o[A]
    fac = np.array(M.D.factors, dtype=INT)
    bad = np.argwhere(((lhs.values - dobj) % fac).any(axis=-1)) if M.D.rank else []
    if len(bad):
        els = Q.elements()
        return fail("structure arrows have the right endpoints", els[bad[0][0]], els[bad[0][1]])
    chk = is_sym_2cocycle(F.tilde)
    if not chk:
        return fail(f"structure arrows {chk.condition}", *chk.witness)
    return PASS


def dis_functor_of(F: RegularSMFunctor) -> DisFunctor:
    """View a regular functor out of a discrete category as a :class:`DisFunctor`."""
    if not is_discrete(F.source):
        raise InvalidFunctor("source is not discrete")
    Q = F.source.base.D
    obj = SymCochain1.from_function(Q, F.target.base.D, F.f0)
    tilde = SymCochain2.from_function(Q, F.target.base.B, F.tilde)
    return DisFunctor(Q, F.target, obj, tilde)


# homotopies ----------------------------------------------------------------------


def _flat(G: FinAbGroup, xs) -> tuple:
    return tuple(a for x in xs for a in x)


@lru_cache(maxsize=256)
def _strict_homotopy_system(S: AbCrossedModule, T: AbCrossedModule):
    D, B, Dt, Bt = S.D, S.B, T.D, T.B
    check_size(D.order * max(B.order, D.order), "homotopy system")
    objs = D.elements()[1:]
    arrows = B.elements()[1:]
    U = FinAbGroup(Bt.factors * len(objs))
    cod = FinAbGroup(Dt.factors * len(objs) + Bt.factors * (len(arrows) * D.order + len(objs) ** 2))
    r = Bt.rank

    def lhs(vec):
        def th(x):
            i = D.index(x)
            return tuple(vec[(i - 1) * r:i * r]) if i else Bt.zero
        out = [T.d(th(x)) for x in objs]
        out += [Bt.sub(th(D.add(S.d(b), y)), th(y)) for b in arrows for y in D.elements()]
        out += [Bt.sub(th(D.add(x, y)), Bt.add(th(x), th(y))) for x in objs for y in objs]
        return _flat(cod, out)

    return hom_from_function(U, cod, lhs), objs, arrows


def _theta(vec, Q: FinAbGroup, B: FinAbGroup) -> SymCochain1:
    return SymCochain1.from_vector(Q, B, vec)


def are_homotopic(F, F2):
    """Least natural isomorphism ``theta: F => F2``, or None.

    ``theta`` assigns to each object ``x`` an arrow ``F(x) -> F2(x)``; it is
    natural, monoidal and ``theta(0) = 0``.  Works for regular functors and
    for :class:`DisFunctor`.
    """
    if isinstance(F, DisFunctor) or isinstance(F2, DisFunctor):
        F = F if isinstance(F, DisFunctor) else dis_functor_of(F)
        F2 = F2 if isinstance(F2, DisFunctor) else dis_functor_of(F2)
        return _dis_homotopy(F, F2)
    if (F.source, F.target) != (F2.source, F2.target):
        raise DomainMismatch("functors have different source or target")
    S, T = F.source.base, F.target.base
    hom, objs, arrows = _strict_homotopy_system(S, T)
    D, Bt = S.D, T.B
    rhs = [T.D.sub(F.f0(x), F2.f0(x)) for x in objs]
    rhs += [Bt.sub(F.f1(b), F2.f1(b)) for b in arrows for _ in D.elements()]
    rhs += [T.incl(T.pi1.sub(F2.phi(S.proj(x), S.proj(y)), F.phi(S.proj(x), S.proj(y))))
            for x in objs for y in objs]
    sol = solve_preimage(hom, _flat(hom.cod, rhs))
    if sol is None:
        return None
    return _theta(sol, D, Bt)


@lru_cache(maxsize=256)
def dis_homotopy_system(Q: FinAbGroup, T: AbCrossedModule) -> GroupHom:
    """Linear part of the equations for ``alpha: Q -> B`` relating two functors out of ``Dis Q``.

    Rows: ``d(alpha_u)`` for ``u != 0``, then ``alpha_{u+v} - alpha_u - alpha_v``
    for ``u, v != 0``.
    """
    B, D = T.B, T.D
    check_size(Q.order ** 2, "homotopy system")
    nz = Q.elements()[1:]
    U = FinAbGroup(B.factors * len(nz))
    cod = FinAbGroup(D.factors * len(nz) + B.factors * len(nz) ** 2)
    r = B.rank

    def lhs(vec):
        def al(u):
            i = Q.index(u)
            return tuple(vec[(i - 1) * r:i * r]) if i else B.zero
        out = [T.d(al(u)) for u in nz]
        out += [B.sub(al(Q.add(u, v)), B.add(al(u), al(v))) for u in nz for v in nz]
        return _flat(cod, out)

    return hom_from_function(U, cod, lhs)


def dis_homotopy_rhs(Q, T: AbCrossedModule, obj, obj2, tilde, tilde2) -> tuple:
    m = Q.order
    r_d, r_b = T.D.rank, T.B.rank
    dob = (np.asarray(obj.values) - np.asarray(obj2.values))[1:]
    dt = (np.asarray(tilde2.values) - np.asarray(tilde.values))[1:, 1:]
    parts = []
    if r_d:
        parts.append((dob % np.array(T.D.factors, dtype=INT)).reshape(-1))
    if r_b:
        parts.append((dt % np.array(T.B.factors, dtype=INT)).reshape(-1))
    if not parts or m == 1:
        return ()
    return tuple(int(a) for a in np.concatenate(parts))


def _dis_homotopy(F: DisFunctor, F2: DisFunctor):
    if (F.Q, F.target) != (F2.Q, F2.target):
        raise DomainMismatch("functors have different source or target")
    T = F.target.base
    hom = dis_homotopy_system(F.Q, T)
    sol = solve_preimage(hom, dis_homotopy_rhs(F.Q, T, F.obj, F2.obj, F.tilde, F2.tilde))
    if sol is None:
        return None
    return _theta(sol, F.Q, T.B)


# reduction -------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class ReducedPicard:
    """Picard category of type ``(M, N)`` with invariant ``k = (xi, eta)``.

    When produced by :func:`reduce`, ``section`` (a map ``M -> D``) and
    ``b`` (a table ``M x M -> B``) record the choices that produced ``k``.
    """

    M: FinAbGroup
    N: FinAbGroup
    k: Cochain3Pair
    section: SymCochain1 | None = None
    b: SymCochain2 | None = None

    def __post_init__(self):
        if (self.k.M, self.k.N) != (self.M, self.N):
            raise DomainMismatch("k does not match the groups")
        chk = is_sym_3cocycle(self.k)
        if not chk:
            raise NotACocycle(f"{chk.condition} fails at {chk.witness}")

    def __eq__(self, other):
        return isinstance(other, ReducedPicard) and (self.M, self.N, self.k) == (other.M, other.N, other.k)

    def __hash__(self):
        return hash((self.M, self.N, self.k))


def _kernel_coords(c, M: AbCrossedModule):
    """Rewrite a ``B``-valued table whose values lie in ``ker d`` in ``pi1`` coordinates."""
    sub = M.decomposition._ker
    vals = c.values
    lead = vals.shape[:-1]
    flat = vals.reshape(int(np.prod(lead)), M.B.rank)
    if len(flat) and M.B.rank:
        coords = sub.coords_many(flat)
    else:
        coords = np.zeros((len(flat), M.pi1.rank), dtype=INT)
    out = coords.reshape(lead + (M.pi1.rank,))
    return type(c)._make(c.M, M.pi1, out, c.arity)


def section_table(M: AbCrossedModule, section="least") -> SymCochain1:
    """A normalized section ``pi0 -> D`` of the projection."""
    dec = M.decomposition
    if section == "least":
        fn = dec.coker_section
    elif section == "greatest":
        fn = dec.coker_section_max
    elif callable(section):
        fn = section
    else:
        raise ValueError(f"unknown section {section!r}")
    u = SymCochain1.from_function(M.pi0, M.D, fn)
    for s in M.pi0.elements():
        if M.proj(u(s)) != s:
            raise ValueError(f"section value {u(s)} is not in the class {s}")
    return u


def reduce(P: StrictPicard, section="least") -> ReducedPicard:
    """The invariant ``(pi0, pi1, k)`` of ``P``.

    With the section ``u`` and ``b_{s,t}`` the least arrow
    ``u(s) + u(t) -> u(s + t)``, ``k`` is the coboundary of ``b``:
    ``xi(s,t,r) = b_{t,r} - b_{s+t,r} + b_{s,t+r} - b_{s,t}`` and
    ``eta(s,t) = b_{t,s} - b_{s,t}``, read in ``ker d``.
    """
    M = P.base
    P0 = M.pi0
    u = section_table(M, section)
    D = M.D

    def b(s, t):
        x = solve_preimage(M.d, D.sub(D.add(u(s), u(t)), u(P0.add(s, t))))
        assert x is not None
        return x

    btab = SymCochain2.from_function(P0, M.B, b)
    kB = coboundary2(btab)
    k = Cochain3Pair(_kernel_coords(kB.xi, M), _kernel_coords(kB.eta, M))
    return ReducedPicard(P0, M.pi1, k, section=u, b=btab)


@dataclass(frozen=True)
class FunctorTypePair:
    """Homomorphisms ``phi0: M -> M'`` on objects and ``f: N -> N'`` on automorphisms."""

    phi0: GroupHom
    f: GroupHom


def reduced_type(F: RegularSMFunctor) -> FunctorTypePair:
    S, T = F.source.base, F.target.base
    for b in S.B.gens():
        if F.f0(S.d(b)) != T.d(F.f1(b)):
            raise InvalidFunctor("f0 does not map Im d into Im d'")
    return FunctorTypePair(_induced_pi0(F.f0, S, T), _induced_pi1(F.f1, S, T))


def obstruction(t: FunctorTypePair, S: ReducedPicard, S2: ReducedPicard) -> Cochain3Pair:
    """``phi0^* k' - f_* k`` on ``(S.M, S'.N)``."""
    if (t.phi0.dom, t.phi0.cod) != (S.M, S2.M) or (t.f.dom, t.f.cod) != (S.N, S2.N):
        raise DomainMismatch("type pair does not match the reduced categories")
    return S2.k.pullback(t.phi0) - S.k.pushforward(t.f)


@dataclass(frozen=True)
class ReducedSMFunctor:
    """Functor of type ``(phi0, f)`` with structure arrows ``tilde: M x M -> N'``."""

    t: FunctorTypePair
    source: ReducedPicard
    target: ReducedPicard
    tilde: SymCochain2


def validate_reduced_functor(F: ReducedSMFunctor) -> Check:
    """``tilde`` is coherent iff its coboundary is minus the obstruction."""
    k = obstruction(F.t, F.source, F.target)
    diff = coboundary2(F.tilde) + k
    if not diff.is_zero:
        return fail("coherence")
    return PASS


def realizing_cochain(t: FunctorTypePair, S: ReducedPicard, S2: ReducedPicard):
    """Least ``g`` with ``coboundary2(g) = -obstruction``, or None."""
    k = obstruction(t, S, S2)
    x = solve_preimage(coboundary_map(3, S.M, S2.N), (-k).to_vector())
    if x is None:
        return None
    return SymCochain2.from_vector(S.M, S2.N, x)


def is_realizable(t: FunctorTypePair, S: ReducedPicard, S2: ReducedPicard) -> bool:
    return realizing_cochain(t, S, S2) is not None


def functor_classes(t: FunctorTypePair, S: ReducedPicard, S2: ReducedPicard) -> list:
    """One functor per homotopy class of realizations of ``t``.

    The classes are a torsor under ``H^2_s(S.M, S'.N)``; the list is indexed
    by the elements of that group in lexicographic order, with the least
    realizing cochain at the zero class.
    """
    g0 = realizing_cochain(t, S, S2)
    if g0 is None:
        return []
    H2 = sym_cohomology(2, S.M, S2.N)
    return [ReducedSMFunctor(t, S, S2, g0 + rep) for _, rep in H2.classes()]


def reduced_homotopy(F: ReducedSMFunctor, F2: ReducedSMFunctor):
    """Least ``theta: M -> N'`` with ``coboundary(theta) = F~ - F2~``, or None."""
    if (F.t, F.source, F.target) != (F2.t, F2.source, F2.target):
        raise DomainMismatch("functors of different types")
    return is_cohomologous(F.tilde, F2.tilde)
