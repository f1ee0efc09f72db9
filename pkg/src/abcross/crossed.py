"""Abelian crossed modules ``d: B -> D`` and their morphisms.

A morphism ``M -> M'`` is a triple ``(f1, f0, phi)``: homomorphisms on the
``B`` and ``D`` parts making the square commute, and a symmetric 2-cocycle
``phi`` on ``pi0 M`` with values in ``pi1 M'``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property

from .cochains import SymCochain2, is_sym_2cocycle
from .errors import PASS, Check, DomainMismatch, InvalidMorphism, InvalidTwisting, fail
from .groups import ExactDecomposition, FinAbGroup, GroupHom, compose_hom


@dataclass(frozen=True)
class AbCrossedModule:
    """``d: B -> D`` with trivial action; ``pi0 = coker d`` and ``pi1 = ker d``."""

    B: FinAbGroup
    D: FinAbGroup
    d: GroupHom

    def __post_init__(self):
        if self.d.dom != self.B or self.d.cod != self.D:
            raise DomainMismatch(f"d must map {self.B} to {self.D}, got {self.d}")

    @classmethod
    def of(cls, d: GroupHom) -> "AbCrossedModule":
        return cls(d.dom, d.cod, d)

    @property
    def decomposition(self) -> ExactDecomposition:
        return self.d.decomposition

    @property
    def pi0(self) -> FinAbGroup:
        return self.decomposition.coker

    @property
    def pi1(self) -> FinAbGroup:
        return self.decomposition.ker

    @property
    def proj(self) -> GroupHom:
        """``D -> pi0``."""
        return self.decomposition.coker_proj

    @property
    def incl(self) -> GroupHom:
        """``pi1 -> B``."""
        return self.decomposition.ker_incl

    def section(self, s):
        """Least object of ``D`` in the class ``s``."""
        return self.decomposition.coker_section(s)

    def __str__(self) -> str:
        return f"{self.B} --{[list(r) for r in self.d.matrix]}--> {self.D}"


def homotopy_groups(M: AbCrossedModule):
    """``((pi0, proj: D -> pi0), (pi1, incl: pi1 -> B))``."""
    return (M.pi0, M.proj), (M.pi1, M.incl)


@dataclass(frozen=True)
class CrossedData:
    """A crossed module with abelian ``B`` and ``D`` described by ``(d, g)``.

    ``g`` is a table ``pi0 x pi1 -> pi1`` given as a dict from argument
    pairs to values (missing pairs mean zero).  The module is abelian
    exactly when ``g`` vanishes.
    """

    module: AbCrossedModule
    g: dict = field(default_factory=dict, hash=False, compare=False)

    @cached_property
    def table(self) -> dict:
        M = self.module
        P0, P1 = M.pi0, M.pi1
        out = {}
        for (s, a), v in self.g.items():
            out[(P0.reduce(s), P1.reduce(a))] = P1.reduce(v)
        return out

    def __call__(self, s, a):
        return self.table.get((s, a), self.module.pi1.zero)

    def __eq__(self, other):
        return isinstance(other, CrossedData) and self.module == other.module and \
            {k: v for k, v in self.table.items() if any(v)} == {k: v for k, v in other.table.items() if any(v)}

    def __hash__(self):
        return hash(self.module)


def validate_crossed_data(c: CrossedData) -> Check:
    """Check that ``g`` is normalized and additive in each argument."""
    M = c.module
    P0, P1 = M.pi0, M.pi1
    for (s, a) in c.table:
        if not (P0.contains(s) and P1.contains(a)):
            return fail("domain", s, a)
    e0, e1 = P0.elements(), P1.elements()
    for a in e1:
        if any(c(P0.zero, a)):
            return fail("normalized", P0.zero, a)
    for s in e0:
        if any(c(s, P1.zero)):
            return fail("normalized", s, P1.zero)
    for s, t, a in itertools.product(e0, e0, e1):
        if c(P0.add(s, t), a) != P1.add(c(s, a), c(t, a)):
            return fail("additive in the first argument", s, t, a)
    for s, a, b in itertools.product(e0, e1, e1):
        if c(s, P1.add(a, b)) != P1.add(c(s, a), c(s, b)):
            return fail("additive in the second argument", s, a, b)
    return PASS


def is_abelian(c: CrossedData) -> bool:
    return not any(any(v) for v in c.table.values())


def to_abelian(c: CrossedData) -> AbCrossedModule:
    """The underlying abelian crossed module; the twisting must be valid and zero."""
    chk = validate_crossed_data(c)
    if not chk:
        raise InvalidTwisting(f"{chk.condition} fails at {chk.witness}")
    if not is_abelian(c):
        raise InvalidTwisting("the twisting is non-zero, so the action is not trivial")
    return c.module


def crossed_data(M: AbCrossedModule) -> CrossedData:
    return CrossedData(M, {})


# morphisms -------------------------------------------------------------------


def _induced_pi0(f0: GroupHom, M: AbCrossedModule, M2: AbCrossedModule) -> GroupHom:
    imgs = [M2.proj(f0(M.section(g))) for g in M.pi0.gens()]
    return GroupHom.from_images(M.pi0, M2.pi0, imgs)


def _induced_pi1(f1: GroupHom, M: AbCrossedModule, M2: AbCrossedModule) -> GroupHom:
    imgs = []
    for a in M.pi1.gens():
        c = M2.decomposition.ker_coords(f1(M.incl(a)))
        if c is None:
            raise InvalidMorphism("f1 does not map ker d into ker d'")
        imgs.append(c)
    return GroupHom.from_images(M.pi1, M2.pi1, imgs)


@dataclass(frozen=True)
class AbCrossMorphism:
    """``(f1, f0, phi): source -> target``."""

    source: AbCrossedModule
    target: AbCrossedModule
    f1: GroupHom
    f0: GroupHom
    phi: SymCochain2

    def __post_init__(self):
        S, T = self.source, self.target
        if (self.f1.dom, self.f1.cod) != (S.B, T.B) or (self.f0.dom, self.f0.cod) != (S.D, T.D):
            raise DomainMismatch("f1 and f0 must map the source groups to the target groups")
        if (self.phi.M, self.phi.N) != (S.pi0, T.pi1):
            raise DomainMismatch(f"phi must be a cochain on {S.pi0} with values in {T.pi1}")

    @classmethod
    def strict(cls, source, target, f1, f0) -> "AbCrossMorphism":
        return cls(source, target, f1, f0, SymCochain2.zero(source.pi0, target.pi1))

    @classmethod
    def identity(cls, M: AbCrossedModule) -> "AbCrossMorphism":
        return cls.strict(M, M, GroupHom.identity(M.B), GroupHom.identity(M.D))

    @cached_property
    def pi0_map(self) -> GroupHom:
        return _induced_pi0(self.f0, self.source, self.target)

    @cached_property
    def pi1_map(self) -> GroupHom:
        return _induced_pi1(self.f1, self.source, self.target)


def validate_morphism(m: AbCrossMorphism, M: AbCrossedModule | None = None,
                      M2: AbCrossedModule | None = None) -> Check:
    """The square ``f0 d = d' f1`` commutes and ``phi`` is a symmetric 2-cocycle."""
    if M is not None and M != m.source:
        return fail("source")
    if M2 is not None and M2 != m.target:
        return fail("target")
    S, T = m.source, m.target
    for b in S.B.elements():
        if m.f0(S.d(b)) != T.d(m.f1(b)):
            return fail("square commutes", b)
    chk = is_sym_2cocycle(m.phi)
    if not chk:
        return fail(f"phi {chk.condition}", *chk.witness)
    return PASS


def compose_morphism(n: AbCrossMorphism, m: AbCrossMorphism) -> AbCrossMorphism:
    """``n`` after ``m``.

    ``phi''(s, t) = pi1(n.f1)(m.phi(s, t)) + n.phi(pi0(m.f0) s, pi0(m.f0) t)``.
    """
    if m.target != n.source:
        raise DomainMismatch("target of the first morphism is not the source of the second")
    phi = m.phi.pushforward(n.pi1_map) + n.phi.pullback(m.pi0_map)
    return AbCrossMorphism(m.source, n.target, compose_hom(n.f1, m.f1), compose_hom(n.f0, m.f0), phi)
