"""The built-in test corpus: small cyclic crossed modules, quotients and maps."""

from __future__ import annotations

import random
from functools import lru_cache

from .cochains import SymCochain2
from .cohomology import sym_cohomology
from .crossed import AbCrossedModule, AbCrossMorphism
from .groups import FinAbGroup, GroupHom, Z, homs

CYCLIC_ORDERS = (1, 2, 3, 4, 6, 8)


def cyclic_hom(a: int, b: int, image: int) -> GroupHom:
    """``Z/a -> Z/b`` sending the generator to ``image``."""
    A, B = Z(a), Z(b)
    if not A.rank:
        return GroupHom.zero(A, B)
    if not B.rank:
        return GroupHom.zero(A, B)
    return GroupHom(A, B, [[image]])


@lru_cache(maxsize=None)
def crossed_modules(orders=CYCLIC_ORDERS) -> tuple:
    """Every ``d: Z/a -> Z/b`` with ``a, b`` in ``orders``."""
    out = []
    for a in orders:
        for b in orders:
            for d in homs(Z(a), Z(b)):
                out.append(AbCrossedModule(Z(a), Z(b), d))
    return tuple(out)


def quotient_groups() -> tuple:
    return (Z(1), Z(2), Z(3), Z(4), FinAbGroup((2, 2)))


def extension_instances(limit: int = 1 << 20):
    """``(M, Q, psi)`` with ``|B|^(|Q|^2) <= limit`` and ``psi`` ranging over ``Hom(Q, pi0 M)``."""
    for M in crossed_modules():
        for Q in quotient_groups():
            if M.B.order ** (Q.order ** 2) > limit:
                continue
            for psi in homs(Q, M.pi0):
                yield M, Q, psi


def random_cocycle(M: FinAbGroup, N: FinAbGroup, rng: random.Random) -> SymCochain2:
    H = sym_cohomology(2, M, N)
    Zg = H.cocycle_group
    return H.cocycle(tuple(rng.randrange(n) for n in Zg.factors))


def morphisms_between(M: AbCrossedModule, M2: AbCrossedModule):
    """All strict morphisms ``(f1, f0, 0)`` between two crossed modules."""
    for f1 in homs(M.B, M2.B):
        for f0 in homs(M.D, M2.D):
            if all(f0(M.d(b)) == M2.d(f1(b)) for b in M.B.gens()):
                yield AbCrossMorphism.strict(M, M2, f1, f0)


def sample_morphisms(n: int, seed: int = 0) -> list:
    """``n`` morphisms between corpus modules with random cocycle parts."""
    rng = random.Random(seed)
    mods = crossed_modules()
    out = []
    while len(out) < n:
        M, M2 = rng.choice(mods), rng.choice(mods)
        strict = list(morphisms_between(M, M2))
        m = rng.choice(strict)
        phi = random_cocycle(M.pi0, M2.pi1, rng)
        out.append(AbCrossMorphism(M, M2, m.f1, m.f0, phi))
    return out


def sample_composable(n: int, seed: int = 0) -> list:
    """``n`` pairs ``(m, m2)`` of corpus morphisms with ``m2`` composable after ``m``."""
    rng = random.Random(seed)
    mods = crossed_modules()
    out = []
    while len(out) < n:
        M, M2, M3 = rng.choice(mods), rng.choice(mods), rng.choice(mods)
        m = rng.choice(list(morphisms_between(M, M2)))
        m2 = rng.choice(list(morphisms_between(M2, M3)))
        m = AbCrossMorphism(M, M2, m.f1, m.f0, random_cocycle(M.pi0, M2.pi1, rng))
        m2 = AbCrossMorphism(M2, M3, m2.f1, m2.f0, random_cocycle(M2.pi0, M3.pi1, rng))
        out.append((m, m2))
    return out
