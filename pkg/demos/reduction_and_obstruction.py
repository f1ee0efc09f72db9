"""Reducing a strict Picard category to (pi0, pi1, k) and the obstruction to realizing a functor type.

Run with ``python demos/reduction_and_obstruction.py``.
"""

from __future__ import annotations

from abcross import (AbCrossedModule, Cochain3Pair, FunctorTypePair, GroupHom, ReducedPicard, Z,
                     class_of, dis, functor_classes, is_cohomologous, obstruction, picard_of, reduce)

M = AbCrossedModule.of(GroupHom(Z(4), Z(4), [[2]]))
S = reduce(picard_of(M))
print(f"reduce(Z/4 -x2-> Z/4): pi0 = {S.M}, pi1 = {S.N}, k zero: {S.k.is_zero}")
print("section:", dict(S.section.entries()), " arrows b:", dict(S.b.entries()))

# A different section changes k only by a coboundary.
S2 = reduce(picard_of(M), "greatest")
print("least and greatest sections cohomologous:", is_cohomologous(S.k, S2.k) is not None)

# Synthetic targets over (Z/2, Z/2): one for each class of H3_s(Z/2, Z/2).
Z2 = Z(2)
source = reduce(dis(Z2))
t = FunctorTypePair(GroupHom.identity(Z2), GroupHom.zero(Z(1), Z2))
targets = {"k = 0": Cochain3Pair.zero(Z2, Z2),
           "eta(1,1) = 1": Cochain3Pair.from_entries(Z2, Z2, eta={((1,), (1,)): (1,)})}
for label, k in targets.items():
    T = ReducedPicard(Z2, Z2, k)
    obs = obstruction(t, source, T)
    found = functor_classes(t, source, T)
    print(f"target {label}: obstruction class {class_of(obs)}, {len(found)} functor classes")
