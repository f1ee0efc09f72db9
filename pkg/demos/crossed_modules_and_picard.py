"""Abelian crossed modules, their morphisms, and the strict Picard categories they define.

Run with ``python demos/crossed_modules_and_picard.py``.
"""

from __future__ import annotations

from abcross import (AbCrossedModule, AbCrossMorphism, GroupHom, SymCochain2, Z, are_homotopic,
                     base_of, compose_functors, compose_morphism, functor_of_morphism, hom_set,
                     morphism_of_functor, picard_of, validate_morphism)

mod2 = AbCrossedModule.of(GroupHom(Z(4), Z(2), [[1]]))
times2 = AbCrossedModule.of(GroupHom(Z(2), Z(4), [[2]]))
zero = AbCrossedModule.of(GroupHom(Z(2), Z(2), [[0]]))

for M in (mod2, times2, zero):
    print(f"{M}: pi0 = {M.pi0}, pi1 = {M.pi1}")

# Objects of the Picard category are elements of D; arrows x -> y are b with d(b) = x - y.
P = picard_of(times2)
print("Hom(2, 0) =", hom_set(P, (2,), (0,)), " Hom(1, 0) =", hom_set(P, (1,), (0,)))
print("base_of(picard_of(M)) == M:", base_of(P) == times2)

# A strict morphism and one twisted by a symmetric 2-cocycle.
m = AbCrossMorphism.strict(mod2, times2, GroupHom(Z(4), Z(2), [[1]]), GroupHom(Z(2), Z(4), [[2]]))
print("square commutes:", bool(validate_morphism(m)))
ident = GroupHom.identity(Z(2))
phi = SymCochain2.from_entries(Z(2), Z(2), {((1,), (1,)): (1,)})
twist = AbCrossMorphism(zero, zero, ident, ident, phi)

# Morphisms and regular functors are the same data; composition agrees on both sides.
F = functor_of_morphism(twist)
print("structure arrow F~(1, 1) =", F.tilde((1,), (1,)))
print("round trip exact:", morphism_of_functor(F) == twist)
FF = compose_functors(F, F)
print("composite equals composite morphism:", FF == functor_of_morphism(compose_morphism(twist, twist)))

# The twisted functor is not homotopic to the identity; the doubled twist is.
print("F ~ id:", are_homotopic(functor_of_morphism(AbCrossMorphism.identity(zero)), F) is not None)
print("F.F ~ id:", are_homotopic(functor_of_morphism(AbCrossMorphism.identity(zero)), FF) is not None)
