from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from abcross import (AbCrossedModule, AbCrossMorphism, Cochain3Pair, DisFunctor, DomainMismatch, FinAbGroup,
                     FunctorTypePair, GroupHom, InvalidMorphism, ReducedPicard, ReducedSMFunctor,
                     RegularSMFunctor, SymCochain1, SymCochain2, Z, are_homotopic, base_of, class_of,
                     coboundary, coboundary2, compose_functors, compose_morphism, dis, functor_classes,
                     functor_of_morphism, hom_set, is_cohomologous, is_realizable, morphism_of_functor,
                     obstruction, oracle_enumerate, picard_of, reduce, reduced_homotopy, reduced_type,
                     sym_cohomology, validate_dis_functor, validate_functor, validate_reduced_functor)
from abcross.corpus import (crossed_modules, cyclic_hom, morphisms_between, random_cocycle, sample_composable,
                            sample_morphisms)
from abcross.groups import homs

Z1, Z2, Z4 = Z(1), Z(2), Z(4)
MOD2 = AbCrossedModule.of(cyclic_hom(4, 2, 1))
TIMES2 = AbCrossedModule.of(cyclic_hom(2, 4, 2))
ZERO22 = AbCrossedModule.of(cyclic_hom(2, 2, 0))
DOUBLE4 = AbCrossedModule.of(cyclic_hom(4, 4, 2))
G11 = SymCochain2.from_entries(Z2, Z2, {((1,), (1,)): (1,)})
ETA11 = Cochain3Pair.from_entries(Z2, Z2, eta={((1,), (1,)): (1,)})
ID2 = GroupHom.identity(Z2)


def test_round_trip_and_hom_sets():
    for M in crossed_modules():
        assert base_of(picard_of(M)) == M
    P = picard_of(MOD2)
    assert P.objects.order == 2
    assert hom_set(P, (0,), (0,)) == [(0,), (2,)]
    assert hom_set(P, (1,), (1,)) == [(0,), (2,)]
    assert hom_set(P, (1,), (0,)) == [(1,), (3,)]
    P = picard_of(TIMES2)
    assert hom_set(P, (2,), (0,)) == [(1,)]
    assert hom_set(P, (1,), (0,)) == []
    assert hom_set(P, (3,), (1,)) == [(1,)]


def test_discrete_category():
    Q = FinAbGroup.direct_sum(Z2, Z2, Z(3))
    P = dis(Q)
    for x in Q.elements():
        for y in Q.elements():
            assert hom_set(P, x, y) == ([()] if x == y else [])
    S = reduce(P)
    assert (S.M.factors, S.N) == ((2, 6), Z1) and S.k.is_zero


def test_identity_and_strict_functors():
    F = functor_of_morphism(AbCrossMorphism.identity(MOD2))
    assert F == RegularSMFunctor.identity(picard_of(MOD2))
    assert F.obj((1,)) == (1,) and F.mor((3,)) == (3,)
    for m in morphisms_between(MOD2, TIMES2):
        F = functor_of_morphism(m)
        assert F.is_strict
        assert all(F.tilde(x, y) == (0,) for x in MOD2.D.elements() for y in MOD2.D.elements())


def test_functor_round_trip_nonzero_twist():
    m = AbCrossMorphism(ZERO22, ZERO22, ID2, ID2, G11)
    F = functor_of_morphism(m)
    assert not F.is_strict and F.tilde((1,), (1,)) == (1,)
    assert morphism_of_functor(F) == m
    for m in sample_morphisms(40, seed=3):
        assert morphism_of_functor(functor_of_morphism(m)) == m


def test_invalid_morphism_rejected():
    m = AbCrossMorphism.strict(TIMES2, TIMES2, ID2, GroupHom.zero(Z4, Z4))
    with pytest.raises(InvalidMorphism):
        functor_of_morphism(m)
    F = RegularSMFunctor(picard_of(TIMES2), picard_of(TIMES2), GroupHom.zero(Z4, Z4), ID2,
                         SymCochain2.zero(Z2, Z1))
    assert not validate_functor(F)


def test_compose_functors():
    for m, n in sample_composable(40, seed=11):
        F, G = functor_of_morphism(m), functor_of_morphism(n)
        assert compose_functors(G, F) == functor_of_morphism(compose_morphism(n, m))
        ident = RegularSMFunctor.identity(F.source)
        assert compose_functors(F, ident) == F
    with pytest.raises(DomainMismatch):
        compose_functors(RegularSMFunctor.identity(picard_of(TIMES2)), RegularSMFunctor.identity(picard_of(MOD2)))


def test_reduce_examples():
    S = reduce(picard_of(TIMES2))
    assert (S.M.factors, S.N.order) == ((2,), 1) and S.k.is_zero
    S = reduce(picard_of(ZERO22))
    assert (S.M, S.N) == (Z2, Z2) and S.k.is_zero
    assert S.section((1,)) == (1,)
    S = reduce(picard_of(DOUBLE4))
    assert (S.M, S.N) == (Z2, Z2) and S.k.is_zero
    assert S.b((1,), (1,)) == (1,)


def test_reduce_sections_agree_up_to_coboundary():
    for M in crossed_modules():
        if M.pi0.order ** 2 * max(M.pi1.order, 1) > 256:
            continue
        P = picard_of(M)
        a, b = reduce(P), reduce(P, "greatest")
        assert all(a.k.eta(s, s) == M.pi1.zero for s in M.pi0.elements())
        assert is_cohomologous(a.k, b.k) is not None
    with pytest.raises(ValueError):
        reduce(picard_of(TIMES2), "middle")


def test_reduced_type_examples():
    F = functor_of_morphism(AbCrossMorphism.identity(DOUBLE4))
    t = reduced_type(F)
    assert t.phi0 == GroupHom.identity(Z2) and t.f == GroupHom.identity(Z2)
    m = AbCrossMorphism.strict(MOD2, TIMES2, cyclic_hom(4, 2, 1), cyclic_hom(2, 4, 2))
    t = reduced_type(functor_of_morphism(m))
    assert (t.phi0.dom.order, t.phi0.cod.factors) == (1, (2,))
    assert (t.f.dom.factors, t.f.cod.order) == ((2,), 1)
    zero = AbCrossMorphism.strict(DOUBLE4, MOD2, GroupHom.zero(Z4, Z4), GroupHom.zero(Z4, Z2))
    t = reduced_type(functor_of_morphism(zero))
    assert t.phi0.is_zero and t.f.is_zero


def test_obstruction_trivial_cases():
    S = ReducedPicard(Z2, Z2, ETA11)
    assert obstruction(FunctorTypePair(ID2, ID2), S, S).is_zero
    T = ReducedPicard(Z2, Z2, Cochain3Pair.zero(Z2, Z2))
    assert obstruction(FunctorTypePair(ID2, GroupHom.zero(Z2, Z2)), S, T).is_zero
    with pytest.raises(DomainMismatch):
        obstruction(FunctorTypePair(GroupHom.identity(Z4), ID2), S, T)


def test_non_realizable_target():
    S = reduce(dis(Z2))
    T = ReducedPicard(Z2, Z2, ETA11)
    t = FunctorTypePair(ID2, GroupHom.zero(Z1, Z2))
    k = obstruction(t, S, T)
    assert k == ETA11 and class_of(k) != (0,)
    assert not is_realizable(t, S, T)
    assert functor_classes(t, S, T) == []


def test_realizable_counts():
    S = reduce(picard_of(ZERO22))
    t = FunctorTypePair(ID2, ID2)
    cls = functor_classes(t, S, S)
    assert len(cls) == sym_cohomology(2, Z2, Z2).order == 2
    assert all(validate_reduced_functor(F) for F in cls)
    assert reduced_homotopy(cls[0], cls[0]) == SymCochain1.zero(Z2, Z2)
    assert reduced_homotopy(cls[0], cls[1]) is None
    T = reduce(picard_of(TIMES2))
    t = FunctorTypePair(ID2, GroupHom.zero(Z2, Z1))
    assert len(functor_classes(t, S, T)) == 1


def test_reduced_functor_coherence_fails():
    S = reduce(picard_of(ZERO22))
    T = ReducedPicard(Z2, Z2, ETA11)
    F = ReducedSMFunctor(FunctorTypePair(ID2, GroupHom.zero(Z2, Z2)), S, T, SymCochain2.zero(Z2, Z2))
    assert not validate_reduced_functor(F)


def test_obstruction_class_is_well_defined():
    # replacing k by a cohomologous cocycle moves the obstruction by a coboundary
    S = reduce(picard_of(ZERO22))
    T = ReducedPicard(Z2, Z2, ETA11)
    g = SymCochain2.from_entries(Z2, Z2, {((1,), (1,)): (1,)})
    T2 = ReducedPicard(Z2, Z2, ETA11 + coboundary2(g))
    t = FunctorTypePair(ID2, ID2)
    assert is_cohomologous(obstruction(t, S, T), obstruction(t, S, T2)) is not None


def test_homotopy_examples():
    F = functor_of_morphism(AbCrossMorphism(ZERO22, ZERO22, ID2, ID2, G11))
    assert are_homotopic(F, F) == SymCochain1.zero(Z2, Z2)
    F0 = functor_of_morphism(AbCrossMorphism.identity(ZERO22))
    assert are_homotopic(F0, F) is None
    # Dis Z/2 -> (0: Z/4 -> Z/2), structure arrows differing by a coboundary
    T = picard_of(AbCrossedModule.of(cyclic_hom(4, 2, 0)))
    g = SymCochain1.from_entries(Z2, Z4, {((1,),): (1,)})
    obj = SymCochain1.zero(Z2, Z2)
    A = DisFunctor(Z2, T, obj, SymCochain2.zero(Z2, Z4))
    B = DisFunctor(Z2, T, obj, coboundary(g))
    assert validate_dis_functor(A) and validate_dis_functor(B)
    assert are_homotopic(A, B) == g


def _regular_functors_from(Q, M):
    """Every regular functor Dis Q -> P_M, by brute force."""
    S, O = dis(Q), Z1
    for f0 in homs(Q, M.D):
        for phi in oracle_enumerate(2, Q, M.pi1).cocycles:
            yield RegularSMFunctor(S, picard_of(M), f0, GroupHom.zero(O, M.B), phi)


@pytest.mark.parametrize("Q", [Z2, Z(3), Z4])
def test_class_counts_match_brute_force(Q):
    small = [M for M in crossed_modules() if M.B.order <= 4 and M.D.order <= 4]
    for M in small[::3]:
        groups = {}
        for F in _regular_functors_from(Q, M):
            groups.setdefault(reduced_type(F), []).append(F)
        S, T = reduce(dis(Q)), reduce(picard_of(M))
        for t, fs in groups.items():
            reps = []
            for F in fs:
                if not any(are_homotopic(F, R) is not None for R in reps):
                    reps.append(F)
            assert len(reps) == len(functor_classes(t, S, T))


SMALL_MORPHISMS = [m for m in sample_morphisms(200, seed=5)
                   if m.source.D.order <= 4 and m.source.B.order <= 4 and m.target.pi1.order <= 4]


@given(st.sampled_from(SMALL_MORPHISMS), st.randoms(use_true_random=False))
def test_homotopy_is_an_equivalence(m, rng):
    M, T = m.source, m.target
    fs = [functor_of_morphism(AbCrossMorphism(M, T, m.f1, m.f0, random_cocycle(M.pi0, T.pi1, rng)))
          for _ in range(3)]
    for F in fs:
        assert are_homotopic(F, F) is not None
        for G in fs:
            assert (are_homotopic(F, G) is None) == (are_homotopic(G, F) is None)
            for H in fs:
                if are_homotopic(F, G) is not None and are_homotopic(G, H) is not None:
                    assert are_homotopic(F, H) is not None
