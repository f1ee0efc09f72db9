from __future__ import annotations

import itertools

import pytest
from abcross import (AbCrossedModule, AbCrossMorphism, CrossedData, DomainMismatch, GroupHom, InvalidTwisting,
                     SymCochain2, Z, compose_morphism, crossed_data, homotopy_groups, is_abelian,
                     to_abelian, validate_crossed_data, validate_morphism)
from abcross.corpus import crossed_modules, cyclic_hom, morphisms_between, sample_composable

Z2, Z4 = Z(2), Z(4)
MOD2 = AbCrossedModule.of(cyclic_hom(4, 2, 1))      # Z/4 -> Z/2, reduction mod 2
TIMES2 = AbCrossedModule.of(cyclic_hom(2, 4, 2))    # Z/2 -> Z/4, doubling
ZERO22 = AbCrossedModule.of(cyclic_hom(2, 2, 0))
G11 = SymCochain2.from_entries(Z2, Z2, {((1,), (1,)): (1,)})


def test_zero_twisting_is_abelian():
    for M in crossed_modules()[:20]:
        c = crossed_data(M)
        assert validate_crossed_data(c) and is_abelian(c)
        assert to_abelian(c) == M


def test_mono_forces_trivial_twisting():
    c = CrossedData(TIMES2, {((1,), ()): ()})
    assert TIMES2.pi1.order == 1
    assert validate_crossed_data(c) and is_abelian(c)


def test_nonzero_twisting():
    c = CrossedData(ZERO22, {((1,), (1,)): (1,)})
    assert validate_crossed_data(c)
    assert not is_abelian(c)
    with pytest.raises(InvalidTwisting):
        to_abelian(c)
    # the only non-zero biadditive table on Z/2 x Z/2, checked by hand over all pairs
    for s, a in itertools.product(range(2), repeat=2):
        assert c((s,), (a,)) == ((s * a) % 2,)


def test_invalid_twisting():
    M = AbCrossedModule.of(cyclic_hom(4, 4, 0))
    c = CrossedData(M, {((1,), (1,)): (1,)})
    chk = validate_crossed_data(c)
    assert not chk and "additive" in chk.condition
    with pytest.raises(InvalidTwisting):
        to_abelian(c)


def test_homotopy_groups():
    (p0, proj), (p1, incl) = homotopy_groups(MOD2)
    assert p0.order == 1 and p1.factors == (2,)
    assert incl((1,)) == (2,)
    (p0, proj), (p1, _) = homotopy_groups(TIMES2)
    assert p0.factors == (2,) and p1.order == 1
    assert proj((3,)) == (1,)
    ident = AbCrossedModule.of(GroupHom.identity(Z(6)))
    assert ident.pi0.order == ident.pi1.order == 1


def test_validate_morphism_examples():
    assert validate_morphism(AbCrossMorphism.identity(MOD2))
    m = AbCrossMorphism.strict(MOD2, TIMES2, cyclic_hom(4, 2, 1), cyclic_hom(2, 4, 2))
    assert validate_morphism(m, MOD2, TIMES2)
    for b in range(4):
        assert m.f0(MOD2.d((b,))) == TIMES2.d(m.f1((b,)))
    zero = AbCrossMorphism(ZERO22, ZERO22, GroupHom.zero(Z2, Z2), GroupHom.zero(Z2, Z2), G11)
    assert validate_morphism(zero)
    bad = AbCrossMorphism.strict(TIMES2, TIMES2, GroupHom.identity(Z2), GroupHom.zero(Z4, Z4))
    chk = validate_morphism(bad)
    assert not chk and chk.condition == "square commutes"
    assert not validate_morphism(m, TIMES2, TIMES2)


def test_morphism_shape_checks():
    with pytest.raises(DomainMismatch):
        AbCrossMorphism.strict(MOD2, TIMES2, GroupHom.identity(Z4), cyclic_hom(2, 4, 2))
    with pytest.raises(DomainMismatch):
        AbCrossMorphism(ZERO22, ZERO22, GroupHom.identity(Z2), GroupHom.identity(Z2), SymCochain2.zero(Z4, Z2))


def test_composition_units_and_strict():
    for m in morphisms_between(MOD2, TIMES2):
        assert compose_morphism(m, AbCrossMorphism.identity(MOD2)) == m
        assert compose_morphism(AbCrossMorphism.identity(TIMES2), m) == m
    for m in morphisms_between(ZERO22, MOD2):
        for n in morphisms_between(MOD2, TIMES2):
            c = compose_morphism(n, m)
            assert c.phi.is_zero and validate_morphism(c)


def test_compose_twists_add():
    ident = GroupHom.identity(Z2)
    a = AbCrossMorphism(ZERO22, ZERO22, ident, ident, G11)
    b = AbCrossMorphism(ZERO22, ZERO22, ident, ident, G11 + G11)
    c = compose_morphism(b, a)
    assert c.phi == G11 + G11 + G11 == G11
    with pytest.raises(DomainMismatch):
        compose_morphism(a, AbCrossMorphism.identity(MOD2))


def test_associativity_on_samples():
    for m, n in sample_composable(30, seed=7):
        for q in list(morphisms_between(n.target, n.target))[:2]:
            assert compose_morphism(q, compose_morphism(n, m)) == compose_morphism(compose_morphism(q, n), m)
            assert validate_morphism(compose_morphism(n, m))
