from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from abcross import (AbCrossedModule, BaseMismatch, Extension, FinAbGroup, GroupHom, InvalidExtension,
                     InvalidFunctor, NotMono, SymCochain1, SymCochain2, Z, are_equivalent, canonical_extension,
                     classify_extensions, coboundary, enumerate_extensions, extension_of_functor,
                     functor_of_extension, induced_psi, obstruction_class, partition_by_equivalence,
                     pullback_extension, total_group_type, validate_extension)
from abcross.corpus import cyclic_hom
from abcross.groups import homs

Z1, Z2, Z3, Z4 = Z(1), Z(2), Z(3), Z(4)
ZERO22 = AbCrossedModule.of(cyclic_hom(2, 2, 0))
TIMES2 = AbCrossedModule.of(cyclic_hom(2, 4, 2))
DOUBLE4 = AbCrossedModule.of(cyclic_hom(4, 4, 2))
ID2 = GroupHom.identity(Z2)
IDMAP = SymCochain1.from_entries(Z2, Z2, {((1,),): (1,)})
SPLIT = Extension(ZERO22, Z2, SymCochain2.zero(Z2, Z2), IDMAP)
TWISTED = Extension(ZERO22, Z2, SymCochain2.from_entries(Z2, Z2, {((1,), (1,)): (1,)}), IDMAP)


def test_split_and_twisted():
    assert validate_extension(SPLIT) and validate_extension(TWISTED)
    assert total_group_type(SPLIT).factors == (2, 2)
    assert total_group_type(TWISTED).factors == (4,)
    x = ((0,), (1,))
    assert TWISTED.add(x, x) == ((1,), (0,))
    assert SPLIT.add(x, x) == SPLIT.zero
    assert induced_psi(SPLIT) == ID2
    assert functor_of_extension(SPLIT).tilde.is_zero
    assert functor_of_extension(TWISTED).tilde((1,), (1,)) == (1,)
    assert are_equivalent(SPLIT, TWISTED) is None


def test_eps_is_a_homomorphism():
    for E in (SPLIT, TWISTED):
        els = E.elements()
        assert len(els) == 4
        for x in els:
            for y in els:
                assert E.eps(E.add(x, y)) == E.base.D.add(E.eps(x), E.eps(y))
            assert E.add(x, E.neg(x)) == E.zero


def test_trivial_quotient():
    for M in (ZERO22, TIMES2, DOUBLE4):
        E = Extension(M, Z1, SymCochain2.zero(Z1, M.B), SymCochain1.zero(Z1, M.D))
        assert validate_extension(E)
        assert total_group_type(E).factors == M.B.factors
        assert induced_psi(E).is_zero
        assert all(E.eps((b, ())) == M.d(b) for b in M.B.elements())
        res = classify_extensions(M, Z1, GroupHom.zero(Z1, M.pi0))
        assert not res.obstructed and len(res) == 1


def test_invalid_extensions():
    f = SymCochain2.from_entries(Z3, Z2, {((1,), (1,)): (1,)})
    E = Extension(AbCrossedModule.of(cyclic_hom(2, 2, 0)), Z3, f, SymCochain1.zero(Z3, Z2))
    chk = validate_extension(E)
    assert not chk and chk.condition.startswith("f ")
    E = Extension(TIMES2, Z2, SymCochain2.zero(Z2, Z2), SymCochain1.from_entries(Z2, Z4, {((1,),): (1,)}))
    chk = validate_extension(E)
    assert not chk and chk.condition == "eps is a homomorphism"
    with pytest.raises(InvalidExtension):
        functor_of_extension(E)
    with pytest.raises(InvalidFunctor):
        extension_of_functor(functor_of_extension(E, check=False))


def test_functor_round_trip():
    for E in (SPLIT, TWISTED):
        E2 = extension_of_functor(functor_of_extension(E))
        assert are_equivalent(E, E2) == SymCochain1.zero(Z2, Z2)


def test_equivalence_witness():
    g = SymCochain1.from_entries(Z2, Z2, {((1,),): (1,)})
    E = canonical_extension(TIMES2)
    dg = g.pushforward(TIMES2.d)
    E2 = Extension(TIMES2, Z2, E.f - coboundary(g), E.Fmap - dg)
    assert validate_extension(E2)
    assert are_equivalent(E, E2) == g
    E3 = Extension(TIMES2, Z2, E.f + coboundary(g), E.Fmap + dg)
    assert are_equivalent(E, E3) == -g
    with pytest.raises(BaseMismatch):
        are_equivalent(E, SPLIT)


def test_obstruction_class_examples():
    assert not any(obstruction_class(DOUBLE4, Z2, ID2))
    assert not any(obstruction_class(DOUBLE4, Z2, GroupHom.zero(Z2, Z2)))
    assert obstruction_class(TIMES2, Z2, ID2) == ()


def test_classify_examples():
    res = classify_extensions(ZERO22, Z2, ID2)
    assert not res.obstructed and len(res) == 2
    assert sorted(total_group_type(E).factors for E in res.extensions) == [(2, 2), (4,)]
    res = classify_extensions(TIMES2, Z2, ID2)
    assert len(res) == 1
    (E,) = res.extensions
    assert total_group_type(E).factors == (4,)
    assert are_equivalent(E, pullback_extension(canonical_extension(TIMES2), ID2)) is not None


def test_pullback_extension():
    D = canonical_extension(TIMES2)
    assert are_equivalent(D, pullback_extension(D, ID2)) is not None
    zero = pullback_extension(D, GroupHom.zero(Z3, Z2))
    assert zero.f.is_zero and total_group_type(zero).factors == (6,)
    with pytest.raises(NotMono):
        canonical_extension(ZERO22)
    with pytest.raises(NotMono):
        pullback_extension(SPLIT, ID2)


INSTANCES = [(AbCrossedModule.of(cyclic_hom(a, b, i)), Q)
             for a, b, i in [(2, 2, 0), (2, 4, 2), (4, 4, 2), (4, 2, 1), (2, 4, 0), (4, 4, 0)]
             for Q in (Z2, Z3, FinAbGroup((2, 2)))]


@pytest.mark.parametrize("M,Q", INSTANCES)
def test_classes_match_enumeration(M, Q):
    for psi in homs(Q, M.pi0):
        res = classify_extensions(M, Q, psi)
        found = enumerate_extensions(M, Q, psi)
        assert len(partition_by_equivalence(found)) == len(res)
        for E in found:
            hits = [R for R in res.extensions if are_equivalent(R, E) is not None]
            assert len(hits) == 1
            assert induced_psi(E) == psi


@given(st.data())
def test_equivalence_relation(data):
    M, Q = data.draw(st.sampled_from(INSTANCES[:6]))
    exts = enumerate_extensions(M, Q)
    a, b, c = (data.draw(st.sampled_from(exts)) for _ in range(3))
    assert are_equivalent(a, a) is not None
    assert (are_equivalent(a, b) is None) == (are_equivalent(b, a) is None)
    if are_equivalent(a, b) is not None and are_equivalent(b, c) is not None:
        assert are_equivalent(a, c) is not None
    if are_equivalent(a, b) is not None:
        assert induced_psi(a) == induced_psi(b)
        assert total_group_type(a) == total_group_type(b)
