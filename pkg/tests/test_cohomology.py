from __future__ import annotations

import math

import pytest
from hypothesis import given
from strategies import cochains1, cochains2, tiny_groups

from abcross import (Cochain3Pair, FinAbGroup, NotACocycle, SizeExceeded, SymCochain1, SymCochain2, Z,
                     class_of, coboundary, coboundary2, is_cohomologous, oracle_check, oracle_enumerate,
                     sym_cohomology)

Z1, Z2, Z3, Z4 = Z(1), Z(2), Z(3), Z(4)
F11 = SymCochain2.from_entries(Z2, Z2, {((1,), (1,)): (1,)})
ETA11 = Cochain3Pair.from_entries(Z2, Z2, eta={((1,), (1,)): (1,)})

# (M, N): (|Z^3_s|, |H^3_s|), frozen from oracle_enumerate
DEGREE3 = {
    (Z1, Z2): (1, 1), (Z2, Z2): (2, 2), (Z2, Z3): (1, 1), (Z3, Z2): (4, 1), (Z3, Z3): (9, 1),
    (Z2, Z4): (2, 2), (Z4, Z2): (128, 2), (FinAbGroup((2, 2)), Z2): (256, 4),
}


def test_h2_examples():
    H = sym_cohomology(2, Z2, Z2)
    assert H.group.factors == (2,)
    assert H.representatives == [F11]
    assert sym_cohomology(2, Z2, Z3).order == 1
    assert sym_cohomology(2, Z4, Z2).group.factors == (2,)


def test_gcd_law():
    for m in (2, 3, 4, 6):
        for n in (2, 3, 4, 6):
            assert sym_cohomology(2, Z(m), Z(n)).order == math.gcd(m, n)


@pytest.mark.parametrize("M,N", list(DEGREE3))
def test_h3_frozen(M, N):
    H = sym_cohomology(3, M, N)
    assert (H.cocycle_group.order, H.order) == DEGREE3[(M, N)]


@pytest.mark.parametrize("M,N", [(Z1, Z2), (Z2, Z2), (Z2, Z3), (Z3, Z2), (Z2, Z4)])
def test_h3_oracle(M, N):
    orc = oracle_enumerate(3, M, N)
    assert (len(orc.tables), orc.class_count) == DEGREE3[(M, N)]


def test_h3_z2_z2_generator():
    H = sym_cohomology(3, Z2, Z2)
    assert H.representatives == [ETA11]
    assert class_of(ETA11) == (1,)


def test_oracle_examples():
    orc = oracle_enumerate(2, Z2, Z2)
    assert (len(orc.tables), orc.class_count) == (2, 2)
    orc = oracle_enumerate(2, Z2, Z3)
    assert (len(orc.tables), orc.class_count) == (3, 1)
    assert orc.coboundary_count == 3
    assert oracle_enumerate(3, Z2, Z2).class_count == sym_cohomology(3, Z2, Z2).order


def test_class_of():
    assert class_of(F11) != (0,)
    assert class_of(SymCochain2.zero(Z2, Z2)) == (0,)
    with pytest.raises(NotACocycle):
        class_of(SymCochain2.from_entries(Z4, Z2, {((1,), (2,)): (1,)}))


def test_is_cohomologous_to_itself():
    w = is_cohomologous(F11, F11)
    assert w == SymCochain1.zero(Z2, Z2)
    assert is_cohomologous(F11, SymCochain2.zero(Z2, Z2)) is None


def test_guards():
    with pytest.raises(SizeExceeded):
        oracle_enumerate(2, Z(8), Z(16))
    with pytest.raises(SizeExceeded):
        sym_cohomology(3, Z(64), Z2).order


def test_oracle_check_agrees_on_examples():
    assert oracle_check(F11) and oracle_check(ETA11)
    carry = Cochain3Pair.from_functions(Z2, Z2, xi=lambda x, y, z: (x[0] * y[0] * z[0],))
    assert not oracle_check(carry)


@given(cochains1())
def test_coboundaries_classify_to_zero(g):
    dg = coboundary(g)
    H = sym_cohomology(2, g.M, g.N)
    assert not any(H.classify(dg))
    w = is_cohomologous(dg, SymCochain2.zero(g.M, g.N))
    assert w is not None and coboundary(w) == dg


@given(cochains2(M=Z2), )
def test_degree3_coboundaries_classify_to_zero(g):
    k = coboundary2(g)
    assert not any(class_of(k))
    w = sym_cohomology(3, g.M, g.N).coboundary_witness(k)
    assert coboundary2(w) == k


@given(tiny_groups, tiny_groups)
def test_classifier_is_additive(M, N):
    H = sym_cohomology(2, M, N)
    reps = H.classes()
    for h, r in reps:
        assert H.classify(r) == h
        for h2, r2 in reps:
            assert H.classify(r + r2) == H.group.add(h, h2)


@given(tiny_groups, tiny_groups)
def test_library_matches_oracle(M, N):
    H = sym_cohomology(2, M, N)
    orc = oracle_enumerate(2, M, N)
    assert H.order == orc.class_count
    cls = H.classify_many(orc.cocycles)
    assert len(set(zip(orc.labels, cls))) == orc.class_count == len(set(cls))
    assert all(oracle_check(c) for c in orc.cocycles)
