from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from strategies import cochains1, cochains2, group_homs, groups

from abcross import (Cochain3Pair, DomainMismatch, GroupHom, NotNormalized, SymCochain1, SymCochain2, Z,
                     coboundary, coboundary2, is_sym_2cocycle, is_sym_3cocycle, transport)

Z2, Z4 = Z(2), Z(4)
F11 = SymCochain2.from_entries(Z2, Z2, {((1,), (1,)): (1,)})
CARRY = Cochain3Pair.from_functions(Z2, Z2, xi=lambda x, y, z: (x[0] * y[0] * z[0],))
ETA11 = Cochain3Pair.from_entries(Z2, Z2, eta={((1,), (1,)): (1,)})


def test_two_cocycle_examples():
    assert is_sym_2cocycle(F11)
    assert is_sym_2cocycle(SymCochain2.zero(Z4, Z2))
    assert is_sym_2cocycle(SymCochain2.from_entries(Z2, Z4, {((1,), (1,)): (1,)}))


def test_normalization_gate():
    with pytest.raises(NotNormalized):
        SymCochain2.from_entries(Z2, Z4, {((1,), (1,)): (1,), ((1,), (0,)): (1,)})


def test_two_cocycle_witness():
    f = SymCochain2.from_entries(Z4, Z2, {((1,), (2,)): (1,)})
    chk = is_sym_2cocycle(f)
    assert not chk and chk.condition in ("cocycle", "symmetric") and len(chk.witness) in (2, 3)


def test_three_cocycle_examples():
    assert is_sym_3cocycle(Cochain3Pair.zero(Z2, Z2))
    assert is_sym_3cocycle(ETA11)
    # x * carry(y, z) with eta = 0 breaks the hexagon law at (1, 1, 1)
    chk = is_sym_3cocycle(CARRY)
    assert not chk and chk.condition == "hexagon" and chk.witness == ((1,), (1,), (1,))


def test_coboundary_examples():
    assert coboundary(SymCochain1.zero(Z2, Z2)).is_zero
    g = SymCochain1.from_entries(Z2, Z2, {(1,): (1,)})
    assert coboundary(g).is_zero
    g = SymCochain1.from_entries(Z4, Z4, {(1,): (1,)})
    # (dg)(1,1) = g(1) + g(1) - g(2) = 2
    assert coboundary(g)((1,), (1,)) == (2,)


@given(cochains2())
def test_eta_of_coboundary_is_antisymmetric_part(g):
    eta = coboundary2(g).eta.values
    assert np.array_equal(eta % np.array(g.N.factors), (np.swapaxes(g.values, 0, 1) - g.values) % np.array(g.N.factors))


@given(cochains1())
def test_symmetric_tables_have_zero_eta(g):
    assert coboundary2(coboundary(g)).eta.is_zero


@given(cochains1())
def test_delta_delta_vanishes(g):
    dg = coboundary(g)
    assert is_sym_2cocycle(dg)
    assert coboundary2(dg).is_zero


@given(cochains2())
def test_coboundaries_are_three_cocycles(g):
    k = coboundary2(g)
    assert is_sym_3cocycle(k)
    # eta(x, 0) = 0 holds on every cocycle
    assert not k.eta.values[:, 0].any()


def test_transport_examples():
    idZ2 = GroupHom.identity(Z2)
    assert transport(F11, phi=idZ2) == F11
    assert transport(ETA11, phi=idZ2) == ETA11
    assert transport(F11, phi=GroupHom.zero(Z4, Z2)).is_zero
    with pytest.raises(DomainMismatch):
        transport(F11, phi=GroupHom.identity(Z4))


@given(groups, st.data())
def test_transport_commutes_with_coboundary(Q, data):
    phi = data.draw(group_homs(dom=Q))
    g = data.draw(cochains1(M=phi.cod))
    g2 = data.draw(cochains1(M=phi.cod, N=g.N))
    assert coboundary(g.pullback(phi)) == coboundary(g).pullback(phi)
    assert (g + g2).pullback(phi) == g.pullback(phi) + g2.pullback(phi)
    f = data.draw(cochains2(M=phi.cod))
    assert coboundary2(f.pullback(phi)) == coboundary2(f).pullback(phi)


@given(groups, st.data())
def test_pushforward_commutes_with_coboundary(N, data):
    h = data.draw(group_homs(dom=N))
    f = data.draw(cochains2(N=N))
    f2 = data.draw(cochains2(M=f.M, N=N))
    assert coboundary2(f.pushforward(h)) == coboundary2(f).pushforward(h)
    assert (f + f2).pushforward(h) == f.pushforward(h) + f2.pushforward(h)


@given(cochains2())
def test_vector_round_trip(g):
    assert SymCochain2.from_vector(g.M, g.N, g.to_vector()) == g
    k = coboundary2(g)
    assert Cochain3Pair.from_vector(g.M, g.N, k.to_vector()) == k
