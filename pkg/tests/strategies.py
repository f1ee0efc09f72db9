"""Hypothesis strategies for small groups, homomorphisms and cochains."""

from __future__ import annotations

import numpy as np
from hypothesis import strategies as st

from abcross import FinAbGroup, GroupHom, SymCochain1, SymCochain2, Z, homs

SMALL = [Z(1), Z(2), Z(3), Z(4), Z(6), FinAbGroup((2, 2))]
TINY = [Z(1), Z(2), Z(3), Z(4), FinAbGroup((2, 2))]

groups = st.sampled_from(SMALL)
tiny_groups = st.sampled_from(TINY)


@st.composite
def any_groups(draw, max_rank: int = 3, max_factor: int = 12):
    """Groups as presented, including factors 1 and non-canonical lists."""
    fs = draw(st.lists(st.integers(1, max_factor), max_size=max_rank))
    return FinAbGroup(tuple(fs))


@st.composite
def group_homs(draw, dom=None, cod=None):
    G = draw(groups) if dom is None else dom
    H = draw(groups) if cod is None else cod
    return draw(st.sampled_from(list(homs(G, H))))


@st.composite
def cochains(draw, cls, M=None, N=None):
    M = draw(groups) if M is None else M
    N = draw(groups) if N is None else N
    shape = (M.order,) * cls.arity + (N.rank,)
    seed = draw(st.integers(0, 2 ** 32 - 1))
    rng = np.random.default_rng(seed)
    v = rng.integers(0, 1 << 16, size=shape) % np.array(N.factors, dtype=np.int64)
    mask = np.ones((M.order,) * cls.arity, dtype=bool)
    for ax in range(cls.arity):
        idx = [slice(None)] * cls.arity
        idx[ax] = 0
        mask[tuple(idx)] = False
    return cls(M, N, v * mask[..., None])


def cochains1(M=None, N=None):
    return cochains(SymCochain1, M, N)


def cochains2(M=None, N=None):
    return cochains(SymCochain2, M, N)


def cyclic_module(a: int, b: int, image: int):
    from abcross import AbCrossedModule
    A, B = Z(a), Z(b)
    d = GroupHom(A, B, [[image]]) if A.rank and B.rank else GroupHom.zero(A, B)
    return AbCrossedModule(A, B, d)
