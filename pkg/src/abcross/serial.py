"""Conversion of library values to and from plain JSON data."""

from __future__ import annotations

from .cochains import Cochain, Cochain3Pair
from .errors import Check
from .groups import FinAbGroup, GroupHom


def group_data(G: FinAbGroup) -> list:
    return list(G.factors)


def element_data(x) -> list:
    return [int(a) for a in x]


def hom_data(h: GroupHom) -> dict:
    return {"dom": group_data(h.dom), "cod": group_data(h.cod), "matrix": [list(r) for r in h.matrix]}


def cochain_entries(c: Cochain) -> list:
    """``[[arg1, ..., value], ...]`` for the non-zero entries, elements as lists."""
    return [[element_data(x) for x in args] + [element_data(v)] for args, v in c.entries()]


def cochain_from_entries(cls, M: FinAbGroup, N: FinAbGroup, rows, arity: int | None = None):
    a = cls.arity if arity is None else arity
    table = {}
    for row in rows:
        if len(row) != a + 1:
            raise ValueError(f"entry {row!r} should have {a} arguments and a value")
        table[tuple(tuple(x) for x in row[:-1])] = tuple(row[-1])
    return cls.from_entries(M, N, table, arity) if cls is Cochain else cls.from_entries(M, N, table)


def pair_data(k: Cochain3Pair) -> dict:
    return {"xi": cochain_entries(k.xi), "eta": cochain_entries(k.eta)}


def pair_from_data(M: FinAbGroup, N: FinAbGroup, data: dict) -> Cochain3Pair:
    xi = {tuple(tuple(x) for x in r[:-1]): tuple(r[-1]) for r in data.get("xi", [])}
    eta = {tuple(tuple(x) for x in r[:-1]): tuple(r[-1]) for r in data.get("eta", [])}
    return Cochain3Pair.from_entries(M, N, xi=xi, eta=eta)


def check_data(chk: Check) -> dict:
    if chk:
        return {"ok": True}
    return {"ok": False, "condition": chk.condition, "witness": to_data(chk.witness)}


def to_data(x):
    """Recursively turn library values into JSON-compatible data."""
    if isinstance(x, FinAbGroup):
        return group_data(x)
    if isinstance(x, GroupHom):
        return hom_data(x)
    if isinstance(x, Cochain3Pair):
        return pair_data(x)
    if isinstance(x, Cochain):
        return cochain_entries(x)
    if isinstance(x, Check):
        return check_data(x)
    if isinstance(x, dict):
        return {str(k): to_data(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [to_data(v) for v in x]
    if isinstance(x, bool) or x is None or isinstance(x, str):
        return x
    return int(x)

