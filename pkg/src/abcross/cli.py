"""Model files, batch tasks and reports; the ``abcross`` command.

A model file is a JSON object::

    {"groups": {"Q": [2], "N": [2]},
     "homs": {"psi": {"dom": "Q", "cod": "Q", "matrix": [[1]]}},
     "crossed_modules": {"M": {"B": "N", "D": "Q", "d": "zero"}},
     "cochains": {"f": {"kind": "sym2", "M": "Q", "N": "N", "entries": [[[1], [1], [1]]]}},
     "tasks": [{"kind": "cohomology", "degree": 2, "M": "Q", "N": "N"}]}

Groups are lists of cyclic factors.  Cochain entries are
``[arg, ..., value]`` rows listing the non-zero values; a ``pair`` cochain
has ``xi`` and ``eta`` row lists instead of ``entries``.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

from . import __version__
from .cochains import Cochain3Pair, SymCochain1, SymCochain2
from .cohomology import is_cohomologous, sym_cohomology
from .corpus import crossed_modules, quotient_groups
from .crossed import AbCrossedModule
from .errors import AbCrossError, SizeExceeded
from .extensions import (Extension, classify_extensions, induced_psi, obstruction_class,
                         total_group_type, validate_extension)
from .groups import FinAbGroup, GroupHom, homs, limit_max_order
from .picard import FunctorTypePair, ReducedPicard, functor_classes, obstruction, picard_of, reduce
from .serial import cochain_entries, cochain_from_entries, pair_data, pair_from_data, to_data
from .verify import SUITES, all_passed, run_suite

TASK_KINDS = ("cohomology", "reduce", "obstruction", "classify", "verify", "show-extension", "functor-classes")
COCHAIN_KINDS = {"sym1": SymCochain1, "sym2": SymCochain2}


class ParseError(ValueError):
    """Malformed input; ``location`` names the offending place."""

    def __init__(self, location: str, message: str):
        super().__init__(f"{location}: {message}")
        self.location = location


class ValidationError(ValueError):
    """A declared object fails its invariants; ``name`` is the declaration."""

    def __init__(self, name: str, message: str):
        super().__init__(f"{name}: {message}")
        self.name = name


@dataclass
class ModelFile:
    groups: dict = field(default_factory=dict)
    homs: dict = field(default_factory=dict)
    crossed_modules: dict = field(default_factory=dict)
    cochains: dict = field(default_factory=dict)
    tasks: list = field(default_factory=list)


# parsing ------------------------------------------------------------------------------


def _expect(x, typ, where: str):
    if not isinstance(x, typ) or isinstance(x, bool):
        name = typ.__name__ if isinstance(typ, type) else "/".join(t.__name__ for t in typ)
        raise ParseError(where, f"expected {name}, got {type(x).__name__}")
    return x


def _int_list(x, where: str) -> list:
    _expect(x, list, where)
    for i, a in enumerate(x):
        _expect(a, int, f"{where}[{i}]")
    return x


def _lookup(table: dict, name, kind: str, where: str):
    _expect(name, str, where)
    if name not in table:
        raise ParseError(where, f"unknown {kind} {name!r}")
    return table[name]


def _validated(name: str, build):
    try:
        return build()
    except ParseError:
        raise
    except (AbCrossError, ValueError) as e:
        raise ValidationError(name, f"{type(e).__name__}: {e}") from e


def _rows(x, where: str) -> list:
    _expect(x, list, where)
    for i, row in enumerate(x):
        _expect(row, list, f"{where}[{i}]")
        for j, a in enumerate(row):
            _int_list(a, f"{where}[{i}][{j}]")
    return x


def parse_model(text: str) -> ModelFile:
    """Parse and validate a model file."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"line {e.lineno} column {e.colno}", e.msg) from e
    return model_from_data(data)


def model_from_data(data) -> ModelFile:
    _expect(data, dict, "top level")
    unknown = set(data) - {"groups", "homs", "crossed_modules", "cochains", "tasks"}
    if unknown:
        raise ParseError("top level", f"unknown sections {sorted(unknown)}")
    m = ModelFile()
    for name, fs in _expect(data.get("groups", {}), dict, "groups").items():
        fs = _int_list(fs, f"groups.{name}")
        m.groups[name] = _validated(name, lambda: FinAbGroup(tuple(fs)))
    for name, h in _expect(data.get("homs", {}), dict, "homs").items():
        w = f"homs.{name}"
        _expect(h, dict, w)
        dom = _lookup(m.groups, h.get("dom"), "group", f"{w}.dom")
        cod = _lookup(m.groups, h.get("cod"), "group", f"{w}.cod")
        mat = _expect(h.get("matrix"), list, f"{w}.matrix")
        for i, r in enumerate(mat):
            _int_list(r, f"{w}.matrix[{i}]")
        m.homs[name] = _validated(name, lambda: GroupHom(dom, cod, mat))
    for name, c in _expect(data.get("crossed_modules", {}), dict, "crossed_modules").items():
        w = f"crossed_modules.{name}"
        _expect(c, dict, w)
        B = _lookup(m.groups, c.get("B"), "group", f"{w}.B")
        D = _lookup(m.groups, c.get("D"), "group", f"{w}.D")
        d = _lookup(m.homs, c.get("d"), "hom", f"{w}.d")
        m.crossed_modules[name] = _validated(name, lambda: AbCrossedModule(B, D, d))
    for name, c in _expect(data.get("cochains", {}), dict, "cochains").items():
        w = f"cochains.{name}"
        _expect(c, dict, w)
        kind = c.get("kind")
        M = _lookup(m.groups, c.get("M"), "group", f"{w}.M")
        N = _lookup(m.groups, c.get("N"), "group", f"{w}.N")
        if kind == "pair":
            xi, eta = _rows(c.get("xi", []), f"{w}.xi"), _rows(c.get("eta", []), f"{w}.eta")
            m.cochains[name] = _validated(name, lambda: pair_from_data(M, N, {"xi": xi, "eta": eta}))
        elif kind in COCHAIN_KINDS:
            rows = _rows(c.get("entries", []), f"{w}.entries")
            m.cochains[name] = _validated(name, lambda: cochain_from_entries(COCHAIN_KINDS[kind], M, N, rows))
        else:
            raise ParseError(f"{w}.kind", f"expected one of pair, sym1, sym2, got {kind!r}")
    for i, t in enumerate(_expect(data.get("tasks", []), list, "tasks")):
        _check_task(m, t, f"tasks[{i}]")
        m.tasks.append(t)
    return m


_TASK_REFS = {
    "cohomology": {"M": "group", "N": "group"},
    "reduce": {"module": "module"},
    "obstruction": {"module": "module", "Q": "group", "psi": "hom?"},
    "classify": {"module": "module", "Q": "group", "psi": "hom?"},
    "verify": {},
    "show-extension": {"module": "module", "Q": "group", "f": "cochain", "Fmap": "cochain"},
    "functor-classes": {"source": "reduced", "target": "reduced", "phi0": "hom", "f": "hom"},
}


def _check_task(m: ModelFile, t, where: str):
    _expect(t, dict, where)
    kind = t.get("kind")
    if kind not in TASK_KINDS:
        raise ParseError(f"{where}.kind", f"expected one of {', '.join(TASK_KINDS)}, got {kind!r}")
    tables = {"group": m.groups, "module": m.crossed_modules, "hom": m.homs, "cochain": m.cochains}
    for key, ref in _TASK_REFS[kind].items():
        optional = ref.endswith("?")
        ref = ref.rstrip("?")
        if key not in t:
            if optional:
                continue
            raise ParseError(where, f"missing {key!r}")
        if ref == "reduced":
            _check_reduced(m, t[key], f"{where}.{key}")
        else:
            _lookup(tables[ref], t[key], ref, f"{where}.{key}")
    if kind == "cohomology" and t.get("degree") not in (2, 3):
        raise ParseError(f"{where}.degree", "expected 2 or 3")
    if kind == "cohomology":
        for i, name in enumerate(_expect(t.get("classify", []), list, f"{where}.classify")):
            _lookup(m.cochains, name, "cochain", f"{where}.classify[{i}]")
    if kind == "reduce" and t.get("section", "least") not in ("least", "greatest"):
        raise ParseError(f"{where}.section", "expected least or greatest")
    if kind == "verify" and t.get("suite", "all") != "all" and t.get("suite") not in SUITES:
        raise ParseError(f"{where}.suite", f"expected all or one of {', '.join(SUITES)}")


def _check_reduced(m: ModelFile, ref, where: str):
    if isinstance(ref, str):
        _lookup(m.crossed_modules, ref, "module", where)
        return
    _expect(ref, dict, where)
    for key, table, kind in (("M", m.groups, "group"), ("N", m.groups, "group"), ("k", m.cochains, "cochain")):
        _lookup(table, ref.get(key), kind, f"{where}.{key}")


# running ------------------------------------------------------------------------------


def _reduced(m: ModelFile, ref) -> ReducedPicard:
    if isinstance(ref, str):
        return reduce(picard_of(m.crossed_modules[ref]))
    k = m.cochains[ref["k"]]
    if not isinstance(k, Cochain3Pair):
        raise ValidationError(ref["k"], "expected a pair cochain")
    return ReducedPicard(m.groups[ref["M"]], m.groups[ref["N"]], k)


def _module_data(M: AbCrossedModule) -> dict:
    return {"B": list(M.B.factors), "D": list(M.D.factors), "d": [list(r) for r in M.d.matrix],
            "pi0": list(M.pi0.factors), "pi1": list(M.pi1.factors)}


def _extension_data(E: Extension) -> dict:
    return {"f": cochain_entries(E.f), "Fmap": cochain_entries(E.Fmap),
            "total": list(total_group_type(E).factors)}


def _psis(m: ModelFile, t: dict, M: AbCrossedModule, Q: FinAbGroup) -> list:
    if "psi" in t:
        return [(t["psi"], m.homs[t["psi"]])]
    return [(None, psi) for psi in homs(Q, M.pi0)]


def _task_cohomology(m, t):
    H = sym_cohomology(t["degree"], m.groups[t["M"]], m.groups[t["N"]])
    out = {"group": list(H.group.factors), "order": H.order,
           "representatives": [to_data(r) for r in H.representatives]}
    if t.get("classify"):
        out["classes"] = {name: list(H.classify(m.cochains[name])) for name in t["classify"]}
    return out


def _task_reduce(m, t):
    M = m.crossed_modules[t["module"]]
    S = reduce(picard_of(M), t.get("section", "least"))
    out = {"pi0": list(S.M.factors), "pi1": list(S.N.factors), "k": pair_data(S.k),
           "section": cochain_entries(S.section),
           "coboundary": is_cohomologous(S.k, Cochain3Pair.zero(S.M, S.N)) is not None}
    if t.get("class"):
        out["class"] = list(sym_cohomology(3, S.M, S.N).classify(S.k))
    return out


def _task_obstruction(m, t):
    M, Q = m.crossed_modules[t["module"]], m.groups[t["Q"]]
    out = []
    for name, psi in _psis(m, t, M, Q):
        cls = obstruction_class(M, Q, psi)
        out.append({"psi": name or [list(r) for r in psi.matrix],
                    "class": list(cls), "vanishes": not any(cls)})
    return {"h3": list(sym_cohomology(3, Q, M.pi1).group.factors), "instances": out}


def _task_classify(m, t):
    M, Q = m.crossed_modules[t["module"]], m.groups[t["Q"]]
    out = []
    for name, psi in _psis(m, t, M, Q):
        r = classify_extensions(M, Q, psi)
        item = {"psi": name or [list(row) for row in psi.matrix]}
        if r.obstructed:
            item.update(obstructed=True, obstruction=list(r.cls))
        else:
            item.update(obstructed=False, count=len(r),
                        classes=[dict(_extension_data(E), label=list(h)) for h, E in zip(r.labels, r.extensions)])
        out.append(item)
    return {"module": _module_data(M), "Q": list(Q.factors), "instances": out}


def _task_verify(m, t):
    suite = t.get("suite", "all")
    names = list(SUITES) if suite == "all" else [suite]
    res = {name: run_suite(name) for name in names}
    return {"suites": res, "passed": all(all_passed(r) for r in res.values())}


def _task_show_extension(m, t):
    M, Q = m.crossed_modules[t["module"]], m.groups[t["Q"]]
    f, F = m.cochains[t["f"]], m.cochains[t["Fmap"]]
    E = Extension(M, Q, f, F)
    chk = validate_extension(E)
    out = {"valid": to_data(chk)}
    if chk:
        out.update(total=list(total_group_type(E).factors), psi=to_data(induced_psi(E)))
    return out


def _task_functor_classes(m, t):
    S, S2 = _reduced(m, t["source"]), _reduced(m, t["target"])
    tp = FunctorTypePair(m.homs[t["phi0"]], m.homs[t["f"]])
    k = obstruction(tp, S, S2)
    fc = functor_classes(tp, S, S2)
    return {"obstruction": pair_data(k), "class": list(sym_cohomology(3, S.M, S2.N).classify(k)),
            "count": len(fc), "structure_arrows": [cochain_entries(F.tilde) for F in fc]}


_RUNNERS = {
    "cohomology": _task_cohomology, "reduce": _task_reduce, "obstruction": _task_obstruction,
    "classify": _task_classify, "verify": _task_verify, "show-extension": _task_show_extension,
    "functor-classes": _task_functor_classes,
}


def run_task(task: dict, context: ModelFile) -> dict:
    """Run one task; errors become an ``error`` entry naming the exception."""
    frag = {"kind": task["kind"], "task": task}
    try:
        frag["result"] = _RUNNERS[task["kind"]](context, task)
    except (AbCrossError, ValueError) as e:
        frag["error"] = {"type": type(e).__name__, "message": str(e)}
    return frag


def run_model(m: ModelFile) -> list:
    return [dict(run_task(t, m), index=i) for i, t in enumerate(m.tasks)]


# reports ------------------------------------------------------------------------------


def emit_report(fragments: list, fmt: str = "machine") -> str:
    if fmt == "machine":
        # one task per line; keys sorted throughout, so the whole document is canonical
        body = ",\n".join(json.dumps(f, sort_keys=True) for f in fragments)
        tail = f'"tool": "abcross", "version": {json.dumps(__version__)}}}\n'
        return f'{{"tasks": [\n{body}\n], {tail}' if fragments else f'{{"tasks": [], {tail}'
    if fmt != "human":
        raise ValueError(f"unknown format {fmt!r}")
    lines = [f"abcross {__version__}", ""]
    for frag in fragments:
        lines += _render(frag)
        lines.append("")
    return "\n".join(lines)


def parse_report(text: str) -> dict:
    return json.loads(text)


def _fmt_group(fs) -> str:
    return " + ".join(f"Z/{n}" for n in fs) if fs else "0"


def _render(frag: dict) -> list:
    t, kind = frag["task"], frag["kind"]
    args = ", ".join(f"{k}={v}" for k, v in sorted(t.items()) if k != "kind")
    head = [f"[{frag.get('index', 0)}] {kind}({args})"]
    if "error" in frag:
        return head + [f"  error {frag['error']['type']}: {frag['error']['message']}"]
    r = frag["result"]
    if kind == "cohomology":
        out = [f"  group {_fmt_group(r['group'])} (order {r['order']})"]
        out += [f"  generator {i}: {rep}" for i, rep in enumerate(r["representatives"])]
        out += [f"  class of {n}: {c}" for n, c in sorted(r.get("classes", {}).items())]
        return head + out
    if kind == "reduce":
        return head + [f"  pi0 {_fmt_group(r['pi0'])}, pi1 {_fmt_group(r['pi1'])}",
                       f"  xi {r['k']['xi']}", f"  eta {r['k']['eta']}",
                       f"  k is a coboundary: {r['coboundary']}"] + (
                           [f"  class {r['class']}"] if "class" in r else [])
    if kind == "obstruction":
        return head + [f"  H3 {_fmt_group(r['h3'])}"] + [
            f"  psi {i['psi']}: class {i['class']}" for i in r["instances"]]
    if kind == "classify":
        out = []
        for i in r["instances"]:
            if i["obstructed"]:
                out.append(f"  psi {i['psi']}: obstructed, class {i['obstruction']}")
                continue
            out.append(f"  psi {i['psi']}: {i['count']} classes")
            out.append(f"    {'label':<10} {'total':<16} f")
            for c in i["classes"]:
                out.append(f"    {str(c['label']):<10} {_fmt_group(c['total']):<16} {c['f']}")
        return head + out
    if kind == "verify":
        out = []
        for suite, recs in r["suites"].items():
            out.append(f"  {suite}")
            for rec in recs:
                name = rec.get("property") or rec.get("example")
                line = f"    {rec['status']} {name}"
                if rec["status"] != "PASS":
                    line += f"  counterexample: {json.dumps(rec.get('counterexample', rec.get('value')))}"
                out.append(line)
        return head + out
    if kind == "show-extension":
        if not r["valid"]["ok"]:
            return head + [f"  invalid: {r['valid']['condition']} at {r['valid']['witness']}"]
        return head + [f"  total {_fmt_group(r['total'])}, psi {r['psi']['matrix']}"]
    return head + [f"  obstruction class {r['class']}, {r['count']} classes"] + [
        f"    {a}" for a in r["structure_arrows"]]


# writing models ---------------------------------------------------------------------


def model_data(m: ModelFile) -> dict:
    """Inverse of :func:`model_from_data` (objects are written by value under their names)."""
    gname = {G: n for n, G in m.groups.items()}

    def hname(h):
        return next(n for n, k in m.homs.items() if k == h)

    def hom(h):
        return {"dom": gname[h.dom], "cod": gname[h.cod], "matrix": [list(r) for r in h.matrix]}

    cochains = {}
    for n, c in m.cochains.items():
        base = {"M": gname[c.M], "N": gname[c.N]}
        if isinstance(c, Cochain3Pair):
            cochains[n] = dict(base, kind="pair", **pair_data(c))
        else:
            kind = "sym1" if isinstance(c, SymCochain1) else "sym2"
            cochains[n] = dict(base, kind=kind, entries=cochain_entries(c))
    return {
        "groups": {n: list(G.factors) for n, G in m.groups.items()},
        "homs": {n: hom(h) for n, h in m.homs.items()},
        "crossed_modules": {n: {"B": gname[M.B], "D": gname[M.D], "d": hname(M.d)}
                            for n, M in m.crossed_modules.items()},
        "cochains": cochains,
        "tasks": list(m.tasks),
    }


def dump_model(m: ModelFile) -> str:
    return json.dumps(model_data(m), sort_keys=True, indent=1) + "\n"


def corpus_model() -> dict:
    """The built-in corpus as model data."""
    groups, homs_, mods, tasks = {}, {}, {}, []

    def gname(G):
        n = "Z" + "x".join(map(str, G.factors)) if G.factors else "Z1"
        groups[n] = list(G.factors)
        return n

    for M in crossed_modules():
        b, dd = gname(M.B), gname(M.D)
        img = M.d.matrix[0][0] if M.B.rank and M.D.rank else 0
        name = f"{b}_{dd}_{img}"
        homs_[f"d_{name}"] = {"dom": b, "cod": dd, "matrix": [list(r) for r in M.d.matrix]}
        mods[name] = {"B": b, "D": dd, "d": f"d_{name}"}
        tasks.append({"kind": "reduce", "module": name})
    for Q in quotient_groups():
        gname(Q)
    for name in mods:
        tasks.append({"kind": "classify", "module": name, "Q": "Z2"})
    homs_["id_Z2"] = {"dom": "Z2", "cod": "Z2", "matrix": [[1]]}
    homs_["zero_Z1_Z2"] = {"dom": "Z1", "cod": "Z2", "matrix": [[]]}
    cochains = {
        "f11": {"kind": "sym2", "M": "Z2", "N": "Z2", "entries": [[[1], [1], [1]]]},
        "zero3": {"kind": "pair", "M": "Z2", "N": "Z2", "xi": [], "eta": []},
        "eta11": {"kind": "pair", "M": "Z2", "N": "Z2", "xi": [], "eta": [[[1], [1], [1]]]},
        "dis_zero": {"kind": "pair", "M": "Z2", "N": "Z1", "xi": [], "eta": []},
        "obj_id": {"kind": "sym1", "M": "Z2", "N": "Z2", "entries": [[[1], [1]]]},
    }
    tasks += [
        {"kind": "cohomology", "degree": 2, "M": "Z2", "N": "Z2", "classify": ["f11"]},
        {"kind": "cohomology", "degree": 2, "M": "Z4", "N": "Z2"},
        {"kind": "cohomology", "degree": 3, "M": "Z2", "N": "Z2", "classify": ["zero3", "eta11"]},
        {"kind": "reduce", "module": "Z4_Z4_2", "section": "greatest", "class": True},
        {"kind": "obstruction", "module": "Z4_Z4_2", "Q": "Z2", "psi": "id_Z2"},
        {"kind": "classify", "module": "Z2_Z2_0", "Q": "Z2", "psi": "id_Z2"},
        {"kind": "classify", "module": "Z2_Z4_2", "Q": "Z2", "psi": "id_Z2"},
        {"kind": "show-extension", "module": "Z2_Z2_0", "Q": "Z2", "f": "f11", "Fmap": "obj_id"},
        {"kind": "functor-classes", "source": {"M": "Z2", "N": "Z1", "k": "dis_zero"},
         "target": {"M": "Z2", "N": "Z2", "k": "zero3"}, "phi0": "id_Z2", "f": "zero_Z1_Z2"},
        {"kind": "functor-classes", "source": {"M": "Z2", "N": "Z1", "k": "dis_zero"},
         "target": {"M": "Z2", "N": "Z2", "k": "eta11"}, "phi0": "id_Z2", "f": "zero_Z1_Z2"},
        {"kind": "verify", "suite": "derived-examples"},
    ]
    return {"groups": dict(sorted(groups.items())), "homs": homs_, "crossed_modules": mods,
            "cochains": cochains, "tasks": tasks}


# command line ---------------------------------------------------------------------------


def _factors(s: str) -> list:
    s = s.strip()
    if s in ("", "0", "1"):
        return []
    return [int(a) for a in s.split(",")]


def _matrix(s: str, rows: int) -> list:
    if not s.strip():
        return [[] for _ in range(rows)]
    return [[int(a) for a in r.split(",")] if r.strip() else [] for r in s.split(";")]


def _module_spec(s: str, prefix: str, data: dict) -> str:
    """``"B->D:matrix"``, e.g. ``"2->4:2"`` or ``"2,2->2:1,0"``; rows separated by ``;``."""
    try:
        arrow, _, mat = s.partition(":")
        b, d = arrow.split("->")
        B, D = _factors(b), _factors(d)
    except ValueError as e:
        raise ParseError(prefix, f"expected B->D:matrix, got {s!r}") from e
    data["groups"][f"{prefix}_B"] = B
    data["groups"][f"{prefix}_D"] = D
    data["homs"][f"{prefix}_d"] = {"dom": f"{prefix}_B", "cod": f"{prefix}_D", "matrix": _matrix(mat, len(D))}
    data["crossed_modules"][prefix] = {"B": f"{prefix}_B", "D": f"{prefix}_D", "d": f"{prefix}_d"}
    return prefix


def _single_task(args) -> dict:
    data = {"groups": {}, "homs": {}, "crossed_modules": {}, "cochains": {}}
    kind = args.command
    task = {"kind": kind}
    if kind == "cohomology":
        data["groups"].update(M=_factors(args.M), N=_factors(args.N))
        task.update(degree=args.degree, M="M", N="N")
    elif kind == "verify":
        task["suite"] = args.suite
    elif kind == "functor-classes":
        task["source"] = _module_spec(args.source, "S", data)
        task["target"] = _module_spec(args.target, "T", data)
        return _functor_task(args, data, task)
    else:
        task["module"] = _module_spec(args.module, "M", data)
        if kind == "reduce":
            task["section"] = args.section
        else:
            data["groups"]["Q"] = _factors(args.Q)
            task["Q"] = "Q"
            if kind == "show-extension":
                data["cochains"]["f"] = {"kind": "sym2", "M": "Q", "N": "M_B", "entries": json.loads(args.f)}
                data["cochains"]["Fmap"] = {"kind": "sym1", "M": "Q", "N": "M_D", "entries": json.loads(args.Fmap)}
                task.update(f="f", Fmap="Fmap")
            elif args.psi is not None:
                pi0 = model_from_data(data).crossed_modules["M"].pi0
                data["groups"]["P0"] = list(pi0.factors)
                data["homs"]["psi"] = {"dom": "Q", "cod": "P0", "matrix": _matrix(args.psi, pi0.rank)}
                task["psi"] = "psi"
    data["tasks"] = [task]
    return model_from_data(data)


def _functor_task(args, data, task):
    m = model_from_data(dict(data, tasks=[]))
    S = reduce(picard_of(m.crossed_modules["S"]))
    T = reduce(picard_of(m.crossed_modules["T"]))
    data["groups"].update(S0=list(S.M.factors), S1=list(S.N.factors), T0=list(T.M.factors), T1=list(T.N.factors))
    data["homs"]["phi0"] = {"dom": "S0", "cod": "T0", "matrix": _matrix(args.phi0, len(T.M.factors))}
    data["homs"]["f"] = {"dom": "S1", "cod": "T1", "matrix": _matrix(args.f, len(T.N.factors))}
    task.update(phi0="phi0", f="f")
    data["tasks"] = [task]
    return model_from_data(data)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False, allow_abbrev=False)
    common.add_argument("--format", choices=("human", "machine"), default=argparse.SUPPRESS)
    common.add_argument("--max-order", type=int, default=argparse.SUPPRESS,
                        help="lower the enumeration size guard")
    p = argparse.ArgumentParser(prog="abcross", allow_abbrev=False,
                                description="Abelian crossed modules, Picard categories and their extensions.")
    p.add_argument("--file", help="run every task of a model file")
    p.add_argument("--format", choices=("human", "machine"), default="human")
    p.add_argument("--seed-corpus", action="store_true", help="print the built-in corpus model and exit")
    p.add_argument("--max-order", type=int, help="lower the enumeration size guard")
    p.add_argument("--version", action="version", version=f"abcross {__version__}")
    sub = p.add_subparsers(dest="command", parser_class=lambda **kw: argparse.ArgumentParser(
        parents=[common], allow_abbrev=False, **kw))
    c = sub.add_parser("cohomology", help="symmetric cohomology H^n_s(M, N)")
    c.add_argument("--degree", type=int, choices=(2, 3), required=True)
    c.add_argument("--M", required=True, help="factors, e.g. 2,2")
    c.add_argument("--N", required=True)
    mod_help = "crossed module B->D:matrix, e.g. 2->4:2"
    r = sub.add_parser("reduce", help="invariant (pi0, pi1, k) of a crossed module")
    r.add_argument("--module", required=True, help=mod_help)
    r.add_argument("--section", choices=("least", "greatest"), default="least")
    for name, hlp in (("obstruction", "obstruction class for extensions along psi"),
                      ("classify", "classify extensions along psi")):
        s = sub.add_parser(name, help=hlp)
        s.add_argument("--module", required=True, help=mod_help)
        s.add_argument("--Q", required=True)
        s.add_argument("--psi", help="matrix Q -> pi0 (rows separated by ';'); all homs if omitted")
    e = sub.add_parser("show-extension", help="validate an extension and give its total group")
    e.add_argument("--module", required=True, help=mod_help)
    e.add_argument("--Q", required=True)
    e.add_argument("--f", required=True, help="JSON rows [[u, v, value], ...]")
    e.add_argument("--Fmap", required=True, help="JSON rows [[u, value], ...]")
    fc = sub.add_parser("functor-classes", help="homotopy classes of functors of a given type")
    fc.add_argument("--source", required=True, help=mod_help)
    fc.add_argument("--target", required=True, help=mod_help)
    fc.add_argument("--phi0", required=True, help="matrix pi0 -> pi0'")
    fc.add_argument("--f", required=True, help="matrix pi1 -> pi1'")
    v = sub.add_parser("verify", help="run acceptance property suites")
    v.add_argument("--suite", default="all", choices=["all"] + list(SUITES))
    return p


def _exit_code(fragments: list) -> int:
    code = 0
    for f in fragments:
        if "error" in f:
            if f["error"]["type"] == "SizeExceeded":
                return 2
            code = 1
        elif f["kind"] == "verify" and not f["result"]["passed"]:
            code = 1
    return code


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    out = sys.stdout
    if args.seed_corpus:
        out.write(json.dumps(corpus_model(), sort_keys=True, indent=1) + "\n")
        return 0
    try:
        if args.file:
            with open(args.file, encoding="utf-8") as fh:
                m = parse_model(fh.read())
        elif args.command:
            m = _single_task(args)
        else:
            build_parser().print_usage(sys.stderr)
            return 1
    except (ParseError, ValidationError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except SizeExceeded as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    if args.max_order is not None:
        with limit_max_order(args.max_order):
            frags = run_model(m)
    else:
        frags = run_model(m)
    out.write(emit_report(frags, args.format))
    return _exit_code(frags)


if __name__ == "__main__":
    sys.exit(main())
