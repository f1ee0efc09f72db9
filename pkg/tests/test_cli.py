from __future__ import annotations

import json
from pathlib import Path

import pytest

from abcross import Z, __version__
from abcross.cli import (ParseError, ValidationError, dump_model, emit_report, main, model_data, parse_model,
                         parse_report, run_model, run_task)

CORPUS = Path(__file__).resolve().parent.parent / "corpus" / "corpus.json"

BASE = {
    "groups": {"Q": [2], "N": [2], "B": [2], "D": [4], "O": []},
    "homs": {"d0": {"dom": "N", "cod": "Q", "matrix": [[0]]},
             "d2": {"dom": "B", "cod": "D", "matrix": [[2]]},
             "id": {"dom": "Q", "cod": "Q", "matrix": [[1]]},
             "oq": {"dom": "O", "cod": "Q", "matrix": [[]]},
             "on": {"dom": "O", "cod": "N", "matrix": [[]]}},
    "crossed_modules": {"M1": {"B": "N", "D": "Q", "d": "d0"}, "M2": {"B": "B", "D": "D", "d": "d2"},
                        "DisQ": {"B": "O", "D": "Q", "d": "oq"}},
    "cochains": {"f11": {"kind": "sym2", "M": "Q", "N": "N", "entries": [[[1], [1], [1]]]},
                 "F": {"kind": "sym1", "M": "Q", "N": "Q", "entries": [[[1], [1]]]},
                 "eta": {"kind": "pair", "M": "Q", "N": "N", "eta": [[[1], [1], [1]]]}},
}


def model(*tasks):
    return parse_model(json.dumps(dict(BASE, tasks=list(tasks))))


def test_parse_declarations():
    m = parse_model(json.dumps({"groups": {"B": [4], "D": [2]},
                                "homs": {"d": {"dom": "B", "cod": "D", "matrix": [[1]]}}}))
    assert m.homs["d"]((3,)) == (1,)
    assert m.groups["B"] == Z(4) and m.tasks == []


def test_ill_defined_hom():
    text = json.dumps({"groups": {"A": [2], "C": [4]}, "homs": {"h": {"dom": "A", "cod": "C", "matrix": [[1]]}}})
    with pytest.raises(ValidationError) as e:
        parse_model(text)
    assert e.value.name == "h" and "IllDefinedHom" in str(e.value)


def test_parse_errors():
    with pytest.raises(ParseError) as e:
        parse_model('{"groups": {"A": [2],}}')
    assert e.value.location.startswith("line 1 column")
    with pytest.raises(ParseError) as e:
        parse_model(json.dumps({"groups": {"A": [2.5]}}))
    assert e.value.location == "groups.A[0]"
    with pytest.raises(ParseError):
        parse_model(json.dumps({"groups": {}, "extras": 1}))
    with pytest.raises(ParseError):
        model({"kind": "reduce", "module": "nope"})
    with pytest.raises(ParseError):
        model({"kind": "frobnicate"})


def test_empty_model_and_report():
    m = parse_model("{}")
    assert run_model(m) == []
    text = emit_report([], "machine")
    assert parse_report(text) == {"tasks": [], "tool": "abcross", "version": __version__}
    assert emit_report([], "human").startswith(f"abcross {__version__}")


def test_task_examples():
    m = model({"kind": "cohomology", "degree": 2, "M": "Q", "N": "N", "classify": ["f11"]},
              {"kind": "classify", "module": "M1", "Q": "Q", "psi": "id"},
              {"kind": "reduce", "module": "M2"})
    coh, cls, red = (f["result"] for f in run_model(m))
    assert coh["group"] == [2] and coh["classes"] == {"f11": [1]}
    inst = cls["instances"][0]
    assert inst["count"] == 2
    assert sorted(c["total"] for c in inst["classes"]) == [[2, 2], [4]]
    assert red["k"] == {"xi": [], "eta": []} and red["pi0"] == [2] and red["pi1"] == []


def test_other_tasks():
    m = model({"kind": "show-extension", "module": "M1", "Q": "Q", "f": "f11", "Fmap": "F"},
              {"kind": "obstruction", "module": "M1", "Q": "Q"},
              {"kind": "functor-classes", "source": "DisQ", "target": {"M": "Q", "N": "N", "k": "eta"},
               "phi0": "id", "f": "on"},
              {"kind": "reduce", "module": "M1", "section": "greatest", "class": True})
    show, obs, fc, red = (f["result"] for f in run_model(m))
    assert show["total"] == [4] and show["psi"]["matrix"] == [[1]]
    assert [i["vanishes"] for i in obs["instances"]] == [True, True]
    assert fc["count"] == 0 and fc["class"] == [1]
    assert red["class"] == [0] and red["coboundary"]


def test_errors_are_reported_per_task():
    m = model({"kind": "show-extension", "module": "M2", "Q": "Q", "f": "f11", "Fmap": "F"})
    frag = run_task(m.tasks[0], m)
    assert "result" not in frag and frag["error"]["type"] == "DomainMismatch"


def test_round_trip():
    m = model({"kind": "verify", "suite": "benchmark"})
    m2 = parse_model(dump_model(m))
    for part in ("groups", "homs", "crossed_modules", "cochains"):
        assert getattr(m2, part) == getattr(m, part)
    assert m2.tasks == m.tasks
    assert model_data(parse_model(dump_model(m2))) == model_data(m2)


def test_machine_report_round_trip():
    m = model({"kind": "cohomology", "degree": 3, "M": "Q", "N": "N"})
    frags = run_model(m)
    assert parse_report(emit_report(frags))["tasks"] == json.loads(json.dumps(frags))


def test_human_renderings():
    m = model({"kind": "classify", "module": "M1", "Q": "Q", "psi": "id"},
              {"kind": "verify", "suite": "benchmark"})
    text = emit_report(run_model(m), "human")
    assert "label" in text and "Z/2 + Z/2" in text and "Z/4" in text
    assert "PASS" in text and "FAIL" not in text


def test_main_exit_codes(tmp_path, capsys):
    assert main(["cohomology", "--degree", "2", "--M", "2", "--N", "2", "--format", "machine"]) == 0
    assert json.loads(capsys.readouterr().out)["tasks"][0]["result"]["group"] == [2]
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"groups": {"A": [2], "C": [4]},
                               "homs": {"h": {"dom": "A", "cod": "C", "matrix": [[1]]}}}))
    assert main(["--file", str(bad)]) == 1
    assert main(["cohomology", "--degree", "2", "--M", "8", "--N", "8", "--max-order", "4"]) == 2
    assert main(["classify", "--module", "2->2:0", "--Q", "2", "--format", "human"]) == 0
    assert "Z/4" in capsys.readouterr().out


def test_corpus_runs_deterministically(capsys):
    assert main(["--file", str(CORPUS), "--format", "machine"]) == 0
    a = capsys.readouterr().out
    assert main(["--file", str(CORPUS), "--format", "machine"]) == 0
    assert capsys.readouterr().out == a
    assert all("error" not in t for t in parse_report(a)["tasks"])
