"""Running a model file through the batch interface from Python.

The same file can be run from a shell with ``abcross --file model.json``.
Run with ``python demos/batch_cli.py``.
"""

from __future__ import annotations

import json

from abcross.cli import emit_report, parse_model, run_model

model = {
    "groups": {"Z2": [2], "Z4": [4]},
    "homs": {"zero": {"dom": "Z2", "cod": "Z2", "matrix": [[0]]},
             "double": {"dom": "Z2", "cod": "Z4", "matrix": [[2]]},
             "id": {"dom": "Z2", "cod": "Z2", "matrix": [[1]]}},
    "crossed_modules": {"M1": {"B": "Z2", "D": "Z2", "d": "zero"},
                        "M2": {"B": "Z2", "D": "Z4", "d": "double"}},
    "tasks": [
        {"kind": "cohomology", "degree": 2, "M": "Z2", "N": "Z2"},
        {"kind": "reduce", "module": "M2"},
        {"kind": "classify", "module": "M1", "Q": "Z2", "psi": "id"},
        {"kind": "verify", "suite": "benchmark"},
    ],
}

fragments = run_model(parse_model(json.dumps(model)))
print(emit_report(fragments, "human"))
