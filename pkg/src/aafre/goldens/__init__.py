"""Golden regression corpus.

Each JSON file holds an instance document, the expected outputs, per-field
tolerances and a ``source`` note for every expected value.
"""

import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

import numpy as np

from ..io import parse_instance
from ..optimizer import solve
from ..resolution import index_sets


@dataclass
class GoldenResult:
    name: str
    failures: list = field(default_factory=list)

    @property
    def passed(self):
        return not self.failures


def load_cases(directory=None):
    """Golden cases as dictionaries, sorted by file name."""
    if directory is None:
        files = [f for f in resources.files(__name__).iterdir() if f.name.endswith(".json")]
    else:
        files = list(Path(directory).glob("*.json"))
    return [json.loads(f.read_text()) for f in sorted(files, key=lambda f: f.name)]


def run_case(case):
    inst = parse_instance(json.dumps(case["instance"]))
    expected, tol = case["expected"], case.get("tolerance", {})
    report = solve(inst)
    result = GoldenResult(case["name"])

    def check(key, actual):
        if key not in expected:
            return
        want = expected[key]
        if key in tol:
            ok = actual is not None and np.allclose(actual, want, rtol=0.0, atol=tol[key])
        else:
            ok = actual == want
        if not ok:
            result.failures.append(f"{key}: expected {want}, got {actual}")

    check("feasible", report.feasible)
    check("index_sets", [list(Ji) for Ji in index_sets(inst)])
    check("Xbar", report.Xbar)
    check("total_selections", report.total_selections)
    check("empty_equations", list(report.empty_equations))
    if report.feasible:
        check("e_star", list(report.e_star))
        check("x_e_star", report.x_e_star)
        check("x_star", report.x_star)
        check("z_star", report.z_star)
    return result


def run_goldens(directory=None):
    """Solve every golden case and compare against its expectations."""
    return [run_case(case) for case in load_cases(directory)]
