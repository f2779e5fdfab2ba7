"""JSON instance documents and report rendering.

An instance document is a JSON object::

    {"lambda": 3, "A": [[...], ...], "b": [...], "c": [...], "tol": 1e-9}

``tol`` is optional. Machine-readable reports use the same JSON dialect
and round-trip exactly, since Python's float repr is lossless.
"""

import json
import math
import numbers

import numpy as np

from .exceptions import AAFREError, ParseError, ValidationError
from .instance import DEFAULT_TOL, Instance
from .optimizer import OptimizationReport
from .resolution import ResolutionReport


def _number(value, where):
    if isinstance(value, bool) or not isinstance(value, numbers.Real):
        raise ValidationError(f"expected a number, got {value!r}", where)
    if not math.isfinite(value):
        raise ValidationError(f"expected a finite number, got {value!r}", where)
    return float(value)


def _vector(doc, key):
    value = doc[key]
    if not isinstance(value, list):
        raise ValidationError("expected an array of numbers", key)
    return [_number(v, f"{key}[{k}]") for k, v in enumerate(value)]


def _unit(value, where):
    if not 0.0 <= value <= 1.0:
        raise ValidationError(f"{value!r} is outside [0, 1]", where)
    return value


def parse_instance(text, lam=None, tol=None):
    """Parse and validate an instance document.

    ``lam`` and ``tol`` override the document's values; with ``lam`` given,
    the ``lambda`` key may be absent.

    Raises
    ------
    ParseError
        Malformed JSON or a missing key.
    ValidationError
        Wrong shapes, entries outside [0, 1], or a nonpositive exponent. The
        message names the offending key, row and column.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, f"line {exc.lineno}, column {exc.colno}") from exc
    if not isinstance(doc, dict):
        raise ParseError("top level must be an object")
    if isinstance(doc.get("instance"), dict):
        # golden case files wrap the instance
        doc = doc["instance"]
    required = ["A", "b", "c"] + ([] if lam is not None else ["lambda"])
    for key in required:
        if key not in doc:
            raise ParseError(f"missing key {key!r}")

    rows = doc["A"]
    if not isinstance(rows, list) or not rows:
        raise ValidationError("expected a nonempty array of rows", "A")
    A = []
    for i, row in enumerate(rows):
        if not isinstance(row, list) or not row:
            raise ValidationError("expected a nonempty array of numbers", f"A[{i}]")
        if A and len(row) != len(A[0]):
            raise ValidationError(f"row has {len(row)} entries, expected {len(A[0])}", f"A[{i}]")
        A.append([_unit(_number(v, f"A[{i}][{j}]"), f"A[{i}][{j}]") for j, v in enumerate(row)])
    m, n = len(A), len(A[0])

    b = [_unit(v, f"b[{k}]") for k, v in enumerate(_vector(doc, "b"))]
    if len(b) != m:
        raise ValidationError(f"has {len(b)} entries, expected m = {m}", "b")
    c = _vector(doc, "c")
    if len(c) != n:
        raise ValidationError(f"has {len(c)} entries, expected n = {n}", "c")

    if lam is None:
        lam = _number(doc["lambda"], "lambda")
    if not lam > 0.0:
        raise ValidationError(f"must be positive, got {lam!r}", "lambda")
    if tol is None:
        tol = _number(doc["tol"], "tol") if "tol" in doc else DEFAULT_TOL
    if not tol > 0.0:
        raise ValidationError(f"must be positive, got {tol!r}", "tol")
    try:
        return Instance(A, b, c, lam, tol)
    except AAFREError as exc:
        raise ValidationError(str(exc)) from exc


def instance_document(inst):
    return {
        "lambda": inst.lam,
        "A": inst.A.tolist(),
        "b": inst.b.tolist(),
        "c": inst.c.tolist(),
        "tol": inst.tol,
    }


def dump_instance(inst, indent=2):
    return json.dumps(instance_document(inst), indent=indent)


def _list(arr):
    return None if arr is None else np.asarray(arr, dtype=float).tolist()


def report_document(report):
    """Full-precision dictionary form of a report."""
    if isinstance(report, OptimizationReport):
        return {
            "kind": "optimization",
            "feasible": report.feasible,
            "Xbar": _list(report.Xbar),
            "x_star": _list(report.x_star),
            "z_star": report.z_star,
            "e_star": None if report.e_star is None else list(report.e_star),
            "x_e_star": _list(report.x_e_star),
            "z1_value": report.z1_value,
            "total_selections": report.total_selections,
            "candidates_examined": report.candidates_examined,
            "candidates_pruned": report.candidates_pruned,
            "empty_equations": list(report.empty_equations),
            "ties": [list(t) for t in report.ties],
        }
    if isinstance(report, ResolutionReport):
        return {
            "kind": "resolution",
            "feasible": report.feasible,
            "Xbar": _list(report.Xbar),
            "index_sets": [list(Ji) for Ji in report.index_sets],
            "empty_equations": list(report.empty_equations),
            "total_selections": report.total_selections,
            "candidate_count": report.candidate_count,
            "minimal": report.minimal,
            "kept": [{"selection": list(e), "point": _list(p)} for e, p in report.kept],
        }
    raise TypeError(f"cannot serialize {type(report).__name__}")


def parse_report(text):
    """Inverse of the machine form of :func:`emit_report`."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, f"line {exc.lineno}, column {exc.colno}") from exc
    arr = lambda v: None if v is None else np.array(v, dtype=float)
    kind = doc.get("kind")
    if kind == "optimization":
        return OptimizationReport(
            feasible=doc["feasible"],
            Xbar=arr(doc["Xbar"]),
            x_star=arr(doc["x_star"]),
            z_star=doc["z_star"],
            e_star=None if doc["e_star"] is None else tuple(doc["e_star"]),
            x_e_star=arr(doc["x_e_star"]),
            z1_value=doc["z1_value"],
            total_selections=doc["total_selections"],
            candidates_examined=doc["candidates_examined"],
            candidates_pruned=doc["candidates_pruned"],
            empty_equations=tuple(doc["empty_equations"]),
            ties=tuple(tuple(t) for t in doc["ties"]),
        )
    if kind == "resolution":
        return ResolutionReport(
            feasible=doc["feasible"],
            Xbar=arr(doc["Xbar"]),
            index_sets=tuple(tuple(Ji) for Ji in doc["index_sets"]),
            empty_equations=tuple(doc["empty_equations"]),
            total_selections=doc["total_selections"],
            candidate_count=doc["candidate_count"],
            kept=tuple((tuple(k["selection"]), arr(k["point"])) for k in doc["kept"]),
            minimal=doc["minimal"],
        )
    raise ParseError(f"unknown report kind {kind!r}", "kind")


def _fmt_vec(v):
    return "[" + ", ".join(f"{x:.4f}" for x in v) + "]"


def _fmt_sel(e):
    return "[" + ", ".join(str(j + 1) for j in e) + "]"


def emit_report(report, mode="text"):
    """Render a report.

    ``machine`` gives full-precision JSON. ``text`` gives a short summary with
    4-decimal vectors and 1-based indices, the usual notation for these
    problems.
    """
    if mode == "machine":
        return json.dumps(report_document(report), indent=2) + "\n"
    if mode != "text":
        raise ValueError(f"unknown mode {mode!r}")

    lines = [f"verdict: {'feasible' if report.feasible else 'infeasible'}"]
    if isinstance(report, ResolutionReport):
        for i, Ji in enumerate(report.index_sets, start=1):
            lines.append(f"J_{i} = {{{', '.join(str(j + 1) for j in Ji)}}}")
    if report.empty_equations:
        lines.append("equations without admissible column: "
                     + ", ".join(str(i + 1) for i in report.empty_equations))
    lines.append(f"Xbar = {_fmt_vec(report.Xbar)}")
    lines.append(f"|E| = {report.total_selections}")
    if not report.feasible:
        return "\n".join(lines) + "\n"

    if isinstance(report, ResolutionReport):
        label = "minimal" if report.minimal else "kept"
        lines.append(f"selections examined: {report.candidate_count}")
        lines.append(f"{label} candidates: {len(report.kept)}")
        for e, p in report.kept:
            lines.append(f"  e = {_fmt_sel(e)}  X(e) = {_fmt_vec(p)}")
    else:
        lines.append(f"candidates examined: {report.candidates_examined}"
                     f" (pruned {report.candidates_pruned})")
        lines.append(f"e* = {_fmt_sel(report.e_star)}")
        lines.append(f"X(e*) = {_fmt_vec(report.x_e_star)}")
        lines.append(f"Z1 = {report.z1_value:.4f}")
        if len(report.ties) > 1:
            lines.append("tied selections: " + ", ".join(_fmt_sel(t) for t in report.ties))
        lines.append(f"x* = {_fmt_vec(report.x_star)}")
        lines.append(f"Z* = {report.z_star:.4f}")
    return "\n".join(lines) + "\n"
