"""Linear objective over the solution set.

The cost splits into its positive and negative parts. The negative part is
minimized by the greatest solution ``Xbar``, the positive part by the best
candidate ``X(e*)``, and the optimum takes ``Xbar_j`` where ``c_j < 0`` and
``X(e*)_j`` elsewhere.
"""

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .exceptions import InfeasibleError, SizeError
from .resolution import (
    ResolutionReport,
    count_selections,
    empty_equations,
    feasibility,
    feasible_candidates,
    index_sets,
    snapped_table,
)


class CostSplit(NamedTuple):
    c_plus: np.ndarray
    c_minus: np.ndarray


@dataclass(frozen=True)
class OptimizationReport:
    """Result of :func:`solve`. Optimum fields are ``None`` when infeasible."""

    feasible: bool
    Xbar: np.ndarray
    x_star: np.ndarray = None
    z_star: float = None
    e_star: tuple = None
    x_e_star: np.ndarray = None
    z1_value: float = None
    total_selections: int = 0
    candidates_examined: int = 0
    candidates_pruned: int = 0
    empty_equations: tuple = ()
    ties: tuple = ()


def split_cost(c):
    """Exact sign split; zero costs land in the positive part."""
    c = np.asarray(c, dtype=float)
    return CostSplit(np.where(c >= 0.0, c, 0.0), np.where(c < 0.0, c, 0.0))


def _dot(c, x):
    return math.fsum(float(ci) * float(xi) for ci, xi in zip(c, x))


# relative tolerance under which two objective values count as tied
TIE_RTOL = 1e-12


def _improves(z, best):
    return best is None or z < best - TIE_RTOL * best


def _ties(z, best):
    return abs(z - best) <= TIE_RTOL * best


def minimize_z1(inst, report, prune=False, all_optima=False, max_candidates=None):
    """Best candidate for the positive part of the cost.

    Returns ``(e_star, X(e_star), z1, info)`` where ``info`` carries the
    examined/pruned counts and, with ``all_optima``, every selection tied at
    the optimum. Candidates are scanned in lexicographic order of their
    selection and the incumbent only changes on a strict improvement beyond
    a relative ``1e-12``, so ties (including ones blurred by rounding) go to
    the lexicographically smallest selection.

    The exhaustive mode scans ``report.kept``. The pruned mode runs a
    depth-first search over equations, abandoning a prefix once its partial
    objective can no longer improve on the incumbent or its partial point
    leaves the box below ``Xbar``; the positive part never decreases along
    a branch, so both modes return the same ``(e_star, z1)``.
    """
    if not report.feasible:
        raise InfeasibleError("the feasible region is empty")
    c_plus = split_cost(inst.c).c_plus
    if prune:
        return _branch_and_bound(inst, report.Xbar, c_plus, all_optima, max_candidates)
    if not report.kept:
        raise InfeasibleError("no candidate lies below the greatest solution")

    best = None
    values = []
    for k, (e, p) in enumerate(report.kept):
        z = _dot(c_plus, p)
        values.append(z)
        if _improves(z, None if best is None else values[best]):
            best = k
    e_star, x_e = report.kept[best]
    z1 = values[best]
    ties = ()
    if all_optima:
        ties = tuple(e for (e, _), z in zip(report.kept, values) if _ties(z, z1))
    info = {"examined": report.candidate_count, "pruned": 0, "ties": ties}
    return e_star, x_e, z1, info


def _branch_and_bound(inst, Xbar, c_plus, all_optima, limit):
    J = index_sets(inst)
    R = snapped_table(inst, Xbar, J)
    bound = Xbar + inst.tol
    m, n = inst.m, inst.n
    state = {"best": None, "examined": 0, "pruned": 0, "leaves": []}

    def visit(i, prefix, point):
        z = _dot(c_plus, point)
        best = state["best"]
        if best is not None and not _improves(z, best[2]):
            if not (all_optima and _ties(z, best[2])):
                state["pruned"] += 1
                return
        if i == m:
            state["examined"] += 1
            if limit is not None and state["examined"] > limit:
                raise SizeError(f"more than {limit} candidates examined")
            if _improves(z, None if best is None else best[2]):
                state["best"] = (tuple(prefix), point.copy(), z)
            if all_optima:
                state["leaves"].append((tuple(prefix), point.copy(), z))
            return
        if inst.b[i] == 0.0:
            visit(i + 1, prefix + [J[i][0]], point)
            return
        for j in J[i]:
            v = max(point[j], R[i, j])
            if v > bound[j]:
                state["pruned"] += 1
                continue
            nxt = point.copy()
            nxt[j] = v
            visit(i + 1, prefix + [j], nxt)

    visit(0, [], np.zeros(n))
    if state["best"] is None:
        raise InfeasibleError("no candidate lies below the greatest solution")
    e, p, z = state["best"]
    ties = ()
    if all_optima:
        # one representative per distinct point, as in the reduced enumeration
        seen = {}
        for t, q, zt in state["leaves"]:
            if _ties(zt, z):
                seen.setdefault(q.tobytes(), t)
        ties = tuple(seen.values())
    info = {"examined": state["examined"], "pruned": state["pruned"], "ties": ties}
    return e, p, z, info


def merge_optimum(inst, Xbar, x_e_star):
    """``Xbar_j`` where ``c_j < 0``, ``X(e*)_j`` otherwise."""
    return np.where(np.asarray(inst.c) < 0.0, Xbar, x_e_star)


def solve(inst, prune=False, all_optima=False, max_candidates=None, n_jobs=None):
    """Minimize ``c.x`` over the solution set of ``inst``.

    Infeasible instances give a report with ``feasible=False`` and ``Xbar``
    filled in; nothing is raised.
    """
    J = index_sets(inst)
    total = count_selections(inst, J)
    feasible, Xbar = feasibility(inst)
    if not feasible:
        return OptimizationReport(False, Xbar, total_selections=total,
                                  empty_equations=empty_equations(inst, J))
    if prune:
        report = ResolutionReport(True, Xbar, J, (), total)
    else:
        report = feasible_candidates(inst, minimal=False, max_candidates=max_candidates,
                                     n_jobs=n_jobs)
    e_star, x_e, z1, info = minimize_z1(inst, report, prune=prune, all_optima=all_optima,
                                        max_candidates=max_candidates)
    x_star = merge_optimum(inst, Xbar, x_e)
    return OptimizationReport(
        feasible=True,
        Xbar=Xbar,
        x_star=x_star,
        z_star=_dot(inst.c, x_star),
        e_star=e_star,
        x_e_star=x_e,
        z1_value=z1,
        total_selections=total,
        candidates_examined=info["examined"],
        candidates_pruned=info["pruned"],
        ties=info["ties"],
    )
