"""Resolution of the feasible region of a max-Aczel-Alsina equation system.

The solution set is a union of boxes ``[X(e), Xbar]``: ``Xbar`` is the
greatest solution and each selection ``e`` (one admissible column per
equation) gives a candidate minimal point ``X(e)``. Column indices are
0-based throughout.
"""

import itertools
import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .exceptions import DimensionError, EmptySelectionError, SelectionError, SizeError
from .tnorm import compose, tnorm_eval, tnorm_residual
from .validation import check_points

logger = logging.getLogger(__name__)

_CHUNK = 4096


@dataclass(frozen=True)
class ResolutionReport:
    """Outcome of resolving an instance.

    ``kept`` holds ``(selection, point)`` pairs for candidates that lie below
    ``Xbar``; after the minimality filter only the minimal points remain.
    ``candidate_count`` is the number of selections evaluated and
    ``total_selections`` the size of the unreduced selection set.
    """

    feasible: bool
    Xbar: np.ndarray
    index_sets: tuple
    empty_equations: tuple = ()
    total_selections: int = 0
    candidate_count: int = 0
    kept: tuple = ()
    minimal: bool = False

    @property
    def kept_points(self):
        if not self.kept:
            return np.empty((0, self.Xbar.shape[0]))
        return np.array([p for _, p in self.kept])

    @property
    def kept_selections(self):
        return [e for e, _ in self.kept]


def index_sets(inst):
    """``J[i] = {j : a_ij >= b_i}`` by exact comparison."""
    return tuple(tuple(int(j) for j in np.flatnonzero(inst.A[i] >= inst.b[i]))
                 for i in range(inst.m))


def count_selections(inst, J=None):
    """Size of the unreduced selection set, the product of ``|J[i]|``."""
    J = index_sets(inst) if J is None else J
    return math.prod(len(Ji) for Ji in J)


def _check_equation(inst, i):
    if not 0 <= i < inst.m:
        raise IndexError(f"equation index {i} out of range for m = {inst.m}")


def local_max(inst, i):
    """Greatest solution of equation ``i`` alone.

    Columns outside ``J[i]`` cannot reach ``b_i`` at all, so they are left
    unconstrained at 1.
    """
    _check_equation(inst, i)
    row, bi = inst.A[i], inst.b[i]
    out = np.ones(inst.n)
    above = row > bi
    if bi > 0.0:
        if np.any(above):
            out[above] = tnorm_residual(row[above], bi, inst.lam)
    else:
        out[above] = 0.0
    return out


def global_max(inst):
    """Componentwise minimum of the per-equation greatest solutions."""
    return np.min([local_max(inst, i) for i in range(inst.m)], axis=0)


def membership(inst, x):
    """True iff every equation holds at ``x`` within ``inst.tol``."""
    x = np.asarray(x, dtype=float)
    if x.shape != (inst.n,):
        raise DimensionError(f"x must have shape ({inst.n},), got {x.shape}")
    check_points(x, inst.n)
    return bool(np.all(np.abs(compose(inst.A, x, inst.lam) - inst.b) <= inst.tol))


def membership_many(inst, X):
    """Vectorized :func:`membership` over the rows of ``X``."""
    X = check_points(X, inst.n)
    return np.all(np.abs(compose(inst.A, X, inst.lam) - inst.b) <= inst.tol, axis=1)


def empty_equations(inst, J=None):
    """Equations with ``b_i > 0`` and no admissible column."""
    J = index_sets(inst) if J is None else J
    return tuple(i for i, Ji in enumerate(J) if not Ji)


def feasibility(inst):
    """Return ``(feasible, Xbar)``; the region is nonempty iff ``Xbar`` solves it."""
    Xbar = global_max(inst)
    if empty_equations(inst):
        return False, Xbar
    return membership(inst, Xbar), Xbar


def residual_table(inst, J=None):
    """``R[i, j]``: value that selecting column ``j`` for equation ``i`` forces.

    Zero outside ``J[i]`` and on rows with ``b_i = 0``.
    """
    J = index_sets(inst) if J is None else J
    R = np.zeros((inst.m, inst.n))
    for i, Ji in enumerate(J):
        if Ji and inst.b[i] > 0.0:
            cols = list(Ji)
            R[i, cols] = tnorm_residual(inst.A[i, cols], inst.b[i], inst.lam)
    return R


def snapped_table(inst, Xbar, J=None):
    """:func:`residual_table` with entries above ``Xbar`` pulled down where harmless.

    Entries within ``tol`` above ``Xbar_j`` are set to ``Xbar_j``. Entries
    further above normally rule column ``j`` out for equation ``i``; when
    ``T(a_ij, Xbar_j)`` still matches ``b_i`` within ``tol`` the overshoot is
    rounding noise amplified by a flat t-norm, and they are snapped as well.
    Every candidate built from the table is then either ``<= Xbar`` or has an
    entry above ``Xbar + tol`` and gets discarded.
    """
    J = index_sets(inst) if J is None else J
    R = residual_table(inst, J)
    over = R > Xbar[None, :]
    if np.any(over):
        rows, cols = np.nonzero(over)
        near = R[rows, cols] <= Xbar[cols] + inst.tol
        far = ~near
        hit = np.abs(tnorm_eval(inst.A[rows[far], cols[far]], Xbar[cols[far]], inst.lam)
                     - inst.b[rows[far]]) <= inst.tol
        near[far] = hit
        R[rows[near], cols[near]] = Xbar[cols[near]]
        if np.any(hit):
            logger.debug("snapped %d ill-conditioned residuals to Xbar", int(hit.sum()))
    return R


def local_min_candidate(inst, i, j):
    """Point that is zero except for the value column ``j`` needs for equation ``i``."""
    _check_equation(inst, i)
    if not (0 <= j < inst.n and inst.A[i, j] >= inst.b[i]):
        raise SelectionError(f"column {j} is not admissible for equation {i}")
    out = np.zeros(inst.n)
    if inst.b[i] > 0.0:
        out[j] = tnorm_residual(inst.A[i, j], inst.b[i], inst.lam)
    return out


def candidate(inst, e):
    """Candidate minimal point ``X(e)``: componentwise max of the selected pieces."""
    if len(e) != inst.m:
        raise DimensionError(f"selection must have {inst.m} entries, got {len(e)}")
    return np.max([local_min_candidate(inst, i, j) for i, j in enumerate(e)], axis=0)


def candidate_points(R, selections):
    """Vectorized ``X(e)`` for a (k, m) integer array of selections."""
    selections = np.asarray(selections, dtype=np.intp)
    k, m = selections.shape
    X = np.zeros((k, R.shape[1]))
    rows = np.arange(k)
    for i in range(m):
        cols = selections[:, i]
        np.maximum.at(X, (rows, cols), R[i, cols])
    return X


def enumerate_selections(inst, reduce=True, limit=None):
    """Yield selections in lexicographic order.

    With ``reduce=True`` only one selection per distinct candidate point is
    produced, namely the lexicographically smallest one. Equations with
    ``b_i = 0`` contribute nothing and are pinned to their first column; the
    remaining equations are expanded layer by layer, merging prefixes whose
    partial points coincide, since such prefixes have identical completions.

    Raises
    ------
    EmptySelectionError
        If some equation has no admissible column.
    SizeError
        If more than ``limit`` selections (or partial states) would be produced.
    """
    J = index_sets(inst)
    empty = empty_equations(inst, J)
    if empty:
        raise EmptySelectionError(f"equations {list(empty)} have no admissible column")
    if not reduce:
        return _product(J, limit)
    return _reduced(inst, J, limit)


def _product(J, limit):
    for count, e in enumerate(itertools.product(*J), start=1):
        if limit is not None and count > limit:
            raise SizeError(f"more than {limit} selections")
        yield e


def _reduced(inst, J, limit):
    R = residual_table(inst, J)
    # partial point (sparse: column -> value) keyed for dedup; dict keeps insertion order
    states = {(): ()}
    for i, Ji in enumerate(J):
        if inst.b[i] == 0.0:
            states = {key: prefix + (Ji[0],) for key, prefix in states.items()}
            continue
        nxt = {}
        for key, prefix in states.items():
            point = dict(key)
            for j in Ji:
                merged = dict(point)
                merged[j] = max(merged.get(j, 0.0), R[i, j])
                new_key = tuple(sorted(merged.items()))
                if new_key not in nxt:
                    nxt[new_key] = prefix + (j,)
        if limit is not None and len(nxt) > limit:
            raise SizeError(f"more than {limit} partial selections at equation {i}")
        states = nxt
    yield from sorted(states.values())


def minimal_elements(points, tol=0.0):
    """Boolean mask of the rows of ``points`` not dominated by another row.

    Row ``q`` dominates ``p`` if ``q <= p + tol`` everywhere and ``q < p - tol``
    somewhere. Of several rows equal within ``tol`` only the first survives.
    """
    P = np.asarray(points, dtype=float)
    k = P.shape[0]
    keep = np.ones(k, dtype=bool)
    for start in range(0, k, 512):
        block = P[start:start + 512]
        le = np.all(P[:, None, :] <= block[None, :, :] + tol, axis=2)
        lt = np.any(P[:, None, :] < block[None, :, :] - tol, axis=2)
        ge = np.all(P[:, None, :] >= block[None, :, :] - tol, axis=2)
        earlier = np.arange(k)[:, None] < np.arange(start, start + block.shape[0])[None, :]
        dominated = np.any(le & lt, axis=0) | np.any(le & ge & earlier, axis=0)
        keep[start:start + block.shape[0]] = ~dominated
    return keep


def _chunks(iterable, size):
    it = iter(iterable)
    while chunk := list(itertools.islice(it, size)):
        yield np.array(chunk, dtype=np.intp)


def feasible_candidates(inst, minimal=True, reduce=True, max_candidates=None, n_jobs=None):
    """Resolve ``inst``: feasibility verdict, ``Xbar`` and the kept candidates.

    Candidates ``X(e)`` above ``Xbar + tol`` in some component are discarded,
    because they overshoot some right-hand side (see :func:`snapped_table`
    for the one numerical exception). Evaluation runs over chunks
    of the selection stream, optionally in ``n_jobs`` threads; results are
    merged in stream order, so the report does not depend on ``n_jobs``.
    """
    J = index_sets(inst)
    total = count_selections(inst, J)
    empty = empty_equations(inst, J)
    feasible, Xbar = feasibility(inst)
    if not feasible:
        return ResolutionReport(False, Xbar, J, empty, total, 0, (), minimal)

    R = snapped_table(inst, Xbar, J)
    selections = enumerate_selections(inst, reduce=reduce, limit=max_candidates)
    bound = Xbar + inst.tol

    def evaluate(chunk):
        X = candidate_points(R, chunk)
        ok = np.all(X <= bound, axis=1)
        return chunk[ok], X[ok], len(chunk)

    chunks = _chunks(selections, _CHUNK)
    if n_jobs is not None and n_jobs > 1:
        with ThreadPoolExecutor(max_workers=n_jobs) as pool:
            results = list(pool.map(evaluate, chunks))
    else:
        results = [evaluate(chunk) for chunk in chunks]

    count = sum(r[2] for r in results)
    sels = [tuple(int(j) for j in e) for r in results for e in r[0]]
    pts = [p for r in results for p in r[1]]
    if minimal and pts:
        mask = minimal_elements(np.array(pts), inst.tol)
        sels = [s for s, k in zip(sels, mask) if k]
        pts = [p for p, k in zip(pts, mask) if k]
    logger.debug("examined %d of %d selections, kept %d", count, total, len(pts))
    return ResolutionReport(True, Xbar, J, empty, total, count,
                            tuple(zip(sels, pts)), minimal)
