"""Input validation helpers shared by the functional API and the estimator."""

import numbers

import numpy as np
from sklearn.utils import check_array

from .exceptions import DimensionError, DomainError


def check_unit_matrix(A, name="A"):
    """Return ``A`` as a finite 2-D float array with entries in [0, 1]."""
    try:
        A = check_array(A, dtype=float, ensure_2d=True, copy=True)
    except ValueError as exc:
        raise DomainError(f"{name}: {exc}") from exc
    bad = np.argwhere((A < 0.0) | (A > 1.0))
    if bad.size:
        i, j = bad[0]
        raise DomainError(f"{name}[{i}, {j}] = {A[i, j]!r} is outside [0, 1]")
    return A


def check_unit_vector(v, length=None, name="b"):
    """Return ``v`` as a 1-D float array with entries in [0, 1]."""
    v = check_real_vector(v, length=length, name=name)
    bad = np.flatnonzero((v < 0.0) | (v > 1.0))
    if bad.size:
        k = bad[0]
        raise DomainError(f"{name}[{k}] = {v[k]!r} is outside [0, 1]")
    return v


def check_real_vector(v, length=None, name="c"):
    try:
        v = check_array(v, dtype=float, ensure_2d=False, copy=True)
    except ValueError as exc:
        raise DomainError(f"{name}: {exc}") from exc
    if v.ndim != 1:
        raise DimensionError(f"{name} must be one-dimensional, got shape {v.shape}")
    if length is not None and v.shape[0] != length:
        raise DimensionError(f"{name} must have length {length}, got {v.shape[0]}")
    return v


def check_points(X, n):
    """Return points as a (k, n) array in [0, 1]; a single vector becomes k = 1."""
    X = np.asarray(X, dtype=float)
    if X.ndim == 1:
        X = X[None, :]
    if X.ndim != 2 or X.shape[1] != n:
        raise DimensionError(f"points must have {n} columns, got shape {X.shape}")
    if np.any(np.isnan(X)) or np.any(X < 0.0) or np.any(X > 1.0):
        raise DomainError("points must lie in [0, 1]^n")
    return X


def check_tol(tol):
    if isinstance(tol, bool) or not isinstance(tol, numbers.Real) or not tol > 0:
        raise DomainError(f"tol must be a positive real, got {tol!r}")
    return float(tol)
