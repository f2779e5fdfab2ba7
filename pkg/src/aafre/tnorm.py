"""Aczel-Alsina t-norm kernel.

``T(a, x) = exp(-[(-ln a)^lam + (-ln x)^lam]^(1/lam))`` with ``T = 0`` when
either argument is 0. The power sum is evaluated in log domain, so the
kernel stays finite for large exponents and for arguments close to 0 or 1.
All functions accept scalars or broadcastable arrays; scalar inputs give
Python floats back.
"""

import math
import numbers

import numpy as np

from .exceptions import DimensionError, DomainError


def check_lambda(lam):
    """Validate the t-norm exponent and return it as a float."""
    if isinstance(lam, bool) or not isinstance(lam, numbers.Real):
        raise DomainError(f"lambda must be a real number, got {lam!r}")
    lam = float(lam)
    if not (lam > 0.0 and math.isfinite(lam)):
        raise DomainError(f"lambda must be positive and finite, got {lam!r}")
    return lam


def _as_unit(values, name):
    arr = np.asarray(values, dtype=float)
    if np.any(np.isnan(arr)) or np.any(arr < 0.0) or np.any(arr > 1.0):
        raise DomainError(f"{name} must lie in [0, 1]")
    return arr


def _scalar_or_array(arr, scalar):
    return float(arr) if scalar else arr


def tnorm_eval(a, x, lam):
    """Evaluate ``T_lam(a, x)`` elementwise.

    The inner norm ``(p^lam + q^lam)^(1/lam)`` with ``p = -ln a``,
    ``q = -ln x`` is the exponential of ``logsumexp(lam ln p, lam ln q) / lam``,
    written as ``hi * exp(log1p(exp(lam (ln lo - ln hi))) / lam)`` where
    ``hi = max(p, q)``. Ordering the pair first makes the result exactly
    symmetric in its arguments.
    """
    lam = check_lambda(lam)
    scalar = np.ndim(a) == 0 and np.ndim(x) == 0
    a, x = np.broadcast_arrays(_as_unit(a, "a"), _as_unit(x, "x"))
    out = np.zeros(a.shape, dtype=float)

    zero = (a == 0.0) | (x == 0.0)
    a_one = (a == 1.0) & ~zero
    x_one = (x == 1.0) & ~zero & ~a_one
    out[a_one] = x[a_one]
    out[x_one] = a[x_one]

    inner = ~(zero | a_one | x_one)
    if np.any(inner):
        p = -np.log(a[inner])
        q = -np.log(x[inner])
        hi = np.maximum(p, q)
        lo = np.minimum(p, q)
        log_ratio = lam * (np.log(lo) - np.log(hi))
        norm = hi * np.exp(np.log1p(np.exp(log_ratio)) / lam)
        # the bound T <= min(a, x) can slip by an ulp after exponentiation
        out[inner] = np.minimum(np.exp(-norm), np.minimum(a[inner], x[inner]))

    np.clip(out, 0.0, 1.0, out=out)
    return _scalar_or_array(out, scalar)


def tnorm_residual(a, b, lam):
    """Return the unique ``x`` with ``T_lam(a, x) = b`` for ``a >= b > 0``.

    Uses ``(P^lam - Q^lam)^(1/lam) = P * (-expm1(lam ln(Q/P)))^(1/lam)`` with
    ``P = -ln b >= Q = -ln a``, so nearly equal powers are subtracted without
    cancellation. Exactly 1 when ``a == b`` and exactly ``b`` when ``a == 1``.

    Raises
    ------
    DomainError
        If ``b > a`` (no preimage) or ``b == 0`` (preimage not unique).
    """
    lam = check_lambda(lam)
    scalar = np.ndim(a) == 0 and np.ndim(b) == 0
    a, b = np.broadcast_arrays(_as_unit(a, "a"), _as_unit(b, "b"))
    if np.any(b > a):
        raise DomainError("residual undefined for b > a")
    if np.any(b == 0.0):
        raise DomainError("residual undefined for b == 0")

    out = np.ones(a.shape, dtype=float)
    a_one = (a == 1.0) & (b < 1.0)
    out[a_one] = b[a_one]

    inner = (a > b) & ~a_one
    if np.any(inner):
        big = -np.log(b[inner])
        small = -np.log(a[inner])
        # near a == b use ln(Q/P) = log1p((Q - P)/P) with Q - P = ln(b/a)
        close = small > 0.5 * big
        log_ratio = np.log(small) - np.log(big)
        log_ratio[close] = np.log1p(np.log(b[inner][close] / a[inner][close]) / big[close])
        norm = big * np.exp(np.log(-np.expm1(lam * log_ratio)) / lam)
        out[inner] = np.exp(-norm)

    np.clip(out, 0.0, 1.0, out=out)
    return _scalar_or_array(out, scalar)


def max_compose(row, x, lam):
    """Max-T composition of one coefficient row with a point."""
    row = np.asarray(row, dtype=float)
    x = np.asarray(x, dtype=float)
    if row.ndim != 1 or row.shape != x.shape or row.size == 0:
        raise DimensionError(
            f"row and x must be nonempty vectors of equal length, "
            f"got shapes {row.shape} and {x.shape}"
        )
    return float(np.max(tnorm_eval(row, x, lam)))


def compose(A, X, lam):
    """Max-T composition of matrix ``A`` (m x n) with one or many points.

    ``X`` of shape (n,) gives an (m,) vector; shape (k, n) gives (k, m).
    """
    A = np.asarray(A, dtype=float)
    X = np.asarray(X, dtype=float)
    if A.ndim != 2 or X.ndim not in (1, 2) or X.shape[-1] != A.shape[1]:
        raise DimensionError(
            f"cannot compose A of shape {A.shape} with points of shape {X.shape}"
        )
    if X.ndim == 1:
        return np.max(tnorm_eval(A, X[None, :], lam), axis=1)
    return np.max(tnorm_eval(A[None, :, :], X[:, None, :], lam), axis=2)
