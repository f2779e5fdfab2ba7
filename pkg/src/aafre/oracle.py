"""Brute-force reference machinery.

Nothing here reuses the resolver: preimages come from bracketed root
finding on the plain t-norm formula, the greatest solution from the same
root finder, and candidate feasibility from direct evaluation of every
equation. The only shared piece is :class:`~aafre.instance.Instance`.
"""

import itertools
import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq, minimize_scalar

from .exceptions import DomainError, FitError, SizeError
from .instance import Instance
from .tnorm import check_lambda, compose, tnorm_residual

MAX_SELECTIONS = 10**5


@dataclass(frozen=True)
class GeneratorConfig:
    m: int
    n: int
    density: float = 0.7
    lam: float = 1.0
    seed: int = 0
    cost_scale: float = 10.0

    def __post_init__(self):
        if not (1 <= self.m <= 6 and 1 <= self.n <= 8):
            raise DomainError(f"oracle sizes need 1 <= m <= 6 and 1 <= n <= 8, "
                              f"got m={self.m}, n={self.n}")
        if not 0.0 < self.density <= 1.0:
            raise DomainError(f"density must be in (0, 1], got {self.density}")
        check_lambda(self.lam)


def generate_feasible(cfg, witness=None, max_condition=1e-12, max_tries=1000):
    """Random instance with a known solution.

    ``A`` has roughly ``density`` nonzero entries, a witness ``w`` is drawn
    from the unit cube and ``b`` is set to ``A o w``, so ``w`` is feasible.
    Costs are uniform on ``[-cost_scale, cost_scale]``.

    Draws where a one-ulp error in some ``b_i`` would move a residual by more
    than ``max_condition`` are discarded and redrawn from the same stream;
    there the t-norm is too flat for the rounded data to pin the residual.
    """
    rng = np.random.default_rng(cfg.seed)
    for _ in range(max_tries):
        A = rng.uniform(0.0, 1.0, (cfg.m, cfg.n))
        A *= rng.uniform(size=(cfg.m, cfg.n)) < cfg.density
        w = rng.uniform(0.0, 1.0, cfg.n) if witness is None else np.asarray(witness, dtype=float)
        c = rng.uniform(-cfg.cost_scale, cfg.cost_scale, cfg.n)
        b = compose(A, w, cfg.lam)
        if witness is not None or residual_amplification(A, b, cfg.lam) <= max_condition:
            return Instance(A, b, c, cfg.lam)
    raise DomainError(f"no well-conditioned instance in {max_tries} draws")


def residual_amplification(A, b, lam):
    """Largest change of a residual caused by one ulp of its right-hand side.

    Uses ``dT/dx = T (q / N)^(lam - 1) / x`` with ``q = -ln x`` and
    ``N = -ln T``, evaluated at every residual with ``a_ij > b_i > 0``.
    """
    worst = 0.0
    for i, j in zip(*np.nonzero((A > b[:, None]) & (b[:, None] > 0.0))):
        x = tnorm_residual(A[i, j], b[i], lam)
        if x >= 1.0:
            return math.inf
        q, N = -math.log(x), -math.log(b[i])
        log_slope = math.log(b[i]) + (lam - 1.0) * (math.log(q) - math.log(N)) - math.log(x)
        worst = max(worst, math.exp(math.log(np.spacing(b[i])) - log_slope))
    return worst


def naive_tnorm(a, x, lam):
    """Textbook formula, no log-domain care; zero when either argument is zero."""
    a, x = np.broadcast_arrays(np.asarray(a, dtype=float), np.asarray(x, dtype=float))
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        val = np.exp(-((-np.log(a)) ** lam + (-np.log(x)) ** lam) ** (1.0 / lam))
    return np.where((a == 0.0) | (x == 0.0), 0.0, val)


def direct_membership(inst, X):
    """Evaluate every equation at each row of ``X``; returns a boolean mask."""
    X = np.atleast_2d(np.asarray(X, dtype=float))
    lhs = np.max(naive_tnorm(inst.A[None, :, :], X[:, None, :], inst.lam), axis=2)
    return np.all(np.abs(lhs - inst.b) <= inst.tol, axis=1)


def preimage(a, b, lam):
    """``sup {x in [0, 1] : T(a, x) <= b}`` by bracketed root finding."""
    f = lambda x: float(naive_tnorm(a, x, lam)) - b
    if f(1.0) <= 0.0:
        return 1.0
    if f(0.0) >= 0.0:
        return 0.0
    return brentq(f, 0.0, 1.0, xtol=1e-15, rtol=4 * np.finfo(float).eps, maxiter=500)


def greatest_solution(inst):
    return np.array([min(preimage(inst.A[i, j], inst.b[i], inst.lam) for i in range(inst.m))
                     for j in range(inst.n)])


@dataclass(frozen=True)
class BruteForceResult:
    feasible: bool
    x_star: np.ndarray = None
    z_star: float = None
    Xbar: np.ndarray = None
    minimal_candidates: np.ndarray = None
    samples: np.ndarray = None
    selections: int = 0

    def __iter__(self):
        return iter((self.feasible, self.x_star, self.z_star))


def brute_force_solve(inst, n_samples=64, seed=0, limit=MAX_SELECTIONS):
    """Exhaustive optimum over every selection, with no reduction or pruning.

    Each ``X(e)`` is kept only if it passes :func:`direct_membership`. Every
    kept ``X(e)`` is merged with the greatest solution by cost sign and the
    cheapest merge is returned. Random points of the boxes ``[X(e), Xbar]``
    plus independently sampled feasible points are checked against the
    optimum; the feasible samples are returned for further checks.

    Raises
    ------
    SizeError
        If the unreduced selection count exceeds ``limit``.
    """
    A, b, lam = inst.A, inst.b, inst.lam
    J = [np.flatnonzero(A[i] >= b[i]) for i in range(inst.m)]
    total = math.prod(len(Ji) for Ji in J)
    if total > limit:
        raise SizeError(f"{total} selections exceed the oracle limit {limit}")
    Xbar = greatest_solution(inst)
    if total == 0 or not direct_membership(inst, Xbar)[0]:
        return BruteForceResult(False, Xbar=Xbar)

    pre = np.zeros((inst.m, inst.n))
    for i, Ji in enumerate(J):
        for j in Ji:
            pre[i, j] = preimage(A[i, j], b[i], lam) if b[i] > 0.0 else 0.0

    E = np.array(list(itertools.product(*J)), dtype=np.intp)
    X = np.zeros((len(E), inst.n))
    for k, e in enumerate(E):
        for i, j in enumerate(e):
            X[k, j] = max(X[k, j], pre[i, j])
    X = X[direct_membership(inst, X)]

    merged = np.where(inst.c < 0.0, Xbar, X)
    z = merged @ inst.c
    best = int(np.argmin(z))
    x_star, z_star = merged[best], float(z[best])

    rng = np.random.default_rng(seed)
    box = X[rng.integers(len(X), size=n_samples)]
    box = box + rng.uniform(size=box.shape) * (Xbar - box)
    samples = np.vstack([box[direct_membership(inst, box)], sample_feasible(inst, n_samples, rng, Xbar)])
    if samples.size and np.min(samples @ inst.c) < z_star - 1e-9:
        raise AssertionError("a sampled feasible point beats the enumerated optimum")

    order = np.lexsort(X.T[::-1])
    X = np.unique(X[order], axis=0)
    dominated = [np.any(np.all(X <= p, axis=1) & np.any(X < p, axis=1)) for p in X]
    return BruteForceResult(True, x_star, z_star, Xbar, X[~np.array(dominated)],
                            samples, total)


def sample_feasible(inst, n_samples, rng, Xbar=None):
    """Feasible points found by randomly lowering coordinates of ``Xbar``.

    Each trial lowers a random subset of coordinates, half of them to zero
    and half to a uniform fraction of their bound; only points that pass
    direct membership are returned.
    """
    Xbar = greatest_solution(inst) if Xbar is None else Xbar
    trials = 20 * n_samples
    lower = rng.uniform(size=(trials, inst.n)) < rng.uniform(size=(trials, 1))
    scale = np.where(rng.uniform(size=(trials, inst.n)) < 0.5, 0.0,
                     rng.uniform(size=(trials, inst.n)))
    X = np.where(lower, Xbar * scale, Xbar)
    X = X[direct_membership(inst, X)]
    return X[:n_samples]


def fit_lambda(values, bounds=(0.1, 50.0), max_error=1e-3):
    """Recover the t-norm exponent from ``(a, b, x)`` triples with ``T(a, x) = b``.

    Minimizes the squared residual error over ``bounds`` by bounded scalar
    search.

    Raises
    ------
    FitError
        If no triple has ``a > b`` (the residual is then 1 for every exponent)
        or the best fit misses some triple by more than ``max_error``.
    """
    triples = [(float(a), float(b), float(x)) for a, b, x in values]
    informative = [(a, b, x) for a, b, x in triples if a > b > 0.0]
    if not informative:
        raise FitError("no triple with a > b > 0; the exponent is undetermined")
    a, b, x = map(np.array, zip(*informative))

    def loss(lam):
        return float(np.sum((tnorm_residual(a, b, lam) - x) ** 2))

    res = minimize_scalar(loss, bounds=bounds, method="bounded",
                          options={"xatol": 1e-10})
    worst = float(np.max(np.abs(tnorm_residual(a, b, res.x) - x)))
    if worst > max_error:
        raise FitError(f"best exponent {res.x:.6g} misses a triple by {worst:.3g}")
    return float(res.x)
