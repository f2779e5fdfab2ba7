"""scikit-learn style front end.

:class:`FuzzyRelationalLP` resolves and optimizes in :meth:`~FuzzyRelationalLP.fit`,
then acts as a transformer (the max-T composition ``A o x``) and as a
classifier of points (solution or not).
"""

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .instance import DEFAULT_TOL, Instance
from .optimizer import solve
from .resolution import feasible_candidates, index_sets, membership_many
from .tnorm import compose
from .validation import check_points


class FuzzyRelationalLP(TransformerMixin, BaseEstimator):
    """Linear objective over ``{x in [0,1]^n : A o x = b}`` for the Aczel-Alsina t-norm.

    Parameters
    ----------
    lam : float, default=1.0
        Exponent of the Aczel-Alsina t-norm (1 gives the product t-norm).
    tol : float, default=1e-9
        Absolute tolerance for checking equations.
    prune : bool, default=False
        Use the bounded search for the positive-cost part.
    minimality_filter : bool, default=True
        Reduce ``candidates_`` to its minimal elements.
    all_optima : bool, default=False
        Record every selection tied at the optimum in ``ties_``.
    max_candidates : int or None
        Abort with :class:`~aafre.exceptions.SizeError` beyond this many.
    n_jobs : int or None
        Threads for candidate evaluation.

    Attributes
    ----------
    instance_ : Instance
    index_sets_ : tuple of tuples
    feasible_ : bool
    Xbar_ : ndarray of shape (n,)
        Greatest solution (the componentwise minimum of per-equation maxima).
    candidates_ : ndarray of shape (k, n)
        Candidate minimal solutions below ``Xbar_``.
    selections_ : list of tuples
    x_star_, z_star_, e_star_ :
        Optimum, its value and the selection it comes from. ``None`` when
        the region is empty.
    """

    def __init__(self, lam=1.0, tol=DEFAULT_TOL, prune=False, minimality_filter=True,
                 all_optima=False, max_candidates=None, n_jobs=None):
        self.lam = lam
        self.tol = tol
        self.prune = prune
        self.minimality_filter = minimality_filter
        self.all_optima = all_optima
        self.max_candidates = max_candidates
        self.n_jobs = n_jobs

    def fit(self, A, b, c=None):
        """Resolve ``A o x = b`` and, with a cost vector ``c``, minimize ``c.x``."""
        inst = Instance(A, b, c, self.lam, self.tol)
        resolution = feasible_candidates(inst, minimal=self.minimality_filter,
                                         max_candidates=self.max_candidates,
                                         n_jobs=self.n_jobs)
        self.instance_ = inst
        self.n_features_in_ = inst.n
        self.index_sets_ = index_sets(inst)
        self.feasible_ = resolution.feasible
        self.Xbar_ = resolution.Xbar
        self.candidates_ = resolution.kept_points
        self.selections_ = resolution.kept_selections
        self.resolution_ = resolution

        report = solve(inst, prune=self.prune, all_optima=self.all_optima,
                       max_candidates=self.max_candidates, n_jobs=self.n_jobs)
        self.report_ = report
        self.x_star_ = report.x_star
        self.z_star_ = report.z_star
        self.e_star_ = report.e_star
        self.ties_ = report.ties
        return self

    def transform(self, X):
        """Max-T composition of the fitted matrix with each row of ``X``."""
        check_is_fitted(self)
        X = check_points(X, self.n_features_in_)
        return compose(self.instance_.A, X, self.instance_.lam)

    def predict(self, X):
        """Boolean mask: which rows of ``X`` solve the fitted system."""
        check_is_fitted(self)
        return membership_many(self.instance_, X)

    def score(self, X, y=None):
        """Fraction of rows of ``X`` that solve the fitted system."""
        return float(np.mean(self.predict(X)))

    def fit_transform(self, A, b=None, c=None):
        raise TypeError("fit takes the system (A, b) while transform takes points; "
                        "call them separately")
