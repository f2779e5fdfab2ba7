"""Problem data: ``min c.x`` subject to ``max_j T(a_ij, x_j) = b_i``, ``x in [0,1]^n``."""

from dataclasses import dataclass

import numpy as np

from .tnorm import check_lambda
from .validation import check_real_vector, check_tol, check_unit_matrix, check_unit_vector

DEFAULT_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class Instance:
    """Immutable problem instance.

    Arrays are copied on construction and marked read-only. ``c`` defaults
    to the zero vector, which turns the optimizer into a pure resolver.
    """

    A: np.ndarray
    b: np.ndarray
    c: np.ndarray = None
    lam: float = 1.0
    tol: float = DEFAULT_TOL

    def __post_init__(self):
        A = check_unit_matrix(self.A)
        b = check_unit_vector(self.b, length=A.shape[0], name="b")
        if self.c is None:
            c = np.zeros(A.shape[1])
        else:
            c = check_real_vector(self.c, length=A.shape[1], name="c")
        for arr in (A, b, c):
            arr.flags.writeable = False
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "lam", check_lambda(self.lam))
        object.__setattr__(self, "tol", check_tol(self.tol))

    @property
    def m(self):
        return self.A.shape[0]

    @property
    def n(self):
        return self.A.shape[1]

    def replace(self, **changes):
        fields = dict(A=self.A, b=self.b, c=self.c, lam=self.lam, tol=self.tol)
        fields.update(changes)
        return Instance(**fields)
