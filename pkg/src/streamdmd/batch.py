"""Batch-processing DMD, used as the reference for the streaming methods."""

from dataclasses import dataclass

import numpy as np

__all__ = ["BatchDmdResult", "fit_batch", "full_operator"]

SVD_RCOND = 1e-12


@dataclass
class BatchDmdResult:
    """Projected batch DMD operator.

    Attributes
    ----------
    basis : (n, r) ndarray
        Leading left singular vectors of ``X``.
    operator : (r, r) ndarray
        ``basis.T @ Y @ pinv(X) @ basis`` with ``pinv`` taken through the
        rank-``r`` truncated SVD.
    singular_values : (r,) ndarray
    requested_rank : int
        The ``r`` asked for; ``rank`` may be smaller if ``X`` is numerically
        rank deficient.
    """

    basis: np.ndarray
    operator: np.ndarray
    singular_values: np.ndarray
    requested_rank: int

    @property
    def rank(self):
        return self.basis.shape[1]


def _check_pair(X, Y):
    X = np.asarray(X, dtype=float)
    Y = np.asarray(Y, dtype=float)
    if X.ndim == 1:
        X = X[:, None]
    if Y.ndim == 1:
        Y = Y[:, None]
    if X.shape != Y.shape:
        raise ValueError(f"X and Y must have the same shape, got {X.shape} and {Y.shape}")
    if X.shape[1] < 1:
        raise ValueError("need at least one snapshot pair")
    return X, Y


def fit_batch(X, Y, r):
    """Rank-``r`` projected DMD operator of the data matrices ``X``, ``Y``.

    Singular values below ``1e-12 * sigma_max`` are not inverted; if fewer
    than `r` survive, the operator is built on the numerical rank and
    ``result.rank < r``.
    """
    X, Y = _check_pair(X, Y)
    n, k = X.shape
    if not 1 <= r <= min(n, k):
        raise ValueError(f"r must lie in [1, {min(n, k)}], got {r}")
    U, s, Vh = np.linalg.svd(X, full_matrices=False)
    if s[0] == 0.0:
        raise ValueError("X is identically zero")
    rank = min(r, int(np.count_nonzero(s > SVD_RCOND * s[0])))
    U_r = U[:, :rank]
    s_r = s[:rank]
    V_r = Vh[:rank].T
    A_tilde = U_r.T @ Y @ (V_r / s_r)
    return BatchDmdResult(U_r, A_tilde, s_r, r)


def full_operator(X, Y):
    """Least-squares operator ``A = Y pinv(X)`` minimizing ``||Y - A X||_F``.

    Dense ``n x n``; intended as a small-scale oracle.
    """
    X, Y = _check_pair(X, Y)
    return Y @ np.linalg.pinv(X)
