"""Helpers shared by the two streaming engines."""

import numpy as np

DEFAULT_EPS = 1e-10


def checked_snapshot(v, n, name):
    v = np.asarray(v, dtype=float)
    if v.shape != (n,):
        raise ValueError(f"{name} has shape {v.shape}, expected ({n},)")
    if not np.isfinite(v).all():
        raise ValueError(f"{name} contains non-finite entries")
    return v


def new_direction(Q, v, eps):
    """Unit residual of `v` against `Q`, or None if it is within `eps` relative.

    The residual is reorthogonalized once before normalization so the
    extended basis stays orthonormal to round-off.
    """
    norm = np.linalg.norm(v)
    if norm == 0.0:
        return None
    e = v - Q @ (Q.T @ v)
    if np.linalg.norm(e) <= eps * norm:
        return None
    e -= Q @ (Q.T @ e)
    return e / np.linalg.norm(e)


def append_column(Q, p):
    n, q = Q.shape
    out = np.empty((n, q + 1))
    out[:, :q] = Q
    out[:, q] = p
    return out


def pad(M, rows=True, cols=True):
    """Zero-pad `M` by one row and/or one column."""
    r, c = M.shape
    out = np.zeros((r + rows, c + cols))
    out[:r, :c] = M
    return out
