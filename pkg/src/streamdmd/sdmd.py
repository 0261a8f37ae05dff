"""Two-basis streaming DMD baseline.

Separate orthonormal bases are kept for the column spaces of ``X`` and
``Y``; each is extended by Gram-Schmidt and compressed onto the leading
eigenvectors of its Gram matrix whenever it exceeds the rank cap.
"""

from dataclasses import dataclass

import numpy as np

from ._common import DEFAULT_EPS, append_column, checked_snapshot, new_direction, pad
from .snapshots import SnapshotPair
from .numerics import DEFAULT_RCOND, pinv_psd, sym_eig_descending

__all__ = ["SdmdState", "sdmd_init", "sdmd_update", "sdmd_operator", "StreamingDMD"]


@dataclass
class SdmdState:
    """Persistent state of the two-basis streaming DMD.

    ``C`` is ``ry x rx``: it maps X-basis coordinates to Y-basis coordinates.
    ``x_proj`` and ``y_proj`` hold the projections accumulated in the most
    recent step.
    """

    Q_X: np.ndarray
    Q_Y: np.ndarray
    G_X: np.ndarray
    G_Y: np.ndarray
    C: np.ndarray
    max_rank: int
    eps: float
    k: int
    x_proj: np.ndarray
    y_proj: np.ndarray
    compressed: bool = False

    @property
    def n_states(self):
        return self.Q_X.shape[0]


def sdmd_init(pair, r, eps=DEFAULT_EPS):
    """State after the first snapshot pair: one column per basis."""
    if r < 1:
        raise ValueError("r must be at least 1")
    x = np.asarray(pair.x, dtype=float)
    n = x.shape[0]
    x = checked_snapshot(x, n, "x")
    y = checked_snapshot(pair.y, n, "y")
    nx = np.linalg.norm(x)
    ny = np.linalg.norm(y)
    if nx == 0.0 or ny == 0.0:
        raise ValueError("degenerate snapshot: zero vector")
    Q_X = (x / nx)[:, None]
    Q_Y = (y / ny)[:, None]
    xt = Q_X.T @ x
    yt = Q_Y.T @ y
    return SdmdState(
        Q_X=Q_X,
        Q_Y=Q_Y,
        G_X=np.outer(xt, xt),
        G_Y=np.outer(yt, yt),
        C=np.outer(yt, xt),
        max_rank=r,
        eps=eps,
        k=1,
        x_proj=xt,
        y_proj=yt,
    )


def sdmd_update(state, pair):
    """Absorb one snapshot pair into `state` (in place) and return it.

    Order: Gram-Schmidt expansion of each basis, compression of any basis
    exceeding ``max_rank``, then accumulation of the new projections.
    """
    n = state.Q_X.shape[0]
    x = checked_snapshot(pair.x, n, "x")
    y = checked_snapshot(pair.y, n, "y")
    r = state.max_rank

    px = new_direction(state.Q_X, x, state.eps)
    if px is not None:
        state.Q_X = append_column(state.Q_X, px)
        state.G_X = pad(state.G_X)
        state.C = pad(state.C, rows=False, cols=True)
    py = new_direction(state.Q_Y, y, state.eps)
    if py is not None:
        state.Q_Y = append_column(state.Q_Y, py)
        state.G_Y = pad(state.G_Y)
        state.C = pad(state.C, rows=True, cols=False)

    state.compressed = False
    if state.Q_X.shape[1] > r:
        W, lam = sym_eig_descending(state.G_X)
        W = W[:, :r]
        state.Q_X = state.Q_X @ W
        state.G_X = np.diag(lam[:r])
        state.C = state.C @ W
        state.compressed = True
    if state.Q_Y.shape[1] > r:
        W, lam = sym_eig_descending(state.G_Y)
        W = W[:, :r]
        state.Q_Y = state.Q_Y @ W
        state.G_Y = np.diag(lam[:r])
        state.C = W.T @ state.C
        state.compressed = True

    xt = state.Q_X.T @ x
    yt = state.Q_Y.T @ y
    state.G_X += np.outer(xt, xt)
    state.G_Y += np.outer(yt, yt)
    state.C += np.outer(yt, xt)
    state.x_proj = xt
    state.y_proj = yt
    state.k += 1
    return state


def sdmd_operator(state, rcond=DEFAULT_RCOND):
    """Reduced operator ``Q_X^T Q_Y C pinv(G_X)`` in X-basis coordinates."""
    return state.Q_X.T @ state.Q_Y @ state.C @ pinv_psd(state.G_X, rcond)


class StreamingDMD:
    """Two-basis streaming DMD driven one snapshot pair at a time.

    >>> model = StreamingDMD(max_rank=10)
    >>> for x, y in pairs:              # doctest: +SKIP
    ...     model.update(x, y)
    >>> spec = model.spectrum()         # doctest: +SKIP
    """

    name = "sdmd"

    def __init__(self, max_rank, eps=DEFAULT_EPS, rcond=DEFAULT_RCOND):
        self.max_rank = max_rank
        self.eps = eps
        self.rcond = rcond
        self.state = None

    def update(self, x, y):
        k = 0 if self.state is None else self.state.k
        return self.update_pair(SnapshotPair(np.asarray(x, float), np.asarray(y, float), k + 1))

    def update_pair(self, pair):
        if self.state is None:
            self.state = sdmd_init(pair, self.max_rank, self.eps)
        else:
            sdmd_update(self.state, pair)
        return self

    @property
    def basis(self):
        return self.state.Q_X

    def operator(self):
        return sdmd_operator(self.state, self.rcond)

    def spectrum(self):
        from .spectrum import dynamic_spectrum

        return dynamic_spectrum(self.basis, self.operator())

