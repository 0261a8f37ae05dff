"""Efficient streaming DMD: a single orthonormal basis for both ``X`` and ``Y``.

Because consecutive pairs overlap (``x_i = y_{i-1}``), one basis spanning
the ``y`` snapshots also spans every ``x`` snapshot after the first, which
is covered by initializing the basis from ``[x_1, y_1]``. Only ``y`` is
tested against the basis at each step, and the projection of ``x`` is
reused from the previous step unless the basis changed.
"""

import json
from dataclasses import dataclass

import numpy as np

from ._common import DEFAULT_EPS, append_column, checked_snapshot, new_direction, pad
from .numerics import DEFAULT_RCOND, orthonormal_columns, pinv_psd, sym_eig_descending
from .snapshots import SnapshotPair

__all__ = [
    "EsdmdState",
    "esdmd_init",
    "update_basis",
    "reduced_operator",
    "EfficientStreamingDMD",
    "state_to_dict",
    "state_from_dict",
    "save_state",
    "load_state",
]

STATE_FORMAT = "streamdmd.esdmd-state"
STATE_VERSION = 1


@dataclass
class EsdmdState:
    """Persistent state of the single-basis streaming DMD.

    Attributes
    ----------
    Q : (n, q) ndarray
        Orthonormal basis, ``q <= max_rank``.
    G_X, G_Y, C : (q, q) ndarray
        Accumulated ``sum x~ x~^T``, ``sum y~ y~^T`` and ``sum y~ x~^T``.
    y_prev_projected : (q,) ndarray
        ``Q^T y`` from the previous step, reused as the next ``x~``.
    new_direction : bool
        Set while an update is expanding the basis; always False between
        updates.
    x_proj : (q,) ndarray
        The ``x~`` accumulated in the most recent step.
    expanded, compressed : bool
        What the most recent step did to the basis.
    """

    Q: np.ndarray
    G_X: np.ndarray
    G_Y: np.ndarray
    C: np.ndarray
    y_prev_projected: np.ndarray
    max_rank: int
    eps: float
    k: int
    new_direction: bool = False
    x_proj: np.ndarray = None
    expanded: bool = False
    compressed: bool = False

    @property
    def n_states(self):
        return self.Q.shape[0]

    @property
    def rank(self):
        return self.Q.shape[1]


def esdmd_init(pair, r, eps=DEFAULT_EPS):
    """State after the first pair, with the basis spanning ``[x_1, y_1]``.

    A collinear first pair yields a one-column basis.
    """
    if r < 2:
        raise ValueError("r must be at least 2")
    x = np.asarray(pair.x, dtype=float)
    n = x.shape[0]
    x = checked_snapshot(x, n, "x")
    y = checked_snapshot(pair.y, n, "y")
    if not x.any() or not y.any():
        raise ValueError("degenerate snapshot: zero vector")
    Q = orthonormal_columns(np.column_stack([x, y]), eps)
    xt = Q.T @ x
    yt = Q.T @ y
    return EsdmdState(
        Q=Q,
        G_X=np.outer(xt, xt),
        G_Y=np.outer(yt, yt),
        C=np.outer(yt, xt),
        y_prev_projected=yt,
        max_rank=r,
        eps=eps,
        k=1,
        x_proj=xt,
    )


def update_basis(state, pair):
    """Absorb one snapshot pair into `state` (in place) and return it.

    ``pair.x`` must equal the previous step's ``pair.y``; it is only read
    when the basis changes.
    """
    n = state.Q.shape[0]
    y = checked_snapshot(pair.y, n, "y")
    x = checked_snapshot(pair.x, n, "x")

    state.expanded = state.compressed = False
    p = new_direction(state.Q, y, state.eps)
    if p is not None:
        state.Q = append_column(state.Q, p)
        state.G_X = pad(state.G_X)
        state.G_Y = pad(state.G_Y)
        state.C = pad(state.C)
        if state.Q.shape[1] > state.max_rank:
            r = state.max_rank
            W, lam = sym_eig_descending(state.G_Y)
            W = W[:, :r]
            state.Q = state.Q @ W
            state.G_X = W.T @ state.G_X @ W
            state.C = W.T @ state.C @ W
            state.G_Y = np.diag(lam[:r])
            state.compressed = True
        state.new_direction = state.expanded = True

    yt = state.Q.T @ y
    xt = state.Q.T @ x if state.new_direction else state.y_prev_projected
    state.G_X += np.outer(xt, xt)
    state.G_Y += np.outer(yt, yt)
    state.C += np.outer(yt, xt)
    state.y_prev_projected = yt
    state.x_proj = xt
    state.new_direction = False
    state.k += 1
    return state


def reduced_operator(state, rcond=DEFAULT_RCOND):
    """``C pinv(G_X)`` in basis coordinates."""
    return state.C @ pinv_psd(state.G_X, rcond)


class EfficientStreamingDMD:
    """Single-basis streaming DMD driven one snapshot pair at a time."""

    name = "esdmd"

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
            self.state = esdmd_init(pair, self.max_rank, self.eps)
        else:
            update_basis(self.state, pair)
        return self

    @property
    def basis(self):
        return self.state.Q

    def operator(self):
        return reduced_operator(self.state, self.rcond)

    def spectrum(self):
        from .spectrum import dynamic_spectrum

        return dynamic_spectrum(self.basis, self.operator())


# Checkpoints ----------------------------------------------------------------
# Matrices are stored column-major as {"shape": [rows, cols], "data": [...]};
# JSON floats are written with repr, which round-trips exactly.

def _encode(M):
    M = np.asarray(M, dtype=float)
    return {"shape": list(M.shape), "data": M.ravel(order="F").tolist()}


def _decode(blob):
    shape = tuple(blob["shape"])
    data = np.asarray(blob["data"], dtype=float)
    if data.size != int(np.prod(shape)):
        raise ValueError(f"payload of {data.size} values does not match shape {shape}")
    return data.reshape(shape, order="F")


def state_to_dict(state):
    return {
        "format": STATE_FORMAT,
        "version": STATE_VERSION,
        "order": "F",
        "k": state.k,
        "max_rank": state.max_rank,
        "eps": state.eps,
        "Q": _encode(state.Q),
        "G_X": _encode(state.G_X),
        "G_Y": _encode(state.G_Y),
        "C": _encode(state.C),
        "y_prev_projected": _encode(state.y_prev_projected),
    }


def state_from_dict(d):
    if d.get("format") != STATE_FORMAT:
        raise ValueError(f"not an esDMD checkpoint (format={d.get('format')!r})")
    if d.get("version") != STATE_VERSION:
        raise ValueError(f"unsupported checkpoint version {d.get('version')!r}")
    Q = _decode(d["Q"])
    q = Q.shape[1]
    mats = {key: _decode(d[key]) for key in ("G_X", "G_Y", "C")}
    for key, M in mats.items():
        if M.shape != (q, q):
            raise ValueError(f"{key} has shape {M.shape}, expected {(q, q)}")
    yp = _decode(d["y_prev_projected"])
    if yp.shape != (q,):
        raise ValueError(f"y_prev_projected has shape {yp.shape}, expected {(q,)}")
    return EsdmdState(
        Q=Q,
        y_prev_projected=yp,
        max_rank=int(d["max_rank"]),
        eps=float(d["eps"]),
        k=int(d["k"]),
        **mats,
    )


def save_state(path, state):
    with open(path, "w") as fh:
        json.dump(state_to_dict(state), fh)


def load_state(path):
    with open(path) as fh:
        return state_from_dict(json.load(fh))
