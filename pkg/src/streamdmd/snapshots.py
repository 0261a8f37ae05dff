"""Snapshot pairs and streams built from trajectory matrices."""

from dataclasses import dataclass

import numpy as np

__all__ = [
    "SnapshotPair",
    "SnapshotStream",
    "stream_from_trajectory",
    "batch_matrices",
    "load_trajectory_csv",
    "save_trajectory_csv",
]


@dataclass(frozen=True)
class SnapshotPair:
    """One observation ``(x_i, y_i)`` with ``y_i = x_{i+1}``; `index` is 1-based."""

    x: np.ndarray
    y: np.ndarray
    index: int

    def __post_init__(self):
        if self.x.shape != self.y.shape:
            raise ValueError(
                f"x and y must have equal length, got {self.x.shape} and {self.y.shape}"
            )


class SnapshotStream:
    """Single-consumer iterator over the consecutive column pairs of a trajectory.

    Pair ``i`` (1-based) is ``(T[:, i-1], T[:, i])``. Consecutive pairs share
    the same array object, so ``next.x is prev.y``.
    """

    def __init__(self, trajectory):
        T = np.asarray(trajectory, dtype=float)
        if T.ndim != 2 or T.shape[1] < 2:
            raise ValueError("trajectory must be a 2-D array with at least 2 columns")
        # column slices of a Fortran-ordered copy are contiguous views
        self.trajectory = np.asfortranarray(T)
        self.cursor = 0

    def __len__(self):
        return self.trajectory.shape[1] - 1

    @property
    def n_states(self):
        return self.trajectory.shape[0]

    def __iter__(self):
        return self

    def __next__(self):
        if self.cursor >= len(self):
            raise StopIteration
        i = self.cursor
        T = self.trajectory
        self.cursor += 1
        return SnapshotPair(T[:, i], T[:, i + 1], i + 1)

    def pairs(self):
        """All pairs from the start, independent of the cursor."""
        T = self.trajectory
        cols = [T[:, j] for j in range(T.shape[1])]
        return [SnapshotPair(cols[j], cols[j + 1], j + 1) for j in range(len(self))]


def stream_from_trajectory(T):
    """Stream of ``cols(T) - 1`` snapshot pairs from an ``n x (m+1)`` trajectory."""
    return SnapshotStream(T)


def batch_matrices(stream):
    """Stack a stream's remaining pairs into the data matrices ``X`` and ``Y``.

    Accepts a :class:`SnapshotStream` (consumed from its cursor) or any
    iterable of :class:`SnapshotPair`.
    """
    if isinstance(stream, SnapshotStream) and stream.cursor == 0:
        T = stream.trajectory
        stream.cursor = len(stream)
        return np.array(T[:, :-1]), np.array(T[:, 1:])
    pairs = list(stream)
    if not pairs:
        raise ValueError("stream is empty")
    X = np.column_stack([p.x for p in pairs])
    Y = np.column_stack([p.y for p in pairs])
    return X, Y


def load_trajectory_csv(path):
    """Read a headerless CSV with one row per state variable and one column per sample."""
    T = np.loadtxt(path, delimiter=",", ndmin=2)
    if not np.all(np.isfinite(T)):
        raise ValueError(f"{path}: trajectory contains non-finite values")
    return T


def save_trajectory_csv(path, T):
    np.savetxt(path, np.asarray(T, dtype=float), delimiter=",", fmt="%.17g")
