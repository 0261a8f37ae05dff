"""Lift reduced-operator eigenpairs to full-space modes and compare spectra."""

from dataclasses import dataclass

import numpy as np

from .numerics import eig_general

__all__ = ["Spectrum", "dynamic_spectrum", "normalized_frequencies", "match_spectra"]


@dataclass
class Spectrum:
    """Discrete-time DMD spectrum.

    Attributes
    ----------
    eigenvalues : (q,) complex ndarray
        Sorted by descending modulus.
    modes : (n, q) complex ndarray
        ``Q @ V`` for the reduced eigenvectors ``V``.
    normalized_frequencies : (q,) ndarray
        ``|arg(lambda)| / pi``, the mode frequency as a fraction of Nyquist.
    amplitudes : (q,) ndarray
        ``|lambda|``.
    reduced_eigenvectors : (q, q) complex ndarray
    """

    eigenvalues: np.ndarray
    modes: np.ndarray
    normalized_frequencies: np.ndarray
    amplitudes: np.ndarray
    reduced_eigenvectors: np.ndarray

    def __len__(self):
        return len(self.eigenvalues)

    def physical_frequencies(self, fs):
        """Mode frequencies in Hz for sample rate `fs`."""
        return self.normalized_frequencies * fs / 2.0


def normalized_frequencies(eigenvalues):
    return np.abs(np.angle(eigenvalues)) / np.pi


def dynamic_spectrum(Q, A_tilde):
    """Eigendecompose the reduced operator and lift its eigenvectors through `Q`."""
    Q = np.asarray(Q, dtype=float)
    A_tilde = np.asarray(A_tilde, dtype=float)
    if A_tilde.ndim != 2 or A_tilde.shape[0] != A_tilde.shape[1]:
        raise ValueError(f"A_tilde must be square, got shape {A_tilde.shape}")
    if Q.ndim != 2 or Q.shape[1] != A_tilde.shape[0]:
        raise ValueError(
            f"basis with {Q.shape[-1]} columns does not match operator of size {A_tilde.shape[0]}"
        )
    evals, V = eig_general(A_tilde)
    return Spectrum(
        eigenvalues=evals,
        modes=Q @ V,
        normalized_frequencies=normalized_frequencies(evals),
        amplitudes=np.abs(evals),
        reduced_eigenvectors=V,
    )


def _eigenvalues(s):
    return np.asarray(s.eigenvalues if isinstance(s, Spectrum) else s, dtype=complex)


def match_spectra(a, b, top_k):
    """Largest pairwise distance after greedily matching eigenvalues of `a` to `b`.

    The `top_k` largest-modulus eigenvalues of `a` are visited in descending
    modulus order; each is paired with the nearest not-yet-used eigenvalue
    of `b` in the complex plane. Accepts :class:`Spectrum` objects or plain
    eigenvalue sequences.
    """
    ea = _eigenvalues(a)
    eb = _eigenvalues(b)
    if ea.size == 0 or eb.size == 0:
        raise ValueError("both spectra must be non-empty")
    if not 1 <= top_k <= min(ea.size, eb.size):
        raise ValueError(f"top_k must lie in [1, {min(ea.size, eb.size)}], got {top_k}")
    order = np.argsort(-np.abs(ea), kind="stable")
    used = np.zeros(eb.size, dtype=bool)
    worst = 0.0
    for i in order[:top_k]:
        d = np.abs(eb - ea[i])
        d[used] = np.inf
        j = int(np.argmin(d))
        used[j] = True
        worst = max(worst, float(d[j]))
    return worst
