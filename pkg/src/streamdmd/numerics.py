"""Dense linear-algebra primitives shared by the decomposition engines.

Every routine here fixes its ordering and sign conventions so that results
are reproducible bit-for-bit across calls with identical inputs.
"""

from typing import NamedTuple

import numpy as np

__all__ = [
    "orthonormal_columns",
    "sym_eig_descending",
    "pinv_psd",
    "eig_general",
    "ComplexSpectrumPair",
    "DEFAULT_RCOND",
]

DEFAULT_RCOND = 1e-12
SYMMETRY_RTOL = 1e-12
NEGATIVE_EIG_RTOL = 1e-10


class ComplexSpectrumPair(NamedTuple):
    """Eigenvalues with matching unit-norm eigenvectors (one column each).

    Eigenvalues are sorted by descending modulus, ties broken by descending
    imaginary part and then descending real part. Each eigenvector is scaled
    so that its largest-magnitude entry is real and positive.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def _as_finite_matrix(M, name="matrix"):
    M = np.asarray(M, dtype=float)
    if M.ndim != 2:
        raise ValueError(f"{name} must be two-dimensional, got shape {M.shape}")
    if not np.all(np.isfinite(M)):
        raise ValueError(f"{name} contains non-finite entries")
    return M


def orthonormal_columns(M, tol=1e-10):
    """Orthonormal basis for the column space of `M`.

    Modified Gram-Schmidt with one reorthogonalization pass. A column is
    dropped when its residual after projection onto the previously accepted
    columns is at most ``tol`` times its own norm, so the number of returned
    columns equals the numerical rank of `M`.

    Parameters
    ----------
    M : (n, k) array_like
    tol : float
        Relative residual tolerance, must be positive.

    Returns
    -------
    Q : (n, q) ndarray
        ``q <= k`` orthonormal columns, in the order the columns of `M`
        contributed them.
    """
    M = _as_finite_matrix(M, "M")
    if M.shape[1] < 1:
        raise ValueError("M must have at least one column")
    if tol <= 0:
        raise ValueError("tol must be positive")
    if not np.any(M):
        raise ValueError("degenerate input: all-zero matrix")

    n, k = M.shape
    Q = np.empty((n, min(n, k)))
    q = 0
    for j in range(k):
        col = M[:, j]
        norm = np.linalg.norm(col)
        if norm == 0.0:
            continue
        v = col.copy()
        for _ in range(2):
            for i in range(q):
                v -= (Q[:, i] @ v) * Q[:, i]
        res = np.linalg.norm(v)
        if res <= tol * norm:
            continue
        Q[:, q] = v / res
        q += 1
        if q == n:
            break
    return Q[:, :q].copy()


def _fix_signs(W):
    # largest-magnitude entry of each column made positive; argmax picks the
    # first of tied entries
    idx = np.argmax(np.abs(W), axis=0)
    signs = np.sign(W[idx, np.arange(W.shape[1])])
    signs[signs == 0] = 1.0
    return W * signs


def sym_eig_descending(G):
    """Eigendecomposition of a symmetric matrix, largest eigenvalue first.

    Returns
    -------
    W : (q, q) ndarray
        Orthogonal eigenvector matrix; the largest-magnitude entry of each
        column is positive.
    lam : (q,) ndarray
        Eigenvalues in descending order.

    Raises
    ------
    ValueError
        If `G` is not square or not symmetric to ``1e-12`` relative
        Frobenius tolerance.
    """
    G = _as_finite_matrix(G, "G")
    if G.shape[0] != G.shape[1]:
        raise ValueError(f"G must be square, got shape {G.shape}")
    gnorm = np.linalg.norm(G)
    if np.linalg.norm(G - G.T) > SYMMETRY_RTOL * gnorm:
        raise ValueError("G is not symmetric")
    lam, W = np.linalg.eigh(G)
    lam = lam[::-1].copy()
    W = _fix_signs(W[:, ::-1])
    return W, lam


def pinv_psd(G, rcond=DEFAULT_RCOND):
    """Moore-Penrose pseudoinverse of a symmetric positive semidefinite matrix.

    Eigenvalues above ``rcond * lam_max`` are inverted; the rest, including
    round-off negatives down to ``-1e-10 * lam_max``, are treated as zero.
    """
    W, lam = sym_eig_descending(G)
    if lam.size == 0:
        return np.zeros_like(G, dtype=float)
    lam_max = lam[0]
    if lam_max <= 0.0:
        return np.zeros(W.shape)
    if lam[-1] < -NEGATIVE_EIG_RTOL * lam_max:
        raise ValueError("G is not positive semidefinite")
    keep = lam > rcond * lam_max
    Wk = W[:, keep]
    return (Wk / lam[keep]) @ Wk.T


def _spectrum_order(evals):
    # np.lexsort sorts by the last key first
    return np.lexsort((-evals.real, -evals.imag, -np.abs(evals)))


def eig_general(A):
    """Eigenpairs of a general real square matrix.

    Returns
    -------
    ComplexSpectrumPair
        Sorted by descending modulus (ties: descending imaginary, then
        descending real part), unit-norm eigenvectors with the phase fixed so
        the largest-magnitude entry is real positive.

    Raises
    ------
    numpy.linalg.LinAlgError
        If the eigensolver does not converge.
    """
    A = _as_finite_matrix(A, "A")
    if A.shape[0] != A.shape[1]:
        raise ValueError(f"A must be square, got shape {A.shape}")
    evals, V = np.linalg.eig(A)
    evals = evals.astype(complex)
    V = V.astype(complex)
    order = _spectrum_order(evals)
    evals = evals[order]
    V = V[:, order]
    if V.size:
        V = V / np.linalg.norm(V, axis=0)
        idx = np.argmax(np.abs(V), axis=0)
        lead = V[idx, np.arange(V.shape[1])]
        V = V * (np.abs(lead) / lead)
    return ComplexSpectrumPair(evals, V)
