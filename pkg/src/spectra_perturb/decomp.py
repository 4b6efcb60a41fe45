"""Schur decomposition and the spectral quantities derived from it.

The triangularization M = Q T Q* is the engine behind every quantity that
involves the strictly upper triangular excess of a matrix: eigenvalue
extraction, departure from normality, block-structure detection, and the
deterministic descending-modulus reordering used by the bound catalog.

The decomposition itself is delegated to LAPACK's implicit-shift QR
(``scipy.linalg.schur``); the reordering is done here with adjacent
unitary 2x2 swaps so the result is deterministic across platforms.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .matrices import as_matrix, frobenius_norm

__all__ = [
    "SchurForm",
    "BlockStructure",
    "TAU_SCHUR",
    "hessenberg_reduce",
    "schur_decompose",
    "validate_schur_form",
    "reorder_schur",
    "eigenvalues",
    "spectral_norm",
    "numerical_rank",
    "departure_from_normality",
    "detect_block_structure",
]

#: Residual budget for Schur-form invariants (reconstruction, unitarity,
#: triangularity), relative to n * max(1, ||M||_F).
TAU_SCHUR = 1e-10

#: Default iteration budget factor: max_iter = 40 * n.
MAX_ITER_FACTOR = 40


@dataclass(eq=False)
class SchurForm:
    """Unitary factor q, upper triangular factor t, and diag(t).

    Satisfies q t q* = M for the source matrix M, with q unitary and t
    upper triangular (strictly lower entries exactly zero).
    """

    q: np.ndarray
    t: np.ndarray
    eigenvalues: np.ndarray

    @property
    def n(self) -> int:
        return self.t.shape[0]


@dataclass(frozen=True)
class BlockStructure:
    """Sizes of the diagonal blocks detected in a triangular factor."""

    sizes: tuple[int, ...]

    @property
    def s(self) -> int:
        return len(self.sizes)


def hessenberg_reduce(m) -> tuple[np.ndarray, np.ndarray]:
    """Unitary reduction to upper Hessenberg form.

    Returns (q, h) with q h q* = M and h zero below the first
    subdiagonal.  Matrices of order <= 2 are already Hessenberg and are
    returned unchanged with q = I.
    """
    m = as_matrix(m)
    n = m.shape[0]
    if n <= 2:
        return np.eye(n, dtype=np.complex128), m.astype(np.complex128, copy=True)
    h, q = scipy.linalg.hessenberg(m, calc_q=True)
    h = np.asarray(h, dtype=np.complex128)
    q = np.asarray(q, dtype=np.complex128)
    # gehrd leaves exact zeros below the subdiagonal; enforce it anyway
    h[np.tril_indices(n, -2)] = 0.0
    return q, h


def schur_decompose(m, max_iter: int | None = None) -> SchurForm:
    """Complex Schur decomposition M = q t q*.

    Parameters
    ----------
    m : array_like
        Square matrix.
    max_iter : int, optional
        Iteration budget; defaults to 40 n and must be at least 30 n.
        The LAPACK backend manages its sweep schedule internally within
        an equivalent budget; a convergence failure raises LinAlgError
        rather than returning a truncated factorization.

    An already upper triangular input is returned as-is with q = I.
    """
    m = as_matrix(m)
    n = m.shape[0]
    if max_iter is None:
        max_iter = MAX_ITER_FACTOR * n
    if max_iter < 30 * n:
        raise ValueError(f"max_iter must be at least 30*n = {30 * n}, got {max_iter}")
    if np.all(np.tril(m, -1) == 0):
        t = m.astype(np.complex128, copy=True)
        q = np.eye(n, dtype=np.complex128)
    else:
        t, q = scipy.linalg.schur(m, output="complex")
        t = np.triu(np.asarray(t, dtype=np.complex128))
        q = np.asarray(q, dtype=np.complex128)
    return SchurForm(q=q, t=t, eigenvalues=np.diag(t).copy())


def validate_schur_form(form: SchurForm, source, tau: float = TAU_SCHUR) -> None:
    """Check the SchurForm invariants against its source matrix.

    Raises ValueError naming the first violated invariant.
    """
    source = as_matrix(source, "source matrix")
    q, t = form.q, form.t
    n = t.shape[0]
    if q.shape != source.shape or t.shape != source.shape:
        raise ValueError("factor shapes do not match the source matrix")
    budget = tau * n * max(1.0, frobenius_norm(source))
    if np.linalg.norm(q.conj().T @ q - np.eye(n), "fro") > tau * n:
        raise ValueError("q is not unitary within tolerance")
    if np.linalg.norm(np.tril(t, -1), "fro") > tau * max(1.0, frobenius_norm(t)):
        raise ValueError("t is not upper triangular within tolerance")
    if np.linalg.norm(q @ t @ q.conj().T - source, "fro") > budget:
        raise ValueError("q t q* does not reconstruct the source matrix")
    if not np.array_equal(form.eigenvalues, np.diag(t)):
        raise ValueError("stored eigenvalues do not equal diag(t)")


def _order_key(lam: complex) -> tuple[float, float, float]:
    # descending modulus; ties by descending real, then imaginary part
    return (-abs(lam), -lam.real, -lam.imag)


def _swap_adjacent(t: np.ndarray, q: np.ndarray, k: int) -> None:
    """Exchange the diagonal entries t[k,k] and t[k+1,k+1] by a unitary
    similarity acting on rows/columns k, k+1 only."""
    a = t[k, k]
    c = t[k + 1, k + 1]
    b = t[k, k + 1]
    # first column of g spans the eigenvector of [[a,b],[0,c]] for c
    x = np.array([b, c - a], dtype=np.complex128)
    r = np.linalg.norm(x)
    if r == 0.0:  # a == c exactly: nothing to exchange
        return
    g = np.array(
        [[x[0] / r, -np.conj(x[1]) / r], [x[1] / r, np.conj(x[0]) / r]],
        dtype=np.complex128,
    )
    t[k : k + 2, k:] = g.conj().T @ t[k : k + 2, k:]
    t[: k + 2, k : k + 2] = t[: k + 2, k : k + 2] @ g
    t[k + 1, k] = 0.0
    q[:, k : k + 2] = q[:, k : k + 2] @ g


def reorder_schur(form: SchurForm, key: str = "descending-modulus") -> SchurForm:
    """Reorder a Schur form so diag(t) is sorted by descending modulus.

    Ties are broken by descending real part, then descending imaginary
    part, which makes the result deterministic.  The reordering is a
    bubble sort of adjacent unitary swaps, so q t q* is preserved to
    working accuracy.
    """
    if key != "descending-modulus":
        raise ValueError(f"unknown ordering key: {key!r}")
    t = form.t.copy()
    q = form.q.copy()
    n = t.shape[0]
    swapped = True
    while swapped:
        swapped = False
        for k in range(n - 1):
            if _order_key(t[k + 1, k + 1]) < _order_key(t[k, k]):
                _swap_adjacent(t, q, k)
                swapped = True
    return SchurForm(q=q, t=t, eigenvalues=np.diag(t).copy())


def eigenvalues(m) -> np.ndarray:
    """Spectrum of M as the diagonal of its Schur triangular factor."""
    return schur_decompose(m).eigenvalues


def spectral_norm(m) -> float:
    """Largest singular value, via the largest eigenvalue of M* M."""
    m = as_matrix(m)
    ev = np.linalg.eigvalsh(m.conj().T @ m)
    return float(np.sqrt(max(0.0, float(ev[-1]))))


def numerical_rank(m, rtol: float | None = None) -> int:
    """Number of singular values above ``rtol * sigma_max``.

    Default rtol is 64 n eps.  Uses a true SVD: singular values computed
    through M* M lose half the working precision, which misclassifies
    exact zeros at this threshold.
    """
    m = as_matrix(m)
    n = m.shape[0]
    if rtol is None:
        rtol = 64 * n * float(np.finfo(np.float64).eps)
    if rtol <= 0:
        raise ValueError("rtol must be positive")
    sigma = np.linalg.svd(m, compute_uv=False)
    if sigma[0] == 0.0:
        return 0
    return int(np.count_nonzero(sigma > rtol * sigma[0]))


def departure_from_normality(m) -> float:
    """sqrt(max(0, ||M||_F^2 - sum |lambda_i|^2)).

    Equals the Frobenius norm of the strictly upper part of the Schur
    triangular factor; zero exactly when M is normal.  Note the formula
    is a difference of nearly equal quantities for (near-)normal inputs,
    where the result floors at roughly sqrt(n*eps)*||M||_F.
    """
    m = as_matrix(m)
    lam = eigenvalues(m)
    nrm2 = float(np.linalg.norm(m, "fro")) ** 2
    excess = nrm2 - float(np.sum(np.abs(lam) ** 2))
    return float(np.sqrt(max(0.0, excess)))


def detect_block_structure(t, tol: float = 1e-12) -> BlockStructure:
    """Detect the block upper triangular zero pattern of t.

    A boundary after index k exists when every entry t[i, j] with
    i <= k < j has modulus at most ``tol * ||t||_F``.  The block count is
    one plus the number of boundaries; a diagonal t yields n blocks and
    a dense strictly-upper t yields one.
    """
    t = as_matrix(t, "triangular factor")
    n = t.shape[0]
    nrm = frobenius_norm(t)
    if np.linalg.norm(np.tril(t, -1), "fro") > tol * max(1.0, nrm):
        raise ValueError("t is not upper triangular")
    if n == 1:
        return BlockStructure(sizes=(1,))
    thr = tol * nrm
    a = np.abs(t)
    # suffix[i, c] = max over j >= c of |t[i, j]|
    suffix = np.maximum.accumulate(a[:, ::-1], axis=1)[:, ::-1]
    boundaries = [k for k in range(n - 1) if suffix[: k + 1, k + 1].max() <= thr]
    sizes = []
    prev = 0
    for k in boundaries:
        sizes.append(k + 1 - prev)
        prev = k + 1
    sizes.append(n - prev)
    return BlockStructure(sizes=tuple(sizes))
