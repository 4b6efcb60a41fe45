"""Dense complex matrix primitives shared by the whole package.

Matrices are plain numpy ``complex128`` arrays.  Every public function
validates its input on entry, so non-finite entries are rejected at
construction time and never propagate into the numerics.
"""

from __future__ import annotations

import json

import numpy as np

__all__ = [
    "as_matrix",
    "as_spectrum",
    "conjugate_transpose",
    "matmul",
    "add",
    "subtract",
    "scale",
    "frobenius_norm",
    "trace",
    "diagonal_part",
    "strict_lower",
    "strict_upper",
    "hadamard_product",
    "entrywise_abs",
    "commutator_defect",
    "is_normal",
    "is_hermitian",
    "matrix_to_json",
    "matrix_from_json",
    "save_matrix",
    "load_matrix",
]

#: Default relative tolerance for the normality / Hermitian predicates.
STRUCTURE_TOL = 1e-10


def as_matrix(m, name: str = "matrix") -> np.ndarray:
    """Coerce ``m`` to a validated square complex128 array.

    Rejects non-square shapes and non-finite entries.  Returns a view when
    ``m`` is already a complex128 array.
    """
    a = np.asarray(m, dtype=np.complex128)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"{name} must be square, got shape {a.shape}")
    if a.shape[0] == 0:
        raise ValueError(f"{name} must be non-empty")
    if not np.all(np.isfinite(a.real)) or not np.all(np.isfinite(a.imag)):
        raise ValueError(f"{name} contains non-finite entries")
    return a


def as_spectrum(v, name: str = "spectrum") -> np.ndarray:
    """Coerce ``v`` to a validated 1-d complex128 array of eigenvalues."""
    a = np.asarray(v, dtype=np.complex128).ravel()
    if a.size == 0:
        raise ValueError(f"{name} must be non-empty")
    if not np.all(np.isfinite(a.real)) or not np.all(np.isfinite(a.imag)):
        raise ValueError(f"{name} contains non-finite entries")
    return a


def conjugate_transpose(m) -> np.ndarray:
    return as_matrix(m).conj().T


def matmul(a, b) -> np.ndarray:
    a = as_matrix(a, "left factor")
    b = as_matrix(b, "right factor")
    if a.shape != b.shape:
        raise ValueError(f"dimension mismatch: {a.shape} vs {b.shape}")
    return a @ b


def add(a, b) -> np.ndarray:
    a = as_matrix(a, "left term")
    b = as_matrix(b, "right term")
    if a.shape != b.shape:
        raise ValueError(f"dimension mismatch: {a.shape} vs {b.shape}")
    return a + b


def subtract(a, b) -> np.ndarray:
    a = as_matrix(a, "left term")
    b = as_matrix(b, "right term")
    if a.shape != b.shape:
        raise ValueError(f"dimension mismatch: {a.shape} vs {b.shape}")
    return a - b


def scale(alpha, m) -> np.ndarray:
    alpha = complex(alpha)
    if not (np.isfinite(alpha.real) and np.isfinite(alpha.imag)):
        raise ValueError("scale factor must be finite")
    return alpha * as_matrix(m)


def frobenius_norm(m) -> float:
    return float(np.linalg.norm(as_matrix(m), "fro"))


def trace(m) -> complex:
    return complex(np.trace(as_matrix(m)))


def diagonal_part(m) -> np.ndarray:
    """The diagonal matrix holding diag(M), off-diagonal entries zero."""
    m = as_matrix(m)
    return np.diag(np.diag(m))


def strict_lower(m) -> np.ndarray:
    """Strictly lower triangular part of M (diagonal zeroed)."""
    return np.tril(as_matrix(m), -1)


def strict_upper(m) -> np.ndarray:
    """Strictly upper triangular part of M (diagonal zeroed)."""
    return np.triu(as_matrix(m), 1)


def hadamard_product(a, b) -> np.ndarray:
    """Entrywise product A o B."""
    a = as_matrix(a, "left factor")
    b = as_matrix(b, "right factor")
    if a.shape != b.shape:
        raise ValueError(f"dimension mismatch: {a.shape} vs {b.shape}")
    return a * b


def entrywise_abs(m) -> np.ndarray:
    """Entrywise modulus |M|; the result is a real-valued array."""
    return np.abs(as_matrix(m))


def commutator_defect(m) -> float:
    """Frobenius norm of M M* - M* M; zero exactly when M is normal."""
    m = as_matrix(m)
    h = m.conj().T
    return float(np.linalg.norm(m @ h - h @ m, "fro"))


def is_normal(m, tol: float = STRUCTURE_TOL) -> bool:
    """Whether M M* = M* M within ``tol * max(1, ||M||_F^2)``.

    The commutator defect scales quadratically with M, hence the squared
    norm in the threshold.
    """
    m = as_matrix(m)
    nrm = float(np.linalg.norm(m, "fro"))
    return commutator_defect(m) <= tol * max(1.0, nrm * nrm)


def is_hermitian(m, tol: float = STRUCTURE_TOL) -> bool:
    """Whether M = M* within ``tol * max(1, ||M||_F)``."""
    m = as_matrix(m)
    defect = float(np.linalg.norm(m - m.conj().T, "fro"))
    return defect <= tol * max(1.0, float(np.linalg.norm(m, "fro")))


# -- JSON wire format ---------------------------------------------------
#
# A matrix travels as {"n": n, "entries": [[re, im], ...]} with exactly
# n*n [re, im] pairs in row-major order.

def matrix_to_json(m) -> dict:
    """Encode a matrix as its wire-format dictionary."""
    m = as_matrix(m)
    n = m.shape[0]
    flat = m.ravel()
    return {"n": n, "entries": [[float(z.real), float(z.imag)] for z in flat]}


def matrix_from_json(obj) -> np.ndarray:
    """Decode and validate the wire-format dictionary.

    Raises ValueError on a malformed object: wrong entry count, entries
    that are not [re, im] pairs, or non-finite values.
    """
    if not isinstance(obj, dict):
        raise ValueError("matrix JSON must be an object")
    n = obj.get("n")
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ValueError("matrix JSON field 'n' must be a positive integer")
    entries = obj.get("entries")
    if not isinstance(entries, list) or len(entries) != n * n:
        found = len(entries) if isinstance(entries, list) else "missing"
        raise ValueError(
            f"matrix JSON needs exactly {n * n} entries, got {found}"
        )
    out = np.empty(n * n, dtype=np.complex128)
    for k, pair in enumerate(entries):
        if (
            not isinstance(pair, (list, tuple))
            or len(pair) != 2
            or not all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in pair)
        ):
            raise ValueError(f"entry {k} is not a [re, im] pair of numbers")
        re, im = float(pair[0]), float(pair[1])
        if not (np.isfinite(re) and np.isfinite(im)):
            raise ValueError(f"entry {k} is not finite")
        out[k] = complex(re, im)
    return out.reshape(n, n)


def save_matrix(path, m) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(matrix_to_json(m), fh)
        fh.write("\n")


def load_matrix(path) -> np.ndarray:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ValueError(f"{path}: not valid JSON ({exc})") from exc
    return matrix_from_json(obj)
