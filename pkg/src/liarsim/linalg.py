"""Dense complex linear algebra for small Hilbert spaces (dim <= 64).

Provides the four primitives everything else is built on: Kronecker
products, eigendecomposition of normal matrices, the principal matrix
logarithm of a unitary, and the matrix exponential exp(-iHt) of a
Hermitian generator.  All values are plain numpy arrays of complex128;
validation helpers implement the flag predicates (unitary, Hermitian,
projector, normalized) at the package-wide tolerances.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .errors import (
    ConvergenceFailure,
    HermiticityViolation,
    NormalityViolation,
    UnitarityViolation,
)

MAX_DIM = 64

# Tolerances: algebraic identities on constructed matrices, decomposition
# residuals, and cross-oracle comparisons, in that order.
ATOL_ALGEBRA = 1e-10
ATOL_DECOMP = 1e-9
ATOL_ORACLE = 1e-8


def as_matrix(a) -> np.ndarray:
    """Coerce to a finite complex128 2-d array."""
    m = np.asarray(a, dtype=np.complex128)
    if m.ndim != 2:
        raise ValueError(f"expected a matrix, got ndim={m.ndim}")
    if not np.all(np.isfinite(m.real)) or not np.all(np.isfinite(m.imag)):
        raise ValueError("matrix entries must be finite")
    return m


def as_vector(v) -> np.ndarray:
    """Coerce to a finite complex128 1-d array."""
    a = np.asarray(v, dtype=np.complex128)
    if a.ndim != 1:
        raise ValueError(f"expected a vector, got ndim={a.ndim}")
    if not np.all(np.isfinite(a.real)) or not np.all(np.isfinite(a.imag)):
        raise ValueError("vector entries must be finite")
    return a


def max_abs(a) -> float:
    a = np.asarray(a)
    return float(np.max(np.abs(a))) if a.size else 0.0


def is_unitary(u, atol: float = ATOL_ALGEBRA) -> bool:
    u = np.asarray(u)
    if u.ndim != 2 or u.shape[0] != u.shape[1]:
        return False
    return max_abs(u.conj().T @ u - np.eye(u.shape[0])) <= atol


def is_hermitian(h, atol: float = ATOL_ALGEBRA) -> bool:
    h = np.asarray(h)
    if h.ndim != 2 or h.shape[0] != h.shape[1]:
        return False
    return max_abs(h - h.conj().T) <= atol


def is_projector(p, atol: float = ATOL_ALGEBRA) -> bool:
    p = np.asarray(p)
    return is_hermitian(p, atol) and max_abs(p @ p - p) <= atol


def is_normal(a, atol: float = ATOL_DECOMP) -> bool:
    a = np.asarray(a)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        return False
    ah = a.conj().T
    return max_abs(a @ ah - ah @ a) <= atol


def is_normalized(v, atol: float = ATOL_ALGEBRA) -> bool:
    v = np.asarray(v)
    return abs(float(np.sum(np.abs(v) ** 2)) - 1.0) <= atol


def norm2(v) -> float:
    """Squared Euclidean norm."""
    v = np.asarray(v)
    return float(np.real(np.vdot(v, v)))


@dataclass(frozen=True)
class EigenDecomposition:
    """Eigenvalues and an orthonormal eigenbasis (columns of ``vectors``)."""

    values: np.ndarray
    vectors: np.ndarray


def tensor_product(a, b) -> np.ndarray:
    """Kronecker product; block (i, j) of the result is a[i, j] * b.

    Accepts matrices or vectors (vectors stay 1-d, flattened row-major,
    so that basis vector e_i (x) e_j lands on flat index i*dim_b + j).
    """
    return np.kron(np.asarray(a, dtype=np.complex128), np.asarray(b, dtype=np.complex128))


def eig_normal(a) -> EigenDecomposition:
    """Orthonormal eigendecomposition of a normal matrix.

    Uses the complex Schur form, which is diagonal exactly when the input
    is normal; the unitary Schur basis is then an orthonormal eigenbasis.
    """
    a = as_matrix(a)
    n, m = a.shape
    if n != m:
        raise ValueError(f"matrix must be square, got {n}x{m}")
    if n > MAX_DIM:
        raise ValueError(f"dimension {n} exceeds the supported maximum {MAX_DIM}")
    if not is_normal(a):
        raise NormalityViolation(f"matrix is not normal: max|AA* - A*A| > {ATOL_DECOMP}")
    try:
        t, z = scipy.linalg.schur(a, output="complex")
    except np.linalg.LinAlgError as exc:  # pragma: no cover - LAPACK rarely fails at these dims
        raise ConvergenceFailure(str(exc)) from exc
    return EigenDecomposition(values=np.diag(t).copy(), vectors=z)


def principal_log_unitary(u) -> np.ndarray:
    """Principal matrix logarithm of a unitary.

    Eigenvalues are snapped back onto the unit circle before taking scalar
    logs, the branch is Arg in (-pi, pi], an eigenvalue of 1 maps to
    exactly 0, and an eigenvalue of -1 is pinned to the +pi side of the
    cut so rounding noise cannot flip its sign.  The result L is exactly
    skew-Hermitian (i*L Hermitian) and satisfies exp(L) = u.
    """
    u = as_matrix(u)
    if not is_unitary(u):
        raise UnitarityViolation(f"matrix is not unitary: max|U*U - I| > {ATOL_ALGEBRA}")
    dec = eig_normal(u)
    lam = dec.values
    mod = np.abs(lam)
    lam = np.where(np.abs(1.0 - mod) <= 1e-9, lam / mod, lam)
    theta = np.angle(lam)
    theta[np.abs(lam - 1.0) <= 1e-9] = 0.0
    theta[np.abs(lam + 1.0) <= 1e-9] = np.pi
    v = dec.vectors
    log_m = (v * (1j * theta)) @ v.conj().T
    return (log_m - log_m.conj().T) / 2.0


def exp_hermitian(h, t: float) -> np.ndarray:
    """Unitary time evolution exp(-i*h*t) of a Hermitian generator."""
    h = as_matrix(h)
    if not is_hermitian(h):
        raise HermiticityViolation(f"matrix is not Hermitian: max|H - H*| > {ATOL_ALGEBRA}")
    if t == 0:
        return np.eye(h.shape[0], dtype=np.complex128)
    w, v = np.linalg.eigh(h)
    phases = np.exp(-1j * w * float(t))
    return (v * phases) @ v.conj().T


# --- JSON wire format: {"rows": n, "cols": m, "data": [[re, im], ...]} row-major ---

def matrix_to_json(m) -> dict:
    m = as_matrix(m)
    rows, cols = m.shape
    flat = m.reshape(-1)
    return {
        "rows": int(rows),
        "cols": int(cols),
        "data": [[float(z.real), float(z.imag)] for z in flat],
    }


def matrix_from_json(obj: dict) -> np.ndarray:
    rows, cols = int(obj["rows"]), int(obj["cols"])
    data = obj["data"]
    if len(data) != rows * cols:
        raise ValueError(f"expected {rows * cols} entries, got {len(data)}")
    flat = np.array([complex(re, im) for re, im in data], dtype=np.complex128)
    return flat.reshape(rows, cols)


def vector_to_json(v) -> list:
    v = as_vector(v)
    return [[float(z.real), float(z.imag)] for z in v]


def vector_from_json(pairs) -> np.ndarray:
    return np.array([complex(re, im) for re, im in pairs], dtype=np.complex128)
