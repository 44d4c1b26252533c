"""Shared test utilities: seeded random matrices and independent oracles."""
import numpy as np


def random_unitary(rng, n: int) -> np.ndarray:
    """Haar-ish unitary via QR with phase-fixed diagonal."""
    z = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    q, r = np.linalg.qr(z)
    d = np.diagonal(r)
    return q * (d / np.abs(d))


def random_hermitian(rng, n: int) -> np.ndarray:
    z = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    return (z + z.conj().T) / 2


def random_normal_matrix(rng, n: int) -> np.ndarray:
    v = random_unitary(rng, n)
    d = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    return (v * d) @ v.conj().T


def expm_taylor(m) -> np.ndarray:
    """Scaling-and-squaring Taylor-series exponential.

    Deliberately independent of any eigendecomposition path: scale the
    matrix below norm 1/2, sum the plain series, square back up.
    """
    m = np.asarray(m, dtype=complex)
    n = m.shape[0]
    nrm = float(np.linalg.norm(m, np.inf))
    k = max(0, int(np.ceil(np.log2(nrm))) + 1) if nrm > 1e-12 else 0
    a = m / (2.0 ** k)
    term = np.eye(n, dtype=complex)
    total = np.eye(n, dtype=complex)
    for i in range(1, 60):
        term = term @ a / i
        total = total + term
        if np.max(np.abs(term)) < 1e-20:
            break
    for _ in range(k):
        total = total @ total
    return total
