"""Dense complex linear algebra for small matrices.

Everything here operates on square numpy arrays of complex128.  Matrices
are small (composite dimension capped at 64), so the routines favour
clarity and accuracy over asymptotic speed.  The Hermitian eigensolver is
a cyclic complex Jacobi iteration: dependency-free, numerically excellent
in this size range, and it returns an explicitly orthonormal eigenbasis.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

MAX_DIM = 64
HERMITIAN_TOL = 1e-10
_JACOBI_TOL = 1e-14
_MAX_SWEEPS = 100


class ConvergenceError(RuntimeError):
    """Raised when an iterative routine fails to reach its tolerance."""


def as_square_matrix(a) -> np.ndarray:
    """Coerce input to a square complex matrix, rejecting NaN/Inf entries."""
    m = np.asarray(a, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m.real)) or not np.all(np.isfinite(m.imag)):
        raise ValueError("matrix entries must be finite")
    return m


def kron(a, b, max_dim: int = MAX_DIM) -> np.ndarray:
    """Tensor (Kronecker) product of two square matrices.

    The composite dimension is capped (default 64) so that downstream
    eigendecompositions stay in the regime the solver is built for.
    """
    ma, mb = as_square_matrix(a), as_square_matrix(b)
    if ma.shape[0] * mb.shape[0] > max_dim:
        raise ValueError("dimension too large")
    return np.kron(ma, mb)


def matmul(a, b) -> np.ndarray:
    ma, mb = as_square_matrix(a), as_square_matrix(b)
    if ma.shape != mb.shape:
        raise ValueError(f"dimension mismatch: {ma.shape} vs {mb.shape}")
    return ma @ mb


def dagger(a) -> np.ndarray:
    """Conjugate transpose."""
    return as_square_matrix(a).conj().T


def trace(a) -> complex:
    return complex(np.trace(as_square_matrix(a)))


def frobenius_norm(a) -> float:
    return float(np.linalg.norm(as_square_matrix(a)))


def partial_trace(rho, d_a: int, d_b: int, keep: str) -> np.ndarray:
    """Trace out one subsystem of a bipartite operator.

    ``rho`` must be (d_a*d_b) x (d_a*d_b) with the row-major index
    convention |ij> <-> i*d_b + j.  ``keep`` selects the surviving
    subsystem, "A" or "B".
    """
    m = as_square_matrix(rho)
    if m.shape[0] != d_a * d_b:
        raise ValueError(
            f"dimension mismatch: matrix is {m.shape[0]}x{m.shape[0]}, "
            f"expected {d_a * d_b}x{d_a * d_b}"
        )
    t = m.reshape(d_a, d_b, d_a, d_b)
    if keep == "A":
        return np.einsum("ijkj->ik", t)
    if keep == "B":
        return np.einsum("ijil->jl", t)
    raise ValueError(f"keep must be 'A' or 'B', got {keep!r}")


@dataclass(frozen=True)
class EigenResult:
    """Spectrum of a Hermitian matrix: values sorted descending, unit
    eigenvectors as the columns of ``vectors`` in matching order."""

    values: np.ndarray
    vectors: np.ndarray


def eig_hermitian(a, max_sweeps: int = _MAX_SWEEPS) -> EigenResult:
    """Diagonalize a Hermitian matrix by cyclic complex Jacobi rotations.

    The input is symmetrized (construction arithmetic leaves ~1e-16
    asymmetry) and then swept until the Frobenius mass of the off-diagonal
    part drops below 1e-14 (scaled up for matrices of norm > 1, so the
    stopping point is meaningful for non-unit-trace input too).
    """
    m = as_square_matrix(a)
    n = m.shape[0]
    if n > MAX_DIM:
        raise ValueError("dimension too large")
    if np.max(np.abs(m - m.conj().T)) > HERMITIAN_TOL:
        raise ValueError("not Hermitian")

    w = (m + m.conj().T) / 2.0
    v = np.eye(n, dtype=complex)
    tol = _JACOBI_TOL * max(1.0, float(np.linalg.norm(w)))

    converged = False
    for _ in range(max_sweeps):
        off = w - np.diag(np.diag(w))
        if np.linalg.norm(off) < tol:
            converged = True
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                beta = w[p, q]
                babs = abs(beta)
                if babs < 1e-150:
                    continue
                phase = beta / babs
                tau = (w[q, q].real - w[p, p].real) / (2.0 * babs)
                if tau >= 0.0:
                    t = 1.0 / (tau + np.sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + np.sqrt(1.0 + tau * tau))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                # Unit rotation U: identity except
                #   U[p,p]=c, U[p,q]=s, U[q,p]=-s*conj(phase), U[q,q]=c*conj(phase)
                # w <- U^dagger w U, accumulated into v <- v U.
                col_p = w[:, p].copy()
                col_q = w[:, q].copy()
                w[:, p] = c * col_p - s * np.conj(phase) * col_q
                w[:, q] = s * col_p + c * np.conj(phase) * col_q
                row_p = w[p, :].copy()
                row_q = w[q, :].copy()
                w[p, :] = c * row_p - s * phase * row_q
                w[q, :] = s * row_p + c * phase * row_q
                vec_p = v[:, p].copy()
                vec_q = v[:, q].copy()
                v[:, p] = c * vec_p - s * np.conj(phase) * vec_q
                v[:, q] = s * vec_p + c * np.conj(phase) * vec_q
    else:
        off = w - np.diag(np.diag(w))
        converged = np.linalg.norm(off) < tol

    if not converged:
        raise ConvergenceError("eigensolver stalled")

    values = np.real(np.diag(w))
    order = np.argsort(-values, kind="stable")
    return EigenResult(values=values[order], vectors=v[:, order])
