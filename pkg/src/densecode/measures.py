"""Scalar functionals on states.

Entropies are in bits throughout (log base 2).  The dense-coding capacity
of a bipartite state rho_AB is

    chi = log2(dA) + S(rho_B) - S(rho_AB),

and the state is called dense-codeable when chi strictly exceeds log2(dA),
equivalently S(rho_B) > S(rho_AB); the boundary itself counts as not
dense-codeable.  Steerability verdicts follow two family-specific rules:
the isotropic bound p > (H_d - 1)/(d - 1), and for the Werner family the
single unsteerable point at p = 1/sqrt(3) (with p = 0 also reported
unsteerable: the identity-product state carries no correlations).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import eig_hermitian, kron
from .states import DensityOperator, StateFamily

_PSD_TOL = 1e-10

WERNER_UNSTEERABLE_POINT = 1.0 / np.sqrt(3.0)


@dataclass(frozen=True)
class CapacityReport:
    """Dense-coding capacity of one state, with its ingredients."""

    chi: float
    S_B: float
    S_AB: float
    log2_dA: float
    dense_codeable: bool
    p: float | None = None


@dataclass(frozen=True)
class SteerVerdict:
    steerable: bool
    rule: str  # "werner-figure1" or "isotropic-Hd"
    threshold: float


def von_neumann_entropy(rho) -> float:
    """S(rho) = -sum_i lambda_i log2 lambda_i over the spectrum of rho.

    Accepts a DensityOperator or a bare Hermitian matrix.  Eigenvalues in
    [-1e-10, 0) are rounding debris and clamped to zero; anything more
    negative is rejected.
    """
    mat = rho.matrix if isinstance(rho, DensityOperator) else np.asarray(rho, dtype=complex)
    values = eig_hermitian(mat).values
    if values.min() < -_PSD_TOL:
        raise ValueError("not positive semidefinite")
    values = np.clip(values, 0.0, None)
    nonzero = values[values > 0.0]
    return float(-np.sum(nonzero * np.log2(nonzero)))


def dense_coding_capacity(rho: DensityOperator, p: float | None = None) -> CapacityReport:
    """Capacity report for a shared bipartite state (no clamping: a chi
    below log2 dA simply yields dense_codeable = False)."""
    s_ab = von_neumann_entropy(rho)
    s_b = von_neumann_entropy(rho.marginal("B"))
    log2_da = float(np.log2(rho.dA))
    return CapacityReport(
        chi=log2_da + s_b - s_ab,
        S_B=s_b,
        S_AB=s_ab,
        log2_dA=log2_da,
        dense_codeable=s_b > s_ab,
        p=p,
    )


def is_steerable(family: StateFamily, p: float, unsteerable_window: float = 1e-9) -> SteerVerdict:
    """Steerability verdict for one family member.

    Werner rule: steerable everywhere in (0, 1] except within
    ``unsteerable_window`` of the point 1/sqrt(3); p = 0 is unsteerable.
    Isotropic rule: steerable iff p > (H_d - 1)/(d - 1).
    """
    if not 0.0 <= p <= 1.0:
        raise ValueError("parameter out of domain")
    if family.name == "werner":
        unsteerable = p == 0.0 or abs(p - WERNER_UNSTEERABLE_POINT) <= unsteerable_window
        return SteerVerdict(
            steerable=not unsteerable,
            rule="werner-figure1",
            threshold=WERNER_UNSTEERABLE_POINT,
        )
    if family.name == "isotropic":
        from .thresholds import steerability_threshold

        bound = steerability_threshold(family.d)
        return SteerVerdict(steerable=p > bound, rule="isotropic-Hd", threshold=bound)
    raise ValueError(f"unknown family {family.name!r}")


def _sqrt_psd(mat: np.ndarray) -> np.ndarray:
    r = eig_hermitian(mat)
    roots = np.sqrt(np.clip(r.values, 0.0, None))
    return (r.vectors * roots) @ r.vectors.conj().T


def concurrence(rho: DensityOperator) -> float:
    """Two-qubit concurrence via the spin-flipped spectrum:
    C = max(0, l1 - l2 - l3 - l4) with l_i the decreasing square roots of
    the eigenvalues of sqrt(rho) (YxY rho* YxY) sqrt(rho)."""
    if rho.dA != 2 or rho.dB != 2:
        raise ValueError("concurrence is defined for two-qubit states")
    sy = np.array([[0, -1j], [1j, 0]], dtype=complex)
    yy = kron(sy, sy)
    flipped = yy @ rho.matrix.conj() @ yy
    sq = _sqrt_psd(rho.matrix)
    vals = eig_hermitian(sq @ flipped @ sq).values
    roots = np.sqrt(np.clip(vals, 0.0, None))
    return float(max(0.0, roots[0] - roots[1] - roots[2] - roots[3]))
