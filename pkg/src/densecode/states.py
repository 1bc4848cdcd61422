"""Constructors for the states this library studies.

Kets are plain complex numpy vectors with the row-major index convention
|ij> <-> i*dB + j (polarization labels H, V map to 0, 1).  Density
operators carry their bipartite split (dA, dB) and are validated on
construction: Hermitian, unit trace, positive semidefinite within
tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import partial_trace

MAX_LOCAL_DIM = 8  # keeps composite dimension within the linalg cap (64)

_BELL_AMPLITUDES = {
    "psi+": (0, 1, 1, 0),
    "psi-": (0, 1, -1, 0),
    "phi+": (1, 0, 0, 1),
    "phi-": (1, 0, 0, -1),
}


def bell(which: str) -> np.ndarray:
    """One of the four Bell kets: psi+/- = (|01> +- |10>)/sqrt2,
    phi+/- = (|00> +- |11>)/sqrt2."""
    try:
        amps = _BELL_AMPLITUDES[which]
    except KeyError:
        raise ValueError(f"unknown Bell label {which!r}") from None
    return np.array(amps, dtype=complex) / np.sqrt(2)


def ghz() -> np.ndarray:
    """Three-qubit GHZ ket (|000> + |111>)/sqrt2."""
    v = np.zeros(8, dtype=complex)
    v[0] = v[7] = 1 / np.sqrt(2)
    return v


def mixed_basis() -> list[np.ndarray]:
    """The two-qubit mixed basis: singlet, triplet, |00>, |11> (in that
    order).  Orthonormal and complete."""
    e00 = np.array([1, 0, 0, 0], dtype=complex)
    e11 = np.array([0, 0, 0, 1], dtype=complex)
    return [bell("psi-"), bell("psi+"), e00, e11]


@dataclass(frozen=True)
class DensityOperator:
    """A validated bipartite density matrix with split dimensions (dA, dB)."""

    matrix: np.ndarray
    dA: int
    dB: int

    _HERM_TOL = 1e-10
    _TRACE_TOL = 1e-10
    _PSD_TOL = 1e-10

    def __post_init__(self):
        m = np.array(self.matrix, dtype=complex)  # own copy; frozen below
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError(f"density matrix must be square, got shape {m.shape}")
        if m.shape[0] != self.dA * self.dB:
            raise ValueError(
                f"matrix dimension {m.shape[0]} does not equal dA*dB = "
                f"{self.dA * self.dB}"
            )
        if not np.all(np.isfinite(m.real)) or not np.all(np.isfinite(m.imag)):
            raise ValueError("matrix entries must be finite")
        if np.max(np.abs(m - m.conj().T)) > self._HERM_TOL:
            raise ValueError("not Hermitian")
        if abs(np.trace(m).real - 1.0) > self._TRACE_TOL or abs(np.trace(m).imag) > self._TRACE_TOL:
            raise ValueError("trace is not 1")
        if np.min(np.linalg.eigvalsh(m)) < -self._PSD_TOL:
            raise ValueError("not positive semidefinite")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    @property
    def dim(self) -> int:
        return self.dA * self.dB

    def marginal(self, keep: str) -> np.ndarray:
        """Reduced density matrix of subsystem ``keep`` ("A" or "B")."""
        return partial_trace(self.matrix, self.dA, self.dB, keep)


def pure_density(psi, dA: int, dB: int) -> DensityOperator:
    """Projector |psi><psi| wrapped as a DensityOperator."""
    v = np.asarray(psi, dtype=complex)
    return DensityOperator(np.outer(v, v.conj()), dA, dB)


def _check_parameter(p: float) -> float:
    if not 0.0 <= p <= 1.0:
        raise ValueError("parameter out of domain")
    return float(p)


def werner(p: float) -> DensityOperator:
    """Mixture of the singlet with white noise:
    p |psi-><psi-| + (1-p) I/4.  Spectrum {(1+3p)/4, (1-p)/4 x3}."""
    p = _check_parameter(p)
    psi = bell("psi-")
    mat = p * np.outer(psi, psi.conj()) + (1 - p) * np.eye(4) / 4
    return DensityOperator(mat, 2, 2)


def isotropic(d: int, p: float) -> DensityOperator:
    """Mixture of the maximally entangled ket sum_i |ii>/sqrt(d) with white
    noise: p |phi+><phi+| + (1-p) I/d^2.  Both marginals are I/d for all p."""
    if not 2 <= d <= MAX_LOCAL_DIM:
        raise ValueError(f"local dimension must be in [2, {MAX_LOCAL_DIM}], got {d}")
    p = _check_parameter(p)
    phi = np.zeros(d * d, dtype=complex)
    phi[[i * d + i for i in range(d)]] = 1 / np.sqrt(d)
    mat = p * np.outer(phi, phi.conj()) + (1 - p) * np.eye(d * d) / d**2
    return DensityOperator(mat, d, d)


@dataclass(frozen=True)
class StateFamily:
    """A named one-parameter family p -> DensityOperator on p in [0, 1]."""

    name: str
    d: int = 2

    def __post_init__(self):
        if self.name == "werner":
            if self.d != 2:
                raise ValueError("the werner family is defined for d = 2 only")
        elif self.name == "isotropic":
            if not 2 <= self.d <= MAX_LOCAL_DIM:
                raise ValueError(
                    f"local dimension must be in [2, {MAX_LOCAL_DIM}], got {self.d}"
                )
        else:
            raise ValueError(f"unknown family {self.name!r}")

    @property
    def label(self) -> str:
        return self.name if self.name == "werner" else f"{self.name}-{self.d}"

    def evaluate(self, p: float) -> DensityOperator:
        if self.name == "werner":
            return werner(p)
        return isotropic(self.d, p)


def werner_family() -> StateFamily:
    return StateFamily("werner", 2)


def isotropic_family(d: int) -> StateFamily:
    return StateFamily("isotropic", d)
