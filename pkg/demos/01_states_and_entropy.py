#!/usr/bin/env python3
"""States and entropies.

Builds the Bell states, the GHZ state, the two-qubit mixed basis and the
two noisy families, then prints their spectra and von Neumann entropies
next to the closed forms they should reproduce.
"""
import numpy as np

from densecode import (
    bell,
    eig_hermitian,
    ghz,
    isotropic,
    mixed_basis,
    partial_trace,
    pure_density,
    von_neumann_entropy,
    werner,
)

print("=" * 64)
print("Bell states")
print("=" * 64)
for label in ("psi+", "psi-", "phi+", "phi-"):
    ket = bell(label)
    rho_b = partial_trace(np.outer(ket, ket.conj()), 2, 2, "B")
    print(f"|{label}> = {np.round(ket.real, 4)}   marginal eigenvalues: "
          f"{np.round(np.linalg.eigvalsh(rho_b), 4)} (maximally mixed)")

print()
print("GHZ state: amplitudes 1/sqrt(2) on |000> and |111>")
print("  ", np.round(ghz().real, 4))

print()
print("Mixed basis (singlet, triplet, |00>, |11>): Gram matrix")
basis = mixed_basis()
gram = np.array([[abs(np.vdot(a, b)) for b in basis] for a in basis])
print(np.round(gram, 12))

print()
print("=" * 64)
print("Werner family: spectrum {(1+3p)/4, (1-p)/4 x3}")
print("=" * 64)
for p in (0.0, 0.5, 1.0):
    rho = werner(p)
    vals = eig_hermitian(rho.matrix).values
    print(f"p={p:4.2f}  spectrum={np.round(vals, 6)}  "
          f"S={von_neumann_entropy(rho):.6f} bits")

print()
print("=" * 64)
print("Qutrit isotropic family: spectrum {p+(1-p)/9, (1-p)/9 x8}")
print("=" * 64)
for p in (0.0, 0.5, 1.0):
    rho = isotropic(3, p)
    vals = eig_hermitian(rho.matrix).values
    print(f"p={p:4.2f}  top eigenvalue={vals[0]:.6f}  "
          f"S={von_neumann_entropy(rho):.6f} bits  "
          f"(marginal entropy is always log2(3)={np.log2(3):.6f})")

print()
print("Pure-state sanity: S(|psi-><psi-|) =",
      von_neumann_entropy(pure_density(bell("psi-"), 2, 2)))
