"""Deterministic density-matrix simulation of the dense-coding protocols.

Two-party protocol: Alice encodes one of the four messages 0..3 ("00",
"01", "10", "11") on her half of a shared two-qubit channel with the
Pauli set {I, X, Z, XZ}; Bob performs the Bell measurement and decodes
with the mapping that is certain on the noiseless singlet channel.  That
mapping stays fixed for noisy channels (no maximum-likelihood tuning), so
channel noise shows up directly as decoding failure.

Three-party (controlled) protocol, starting from the GHZ state shared by
Alice, Bob and the controller Cliff: Cliff measures his qubit in the
basis {cos(t)|0> + sin(t)|1>, sin(t)|0> - cos(t)|1>} and announces the
outcome; Alice fixes the announced phase with Z, adjoins an ancilla |0>
and applies a collective unitary on (her qubit, ancilla) that filters the
non-maximal pair into the singlet.  On the ancilla's pass outcome the
pair is maximally entangled and the two-party protocol runs perfectly;
the pass probability is 2*min(sin^2 t, cos^2 t).

All statistics are exact expectation values; nothing is sampled.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import partial_trace
from .states import DensityOperator, bell, ghz

_I2 = np.eye(2, dtype=complex)
_X = np.array([[0, 1], [1, 0]], dtype=complex)
_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
_Z = np.array([[1, 0], [0, -1]], dtype=complex)

MESSAGES = (0, 1, 2, 3)
_ENCODINGS = (_I2, _X, _Z, _X @ _Z)


@dataclass(frozen=True)
class ControlBasis:
    """Cliff's measurement-basis angle, in [0, pi/2]."""

    theta: float

    def __post_init__(self):
        if not 0.0 <= self.theta <= np.pi / 2:
            raise ValueError("angle out of range [0, pi/2]")


@dataclass(frozen=True)
class ProtocolOutcome:
    """End-to-end statistics of one protocol run.

    ``per_message_success[m]`` is the probability that message m is
    delivered and decoded correctly; its mean is ``success_probability``.
    The controlled protocol additionally reports the distilled pair
    (absent when the pass probability vanishes), the probability of each
    (controller outcome, filter outcome) branch, and Bob's unconditioned
    marginal.
    """

    per_message_success: tuple[float, float, float, float]
    success_probability: float
    shared_state_after_control: DensityOperator | None = None
    branch_probabilities: dict[str, float] | None = None
    bob_marginal: np.ndarray | None = None

    def __post_init__(self):
        mean = sum(self.per_message_success) / len(self.per_message_success)
        if abs(self.success_probability - mean) > 1e-12:
            raise ValueError("success_probability must equal the per-message mean")


def _bell_decode_targets() -> list[np.ndarray]:
    singlet = bell("psi-")
    return [np.kron(e, _I2) @ singlet for e in _ENCODINGS]


def superdense_run(channel: DensityOperator) -> ProtocolOutcome:
    """Run the two-party protocol over an arbitrary two-qubit channel
    state and report the exact per-message decoding probabilities."""
    if channel.dA != 2 or channel.dB != 2:
        raise ValueError("superdense coding needs a two-qubit channel state")
    targets = _bell_decode_targets()
    per_message = []
    for m, e in enumerate(_ENCODINGS):
        u = np.kron(e, _I2)
        rho_m = u @ channel.matrix @ u.conj().T
        v = targets[m]
        per_message.append(float(np.real(v.conj() @ rho_m @ v)))
    per_message = tuple(per_message)
    return ProtocolOutcome(
        per_message_success=per_message,
        success_probability=float(np.mean(per_message)),
    )


def _filter_unitary(u: float, v: float) -> np.ndarray:
    """Collective unitary on (Alice's qubit, ancilla) that sends
    u|00> + v|11> (shared with Bob, ancilla in |0>) to the singlet on the
    ancilla-0 branch, with pass probability 2*min(u^2, v^2).

    Block structure: a rotation of the ancilla conditioned on Alice's
    qubit equalizes the two amplitudes, then Y on Alice's qubit turns the
    resulting |00>+|11> pair into |01>-|10>.
    """
    m = min(u, v)
    cos0 = m / u if u > 1e-15 else 1.0
    cos1 = m / v if v > 1e-15 else 1.0
    sin0 = np.sqrt(max(0.0, 1.0 - cos0 * cos0))
    sin1 = np.sqrt(max(0.0, 1.0 - cos1 * cos1))
    filt = np.zeros((4, 4), dtype=complex)
    filt[0:2, 0:2] = [[cos0, -sin0], [sin0, cos0]]
    filt[2:4, 2:4] = [[cos1, -sin1], [sin1, cos1]]
    return np.kron(_Y, _I2) @ filt


def controlled_dense_coding_run(basis: ControlBasis) -> ProtocolOutcome:
    """Simulate the GHZ-based controlled protocol for one choice of
    Cliff's basis angle."""
    theta = basis.theta
    ghz_state = ghz()
    cliff_kets = (
        np.array([np.cos(theta), np.sin(theta)], dtype=complex),
        np.array([np.sin(theta), -np.cos(theta)], dtype=complex),
    )

    branch_probs: dict[str, float] = {}
    pass_states = []  # (probability, AB ket)
    bob_marginal = np.zeros((2, 2), dtype=complex)

    for outcome, (name, k) in enumerate(zip(("plus", "minus"), cliff_kets)):
        # Cliff projects qubit C of |GHZ>_ABC; wire order (A, B, C)
        ab = np.array(
            [sum(ghz_state[(a * 2 + b) * 2 + c] * np.conj(k[c]) for c in range(2))
             for a in range(2) for b in range(2)],
            dtype=complex,
        )
        p_cliff = float(np.real(ab.conj() @ ab))
        ab /= np.sqrt(p_cliff)
        if outcome == 1:
            ab = np.kron(_Z, _I2) @ ab  # Alice's phase fix from the announced bit

        u, v = abs(ab[0]), abs(ab[3])
        collective = _filter_unitary(u, v)
        # extend to (A, ancilla, B): ancilla starts in |0>
        psi = np.zeros(8, dtype=complex)
        for a in range(2):
            for b in range(2):
                psi[a * 4 + b] = ab[a * 2 + b]
        psi = np.kron(collective, _I2) @ psi

        for anc, tag in ((0, "pass"), (1, "fail")):
            branch = np.array(
                [psi[a * 4 + anc * 2 + b] for a in range(2) for b in range(2)],
                dtype=complex,
            )
            p_branch = float(np.real(branch.conj() @ branch)) * p_cliff
            branch_probs[f"{name}_{tag}"] = p_branch
            if p_branch > 1e-15:
                branch /= np.linalg.norm(branch)
                rho_ab = np.outer(branch, branch.conj())
                bob_marginal += p_branch * partial_trace(rho_ab, 2, 2, "B")
                if anc == 0:
                    pass_states.append((p_branch, rho_ab))

    success_probability = sum(p for p, _ in pass_states)
    if success_probability > 1e-12:
        mixture = sum(p * rho for p, rho in pass_states) / success_probability
        shared = DensityOperator(mixture, 2, 2)
        inner = superdense_run(shared).per_message_success
        per_message = tuple(success_probability * s for s in inner)
    else:
        shared = None
        per_message = (0.0, 0.0, 0.0, 0.0)

    return ProtocolOutcome(
        per_message_success=per_message,
        success_probability=float(np.mean(per_message)),
        shared_state_after_control=shared,
        branch_probabilities=branch_probs,
        bob_marginal=bob_marginal,
    )


def mixed_basis_decode_table() -> dict[int, int]:
    """Outcome -> message mapping when the channel is prepared and
    measured in the mixed basis (singlet, triplet, |00>, |11>): the m-th
    basis outcome carries message m."""
    return {outcome: outcome for outcome in MESSAGES}
