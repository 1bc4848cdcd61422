"""Protocol simulations checked against independent oracles.

``enumerate_superdense`` below rebuilds the two-party protocol from
scratch: it derives its own decode table from the noiseless channel and
tabulates all 4 messages x 4 measurement outcomes.  The three-party
checks use hand-derived closed forms (branch probabilities
{m^2, 1/2 - m^2} per controller outcome with m^2 = min(cos^2, sin^2)).
"""

import numpy as np
import pytest

from densecode.measures import concurrence, dense_coding_capacity
from densecode.protocols import (
    ControlBasis,
    ProtocolOutcome,
    controlled_dense_coding_run,
    mixed_basis_decode_table,
    superdense_run,
)
from densecode.states import DensityOperator, mixed_basis, pure_density, werner

I2 = np.eye(2, dtype=complex)
PAULI_X = np.array([[0, 1], [1, 0]], dtype=complex)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=complex)
SINGLET = np.array([0, 1, -1, 0], dtype=complex) / np.sqrt(2)


def enumerate_superdense(channel_matrix):
    """Exhaustive-outcome oracle for the two-party protocol.

    Works directly on a 4x4 channel matrix.  The decode table is not
    hardcoded: it is recovered by running each encoding on the noiseless
    singlet channel and finding the certain measurement outcome.
    """
    encodings = [I2, PAULI_X, PAULI_Z, PAULI_X @ PAULI_Z]
    outcomes = [
        np.array([0, 1, -1, 0], dtype=complex) / np.sqrt(2),
        np.array([0, 1, 1, 0], dtype=complex) / np.sqrt(2),
        np.array([1, 0, 0, 1], dtype=complex) / np.sqrt(2),
        np.array([1, 0, 0, -1], dtype=complex) / np.sqrt(2),
    ]

    def outcome_probs(rho):
        return [float(np.real(v.conj() @ rho @ v)) for v in outcomes]

    decode = {}
    for m, e in enumerate(encodings):
        u = np.kron(e, I2)
        probs = outcome_probs(u @ np.outer(SINGLET, SINGLET.conj()) @ u.conj().T)
        certain = [k for k, q in enumerate(probs) if abs(q - 1.0) < 1e-12]
        assert len(certain) == 1
        decode[certain[0]] = m
    assert sorted(decode) == [0, 1, 2, 3]

    per_message = []
    for m, e in enumerate(encodings):
        u = np.kron(e, I2)
        probs = outcome_probs(u @ channel_matrix @ u.conj().T)
        assert abs(sum(probs) - 1.0) < 1e-12
        per_message.append(sum(q for k, q in zip(range(4), probs) if decode[k] == m))
    return per_message


class TestSuperdense:
    def test_ideal_channel(self):
        out = superdense_run(pure_density(SINGLET, 2, 2))
        assert out.success_probability == pytest.approx(1.0, abs=1e-12)
        assert all(s == pytest.approx(1.0, abs=1e-12) for s in out.per_message_success)

    def test_uncorrelated_channel(self):
        out = superdense_run(DensityOperator(np.eye(4) / 4, 2, 2))
        assert out.success_probability == pytest.approx(0.25, abs=1e-12)

    def test_werner_channel_closed_form(self):
        for p in np.linspace(0, 1, 20):
            out = superdense_run(werner(p))
            assert out.success_probability == pytest.approx((1 + 3 * p) / 4, abs=1e-9)

    def test_matches_enumeration_oracle(self):
        rng = np.random.default_rng(17)
        channels = [werner(p).matrix for p in (0.0, 0.31, 0.7, 1.0)]
        for _ in range(5):
            g = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
            rho = g @ g.conj().T
            channels.append(rho / np.trace(rho))
        for mat in channels:
            out = superdense_run(DensityOperator(mat, 2, 2))
            expected = enumerate_superdense(mat)
            assert np.allclose(out.per_message_success, expected, atol=1e-12)
            assert out.success_probability == pytest.approx(np.mean(expected), abs=1e-12)

    def test_monotone_in_werner_parameter(self):
        ps = np.linspace(0, 1, 50)
        succ = [superdense_run(werner(p)).success_probability for p in ps]
        assert all(b >= a - 1e-12 for a, b in zip(succ, succ[1:]))

    def test_wrong_dimension(self):
        from densecode.states import isotropic

        with pytest.raises(ValueError, match="two-qubit"):
            superdense_run(isotropic(3, 0.5))


class TestControlled:
    def test_symmetric_angle_distills_perfectly(self):
        out = controlled_dense_coding_run(ControlBasis(np.pi / 4))
        assert out.success_probability == pytest.approx(1.0, abs=1e-12)
        assert concurrence(out.shared_state_after_control) == pytest.approx(1.0, abs=1e-9)

    def test_zero_angle_has_nothing_to_distill(self):
        out = controlled_dense_coding_run(ControlBasis(0.0))
        assert out.success_probability == pytest.approx(0.0, abs=1e-12)
        assert out.shared_state_after_control is None

    def test_pi_over_six(self):
        out = controlled_dense_coding_run(ControlBasis(np.pi / 6))
        assert out.success_probability == pytest.approx(0.5, abs=1e-12)
        assert concurrence(out.shared_state_after_control) == pytest.approx(1.0, abs=1e-9)

    @pytest.mark.parametrize("theta", np.linspace(0.05, np.pi / 2 - 0.05, 20))
    def test_branch_bookkeeping(self, theta):
        out = controlled_dense_coding_run(ControlBasis(theta))
        probs = out.branch_probabilities
        assert abs(sum(probs.values()) - 1.0) <= 1e-12

        m2 = min(np.sin(theta) ** 2, np.cos(theta) ** 2)
        assert probs["plus_pass"] == pytest.approx(m2, abs=1e-12)
        assert probs["minus_pass"] == pytest.approx(m2, abs=1e-12)
        assert probs["plus_fail"] == pytest.approx(0.5 - m2, abs=1e-12)
        assert probs["minus_fail"] == pytest.approx(0.5 - m2, abs=1e-12)

        # controller outcomes are always unbiased
        assert probs["plus_pass"] + probs["plus_fail"] == pytest.approx(0.5, abs=1e-12)

        assert out.success_probability == pytest.approx(2 * m2, abs=1e-12)

    @pytest.mark.parametrize("theta", np.linspace(0.05, np.pi / 2 - 0.05, 10))
    def test_success_branch_is_maximally_entangled(self, theta):
        shared = controlled_dense_coding_run(ControlBasis(theta)).shared_state_after_control
        assert concurrence(shared) == pytest.approx(1.0, abs=1e-9)
        for keep in ("A", "B"):
            assert np.allclose(shared.marginal(keep), I2 / 2, atol=1e-9)
        # a distilled channel supports the full two bits
        assert dense_coding_capacity(shared).chi == pytest.approx(2.0, abs=1e-9)

    def test_per_message_follows_superdense_on_shared_state(self):
        theta = 0.4
        out = controlled_dense_coding_run(ControlBasis(theta))
        inner = superdense_run(out.shared_state_after_control)
        expected = [out.success_probability * s for s in inner.per_message_success]
        assert np.allclose(out.per_message_success, expected, atol=1e-12)
        assert all(s == pytest.approx(1.0, abs=1e-9) for s in inner.per_message_success)

    def test_no_signalling(self):
        marginals = [
            controlled_dense_coding_run(ControlBasis(theta)).bob_marginal
            for theta in np.linspace(0.0, np.pi / 2, 15)
        ]
        for m in marginals:
            assert np.max(np.abs(m - marginals[0])) <= 1e-12
        assert np.allclose(marginals[0], I2 / 2, atol=1e-12)

    def test_angle_domain(self):
        with pytest.raises(ValueError, match="angle"):
            ControlBasis(-0.1)
        with pytest.raises(ValueError, match="angle"):
            ControlBasis(np.pi / 2 + 0.01)

    def test_outcome_invariant_enforced(self):
        with pytest.raises(ValueError, match="mean"):
            ProtocolOutcome(per_message_success=(1.0, 1.0, 0.0, 0.0), success_probability=0.9)


class TestMixedBasisDecoding:
    def test_fixed_enumeration(self):
        table = mixed_basis_decode_table()
        assert table[0] == 0

    def test_bijection(self):
        table = mixed_basis_decode_table()
        assert sorted(table.keys()) == [0, 1, 2, 3]
        assert sorted(table.values()) == [0, 1, 2, 3]

    def test_noiseless_roundtrip(self):
        # compose encode/measure algebra: prepare the m-th basis ket, measure
        # in the mixed basis, decode the certain outcome
        basis = mixed_basis()
        table = mixed_basis_decode_table()
        for m in range(4):
            rho = np.outer(basis[m], basis[m].conj())
            probs = [float(np.real(v.conj() @ rho @ v)) for v in basis]
            outcome = int(np.argmax(probs))
            assert probs[outcome] == pytest.approx(1.0, abs=1e-12)
            assert table[outcome] == m
