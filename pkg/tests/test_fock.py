import numpy as np
import pytest

from core.errors import DimensionMismatchError, InvalidParameterError
from core.fock import (
    H1,
    V1,
    VACUUM,
    AncillaSpace,
    BellKind,
    ChannelSpace,
    Factor,
    FockKet,
    StateVector,
    anticorr_projectors,
    bell_state,
    embed_op,
    z_gate,
)
from core.qmath import identity, is_hermitian, is_unitary


class TestChannelSpace:
    def test_basis_order(self):
        channel = ChannelSpace("B", 2)
        assert channel.dim == 6
        assert channel.basis == (
            VACUUM,
            V1,
            H1,
            FockKet(2, 0),
            FockKet(2, 1),
            FockKet(2, 2),
        )

    def test_basis_index_inverts_ket_at(self):
        channel = ChannelSpace("B", 3)
        for index in range(channel.dim):
            assert channel.basis_index(channel.ket_at(index)) == index

    def test_ket_beyond_cutoff(self):
        with pytest.raises(InvalidParameterError):
            ChannelSpace("A", 1).basis_index(FockKet(2, 1))

    def test_invalid_ket(self):
        with pytest.raises(InvalidParameterError):
            FockKet(1, 2)

    def test_ancilla_initial_index_in_range(self):
        with pytest.raises(InvalidParameterError):
            AncillaSpace(3, initial_index=3)


class TestCompositeSpace:
    def test_dimensions(self, space):
        assert space.dims == (3, 6, 6)
        assert space.dim == 108
        assert space.be_dim == 36

    def test_index_split_roundtrip(self, space):
        for index in range(space.dim):
            assert space.index(*space.split(index)) == index

    def test_a_is_slowest_index(self, space):
        assert space.index(1, 0, 0) == 36
        assert space.index(0, 1, 0) == 6
        assert space.index(0, 0, 1) == 1


class TestStates:
    @pytest.mark.parametrize("kind", list(BellKind))
    def test_bell_state_amplitudes(self, space, kind):
        state = bell_state(kind, space)
        sign = 1.0 if kind is BellKind.PLUS else -1.0
        assert state.norm() == pytest.approx(1.0)
        assert state.amplitude(V1, H1, 0) == pytest.approx(1 / np.sqrt(2))
        assert state.amplitude(H1, V1, 0) == pytest.approx(sign / np.sqrt(2))
        assert state.amplitude(V1, H1, 1) == 0

    def test_bell_states_orthogonal(self, space):
        minus = bell_state(BellKind.MINUS, space)
        plus = bell_state(BellKind.PLUS, space)
        assert abs(minus.inner(plus)) < 1e-15

    def test_state_rejects_wrong_length(self, space):
        with pytest.raises(DimensionMismatchError):
            StateVector(space, np.ones(5) / np.sqrt(5))

    def test_state_rejects_unnormalized(self, space):
        with pytest.raises(InvalidParameterError):
            StateVector(space, np.ones(space.dim))


class TestGates:
    def test_z_gate_sign_follows_horizontal_count(self):
        z = z_gate(ChannelSpace("B", 2))
        np.testing.assert_array_equal(np.diag(z).real, [1, 1, -1, 1, -1, 1])

    def test_phase_flip_maps_singlet_to_minus_psi_plus(self, space):
        z_b = embed_op(z_gate(space.b), Factor.B, space)
        flipped = bell_state(BellKind.MINUS, space).evolve(z_b)
        np.testing.assert_allclose(
            flipped.amplitudes, -bell_state(BellKind.PLUS, space).amplitudes, atol=1e-15
        )

    def test_embed_joint_factor(self, space):
        op = np.diag(np.arange(space.be_dim, dtype=float))
        full = embed_op(op, Factor.BE, space)
        assert full.shape == (space.dim, space.dim)
        assert full[space.index(2, 1, 3), space.index(2, 1, 3)] == 1 * 6 + 3

    def test_embed_rejects_wrong_shape(self, space):
        with pytest.raises(DimensionMismatchError):
            embed_op(identity(4), Factor.B, space)

    def test_anticorrelation_projectors(self, space):
        pi01, pi10 = anticorr_projectors(space)
        assert is_hermitian(pi01)
        np.testing.assert_allclose(pi01 @ pi01, pi01)
        np.testing.assert_allclose(pi01 @ pi10, 0.0)
        singlet = bell_state(BellKind.MINUS, space).amplitudes
        assert np.vdot(singlet, pi01 @ singlet).real == pytest.approx(0.5)
        assert np.vdot(singlet, pi10 @ singlet).real == pytest.approx(0.5)

    def test_anticorrelation_projectors_fit_under_identity(self, space):
        pi01, pi10 = anticorr_projectors(space)
        slack = np.linalg.eigvalsh(identity(space.dim) - pi01 - pi10)
        assert slack.min() >= -1e-10

    @pytest.mark.parametrize("nmax", [1, 2, 3])
    def test_z_gate_is_hermitian_and_unitary(self, nmax):
        z = z_gate(ChannelSpace("B", nmax))
        assert is_hermitian(z)
        assert is_unitary(z)
