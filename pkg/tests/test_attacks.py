import numpy as np
import pytest

from application.attacks import (
    AttackMixture,
    AttackUnitary,
    BuiltinAttack,
    JDecomposition,
    builtin_attack,
    decompose_j,
    eve_params,
    exact_holevo,
    full_density,
    post_attack_states,
    random_attack,
    swap_be,
)
from application.bounds import ChannelStats, EveParams, holevo_bounds, pq_from_stats
from core.errors import DimensionMismatchError, InvalidParameterError, NotUnitaryError
from core.fock import H1, V1
from core.qmath import identity, is_unitary, random_unitary, von_neumann_entropy

BUILTINS = ["identity", "bitflip", "vacuum_swap", "intercept"]


def closed_form(outcome):
    stats = ChannelStats.from_estimates(outcome.p01, outcome.p10)
    eve = EveParams(
        0.0 if outcome.c is None else outcome.c,
        0.0 if outcome.d is None else outcome.d,
    )
    return holevo_bounds(stats, eve)


class TestAttackUnitary:
    def test_rejects_non_unitary(self, space):
        j = identity(space.be_dim)
        j[0, 0] = 2.0
        with pytest.raises(NotUnitaryError):
            AttackUnitary(j=j, k=identity(space.be_dim))

    def test_rejects_mismatched_j_k(self):
        with pytest.raises(DimensionMismatchError):
            AttackUnitary(j=identity(4), k=identity(6))

    def test_check_space(self, space):
        with pytest.raises(DimensionMismatchError):
            AttackUnitary(j=identity(4), k=identity(4)).check_space(space)

    def test_mixture_weights_must_sum_to_one(self, space):
        attack = builtin_attack("identity", space)
        with pytest.raises(InvalidParameterError):
            AttackMixture(components=((0.5, attack), (0.4, attack)))

    def test_mixture_single(self, space):
        mixture = AttackMixture.single(builtin_attack("bitflip", space))
        assert mixture.name == "bitflip"
        np.testing.assert_array_equal(mixture.weights, [1.0])


class TestLibrary:
    def test_unknown_name(self, space):
        with pytest.raises(InvalidParameterError):
            builtin_attack("photon_number_splitting", space)

    def test_custom_file_needs_path(self, space):
        with pytest.raises(InvalidParameterError):
            builtin_attack(BuiltinAttack.CUSTOM_FILE, space)

    @pytest.mark.parametrize("name", BUILTINS)
    def test_builtins_are_unitary(self, space, name):
        attack = builtin_attack(name, space)
        assert attack.name == name
        assert is_unitary(attack.j)
        assert is_unitary(attack.k)

    def test_swap_is_an_involution(self, space):
        swap = swap_be(space)
        np.testing.assert_array_equal(swap @ swap, identity(space.be_dim))


class TestBuiltinParameters:
    def test_identity(self, space):
        outcome = post_attack_states(builtin_attack("identity", space), space)
        assert outcome.p01 == pytest.approx(0.5)
        assert outcome.p10 == pytest.approx(0.5)
        assert outcome.c is None
        assert outcome.d is None
        assert outcome.p == pytest.approx(-1.0)
        assert outcome.q == pytest.approx(0.0, abs=1e-12)

    def test_bitflip(self, space):
        outcome = post_attack_states(builtin_attack("bitflip", space), space)
        assert outcome.p01 == pytest.approx(0.0, abs=1e-12)
        assert outcome.p10 == pytest.approx(0.0, abs=1e-12)
        assert outcome.c == pytest.approx(1.0)
        assert outcome.d == pytest.approx(-1.0)
        assert outcome.p == pytest.approx(1.0)
        assert outcome.q == pytest.approx(0.0, abs=1e-12)

    def test_vacuum_swap(self, space):
        outcome = post_attack_states(builtin_attack("vacuum_swap", space), space)
        assert outcome.p01 == pytest.approx(0.0, abs=1e-12)
        assert outcome.p10 == pytest.approx(0.0, abs=1e-12)
        assert outcome.c == pytest.approx(1.0)
        assert outcome.d == pytest.approx(1.0)
        assert outcome.p == pytest.approx(0.0, abs=1e-12)
        assert outcome.q == pytest.approx(1.0)

    def test_intercept(self, space):
        outcome = post_attack_states(builtin_attack("intercept", space), space)
        assert outcome.p01 == pytest.approx(0.25)
        assert outcome.p10 == pytest.approx(0.25)
        assert outcome.p_anticorr == pytest.approx(0.25)
        assert outcome.p == pytest.approx(0.0, abs=1e-12)
        assert outcome.q == pytest.approx(0.0, abs=1e-12)


class TestDecomposition:
    def test_amplitudes_normalized(self, space, rng):
        for _ in range(10):
            dec = decompose_j(random_attack(space, rng), space)
            assert abs(dec.alpha) ** 2 + abs(dec.gamma) ** 2 == pytest.approx(1.0)
            assert abs(dec.beta) ** 2 + abs(dec.delta) ** 2 == pytest.approx(1.0)

    def test_pq_closure_on_random_attacks(self, space, rng):
        for _ in range(200):
            outcome = post_attack_states(random_attack(space, rng), space)
            stats = ChannelStats.from_estimates(outcome.p01, outcome.p10)
            p, q = pq_from_stats(stats, EveParams(outcome.c, outcome.d))
            assert outcome.p == pytest.approx(p, abs=1e-8)
            assert outcome.q == pytest.approx(q, abs=1e-8)
            imaginary = outcome.mu_plus.inner(outcome.nu_minus).imag
            assert abs(imaginary) < 1e-9

    def test_observables_independent_of_k(self, space, rng):
        attack = random_attack(space, rng)
        reference = post_attack_states(attack, space)
        for _ in range(20):
            other = post_attack_states(attack.with_k(random_unitary(space.be_dim, rng)), space)
            assert other.p01 == pytest.approx(reference.p01, abs=1e-12)
            assert other.p == pytest.approx(reference.p, abs=1e-9)
            assert other.q == pytest.approx(reference.q, abs=1e-9)

    def test_bitflip_moves_everything_into_the_flipped_parts(self, space):
        dec = decompose_j(builtin_attack("bitflip", space), space)
        e = space.e.initial_state
        assert dec.alpha == pytest.approx(0.0, abs=1e-12)
        assert dec.beta == pytest.approx(0.0, abs=1e-12)
        assert dec.gamma == pytest.approx(1.0)
        assert dec.delta == pytest.approx(1.0)
        assert dec.alpha_e is None and dec.beta_e is None
        np.testing.assert_allclose(dec.gamma_state, np.kron(space.b.unit(V1), e), atol=1e-12)
        np.testing.assert_allclose(dec.delta_state, np.kron(space.b.unit(H1), e), atol=1e-12)
        assert eve_params(dec) == pytest.approx((1.0, -1.0))

    def test_balanced_gamma_gives_zero_c(self, space):
        e0 = np.zeros(space.e.dim, dtype=np.complex128)
        e1 = np.zeros(space.e.dim, dtype=np.complex128)
        e0[0], e1[1] = 1.0, 1.0
        gamma_state = (np.kron(space.b.unit(V1), e0) + np.kron(space.b.unit(H1), e1)) / np.sqrt(2.0)
        dec = JDecomposition(
            space=space,
            alpha=0.0,
            beta=1.0,
            gamma=1.0,
            delta=0.0,
            beta_e=e0,
            gamma_state=gamma_state,
        )
        c, d = eve_params(dec)
        assert c == pytest.approx(0.0, abs=1e-15)
        assert d is None


class TestExactHolevo:
    @pytest.mark.parametrize("name", BUILTINS)
    def test_builtins_match_closed_form(self, space, name):
        attack = builtin_attack(name, space)
        exact = exact_holevo(attack, space)
        bounds = closed_form(post_attack_states(attack, space))
        assert exact.i_be == pytest.approx(bounds.i_be, abs=1e-8)
        assert exact.i_ae == pytest.approx(bounds.i_ae, abs=1e-8)

    def test_known_values(self, space):
        identity_attack = exact_holevo(builtin_attack("identity", space), space)
        assert identity_attack.i_be == pytest.approx(0.0, abs=1e-9)
        assert identity_attack.i_ae == pytest.approx(0.0, abs=1e-9)

        swap = exact_holevo(builtin_attack("vacuum_swap", space), space)
        assert swap.i_be == pytest.approx(0.0, abs=1e-9)
        assert swap.i_ae == pytest.approx(1.0, abs=1e-9)

        intercept = exact_holevo(builtin_attack("intercept", space), space)
        assert intercept.i_be == pytest.approx(1.0, abs=1e-9)

    def test_compressed_entropy_matches_full_density(self, space):
        attack = builtin_attack("intercept", space)
        rho = full_density(attack, space)
        assert np.trace(rho).real == pytest.approx(1.0)
        assert von_neumann_entropy(rho) == pytest.approx(
            exact_holevo(attack, space).s_total, abs=1e-9
        )

    def test_encodings_have_one_bit_each(self, space, rng):
        exact = exact_holevo(random_attack(space, rng), space)
        assert exact.s_identity == pytest.approx(1.0, abs=1e-9)
        assert exact.s_phase == pytest.approx(1.0, abs=1e-9)

    @pytest.mark.slow
    def test_random_attacks_match_closed_form(self, space, rng):
        for _ in range(50):
            attack = random_attack(space, rng)
            exact = exact_holevo(attack, space)
            bounds = closed_form(post_attack_states(attack, space))
            assert exact.i_be == pytest.approx(bounds.i_be, abs=1e-8)
            assert exact.i_ae == pytest.approx(bounds.i_ae, abs=1e-8)

    def test_invariant_under_k(self, space, rng):
        attack = random_attack(space, rng)
        reference = exact_holevo(attack, space)
        for _ in range(20):
            other = exact_holevo(attack.with_k(random_unitary(space.be_dim, rng)), space)
            assert other.i_be == pytest.approx(reference.i_be, abs=1e-9)
            assert other.i_ae == pytest.approx(reference.i_ae, abs=1e-9)
