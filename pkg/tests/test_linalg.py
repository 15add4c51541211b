import numpy as np
import pytest

from qqmems.linalg import (
    check_density_matrix,
    eig_hermitian,
    haar_unitary,
    negativity,
    partial_transpose_qubit,
    purity,
    random_density_fixed_purity,
    trace_norm,
)
from qqmems.purity_mems import construct_rank2, n_x_p_deg
from qqmems.xstate import XState

from oracles import eigs_bisect_det, negativity_neg_eigs, trace_norm_variational


def random_hermitian(rng, dim=6, scale=1.0):
    A = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    return scale * (A + A.conj().T) / 2.0


class TestEigHermitian:
    def test_identity(self):
        w, v = eig_hermitian(np.eye(6))
        np.testing.assert_allclose(w, np.ones(6))
        np.testing.assert_allclose(v.conj().T @ v, np.eye(6), atol=1e-11)

    def test_diagonal_sorted_ascending(self):
        w, _ = eig_hermitian(np.diag([6.0, 5.0, 4.0, 3.0, 2.0, 1.0]))
        np.testing.assert_allclose(w, [1, 2, 3, 4, 5, 6])

    def test_against_det_bisection_oracle(self, rng):
        for _ in range(10):
            H = random_hermitian(rng)
            w, v = eig_hermitian(H)
            np.testing.assert_allclose(w, eigs_bisect_det(H), atol=1e-9)
            np.testing.assert_allclose((v * w) @ v.conj().T, H, atol=1e-11)
            np.testing.assert_allclose(v.conj().T @ v, np.eye(6), atol=1e-11)

    def test_eigenvalue_sum_is_trace(self, rng):
        H = random_hermitian(rng)
        w, _ = eig_hermitian(H)
        assert abs(w.sum() - np.real(np.trace(H))) < 1e-11

    def test_rejects_non_hermitian(self, rng):
        H = rng.standard_normal((6, 6))
        H[0, 1] += 1.0
        with pytest.raises(ValueError, match="Hermitian"):
            eig_hermitian(H)

    def test_rejects_non_square(self):
        with pytest.raises(ValueError, match="square"):
            eig_hermitian(np.zeros((2, 3)))


class TestPartialTranspose:
    def test_x_state_pattern(self, rng):
        # On an X state the partial transpose swaps blocks 1 and 3 of the
        # anti-diagonal and conjugates the phases.
        x = XState(
            a=np.array([0.1, 0.15, 0.2]),
            b=np.array([0.2, 0.15, 0.2]),
            r=np.array([0.05, 0.1, 0.15]),
            phi=np.array([0.3, 1.1, 2.5]),
        )
        pt = partial_transpose_qubit(x.to_matrix())
        # Expected: same diagonal, anti-diagonal entries with r_1 <-> r_3,
        # phi_1 <-> phi_3 and i <-> -i.  Built by hand since the partial
        # transpose of a valid X state need not be positive semidefinite.
        expected = np.diag(x.to_matrix().diagonal())
        r_pt = x.r[::-1]
        phi_pt = np.array([x.phi[2], x.phi[1], x.phi[0]])
        for k, (i, j) in enumerate(((0, 5), (1, 4), (2, 3))):
            expected[i, j] = r_pt[k] * np.exp(+1j * phi_pt[k])
            expected[j, i] = np.conj(expected[i, j])
        np.testing.assert_allclose(pt, expected, atol=1e-15)

    def test_identity_fixed_point(self):
        np.testing.assert_allclose(partial_transpose_qubit(np.eye(6) / 6), np.eye(6) / 6)

    def test_involution_trace_hermiticity(self, rng):
        for _ in range(20):
            H = random_hermitian(rng)
            pt = partial_transpose_qubit(H)
            np.testing.assert_allclose(partial_transpose_qubit(pt), H)
            assert abs(np.trace(pt) - np.trace(H)) < 1e-14
            np.testing.assert_allclose(pt, pt.conj().T, atol=1e-14)

    def test_rejects_wrong_shape(self):
        with pytest.raises(ValueError, match="6x6"):
            partial_transpose_qubit(np.eye(4))


class TestTraceNorm:
    def test_density_matrix_is_one(self, rng):
        assert abs(trace_norm(random_density_fixed_purity(0.5, rng)) - 1.0) < 1e-12

    def test_signature_example(self):
        assert abs(trace_norm(np.diag([1.0, -1.0, 0, 0, 0, 0])) - 2.0) < 1e-15

    def test_against_variational_oracle(self, rng):
        for _ in range(5):
            H = random_hermitian(rng)
            assert abs(trace_norm(H) - trace_norm_variational(H)) < 1e-8
            assert trace_norm(H) >= abs(np.real(np.trace(H))) - 1e-12


class TestNegativity:
    def test_maximally_mixed_zero(self):
        assert negativity(np.eye(6) / 6) == pytest.approx(0.0, abs=1e-14)

    def test_pure_bell_like_is_one(self):
        from qqmems.spectrum import construct_spectrum_xmems

        x = construct_spectrum_xmems(np.array([1.0, 0, 0, 0, 0, 0]))
        assert abs(negativity(x.to_matrix()) - 1.0) < 1e-12

    def test_rank2_boundary_half(self):
        assert abs(negativity(construct_rank2(0.5).to_matrix()) - 0.5) < 1e-12

    def test_matches_negative_eigenvalue_sum(self, rng):
        for P in (0.25, 0.5, 0.8):
            rho = random_density_fixed_purity(P, rng)
            assert abs(negativity(rho) - negativity_neg_eigs(rho)) < 1e-12
            assert -1e-12 <= negativity(rho) <= 1.0 + 1e-12


class TestPurity:
    def test_examples(self):
        assert purity(np.eye(6) / 6) == pytest.approx(1 / 6)
        pure = np.zeros((6, 6))
        pure[0, 0] = 1.0
        assert purity(pure) == pytest.approx(1.0)
        assert purity(np.diag([0.5, 0.5, 0, 0, 0, 0])) == pytest.approx(0.5)


class TestHaarUnitary:
    @pytest.mark.parametrize("dim", [2, 3, 6])
    def test_unitarity(self, dim, rng):
        U = haar_unitary(dim, rng)
        np.testing.assert_allclose(U.conj().T @ U, np.eye(dim), atol=1e-11)
        assert abs(abs(np.linalg.det(U)) - 1.0) < 1e-11
        np.testing.assert_allclose(np.linalg.norm(U, axis=0), np.ones(dim), atol=1e-11)


class TestRandomDensityFixedPurity:
    @pytest.mark.parametrize("P", [1 / 6 + 1e-6, 0.25, 0.5, 0.9, 0.999])
    def test_exact_purity_full_rank(self, P, rng):
        rho = random_density_fixed_purity(P, rng)
        check_density_matrix(rho)
        assert abs(purity(rho) - P) <= 1e-10
        w, _ = eig_hermitian(rho)
        assert w[0] > 0.0

    def test_deterministic_under_seed(self):
        a = random_density_fixed_purity(0.5, np.random.default_rng(7))
        b = random_density_fixed_purity(0.5, np.random.default_rng(7))
        np.testing.assert_array_equal(a, b)

    @pytest.mark.parametrize("P", [1 / 6, 1.0, 0.0])
    def test_domain(self, P, rng):
        with pytest.raises(ValueError, match="purity"):
            random_density_fixed_purity(P, rng)

    def test_negativity_below_degenerate_ceiling(self, rng):
        # Empirical upper-bound check against the fixed-purity ceiling.
        for _ in range(10_000):
            P = rng.uniform(0.21, 0.99)
            rho = random_density_fixed_purity(P, rng)
            assert negativity(rho) <= n_x_p_deg(P) + 1e-6
