import numpy as np
import pytest

from conftest import M1_ROWS, assert_multisets_close, multiset_distance, sampled
from monospec import (
    dominance_of,
    eigenpair_3x3,
    frobenius_normal_form,
    perron,
    spectrum_of_dominance,
    spectrum_of_stochastic,
    validate_monotone,
    validate_stochastic,
)
from monospec.errors import DimensionError
from monospec.spectra import charpoly, deflate, durand_kerner, poly_eval, spectrum3_batch


class TestCharpoly:
    def test_2x2_closed_form(self, rng):
        for _ in range(50):
            A = rng.uniform(-1, 1, size=(2, 2))
            c = charpoly(A)
            assert c[0] == 1.0
            assert c[1] == pytest.approx(-np.trace(A), abs=1e-14)
            assert c[2] == pytest.approx(np.linalg.det(A), abs=1e-14)

    def test_roots_against_eigvals(self, rng):
        for n in (3, 4, 6):
            A = rng.uniform(0, 1, size=(n, n))
            coeffs = charpoly(A)
            eig = np.linalg.eigvals(A)
            assert np.abs(poly_eval(coeffs, eig)).max() < 1e-8


class TestDeflate:
    def test_exact_division(self):
        # (x - 1)(x^2 + 2x + 3) = x^3 + x^2 + x - 3
        q, rem = deflate([1.0, 1.0, 1.0, -3.0], 1.0)
        assert np.allclose(q, [1.0, 2.0, 3.0])
        assert rem == 0.0


class TestDurandKerner:
    def test_known_quadratic(self):
        roots = durand_kerner([1.0, 0.0, -0.25])
        assert_multisets_close(roots, [0.5, -0.5], 1e-12)

    def test_random_polys_against_numpy(self, rng):
        for deg in (2, 3, 5):
            for _ in range(20):
                coeffs = np.concatenate([[1.0], rng.uniform(-1, 1, deg)])
                mine = durand_kerner(coeffs)
                ref = np.roots(coeffs)
                assert_multisets_close(mine, ref, 1e-8)


class TestEigenpair3x3:
    def test_worked_example(self):
        p = eigenpair_3x3([[0.1, 0.1], [0.1, 0.1]])
        assert p.lambda2 == pytest.approx(0.2, abs=1e-15)
        assert p.lambda3 == pytest.approx(0.0, abs=1e-15)

    def test_identity(self):
        p = eigenpair_3x3(np.eye(2))
        assert (p.lambda2, p.lambda3) == (1.0, 1.0)

    def test_type2_alpha0(self):
        p = eigenpair_3x3([[0.0, 0.5], [0.5, 0.0]])
        assert (p.lambda2, p.lambda3) == (0.5, -0.5)

    def test_agrees_with_charpoly_engine(self, rng):
        for _ in range(2000):
            D = rng.uniform(0, 0.5, size=(2, 2))
            pair = eigenpair_3x3(D)
            assert_multisets_close(
                [pair.lambda2, pair.lambda3], spectrum_of_dominance(D).values, 1e-10
            )


class TestSpectrumOfStochastic:
    def test_type1_alpha_half(self):
        S = validate_stochastic([[0, 0.5, 0.5], [0, 0.5, 0.5], [0, 0, 1.0]])
        assert_multisets_close(spectrum_of_stochastic(S).values, [1.0, 0.5, 0.0], 1e-12)

    def test_type2_alpha_03(self):
        # lambda2 = sqrt(1/4 - 0.09) = 0.4
        S = validate_stochastic([[0.2, 0.8, 0], [0.2, 0, 0.8], [0, 0.2, 0.8]])
        assert_multisets_close(spectrum_of_stochastic(S).values, [1.0, 0.4, -0.4], 1e-12)

    def test_identity_multiplicity(self):
        for n in (2, 5, 9):
            spec = spectrum_of_stochastic(validate_stochastic(np.eye(n)))
            assert spec.values == tuple([1.0 + 0.0j] * n)

    def test_nontrivial_removes_one_exact_one(self):
        spec = spectrum_of_stochastic(validate_stochastic(np.eye(3)))
        assert spec.nontrivial() == (1.0 + 0.0j, 1.0 + 0.0j)

    def test_size_cap(self):
        with pytest.raises(DimensionError):
            spectrum_of_stochastic(validate_stochastic(np.eye(13)))

    def test_dominance_size_cap(self):
        with pytest.raises(DimensionError):
            spectrum_of_dominance(np.zeros((12, 12)))

    def test_against_eigvals_on_samples(self):
        for n in (3, 4, 5, 6):
            for M in sampled(n, 50, seed=n):
                mine = spectrum_of_stochastic(M).values
                ref = np.linalg.eigvals(M.entries)
                assert_multisets_close(mine, ref, 1e-8)

    def test_conjugate_closure_and_residuals(self):
        for M in sampled(5, 100, seed=31):
            spec = spectrum_of_stochastic(M)
            coeffs = charpoly(M.entries)
            for z in spec.values:
                assert abs(poly_eval(coeffs, z)) < 1e-8 * (1 + abs(z)) ** M.n
                if abs(z.imag) > 1e-9:
                    assert min(abs(z.conjugate() - w) for w in spec.values) < 1e-9

    def test_max_modulus_and_trivial_root(self):
        for n in (3, 5):
            for M in sampled(n, 100, seed=50 + n):
                spec = spectrum_of_stochastic(M)
                assert max(abs(z) for z in spec.values) <= 1.0 + 1e-9
                assert (1.0 + 0.0j) in spec.values

    def test_trace_and_det_identities(self):
        for M in sampled(6, 100, seed=17):
            values = np.array(spectrum_of_stochastic(M).values)
            assert abs(values.sum() - np.trace(M.entries)) < 1e-9
            assert abs(values.prod() - np.linalg.det(M.entries)) < 1e-9


class TestSpectrumOfDominance:
    def test_type2_dominance(self):
        spec = spectrum_of_dominance(np.array([[0.0, 0.5], [0.5, 0.0]]))
        assert_multisets_close(spec.values, [0.5, -0.5], 1e-12)
        assert not spec.trivial_included

    def test_zero_matrix(self):
        assert spectrum_of_dominance(np.zeros((5, 5))).values == tuple([0.0 + 0.0j] * 5)

    def test_dominance_equivalence_on_samples(self):
        # sigma(M) = sigma(D(M)) u {1}
        for n in (3, 4, 5, 6):
            for M in sampled(n, 50, seed=100 + n):
                full = spectrum_of_stochastic(M).values
                reduced = spectrum_of_dominance(dominance_of(M).entries).values
                assert_multisets_close(full, list(reduced) + [1.0], 1e-8)


class TestSpectrum3Batch:
    def test_matches_scalar_engine(self):
        from monospec.sampler import SampleConfig, sample_entries

        entries = sample_entries(SampleConfig(3, 200, seed=77))
        batch = spectrum3_batch(entries)
        for i in range(len(entries)):
            scalar = spectrum_of_stochastic(validate_stochastic(entries[i])).values
            assert multiset_distance(batch[i], scalar) < 1e-10

    def test_shape_check(self):
        with pytest.raises(DimensionError):
            spectrum3_batch(np.zeros((4, 2, 2)))


class TestPerron:
    def test_periodic_permutation(self):
        pd = perron(np.array([[0.0, 1.0], [1.0, 0.0]]))
        assert pd.r == pytest.approx(1.0, abs=1e-12)
        assert np.allclose(pd.x, [0.5, 0.5], atol=1e-12)

    def test_rank_one(self):
        pd = perron(np.full((2, 2), 0.1))
        assert pd.r == pytest.approx(0.2, abs=1e-12)
        A = np.full((2, 2), 0.1)
        assert np.abs(A @ pd.x - pd.r * pd.x).max() < 1e-12

    def test_1x1(self):
        pd = perron(np.array([[0.5]]))
        assert (pd.r, pd.x[0], pd.zero) == (0.5, 1.0, False)

    def test_1x1_zero_flagged(self):
        pd = perron(np.zeros((1, 1)))
        assert pd.zero and pd.r == 0.0 and pd.x[0] == 1.0

    def test_matches_max_modulus_on_samples(self):
        for M in sampled(4, 100, seed=23):
            A = dominance_of(M).entries
            nf = frobenius_normal_form(A)
            if len(nf.blocks) != 1:
                continue  # irreducible case only here
            pd = perron(A)
            top = max(abs(z) for z in spectrum_of_dominance(A).values)
            assert pd.r == pytest.approx(top, abs=1e-8)
            assert pd.x.min() > 0.0


class TestNormalForm:
    def test_irreducible_single_block(self):
        nf = frobenius_normal_form(np.full((3, 3), 0.2))
        assert nf.blocks == ((0, 3),)

    def test_already_triangular(self):
        nf = frobenius_normal_form(np.array([[0.5, 0.5], [0.0, 0.5]]))
        assert list(nf.perm) == [0, 1]
        assert nf.blocks == ((0, 1), (1, 2))

    def test_permuted_is_block_upper_triangular(self):
        rng = np.random.default_rng(5)
        for M in sampled(6, 100, seed=41):
            A = dominance_of(M).entries
            # sparsify to force reducible patterns
            A = np.where(rng.uniform(size=A.shape) < 0.5, 0.0, A)
            nf = frobenius_normal_form(A)
            P = nf.permuted(A)
            for bi, (s0, s1) in enumerate(nf.blocks):
                for s2, s3 in nf.blocks[bi + 1:]:
                    assert np.all(P[s2:s3, s0:s1] <= 1e-12)

    def test_block_spectra_union(self):
        # reducible dominance matrices with clean structure: absorbing-state
        # embeds of sampled 3x3 monotone matrices, and upper blocks coupled
        # to a zero diagonal tail
        cases = []
        for M in sampled(3, 20, seed=43):
            embedded = np.zeros((4, 4))
            embedded[:3, :3] = M.entries
            embedded[3, 3] = 1.0
            cases.append(dominance_of(validate_monotone(embedded)).entries)
        cases.append(np.array([[0.4, 0.3, 0.1], [0.2, 0.5, 0.0], [0.0, 0.0, 0.0]]))
        cases.append(np.array([[0.0, 0.7, 0.1], [0.0, 0.3, 0.2], [0.0, 0.0, 0.6]]))
        for A in cases:
            nf = frobenius_normal_form(A)
            assert len(nf.blocks) >= 2
            union = []
            for i in range(len(nf.blocks)):
                members = nf.block_members(i)
                union.extend(spectrum_of_dominance(A[np.ix_(members, members)]).values)
            assert_multisets_close(union, spectrum_of_dominance(A).values, 1e-8)
