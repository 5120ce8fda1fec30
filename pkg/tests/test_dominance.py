import numpy as np
import pytest

from conftest import M1_ROWS, M2_ROWS, sampled
from monospec import (
    Infeasible,
    LiftWitness,
    check_general_properties,
    check_lemma1,
    check_liftable,
    convex_combine,
    dominance_of,
    equal_rows_matrix,
    lift,
    validate_monotone,
    validate_stochastic,
)
from monospec.errors import DimensionError, NegativeEntry, WitnessInvalid

D_EXAMPLE = [[0.1, 0.1], [0.1, 0.1]]


def grid_liftable(D, steps=101):
    """Independent oracle: exhaustive search over the (m11, m33) grid.

    Returns the best min-slack of the five-inequality system over grid
    points in [0, 1]^2; positive means a feasible witness exists there.
    """
    a, b, c, d = np.asarray(D, dtype=float).ravel()
    g = np.linspace(0.0, 1.0, steps)
    m11, m33 = np.meshgrid(g, g, indexing="ij")
    slack = np.minimum.reduce(
        [
            m11 - (a + c),
            m33 - (b + d),
            1.0 + b + d - (m11 + m33),
            1.0 + a + d - (m11 + m33),
            1.0 + a + c - (m11 + m33),
        ]
    )
    return float(slack.max())


class TestDominanceOf:
    def test_worked_example_pair(self):
        D1 = dominance_of(validate_monotone(M1_ROWS))
        D2 = dominance_of(validate_monotone(M2_ROWS))
        assert np.abs(D1.entries - D_EXAMPLE).max() < 1e-15
        assert np.abs(D2.entries - D_EXAMPLE).max() < 1e-15

    def test_identity(self):
        D = dominance_of(validate_monotone(np.eye(3)))
        assert np.array_equal(D.entries, np.eye(2))

    def test_n1_rejected(self):
        with pytest.raises(DimensionError):
            dominance_of(validate_monotone([[1.0]]))

    def test_nonnegative_on_samples(self):
        for M in sampled(5, 100, seed=2):
            assert dominance_of(M).entries.min() >= 0.0


class TestLemma1:
    def test_worked_example_satisfied(self):
        assert all(c.satisfied for c in check_lemma1(D_EXAMPLE))

    def test_zero_matrix_maximal_slack(self):
        checks = {c.name: c for c in check_lemma1(np.zeros((2, 2)))}
        assert all(c.satisfied for c in checks.values())
        assert checks["a+c<=1"].slack == 1.0
        assert checks["bc<=1/4"].slack == 0.25
        assert checks["det>=-1/4"].slack == 0.25

    def test_antidiagonal_violation(self):
        checks = {c.name: c for c in check_lemma1([[0.0, 1.0], [1.0, 0.0]])}
        assert not checks["bc<=1/4"].satisfied
        assert checks["bc<=1/4"].slack == pytest.approx(-0.75)

    def test_holds_on_samples(self):
        for M in sampled(3, 300, seed=4):
            assert all(c.slack >= -1e-12 for c in check_lemma1(dominance_of(M)))


class TestGeneralProperties:
    def test_identity_boundary(self):
        checks = check_general_properties(dominance_of(validate_monotone(np.eye(6))))
        assert all(c.satisfied for c in checks)
        colsums = [c.slack for c in checks if c.name.startswith("colsum")]
        assert np.abs(colsums).max() == 0.0  # column sums exactly 1
        assert checks[-1].slack == pytest.approx(5.0)  # trace n-1

    def test_worked_example(self):
        checks = {c.name: c for c in check_general_properties(dominance_of(validate_monotone(M1_ROWS)))}
        assert checks["colsum[0]<=1"].slack == pytest.approx(0.8)
        assert checks["trace>=0"].slack == pytest.approx(0.2)

    def test_holds_on_samples(self):
        for M in sampled(5, 200, seed=6):
            assert all(c.slack >= -1e-12 for c in check_general_properties(dominance_of(M)))


class TestLiftable:
    def test_worked_example_minimal_witness(self):
        w = check_liftable(D_EXAMPLE)
        assert isinstance(w, LiftWitness)
        assert (w.m11, w.m33) == (pytest.approx(0.2), pytest.approx(0.2))

    def test_zero_matrix(self):
        w = check_liftable(np.zeros((2, 2)))
        assert (w.m11, w.m33) == (0.0, 0.0)
        M = lift(np.zeros((2, 2)), w)
        assert np.allclose(M.entries, np.tile(M.entries[0], (3, 1)))

    def test_permutation_infeasible(self):
        result = check_liftable([[0.0, 1.0], [1.0, 0.0]])
        assert isinstance(result, Infeasible)
        assert result.violated == "m11+m33<=1+a+d"
        assert result.excess == pytest.approx(1.0)

    def test_negative_entry(self):
        with pytest.raises(NegativeEntry):
            check_liftable([[-0.2, 0.0], [0.0, 0.0]])

    def test_grid_oracle_agreement(self, rng):
        agree_checked = 0
        for _ in range(300):
            D = rng.uniform(0.0, 1.2, size=(2, 2))
            slack = grid_liftable(D)
            if abs(slack) <= 0.02:
                continue
            agree_checked += 1
            result = check_liftable(D)
            assert isinstance(result, LiftWitness) == (slack > 0.0)
        assert agree_checked > 200


class TestLift:
    def test_reproduces_worked_matrix(self):
        M = lift(D_EXAMPLE, (0.3, 0.2))
        assert np.abs(M.entries - M1_ROWS).max() < 1e-12

    def test_diagonal_lift(self):
        M = lift([[0.5, 0.0], [0.0, 0.5]], (0.5, 0.5))
        expected = [[0.5, 0.5, 0.0], [0.0, 1.0, 0.0], [0.0, 0.5, 0.5]]
        assert np.abs(M.entries - expected).max() < 1e-12

    def test_bad_witness_rejected(self):
        with pytest.raises(WitnessInvalid):
            lift(D_EXAMPLE, (0.1, 0.1))  # m11 < a + c

    def test_round_trip_on_samples(self):
        # matrices differ, dominance matrices agree: the non-uniqueness remark
        for M in sampled(3, 200, seed=9):
            D = dominance_of(M)
            w = check_liftable(D)
            assert isinstance(w, LiftWitness)
            back = dominance_of(lift(D, w))
            assert np.abs(back.entries - D.entries).max() < 1e-10


class TestLinearity:
    def test_scaling_toward_equal_rows(self):
        # D(t*M + (1-t)*E) = t * D(M) whenever E has all rows equal
        E = equal_rows_matrix([0.2, 0.5, 0.3])
        assert np.abs(dominance_of(E).entries).max() == 0.0
        for M in sampled(3, 50, seed=12):
            D = dominance_of(M).entries
            for t in (0.0, 0.25, 0.7, 1.0):
                C = validate_monotone(convex_combine(M, E, t))
                assert np.abs(dominance_of(C).entries - t * D).max() < 1e-12
