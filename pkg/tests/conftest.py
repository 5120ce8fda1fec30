"""Shared test helpers: multiset matching and reference matrices."""

import numpy as np
import pytest

from monospec import SampleConfig, sample_monotone

# The worked 3x3 pair from the dominance discussion: different monotone
# matrices, identical dominance matrix [[0.1, 0.1], [0.1, 0.1]].
M1_ROWS = [[0.3, 0.7, 0.0], [0.2, 0.7, 0.1], [0.1, 0.7, 0.2]]
M2_ROWS = [[0.4, 0.6, 0.0], [0.3, 0.6, 0.1], [0.2, 0.6, 0.2]]


def multiset_distance(xs, ys) -> float:
    """Greedy nearest-match distance between two complex multisets."""
    xs = [complex(x) for x in xs]
    ys = [complex(y) for y in ys]
    assert len(xs) == len(ys), f"sizes differ: {len(xs)} vs {len(ys)}"
    worst = 0.0
    remaining = list(ys)
    for x in sorted(xs, key=abs, reverse=True):
        j = min(range(len(remaining)), key=lambda i: abs(remaining[i] - x))
        worst = max(worst, abs(remaining.pop(j) - x))
    return worst


def assert_multisets_close(xs, ys, tol):
    dist = multiset_distance(xs, ys)
    assert dist <= tol, f"multisets differ by {dist:.3e} > {tol:.1e}"


def sampled(n, count, seed=0):
    return list(sample_monotone(SampleConfig(n, count, seed)))


@pytest.fixture
def rng():
    return np.random.default_rng(20240901)
