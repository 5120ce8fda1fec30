"""Core matrix types: validation, dominance ordering, arithmetic and I/O.

Row-stochastic matrices are the universe of inputs.  A matrix is *monotone*
when each row is stochastically dominated by the next one, i.e. suffix sums
are non-decreasing down every column (equivalently, prefix sums are
non-increasing).  Everything here is immutable and pure.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .errors import (
    DimensionError,
    InvalidVector,
    MonotoneViolation,
    NegativeEntry,
    RowSumError,
)

__all__ = [
    "DEFAULT_TOL",
    "MAX_N",
    "StochasticMatrix",
    "MonotoneMatrix",
    "PrefixSumTable",
    "validate_stochastic",
    "validate_monotone",
    "prefix_sums",
    "convex_combine",
    "stochastic_vector",
    "matrix_to_text",
    "matrix_to_json",
    "parse_matrix_text",
    "parse_matrix_json",
    "load_matrix",
    "load_stochastic",
]

DEFAULT_TOL = 1e-12

# Desk scale only; everything downstream assumes small dense matrices.
MAX_N = 32


def _as_square(entries, max_n: int = MAX_N) -> np.ndarray:
    arr = np.array(entries, dtype=float)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise DimensionError(f"expected a square matrix, got shape {arr.shape}")
    n = arr.shape[0]
    if n < 1:
        raise DimensionError("matrix must have at least one row")
    if n > max_n:
        raise DimensionError(f"n={n} exceeds the supported scale n<={max_n}")
    return arr


@dataclass(frozen=True)
class StochasticMatrix:
    """Validated row-stochastic matrix.

    Construction clamps entries to [0, 1] (rounding residues only; genuine
    violations raise) and renormalizes each row by its sum so that later
    prefix-sum comparisons are stable.  Instances are immutable.

    Parameters
    ----------
    entries : (n, n) array-like
        Candidate transition probabilities.
    tol : float
        Validation tolerance threaded to all comparisons on this matrix.
    """

    entries: np.ndarray
    tol: float = DEFAULT_TOL

    def __post_init__(self):
        if not self.tol > 0:
            raise ValueError("tol must be positive")
        arr = _as_square(self.entries)
        if arr.min() < -self.tol:
            i, j = np.unravel_index(int(arr.argmin()), arr.shape)
            raise NegativeEntry(f"entry ({i}, {j}) = {arr[i, j]:.3e} is negative")
        sums = arr.sum(axis=1)
        dev = np.abs(sums - 1.0)
        if dev.max() > self.tol:
            i = int(dev.argmax())
            raise RowSumError(f"row {i} sums to {sums[i]!r}, not 1")
        arr = np.clip(arr, 0.0, 1.0)
        # Renormalize drifted rows so prefix-sum comparisons are stable, but
        # keep rows already summing to 1 at working precision bitwise, so
        # revalidating a validated matrix is a no-op.
        sums = arr.sum(axis=1)
        drift = np.abs(sums - 1.0) > 4.0 * arr.shape[0] * np.finfo(float).eps
        if drift.any():
            arr[drift] /= sums[drift, None]
        arr.setflags(write=False)
        object.__setattr__(self, "entries", arr)

    @property
    def n(self) -> int:
        return self.entries.shape[0]

    def __eq__(self, other):
        if isinstance(other, StochasticMatrix):
            return np.array_equal(self.entries, other.entries)
        return NotImplemented

    def __hash__(self):
        return hash(self.entries.tobytes())

    def __repr__(self):
        return f"{type(self).__name__}(n={self.n})"


class MonotoneMatrix(StochasticMatrix):
    """Stochastic matrix whose consecutive rows are dominance-ordered.

    Construction additionally verifies, via suffix sums, that every row is
    stochastically dominated by the next one; the first failing pair is
    reported through :class:`~monospec.errors.MonotoneViolation`.
    """

    def __post_init__(self):
        super().__post_init__()
        m = self.entries
        if m.shape[0] == 1:
            return
        # Suffix sums T[i, r] = sum_{j >= r} m[i, j]; dominance means T is
        # non-decreasing down every column.
        t = np.cumsum(m[:, ::-1], axis=1)[:, ::-1]
        deficit = t[:-1, :] - t[1:, :]
        viol = deficit > self.tol
        if viol.any():
            k, r = np.argwhere(viol)[0]
            raise MonotoneViolation(k + 1, r + 1, deficit[k, r])


@dataclass(frozen=True)
class PrefixSumTable:
    """Row-wise cumulative sums K[i, l] = sum_{j <= l} m[i, j].

    The last column (identically 1) is omitted, so the shape is (n, n-1).
    The source matrix is monotone exactly when the table is non-increasing
    down every column.
    """

    K: np.ndarray

    def __post_init__(self):
        k = np.asarray(self.K, dtype=float)
        k.setflags(write=False)
        object.__setattr__(self, "K", k)

    def column_non_increasing(self, tol: float = DEFAULT_TOL) -> bool:
        if self.K.shape[0] <= 1 or self.K.shape[1] == 0:
            return True
        return bool(np.all(self.K[1:, :] <= self.K[:-1, :] + tol))


def validate_stochastic(entries, tol: float = DEFAULT_TOL) -> StochasticMatrix:
    """Validate an n x n array as a row-stochastic matrix.

    Raises DimensionError, NegativeEntry or RowSumError on genuine
    violations; rounding-level deviations are repaired (clamp, renormalize).
    """
    return StochasticMatrix(entries, tol)


def validate_monotone(S, tol: float = DEFAULT_TOL) -> MonotoneMatrix:
    """Check stochastic dominance between consecutive rows of ``S``.

    ``S`` may be a :class:`StochasticMatrix` or a raw array.  The check uses
    suffix sums (the defining inequality), independently of
    :func:`prefix_sums`, so the two routes can corroborate each other.
    """
    if isinstance(S, StochasticMatrix):
        return MonotoneMatrix(S.entries, S.tol)
    return MonotoneMatrix(S, tol)


def prefix_sums(S: StochasticMatrix) -> PrefixSumTable:
    """Cumulative-sum reformulation of the dominance ordering."""
    entries = S.entries if isinstance(S, StochasticMatrix) else np.asarray(S, float)
    return PrefixSumTable(np.cumsum(entries, axis=1)[:, :-1])


def convex_combine(A: StochasticMatrix, B: StochasticMatrix, t: float) -> StochasticMatrix:
    """Entrywise t*A + (1-t)*B, revalidated.

    Stochastic (and monotone) matrices are closed under this operation; the
    result is returned as a plain :class:`StochasticMatrix`.
    """
    if A.n != B.n:
        raise DimensionError(f"dimension mismatch: {A.n} vs {B.n}")
    if not 0.0 <= t <= 1.0:
        raise ValueError(f"t={t} outside [0, 1]")
    return StochasticMatrix(t * A.entries + (1.0 - t) * B.entries, min(A.tol, B.tol))


def stochastic_vector(v, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Validate a probability vector (used by equal-rows constructions)."""
    arr = np.array(v, dtype=float)
    if arr.ndim != 1 or arr.size < 1:
        raise InvalidVector(f"expected a 1-d vector, got shape {arr.shape}")
    if arr.min() < -tol:
        raise InvalidVector(f"negative component {arr.min():.3e}")
    if abs(arr.sum() - 1.0) > tol:
        raise InvalidVector(f"components sum to {arr.sum()!r}, not 1")
    arr = np.clip(arr, 0.0, 1.0)
    return arr / arr.sum()


# ---------------------------------------------------------------------------
# Serialization.  Text format: first line n, then n rows of n decimals.
# JSON format: {"n": int, "rows": [[...], ...]}.
# ---------------------------------------------------------------------------

def _fmt(x: float, pretty: bool = False) -> str:
    return f"{x:.6g}" if pretty else f"{x:.17g}"


def matrix_to_text(entries, pretty: bool = False) -> str:
    arr = np.atleast_2d(np.asarray(entries, dtype=float))
    lines = [str(arr.shape[0])]
    for row in arr:
        lines.append(" ".join(_fmt(x, pretty) for x in row))
    return "\n".join(lines) + "\n"


def matrix_to_json(entries) -> str:
    arr = np.atleast_2d(np.asarray(entries, dtype=float))
    return json.dumps({"n": arr.shape[0], "rows": arr.tolist()})


def parse_matrix_text(text: str) -> np.ndarray:
    tokens = text.split()
    if not tokens:
        raise DimensionError("empty matrix file")
    try:
        n = int(tokens[0])
    except ValueError:
        raise DimensionError(f"first token must be the dimension, got {tokens[0]!r}")
    if len(tokens) != 1 + n * n:
        raise DimensionError(f"expected {n * n} entries for n={n}, got {len(tokens) - 1}")
    values = np.array([float(t) for t in tokens[1:]], dtype=float)
    return values.reshape(n, n)


def parse_matrix_json(text: str) -> np.ndarray:
    doc = json.loads(text)
    rows = np.array(doc["rows"], dtype=float)
    if rows.ndim != 2 or rows.shape != (doc["n"], doc["n"]):
        raise DimensionError(f"rows shape {rows.shape} does not match n={doc['n']}")
    return rows


def load_matrix(path) -> np.ndarray:
    """Read a matrix file in either supported format (sniffed by content)."""
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    if text.lstrip().startswith("{"):
        return parse_matrix_json(text)
    return parse_matrix_text(text)


def load_stochastic(path, tol: float = DEFAULT_TOL) -> StochasticMatrix:
    """Read and validate a stochastic matrix from either format."""
    return validate_stochastic(load_matrix(path), tol)
