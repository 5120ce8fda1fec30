"""Dominance-matrix transform, its structural constraints, and the inverse lift.

The dominance matrix D(M) of an n x n monotone matrix M is the
(n-1) x (n-1) non-negative matrix of consecutive prefix-sum differences,

    D(M)[k, l] = sum_{j <= l} m[k, j] - sum_{j <= l} m[k+1, j],

and it carries exactly the nontrivial spectrum of M.  For n = 3 the entries
(a, b, c, d) obey eight inequalities (column/anti-diagonal sums <= 1,
column/anti-diagonal products <= 1/4, trace >= 0, det >= -1/4), and a given
non-negative 2 x 2 matrix arises as some D(M) exactly when corner values
(m11, m33) in [0, 1] satisfy a five-inequality system; the lift below builds
the witnessing matrix explicitly.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionError, NegativeEntry, WitnessInvalid
from .matrixcore import DEFAULT_TOL, MonotoneMatrix, _as_square, validate_monotone

__all__ = [
    "DominanceMatrix",
    "LiftWitness",
    "Infeasible",
    "ConstraintCheck",
    "dominance_of",
    "check_lemma1",
    "check_general_properties",
    "check_liftable",
    "lift",
]


@dataclass(frozen=True)
class DominanceMatrix:
    """Non-negative square matrix holding a monotone matrix's nontrivial spectrum.

    The container validates non-negativity only (rounding residues are
    clamped to 0); the structural inequalities are evaluated by the check
    operations so that candidate matrices can be inspected for violations.
    """

    entries: np.ndarray
    tol: float = DEFAULT_TOL

    def __post_init__(self):
        arr = _as_square(self.entries)
        if arr.min() < -self.tol:
            i, j = np.unravel_index(int(arr.argmin()), arr.shape)
            raise NegativeEntry(f"entry ({i}, {j}) = {arr[i, j]:.3e} is negative")
        arr = np.where(arr < 0.0, 0.0, arr)
        arr.setflags(write=False)
        object.__setattr__(self, "entries", arr)

    @property
    def m(self) -> int:
        return self.entries.shape[0]

    def abcd(self) -> tuple[float, float, float, float]:
        """Row-major entries of a 2 x 2 dominance matrix."""
        if self.m != 2:
            raise DimensionError(f"abcd() requires m=2, got m={self.m}")
        return tuple(float(x) for x in self.entries.ravel())

    def __eq__(self, other):
        if isinstance(other, DominanceMatrix):
            return np.array_equal(self.entries, other.entries)
        return NotImplemented

    def __hash__(self):
        return hash(self.entries.tobytes())


@dataclass(frozen=True)
class LiftWitness:
    """Corner values (m11, m33) certifying that a 2 x 2 matrix is liftable."""

    m11: float
    m33: float


@dataclass(frozen=True)
class Infeasible:
    """Negative liftability answer with the violated bound and its excess."""

    violated: str
    excess: float


@dataclass(frozen=True)
class ConstraintCheck:
    """One named inequality with its slack (negative slack = violated)."""

    name: str
    satisfied: bool
    slack: float


def _coerce_2x2(D, tol: float | None):
    if isinstance(D, DominanceMatrix):
        arr, t = D.entries, D.tol
    else:
        arr, t = _as_square(D), DEFAULT_TOL
    if tol is not None:
        t = tol
    if arr.shape != (2, 2):
        raise DimensionError(f"expected a 2x2 matrix, got shape {arr.shape}")
    if arr.min() < -t:
        raise NegativeEntry(f"entry {arr.min():.3e} is negative")
    a, b, c, d = (float(x) for x in np.where(arr < 0.0, 0.0, arr).ravel())
    return a, b, c, d, t


def dominance_of(M: MonotoneMatrix) -> DominanceMatrix:
    """Consecutive prefix-sum differences of a monotone matrix.

    Non-negative by monotonicity; negative rounding residues are clamped.
    """
    if M.n < 2:
        raise DimensionError("dominance matrix requires n >= 2")
    K = np.cumsum(M.entries, axis=1)[:, :-1]
    D = K[:-1, :] - K[1:, :]
    return DominanceMatrix(np.where(D < 0.0, 0.0, D), M.tol)


def check_lemma1(D, tol: float | None = None) -> list[ConstraintCheck]:
    """Evaluate the eight structural constraints of a 2 x 2 dominance matrix.

    Reporting operation: every constraint is returned with its slack, so
    violations of candidate matrices can be inspected rather than raised.
    """
    a, b, c, d, t = _coerce_2x2(D, tol)
    slacks = [
        ("a+c<=1", 1.0 - (a + c)),
        ("b+c<=1", 1.0 - (b + c)),
        ("b+d<=1", 1.0 - (b + d)),
        ("ac<=1/4", 0.25 - a * c),
        ("bc<=1/4", 0.25 - b * c),
        ("bd<=1/4", 0.25 - b * d),
        ("trace>=0", a + d),
        ("det>=-1/4", a * d - b * c + 0.25),
    ]
    return [ConstraintCheck(name, s >= -t, s) for name, s in slacks]


def check_general_properties(D: DominanceMatrix, tol: float | None = None) -> list[ConstraintCheck]:
    """Necessary conditions valid for every dominance matrix of any order:
    column sums at most 1 and non-negative trace."""
    arr = D.entries if isinstance(D, DominanceMatrix) else _as_square(D)
    t = tol if tol is not None else getattr(D, "tol", DEFAULT_TOL)
    out = []
    for j, s in enumerate(arr.sum(axis=0)):
        slack = 1.0 - float(s)
        out.append(ConstraintCheck(f"colsum[{j}]<=1", slack >= -t, slack))
    tr = float(np.trace(arr))
    out.append(ConstraintCheck("trace>=0", tr >= -t, tr))
    return out


def _witness_system(a, b, c, d, m11, m33):
    """Slacks of the five lifting inequalities plus the [0, 1] box."""
    return [
        ("a+c<=m11", m11 - (a + c)),
        ("b+d<=m33", m33 - (b + d)),
        ("m11+m33<=1+b+d", 1.0 + b + d - (m11 + m33)),
        ("m11+m33<=1+a+d", 1.0 + a + d - (m11 + m33)),
        ("m11+m33<=1+a+c", 1.0 + a + c - (m11 + m33)),
        ("m11<=1", 1.0 - m11),
        ("m33<=1", 1.0 - m33),
        ("m11>=0", m11),
        ("m33>=0", m33),
    ]


def check_liftable(D, tol: float | None = None) -> LiftWitness | Infeasible:
    """Decide whether a non-negative 2 x 2 matrix arises as some D(M).

    Uses the minimal witness (m11, m33) = (a+c, b+d): it minimizes the left
    side of the three joint upper bounds, so feasibility of any witness is
    equivalent to feasibility of the minimal one (given a+c <= 1 and
    b+d <= 1, which are themselves necessary).
    """
    a, b, c, d, t = _coerce_2x2(D, tol)
    m11, m33 = a + c, b + d
    worst_name, worst = None, np.inf
    for name, slack in _witness_system(a, b, c, d, m11, m33):
        if slack < worst:
            worst_name, worst = name, slack
    if worst < -t:
        return Infeasible(worst_name, -worst)
    return LiftWitness(m11, m33)


def lift(D, witness, tol: float | None = None) -> MonotoneMatrix:
    """Construct the explicit 3 x 3 monotone matrix with dominance matrix D.

    ``witness`` is a :class:`LiftWitness` or an (m11, m33) pair; exposing it
    lets callers reproduce specific matrices (different witnesses give
    different monotone matrices with the same dominance matrix).
    """
    a, b, c, d, t = _coerce_2x2(D, tol)
    if isinstance(witness, LiftWitness):
        m11, m33 = witness.m11, witness.m33
    else:
        m11, m33 = (float(x) for x in witness)
    for name, slack in _witness_system(a, b, c, d, m11, m33):
        if slack < -t:
            raise WitnessInvalid(f"witness ({m11}, {m33}) violates {name} by {-slack:.3e}")
    rows = np.array(
        [
            [m11, 1.0 - (m11 + m33 - b - d), m33 - b - d],
            [m11 - a, 1.0 - (m11 - a + m33 - d), m33 - d],
            [m11 - a - c, 1.0 - (m11 - a - c + m33), m33],
        ]
    )
    # Corner cases sit exactly on zero; clear the rounding residue.
    rows[np.abs(rows) < t] = 0.0
    M = validate_monotone(rows, t)
    back = dominance_of(M).entries
    target = np.array([[a, b], [c, d]])
    err = float(np.abs(back - target).max())
    if err > max(t, 1e-10):
        raise WitnessInvalid(f"lift round-trip drifted by {err:.3e}")
    return M
