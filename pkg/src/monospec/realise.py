"""Constructors of monotone matrices with prescribed eigenvalues.

Two families cover Xi_3 = [-1/2, 1] pointwise:

    type1 (alpha in [0, 1]):   rows (0, 1-a, a), (0, 1-a, a), (0, 0, 1)
                               spectrum {1, 1-a, 0}
    type2 (alpha in [0, 1/2]): rows (1/2-a, 1/2+a, 0), (1/2-a, 0, 1/2+a),
                               (0, 1/2-a, 1/2+a)
                               spectrum {1, +sqrt(1/4-a^2), -sqrt(1/4-a^2)}

Five further families trace the boundary curves C1..C5 of the pair region
xi3.  Interior pairs are realised by star-convex scaling: a convex
combination of a boundary realiser with an equal-rows matrix scales the
dominance matrix (hence both nontrivial eigenvalues) linearly toward the
origin.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .dominance import LiftWitness, dominance_of, lift
from .errors import (
    AlphaOutOfRange,
    InternalBoundaryMismatch,
    NotOnCurve,
    OutOfRegion,
)
from .matrixcore import (
    DEFAULT_TOL,
    MonotoneMatrix,
    convex_combine,
    stochastic_vector,
    validate_monotone,
)
from .regions import xi3_boundary, xi3_pair_member, xi_n_member
from .spectra import EigenPair, eigenpair_3x3

__all__ = [
    "FamilyId",
    "FAMILY_RANGES",
    "family_matrix",
    "realise_eigenvalue",
    "equal_rows_matrix",
    "realise_pair",
    "family_parameter_inverse",
]

FAMILY_RANGES = {
    "type1": (0.0, 1.0),
    "type2": (0.0, 0.5),
    "c1": (0.0, 1.0),
    "c2": (0.0, 0.5),
    "c3": (0.0, 1.0),
    "c4": (0.0, 0.5),
    "c5": (0.0, 0.5),
}


@dataclass(frozen=True)
class FamilyId:
    """A realising family name plus its parameter."""

    family: str
    alpha: float

    def __post_init__(self):
        fam = self.family.lower()
        if fam not in FAMILY_RANGES:
            raise AlphaOutOfRange(f"unknown family {self.family!r}")
        object.__setattr__(self, "family", fam)
        lo, hi = FAMILY_RANGES[fam]
        if not lo - DEFAULT_TOL <= self.alpha <= hi + DEFAULT_TOL:
            raise AlphaOutOfRange(
                f"alpha={self.alpha} outside [{lo}, {hi}] for family {fam}"
            )
        object.__setattr__(self, "alpha", float(min(max(self.alpha, lo), hi)))


def _family_rows(fam: str, a: float) -> np.ndarray:
    if fam == "type1":
        return np.array([[0.0, 1 - a, a], [0.0, 1 - a, a], [0.0, 0.0, 1.0]])
    if fam == "type2":
        return np.array(
            [
                [0.5 - a, 0.5 + a, 0.0],
                [0.5 - a, 0.0, 0.5 + a],
                [0.0, 0.5 - a, 0.5 + a],
            ]
        )
    if fam == "c1":
        hi, lo = (1 + 2 * a) / 3.0, (1 - a) / 3.0
        return np.array([[hi, lo, lo], [lo, hi, lo], [lo, lo, hi]])
    if fam == "c2":
        return np.array([[a, 1 - a, 0.0], [a, 1 - 2 * a, a], [0.0, 1 - a, a]])
    if fam == "c3":
        return np.array([[a, 1 - a, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]])
    if fam == "c4":
        return np.array([[1 - a, a, 0.0], [0.5, 0.0, 0.5], [0.0, 0.5, 0.5]])
    if fam == "c5":
        return np.array([[1 - a, a, 0.0], [1 - a, 0.0, a], [0.0, 0.0, 1.0]])
    raise AlphaOutOfRange(f"unknown family {fam!r}")


def family_matrix(f: FamilyId | tuple, alpha: float | None = None) -> MonotoneMatrix:
    """Exact realising matrix of a named family at parameter alpha."""
    if not isinstance(f, FamilyId):
        f = FamilyId(f, alpha) if alpha is not None else FamilyId(*f)
    return validate_monotone(_family_rows(f.family, f.alpha))


def realise_eigenvalue(lam: float, tol: float = DEFAULT_TOL) -> MonotoneMatrix:
    """A 3 x 3 monotone matrix having ``lam`` in its spectrum.

    Covers all of Xi_3: type1 with alpha = 1 - lam for lam >= 0, type2 with
    alpha = sqrt(1/4 - lam^2) for lam < 0.
    """
    lam = float(lam)
    verdict = xi_n_member(lam, 3, tol)
    if not verdict.member:
        raise OutOfRegion(f"lambda={lam} outside Xi_3: {verdict}")
    lam = min(max(lam, -0.5), 1.0)
    if lam >= 0.0:
        return family_matrix(FamilyId("type1", 1.0 - lam))
    return family_matrix(FamilyId("type2", np.sqrt(max(0.25 - lam * lam, 0.0))))


def equal_rows_matrix(v, tol: float = DEFAULT_TOL) -> MonotoneMatrix:
    """All rows equal to the stochastic vector ``v``: the star center.

    Its dominance matrix is identically zero and its spectrum is {1, 0, ...}.
    """
    row = stochastic_vector(v, tol)
    return validate_monotone(np.tile(row, (row.size, 1)), tol)


# Fixed scaling center for interior realisation (any stochastic vector works).
_STAR_CENTER = (0.0, 1.0, 0.0)


def realise_pair(p, tol: float = DEFAULT_TOL) -> MonotoneMatrix:
    """A 3 x 3 monotone matrix with nontrivial spectrum {lambda2, lambda3}.

    Non-negative pairs lift the diagonal dominance matrix directly (always
    feasible because lambda2 <= 1); pairs with lambda3 < 0 scale the
    boundary realiser on the same ray toward the equal-rows star center,
    which multiplies the dominance matrix (hence the pair) by t.
    """
    l2, l3 = (p.lambda2, p.lambda3) if isinstance(p, EigenPair) else (float(p[0]), float(p[1]))
    verdict = xi3_pair_member((l2, l3), tol)
    if not verdict.member:
        raise OutOfRegion(f"pair ({l2}, {l3}) outside xi3: {verdict}")

    if l2 <= tol and abs(l3) <= tol:
        return equal_rows_matrix(_STAR_CENTER, tol)
    if l3 >= -tol:
        D = np.diag([min(max(l2, 0.0), 1.0), min(max(l3, 0.0), 1.0)])
        return lift(D, LiftWitness(D[0, 0], D[1, 1]), tol)

    # membership guarantees l2 >= -l3 - tol > 0 here
    k = min(max(l3 / l2, -1.0), 0.0)
    boundary, curve = xi3_boundary(k)
    alpha = family_parameter_inverse(curve, boundary, tol=1e-9)
    M_b = family_matrix(FamilyId(curve.lower(), alpha))
    actual = eigenpair_3x3(dominance_of(M_b))
    drift = max(abs(actual.lambda2 - boundary.lambda2), abs(actual.lambda3 - boundary.lambda3))
    if drift > 1e-9:
        raise InternalBoundaryMismatch(
            f"{curve} family at alpha={alpha} realises {actual}, "
            f"boundary parameterization says {boundary} (drift {drift:.3e})"
        )
    t = min(l2 / boundary.lambda2, 1.0)
    combined = convex_combine(M_b, equal_rows_matrix(_STAR_CENTER, tol), t)
    M = validate_monotone(combined, tol)
    got = eigenpair_3x3(dominance_of(M))
    err = max(abs(got.lambda2 - l2), abs(got.lambda3 - l3))
    if err > 1e-8:
        raise InternalBoundaryMismatch(
            f"scaled realiser has pair {got}, requested ({l2}, {l3}), error {err:.3e}"
        )
    return M


def family_parameter_inverse(curve: str, p, tol: float = 1e-9) -> float:
    """Recover the family parameter from a pair lying on C2, C4 or C5.

    C2: alpha = lambda2 (eigenvalues are +/- alpha).
    C4: alpha = 1/2 - (lambda2 + lambda3) (the family trace is 1/2 - alpha).
    C5: alpha = 1 - (lambda2 + lambda3) (the family trace is 1 - alpha).
    """
    l2, l3 = (p.lambda2, p.lambda3) if isinstance(p, EigenPair) else (float(p[0]), float(p[1]))
    curve = curve.lower()
    if curve == "c2":
        residual = abs(l2 + l3)
        alpha = l2
    elif curve == "c4":
        residual = abs(l2 * l3 + 0.25)
        alpha = 0.5 - (l2 + l3)
    elif curve == "c5":
        residual = abs(l2 * l2 + l2 * l3 + l3 * l3 - l2 - l3)
        alpha = 1.0 - (l2 + l3)
    else:
        raise NotOnCurve(f"no parameter inverse for curve {curve!r}")
    if residual > tol:
        raise NotOnCurve(f"pair ({l2}, {l3}) misses {curve} by {residual:.3e}")
    lo, hi = FAMILY_RANGES[curve]
    if not lo - tol <= alpha <= hi + tol:
        raise NotOnCurve(f"pair ({l2}, {l3}) maps to alpha={alpha} outside {curve}'s range")
    return float(min(max(alpha, lo), hi))
