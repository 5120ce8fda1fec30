"""Eigenvalue-region membership predicates and boundary parameterizations.

Regions for monotone matrices: Xi_1 = {1}, Xi_2 = [0, 1], Xi_3 = [-1/2, 1],
and the pair region xi3 of attainable (lambda2, lambda3) with lambda2 >=
lambda3, bounded by five named curves:

    C1: lambda2 = lambda3                      (ordering side)
    C2: lambda2 + lambda3 = 0                  (trace bound)
    C3: lambda2 = 1                            (modulus bound)
    C4: lambda2 * lambda3 = -1/4               (determinant bound)
    C5: l2^2 + l2*l3 + l3^2 - l2 - l3 = 0      (trace/det link, active for
        lambda3 <= 0 and lambda2 >= (1 + sqrt 5)/4)

Reference regions for plain stochastic matrices: Theta_2 = [-1, 1],
Theta_3 = [-1, 1/2] u conv{1, e^(2i pi/3), e^(4i pi/3)}, and the real-pair
region of 3 x 3 stochastic matrices cut out by -1 <= l3 <= l2 <= 1 and
1 + l2 + l3 >= 0.

Verdicts report a min-slack margin: negative slack means violated, and the
first constraint (in the order above) attaining the minimum is named.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError, UnsupportedN
from .matrixcore import DEFAULT_TOL
from .spectra import EigenPair

__all__ = [
    "RegionVerdict",
    "Xi3PairRegion",
    "XI3_PAIR_REGION",
    "PHI_BOUND",
    "K_JUNCTION",
    "REGION_NAMES",
    "xi_n_member",
    "xi3_pair_member",
    "xi3_boundary",
    "theta_member",
    "stochastic3_real_pair_member",
]

# Largest lambda2 on the determinant branch C4; boundary curves switch from
# C4 to C5 at the ray slope K_JUNCTION.
PHI_BOUND = (1.0 + np.sqrt(5.0)) / 4.0
K_JUNCTION = -(3.0 - np.sqrt(5.0)) / 2.0

REGION_NAMES = ("xi1", "xi2", "xi3", "xi3pair", "theta2", "theta3", "s3realpair")


@dataclass(frozen=True)
class RegionVerdict:
    member: bool
    margin: float
    violated: str | None = None

    def __str__(self):
        if self.member:
            return f"member (margin {self.margin:.3e})"
        return f"not member, violated {self.violated} (margin {self.margin:.3e})"


@dataclass(frozen=True)
class Xi3PairRegion:
    """Constants of the pair-region boundary."""

    phi_bound: float
    k_junction: float
    curves: tuple[str, ...]


XI3_PAIR_REGION = Xi3PairRegion(PHI_BOUND, K_JUNCTION, ("C1", "C2", "C3", "C4", "C5"))


def _verdict(slacks: list[tuple[str, float]], tol: float) -> RegionVerdict:
    worst_name, worst = None, np.inf
    for name, s in slacks:
        if s < worst:
            worst_name, worst = name, s
    if worst >= -tol:
        return RegionVerdict(True, float(worst))
    return RegionVerdict(False, float(worst), worst_name)


def _pair(p) -> tuple[float, float]:
    if isinstance(p, EigenPair):
        return p.lambda2, p.lambda3
    l2, l3 = p
    return float(l2), float(l3)


def xi_n_member(lam: float, n: int, tol: float = DEFAULT_TOL) -> RegionVerdict:
    """Membership of a real value in Xi_n for n in {1, 2, 3}."""
    lam = float(lam)
    if n == 1:
        return _verdict([("lambda=1", -abs(lam - 1.0))], tol)
    if n == 2:
        return _verdict([("lambda>=0", lam), ("lambda<=1", 1.0 - lam)], tol)
    if n == 3:
        return _verdict([("lambda>=-1/2", lam + 0.5), ("lambda<=1", 1.0 - lam)], tol)
    raise UnsupportedN(
        f"Xi_{n} has no closed characterization here; use the reduction bounds for n>=4"
    )


def xi3_pair_member(p, tol: float = DEFAULT_TOL) -> RegionVerdict:
    """Membership of an ordered real pair in the region xi3.

    The C5 inequality is evaluated only inside its stated activation window
    (lambda3 <= 0 and lambda2 >= (1 + sqrt 5)/4, up to tol); elsewhere the
    other four constraints govern.
    """
    l2, l3 = _pair(p)
    slacks = [
        ("C1", l2 - l3),
        ("C2", l2 + l3),
        ("C3", 1.0 - l2),
        ("C4", l2 * l3 + 0.25),
    ]
    if l3 <= tol and l2 >= PHI_BOUND - tol:
        slacks.append(("C5", -(l2 * l2 + l2 * l3 + l3 * l3 - l2 - l3)))
    return _verdict(slacks, tol)


def xi3_boundary(k: float) -> tuple[EigenPair, str]:
    """Boundary point of xi3 on the ray {(s, k s) : s > 0}.

    For 0 <= k <= 1 the ray exits through C3 at (1, k).  For negative
    slopes the exit curve is C4 when -k >= (3 - sqrt 5)/2 (s = 1/(2 sqrt(-k)),
    reaching the C2 corner (1/2, -1/2) at k = -1) and C5 otherwise
    (s = (1 + k)/(1 + k + k^2)); the two formulas agree at the junction.
    """
    k = float(k)
    if not -1.0 <= k <= 1.0:
        raise DomainError(f"ray slope {k} outside [-1, 1]")
    if k >= 0.0:
        return EigenPair(1.0, k), "C3"
    if -k >= -K_JUNCTION:
        s = 1.0 / (2.0 * np.sqrt(-k))
        s = min(s, 1.0)  # k = -1 sits exactly on the C2 corner
        return EigenPair(s, k * s), "C4"
    s = (1.0 + k) / (1.0 + k + k * k)
    return EigenPair(s, k * s), "C5"


def theta_member(z, n: int, tol: float = DEFAULT_TOL) -> RegionVerdict:
    """Membership of a complex value in Theta_n for n in {2, 3}.

    Theta_3 is the union of the real segment [-1, 1/2] and the closed
    triangle with vertices 1, e^(2i pi/3), e^(4i pi/3); the segment's paper
    form is half-open at 1/2, but 1/2 also lies in the triangle, so closing
    it does not change the union.  The verdict keeps the better branch.
    """
    z = complex(z)
    if n == 2:
        return _verdict(
            [
                ("Re>=-1", z.real + 1.0),
                ("Re<=1", 1.0 - z.real),
                ("Im=0", -abs(z.imag)),
            ],
            tol,
        )
    if n != 3:
        raise UnsupportedN(f"Theta_{n} predicate not implemented (only n in {{2, 3}})")

    segment = _verdict(
        [
            ("segment Re>=-1", z.real + 1.0),
            ("segment Re<=1/2", 0.5 - z.real),
            ("segment Im=0", -abs(z.imag)),
        ],
        tol,
    )
    # counterclockwise triangle 1 -> e^(2i pi/3) -> e^(4i pi/3)
    verts = [1.0 + 0.0j, np.exp(2j * np.pi / 3.0), np.exp(4j * np.pi / 3.0)]
    slacks = []
    for i in range(3):
        a, b = verts[i], verts[(i + 1) % 3]
        edge = b - a
        cross = edge.real * (z.imag - a.imag) - edge.imag * (z.real - a.real)
        slacks.append((f"triangle edge {i + 1}", cross / abs(edge)))
    triangle = _verdict(slacks, tol)
    return segment if segment.margin >= triangle.margin else triangle


def stochastic3_real_pair_member(p, tol: float = DEFAULT_TOL) -> RegionVerdict:
    """Real-pair region of 3 x 3 stochastic matrices (trace inequality)."""
    l2, l3 = _pair(p)
    return _verdict(
        [
            ("lambda3>=-1", l3 + 1.0),
            ("lambda2>=lambda3", l2 - l3),
            ("lambda2<=1", 1.0 - l2),
            ("1+lambda2+lambda3>=0", 1.0 + l2 + l3),
        ],
        tol,
    )
