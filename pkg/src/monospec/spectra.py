"""Eigenvalue engines for small dense stochastic and dominance matrices.

Two independent routes are provided on purpose.  The 2 x 2 dominance
quadratic has closed-form roots

    lambda = ((a + d) +/- sqrt((a - d)^2 + 4 b c)) / 2,

real whenever b, c >= 0.  General small matrices go through a polynomial
pipeline: characteristic polynomial by the Faddeev-LeVerrier recurrence,
exact deflation of the trivial stochastic root 1 by synthetic division,
simultaneous Durand-Kerner iteration for the remaining roots, and a few
Newton polishing steps on the undeflated polynomial.  Cross-checking the
routes against each other (and against the dominance identity
sigma(M) = sigma(D(M)) u {1}) is what the test-suite leans on.

Conditioning envelope: polynomial coefficients destroy the accuracy of
clustered eigenvalues, so a k-fold near-multiple root is resolved only to
roughly eps^(1/k) (about 1e-3 for a quintuple cluster).  Exact structural
multiplicities (the trivial root 1, structural zeros) are factored out
exactly and do not suffer this; the per-value residual bound
|p(lambda)| < 1e-8 (1 + |lambda|)^n holds regardless.
"""

from __future__ import annotations

from dataclasses import dataclass
from heapq import heappush, heappop

import numpy as np

from .errors import ConvergenceError, DimensionError, DomainError, PerronFailure
from .matrixcore import DEFAULT_TOL, StochasticMatrix, _as_square

__all__ = [
    "Spectrum",
    "EigenPair",
    "PerronData",
    "NormalForm",
    "charpoly",
    "eigenpair_3x3",
    "spectrum_of_stochastic",
    "spectrum_of_dominance",
    "spectrum3_batch",
    "perron",
    "frobenius_normal_form",
]

MAX_STOCHASTIC_N = 12
MAX_DOMINANCE_M = 11

# Durand-Kerner settings: residual target and sweep budget are part of the
# documented contract; the irrational angle offset breaks root symmetry.
DK_RESIDUAL = 1e-10
DK_MAX_SWEEPS = 500
DK_ANGLE_OFFSET = 2.0 ** -0.5
NEWTON_STEPS = 3


def _sort_key(z: complex):
    return (-z.real, -z.imag)


@dataclass(frozen=True)
class Spectrum:
    """Multiset of eigenvalues, ordered by descending (real, imaginary) part.

    ``trivial_included`` records whether the guaranteed eigenvalue 1 of a
    stochastic matrix is present in ``values``.
    """

    values: tuple[complex, ...]
    trivial_included: bool

    def nontrivial(self) -> tuple[complex, ...]:
        """Values with one exact copy of the trivial eigenvalue removed."""
        if not self.trivial_included:
            return self.values
        out = list(self.values)
        out.remove(1.0 + 0.0j)
        return tuple(out)

    def to_json_dict(self) -> dict:
        return {
            "values": [{"re": z.real, "im": z.imag} for z in self.values],
            "trivial_included": self.trivial_included,
        }


@dataclass(frozen=True)
class EigenPair:
    """Real nontrivial eigenvalues of a 3 x 3 monotone matrix, lambda2 >= lambda3.

    Spectral engines always produce the sorted order; the region predicates
    accept arbitrary pairs and report the ordering constraint themselves.
    """

    lambda2: float
    lambda3: float

    def as_tuple(self) -> tuple[float, float]:
        return (self.lambda2, self.lambda3)


@dataclass(frozen=True)
class PerronData:
    """Maximal eigenvalue and sum-1-normalized positive eigenvector.

    ``zero`` flags the degenerate 1 x 1 zero block, where r = 0 and the
    eigenvector is conventionally (1).
    """

    r: float
    x: np.ndarray
    zero: bool = False


@dataclass(frozen=True)
class NormalForm:
    """Permutation to block upper triangular form with irreducible blocks.

    ``perm[k]`` is the original index placed at permuted position ``k``;
    ``blocks`` are (start, stop) ranges into the permuted ordering, listed
    in the order they appear down the diagonal.
    """

    perm: np.ndarray
    blocks: tuple[tuple[int, int], ...]

    def permuted(self, A) -> np.ndarray:
        A = np.asarray(A, dtype=float)
        return A[np.ix_(self.perm, self.perm)]

    def block_members(self, i: int) -> np.ndarray:
        start, stop = self.blocks[i]
        return self.perm[start:stop]


# ---------------------------------------------------------------------------
# Polynomial machinery.
# ---------------------------------------------------------------------------

def charpoly(A) -> np.ndarray:
    """Monic characteristic polynomial of a small dense matrix.

    Returns coefficients [1, c1, ..., cm] of det(lambda I - A) in descending
    powers, computed by the Faddeev-LeVerrier recurrence
    M_k = A (M_{k-1} + c_{k-1} I), c_k = -tr(M_k) / k.
    """
    A = np.asarray(A, dtype=float)
    m = A.shape[0]
    coeffs = np.empty(m + 1)
    coeffs[0] = 1.0
    Mk = np.zeros_like(A)
    for k in range(1, m + 1):
        Mk = A @ Mk + coeffs[k - 1] * A
        coeffs[k] = -np.trace(Mk) / k
    return coeffs


def poly_eval(coeffs, z):
    """Horner evaluation; works on scalars and arrays, real or complex."""
    result = np.full_like(np.asarray(z), coeffs[0], dtype=complex) if np.ndim(z) else coeffs[0]
    for c in coeffs[1:]:
        result = result * z + c
    return result


def poly_deriv(coeffs) -> np.ndarray:
    deg = len(coeffs) - 1
    if deg == 0:
        return np.zeros(1)
    return np.asarray(coeffs[:-1]) * np.arange(deg, 0, -1)


def deflate(coeffs, root: float) -> tuple[np.ndarray, float]:
    """Synthetic division by (lambda - root); returns (quotient, remainder)."""
    out = np.empty(len(coeffs) - 1)
    acc = coeffs[0]
    for i in range(1, len(coeffs)):
        out[i - 1] = acc
        acc = coeffs[i] + root * acc
    return out, float(acc)


def durand_kerner(coeffs) -> np.ndarray:
    """Simultaneous root iteration for a monic polynomial.

    Roots are seeded on a circle of radius max(1, 1 + max|coeff|) with an
    irrational angle offset; sweeps are Jacobi-style (all roots updated at
    once) and run until the absolute residual max |p(z_i)| drops below the
    target.
    """
    coeffs = np.asarray(coeffs, dtype=float)
    deg = len(coeffs) - 1
    if deg <= 0:
        return np.empty(0, dtype=complex)
    radius = max(1.0, 1.0 + float(np.abs(coeffs[1:]).max()))
    angles = 2.0 * np.pi * np.arange(deg) / deg + DK_ANGLE_OFFSET
    z = radius * np.exp(1j * angles)
    # The absolute residual target alone is weak near tiny roots (the
    # polynomial's natural scale there is tiny), so once it is met keep
    # sweeping while the corrections still shrink; simple roots finish
    # quadratically, clusters exit through the stagnation counter.
    best_step = np.inf
    stagnant = 0
    for _ in range(DK_MAX_SWEEPS):
        pz = poly_eval(coeffs, z)
        res = float(np.abs(pz).max())
        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, 1.0)
        den = diff.prod(axis=1)
        den[den == 0.0] = np.finfo(float).tiny
        w = pz / den
        z = z - w
        if res < DK_RESIDUAL:
            step = float((np.abs(w) / (1.0 + np.abs(z))).max())
            if step < 1e-14 or stagnant >= 8:
                return z
            stagnant = stagnant + 1 if step >= 0.5 * best_step else 0
            best_step = min(best_step, step)
    if np.abs(poly_eval(coeffs, z)).max() < DK_RESIDUAL:
        return z
    raise ConvergenceError(
        f"Durand-Kerner residual {np.abs(poly_eval(coeffs, z)).max():.3e} "
        f"after {DK_MAX_SWEEPS} sweeps (degree {deg})"
    )


def _newton_polish(coeffs, roots: np.ndarray) -> np.ndarray:
    """A few Newton steps on the undeflated polynomial, kept only if the
    residual improves (multiple roots are left where Durand-Kerner put them)."""
    dcoeffs = poly_deriv(coeffs)
    z = roots.copy()
    for _ in range(NEWTON_STEPS):
        pz = poly_eval(coeffs, z)
        dpz = poly_eval(dcoeffs, z)
        safe = np.abs(dpz) > np.finfo(float).tiny
        step = np.where(safe, pz / np.where(safe, dpz, 1.0), 0.0)
        candidate = z - step
        better = np.abs(poly_eval(coeffs, candidate)) <= np.abs(pz)
        z = np.where(better, candidate, z)
    return z


def _strip_zero_roots(coeffs) -> tuple[np.ndarray, int]:
    """Factor out exactly-zero trailing coefficients as exact zero roots."""
    coeffs = np.asarray(coeffs, dtype=float)
    nzeros = 0
    while len(coeffs) > 1 and coeffs[-1] == 0.0:
        coeffs = coeffs[:-1]
        nzeros += 1
    return coeffs, nzeros


def _roots_pipeline(full_coeffs, work_coeffs) -> list[complex]:
    """Durand-Kerner on ``work_coeffs`` polished against ``full_coeffs``."""
    stripped, nzeros = _strip_zero_roots(work_coeffs)
    roots = durand_kerner(stripped)
    if len(roots):
        roots = _newton_polish(full_coeffs, roots)
    return [0.0 + 0.0j] * nzeros + list(roots)


# ---------------------------------------------------------------------------
# Spectrum operations.
# ---------------------------------------------------------------------------

def eigenpair_3x3(D, tol: float = DEFAULT_TOL) -> EigenPair:
    """Closed-form nontrivial eigenvalues from a 2 x 2 dominance matrix."""
    arr = D.entries if hasattr(D, "entries") else np.asarray(D, dtype=float)
    if arr.shape != (2, 2):
        raise DimensionError(f"expected a 2x2 dominance matrix, got {arr.shape}")
    a, b, c, d = (float(x) for x in arr.ravel())
    disc = (a - d) ** 2 + 4.0 * b * c
    if disc < -tol:
        raise DomainError(f"negative discriminant {disc:.3e}")
    s = np.sqrt(max(disc, 0.0))
    return EigenPair((a + d + s) / 2.0, (a + d - s) / 2.0)


def spectrum_of_stochastic(S: StochasticMatrix) -> Spectrum:
    """Full spectrum of a stochastic matrix with the trivial root deflated exactly.

    The root 1 is removed by synthetic division before iteration (repeatedly,
    while it remains a root to working precision) and reinserted exactly, so
    identity-like matrices come out with exact eigenvalue 1.
    """
    entries = S.entries if isinstance(S, StochasticMatrix) else _as_square(S)
    n = entries.shape[0]
    if n > MAX_STOCHASTIC_N:
        raise DimensionError(f"polynomial pipeline is limited to n<={MAX_STOCHASTIC_N}")
    full = charpoly(entries)
    work, _ = deflate(full, 1.0)  # eigenvalue 1 is structural, remainder discarded
    ones = 1
    while len(work) > 1:
        scale = max(1.0, float(np.abs(work).sum()))
        if abs(poly_eval(work, 1.0)) > 1e-10 * scale:
            break
        work, _ = deflate(work, 1.0)
        ones += 1
    values = [1.0 + 0.0j] * ones + _roots_pipeline(full, work)
    return Spectrum(tuple(sorted(values, key=_sort_key)), trivial_included=True)


def spectrum_of_dominance(D) -> Spectrum:
    """Spectrum of a dominance(-side) non-negative matrix; no trivial root."""
    entries = D.entries if hasattr(D, "entries") else _as_square(D)
    if entries.shape[0] > MAX_DOMINANCE_M:
        raise DimensionError(f"polynomial pipeline is limited to m<={MAX_DOMINANCE_M}")
    full = charpoly(entries)
    values = _roots_pipeline(full, full)
    return Spectrum(tuple(sorted(values, key=_sort_key)), trivial_included=False)


def spectrum3_batch(stacks: np.ndarray) -> np.ndarray:
    """Vectorized 3 x 3 stochastic spectra for experiment drivers.

    Same pipeline as :func:`spectrum_of_stochastic` (cubic Faddeev-LeVerrier
    coefficients, one exact deflation of the root 1, Jacobi Durand-Kerner on
    the quadratic, Newton polish on the cubic), batched over the leading
    axis.  Returns an (N, 3) complex array, each row sorted by descending
    (real, imaginary) part with the exact 1 in column 0.

    Generic sampled matrices only: the scalar engine's repeated deflation
    and zero-stripping refinements are deliberately absent here.
    """
    A = np.asarray(stacks, dtype=float)
    if A.ndim != 3 or A.shape[1:] != (3, 3):
        raise DimensionError(f"expected an (N, 3, 3) stack, got {A.shape}")
    tr1 = np.trace(A, axis1=1, axis2=2)
    A2 = A @ A
    tr2 = np.trace(A2, axis1=1, axis2=2)
    tr3 = np.trace(A2 @ A, axis1=1, axis2=2)
    c1 = -tr1
    c2 = (tr1 * tr1 - tr2) / 2.0
    c3 = -(tr3 + c1 * tr2 + c2 * tr1) / 3.0
    # synthetic division by (lambda - 1)
    b1 = c1 + 1.0
    b2 = c2 + b1

    radius = np.maximum(1.0, 1.0 + np.maximum(np.abs(b1), np.abs(b2)))
    angles = np.pi * np.arange(2) + DK_ANGLE_OFFSET
    z = radius[:, None] * np.exp(1j * angles)[None, :]
    best_step = np.inf
    stagnant = 0
    for _ in range(DK_MAX_SWEEPS):
        pz = (z + b1[:, None]) * z + b2[:, None]
        res = float(np.abs(pz).max())
        den = z[:, 0] - z[:, 1]
        den = np.where(den == 0.0, np.finfo(float).tiny, den)
        w = pz / np.stack([den, -den], axis=1)
        z = z - w
        if res < DK_RESIDUAL:
            step = float((np.abs(w) / (1.0 + np.abs(z))).max())
            if step < 1e-14 or stagnant >= 8:
                break
            stagnant = stagnant + 1 if step >= 0.5 * best_step else 0
            best_step = min(best_step, step)
    else:
        pz = (z + b1[:, None]) * z + b2[:, None]
        if np.abs(pz).max() >= DK_RESIDUAL:
            raise ConvergenceError("batched Durand-Kerner failed to converge")

    def cubic(w):
        return ((w + c1[:, None]) * w + c2[:, None]) * w + c3[:, None]

    dpc = lambda w: (3.0 * w + 2.0 * c1[:, None]) * w + c2[:, None]
    for _ in range(NEWTON_STEPS):
        pz = cubic(z)
        dpz = dpc(z)
        safe = np.abs(dpz) > np.finfo(float).tiny
        candidate = z - np.where(safe, pz / np.where(safe, dpz, 1.0), 0.0)
        z = np.where(np.abs(cubic(candidate)) <= np.abs(pz), candidate, z)

    swap = (z[:, 1].real > z[:, 0].real) | (
        (z[:, 1].real == z[:, 0].real) & (z[:, 1].imag > z[:, 0].imag)
    )
    z[swap] = z[swap][:, ::-1]
    out = np.empty((A.shape[0], 3), dtype=complex)
    out[:, 0] = 1.0
    out[:, 1:] = z
    return out


# ---------------------------------------------------------------------------
# Perron data and normal form.
# ---------------------------------------------------------------------------

def perron(
    A,
    tol: float = DEFAULT_TOL,
    residual: float = 1e-12,
    max_iter: int = 5000,
) -> PerronData:
    """Perron root and sum-1-normalized eigenvector of a non-negative matrix.

    Power iteration runs on (A + I)/2, which is primitive whenever A is
    irreducible, so periodic patterns (permutation-like blocks) converge
    too; the root is recovered from the limit vector as r = sum(A x) when
    sum(x) = 1.  Two refinements keep the sweep count flat across inputs:
    the iteration matrix is applied in power-of-two strides, and whenever
    progress stalls the stride is squared (renormalized to unit maximum),
    which squares the convergence factor and pushes through arbitrarily
    small spectral gaps.  Iteration continues past the absolute residual
    target toward a component-relative one so downstream diagonal
    similarities yield accurate row sums.
    """
    A = np.asarray(A, dtype=float)
    m = A.shape[0]
    if m == 1:
        r = float(A[0, 0])
        return PerronData(r, np.ones(1), zero=r <= tol)
    B = (A + np.eye(m)) / 2.0
    for _ in range(4):
        B = B @ B
        B /= max(B.max(), np.finfo(float).tiny)
    x = np.full(m, 1.0 / m)
    soft_cap = max_iter // 2
    squarings = 4
    resid = np.inf
    for it in range(1, max_iter + 1):
        x = B @ x
        x /= x.sum()
        y = A @ x
        r = float(y.sum())
        resid = float(np.abs(y - r * x).max())
        if resid < residual:
            rel = float(np.abs(y - r * x).max() / max(np.abs(r * x).min(), np.finfo(float).tiny))
            if rel < 1e-12 or it >= soft_cap:
                return PerronData(r, x, zero=r <= tol)
        elif it % 64 == 0 and squarings < 56:
            B = B @ B
            B /= max(B.max(), np.finfo(float).tiny)
            squarings += 1
    if resid < residual:
        return PerronData(r, x, zero=r <= tol)
    raise PerronFailure(f"power iteration residual {resid:.3e} after {max_iter} sweeps")


def frobenius_normal_form(A, tol: float = DEFAULT_TOL) -> NormalForm:
    """Block upper triangular permutation with irreducible diagonal blocks.

    Strongly connected components of the positivity digraph
    {(i, j) : a_ij > tol} are computed via the boolean reachability closure
    (the matrices here are desk scale), then ordered topologically so edges
    point into later blocks; among incomparable components the one with the
    smallest original index goes first, making the result deterministic.
    """
    A = np.asarray(A, dtype=float)
    m = A.shape[0]
    adj = A > tol
    reach = adj | np.eye(m, dtype=bool)
    for _ in range(max(1, int(np.ceil(np.log2(m))) + 1)):
        reach = reach | (reach.astype(np.uint8) @ reach.astype(np.uint8) > 0)
    mutual = reach & reach.T

    labels = np.full(m, -1, dtype=int)
    comps: list[np.ndarray] = []
    for i in range(m):
        if labels[i] < 0:
            members = np.flatnonzero(mutual[i])
            labels[members] = len(comps)
            comps.append(members)

    ncomp = len(comps)
    indeg = np.zeros(ncomp, dtype=int)
    out_edges: list[set[int]] = [set() for _ in range(ncomp)]
    for i, j in zip(*np.nonzero(adj)):
        ci, cj = labels[i], labels[j]
        if ci != cj and cj not in out_edges[ci]:
            out_edges[ci].add(cj)
            indeg[cj] += 1

    heap: list[tuple[int, int]] = []
    for ci in range(ncomp):
        if indeg[ci] == 0:
            heappush(heap, (int(comps[ci][0]), ci))
    order = []
    while heap:
        _, ci = heappop(heap)
        order.append(ci)
        for cj in out_edges[ci]:
            indeg[cj] -= 1
            if indeg[cj] == 0:
                heappush(heap, (int(comps[cj][0]), cj))

    perm = np.concatenate([comps[ci] for ci in order]) if order else np.empty(0, dtype=int)
    blocks = []
    pos = 0
    for ci in order:
        size = len(comps[ci])
        blocks.append((pos, pos + size))
        pos += size
    return NormalForm(perm, tuple(blocks))
