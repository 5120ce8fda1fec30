"""Reduction of monotone matrices to lower-order stochastic matrices.

For an n x n monotone matrix M, each irreducible diagonal block B of the
Frobenius normal form of D(M) with Perron data (r, x), r > 0, turns into
the stochastic matrix

    S = (1/r) diag(x)^-1 B diag(x),

whose spectrum is the block spectrum divided by r.  Since r = lambda2 <= 1
for the top block, |mu_i| >= |lambda_{i+1}| for the mapped eigenvalues,
which is what places the nontrivial spectrum of a 4 x 4 monotone matrix
inside Theta_3.  Blocks with r ~ 0 (1 x 1 zero diagonal blocks) contribute
the eigenvalue 0 directly and are reported as degenerate.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .dominance import dominance_of
from .errors import StochasticityFailure, UnsupportedN
from .matrixcore import DEFAULT_TOL, MonotoneMatrix, StochasticMatrix
from .regions import RegionVerdict, theta_member
from .spectra import (
    NormalForm,
    frobenius_normal_form,
    perron,
    spectrum_of_dominance,
    spectrum_of_stochastic,
)

__all__ = ["ReducedBlock", "DegenerateBlock", "ReductionResult", "reduce", "check_containment"]

ROW_SUM_TOL = 1e-10


def _match_spectra(lam, mu, r):
    """Reorder ``mu`` so that mu[i] * r is the closest candidate to lam[i].

    The two spectra come from independent engines; sorting alone can swap
    members of a conjugate pair whose real parts differ only in rounding.
    Greedy nearest matching keeps the pairing honest without hiding genuine
    disagreement (a bad engine still produces a large matched distance).
    """
    remaining = list(mu)
    matched = []
    for z in lam:
        j = min(range(len(remaining)), key=lambda i: abs(remaining[i] * r - z))
        matched.append(remaining.pop(j))
    return tuple(matched)


@dataclass(frozen=True)
class ReducedBlock:
    """One irreducible block with positive Perron root and its similarity."""

    members: np.ndarray  # original dominance indices of the block
    r: float
    x: np.ndarray
    S: StochasticMatrix
    lam: tuple[complex, ...]  # block spectrum of D(M), sorted
    mu: tuple[complex, ...]  # spectrum of S, independently computed, matched to lam


@dataclass(frozen=True)
class DegenerateBlock:
    """A block whose Perron root vanishes; contributes eigenvalue 0."""

    members: np.ndarray
    r: float


@dataclass(frozen=True)
class ReductionResult:
    n: int
    normal_form: NormalForm
    blocks: tuple[ReducedBlock, ...]
    degenerate: tuple[DegenerateBlock, ...]

    def lambda_map(self) -> list[tuple[complex, complex]]:
        """Pairs (lambda, mu = lambda / r) across all non-degenerate blocks."""
        out = []
        for blk in self.blocks:
            out.extend(zip(blk.lam, blk.mu))
        return out

    def nontrivial_spectrum(self) -> tuple[complex, ...]:
        """Multiset union of block spectra and degenerate zeros."""
        values: list[complex] = []
        for blk in self.blocks:
            values.extend(blk.lam)
        values.extend(0.0 + 0.0j for blk in self.degenerate for _ in blk.members)
        return tuple(sorted(values, key=lambda z: (-z.real, -z.imag)))

    def to_json(self) -> str:
        def cplx(z):
            return {"re": z.real, "im": z.imag}

        doc = {
            "n": self.n,
            "perm": [int(i) for i in self.normal_form.perm],
            "blocks": [
                {
                    "members": [int(i) for i in blk.members],
                    "r": blk.r,
                    "x": [float(v) for v in blk.x],
                    "S": blk.S.entries.tolist(),
                    "lambda": [cplx(z) for z in blk.lam],
                    "mu": [cplx(z) for z in blk.mu],
                }
                for blk in self.blocks
            ],
            "degenerate": [
                {"members": [int(i) for i in blk.members], "r": blk.r}
                for blk in self.degenerate
            ],
            "lambda_map": [[cplx(l), cplx(m)] for l, m in self.lambda_map()],
        }
        return json.dumps(doc)


def reduce(M: MonotoneMatrix, tol: float = DEFAULT_TOL) -> ReductionResult:
    """Block-wise Perron similarity of the dominance matrix of ``M``.

    The paper's argument assumes an irreducible dominance matrix; sampled
    matrices are frequently reducible, so the block decomposition is made
    explicit and each block is reduced with its own Perron root.
    """
    D = dominance_of(M)
    A = D.entries
    nf = frobenius_normal_form(A, tol)
    blocks: list[ReducedBlock] = []
    degenerate: list[DegenerateBlock] = []
    for i in range(len(nf.blocks)):
        members = nf.block_members(i)
        sub = A[np.ix_(members, members)]
        pd = perron(sub, tol)
        if pd.zero or pd.r <= tol:
            degenerate.append(DegenerateBlock(members, pd.r))
            continue
        S_entries = sub * pd.x[None, :] / pd.x[:, None] / pd.r
        row_err = np.abs(S_entries.sum(axis=1) - 1.0)
        if row_err.max() > ROW_SUM_TOL:
            raise StochasticityFailure(int(row_err.argmax()), float(row_err.max()))
        S = StochasticMatrix(S_entries, ROW_SUM_TOL)
        lam = spectrum_of_dominance(sub).values
        mu = _match_spectra(lam, spectrum_of_stochastic(S).values, pd.r)
        blocks.append(ReducedBlock(members, pd.r, pd.x, S, lam, mu))
    return ReductionResult(M.n, nf, tuple(blocks), tuple(degenerate))


def check_containment(M: MonotoneMatrix, tol: float = 1e-8) -> list[tuple[complex, RegionVerdict]]:
    """Theta_3 verdicts for every nontrivial eigenvalue of a 4 x 4 monotone matrix."""
    if M.n != 4:
        raise UnsupportedN("containment check needs n=4 (no Theta_n predicate beyond n=3)")
    return [(z, theta_member(z, 3, tol)) for z in spectrum_of_stochastic(M).nontrivial()]
