"""Seeded monotone-matrix sampling and Monte-Carlo experiment drivers.

Sampling builds the prefix-sum table row by row: the first row's partial
sums are sorted uniforms, and each later value K[i][l] is drawn uniformly
from [K[i][l-1], K[i-1][l]] (feasible because the table is non-decreasing
along rows and non-increasing down columns); differencing recovers the
entries.  The resulting distribution is NOT uniform over the monotone
polytope - the experiments need validity and spread, not uniformity, and
rejection sampling from the cube has vanishing acceptance already at n = 4.

Every random value is a keyed hash of (seed, sample index, slot), a
counter-based scheme in the splitmix64 style, so the sample multiset
depends only on (n, count, seed) and never on worker scheduling.
"""

from __future__ import annotations

import hashlib
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator

import numpy as np

from .dominance import check_general_properties, dominance_of
from .errors import UnknownExperiment
from .matrixcore import DEFAULT_TOL, MonotoneMatrix, matrix_to_text, validate_monotone
from .realise import FamilyId, family_matrix
from .reduction import reduce as reduce_matrix
from .regions import (
    K_JUNCTION,
    stochastic3_real_pair_member,
    theta_member,
    xi3_boundary,
    xi3_pair_member,
)
from .spectra import eigenpair_3x3, spectrum3_batch, spectrum_of_stochastic

__all__ = [
    "SampleConfig",
    "ExperimentRecord",
    "Dataset",
    "EXPERIMENT_NAMES",
    "sample_monotone",
    "sample_entries",
    "sample_records",
    "run_experiment",
]

BATCH = 1024

EXPERIMENT_NAMES = ("figure1", "figure2", "figure3", "lemma1", "reduction4")


@dataclass(frozen=True)
class SampleConfig:
    """Sampling request; identical (n, count, seed) gives identical samples."""

    n: int
    count: int
    seed: int = 0
    workers: int = 1

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if self.count < 0:
            raise ValueError("count must be >= 0")
        if self.workers < 1:
            raise ValueError("workers must be >= 1")


# ---------------------------------------------------------------------------
# Counter-based uniforms: splitmix64 finalizer over a keyed counter.
# ---------------------------------------------------------------------------

_GOLDEN = np.uint64(0x9E3779B97F4A7C15)
_MIX1 = np.uint64(0xBF58476D1CE4E5B9)
_MIX2 = np.uint64(0x94D049BB133111EB)


def _splitmix(z: np.ndarray) -> np.ndarray:
    z = (z ^ (z >> np.uint64(30))) * _MIX1
    z = (z ^ (z >> np.uint64(27))) * _MIX2
    return z ^ (z >> np.uint64(31))


def _uniforms(seed: int, indices: np.ndarray, slots: int) -> np.ndarray:
    """Uniform [0, 1) array of shape (len(indices), slots), pure in its key."""
    with np.errstate(over="ignore"):
        base = np.uint64(seed & 0xFFFFFFFFFFFFFFFF)
        keys = _splitmix(base + _GOLDEN * (indices.astype(np.uint64) + np.uint64(1)))
        slot_ids = _GOLDEN * (np.arange(slots, dtype=np.uint64) + np.uint64(1))
        h = _splitmix(keys[:, None] + slot_ids[None, :])
    return (h >> np.uint64(11)).astype(np.float64) * (2.0 ** -53)


def _chain_entries(seed: int, n: int, indices: np.ndarray) -> np.ndarray:
    """Vectorized prefix-sum chain for a batch of sample indices."""
    count = len(indices)
    if n == 1:
        return np.ones((count, 1, 1))
    m = n - 1
    u = _uniforms(seed, indices, m + (n - 1) * m)
    K = np.empty((count, n, m))
    K[:, 0, :] = np.sort(u[:, :m], axis=1)
    pos = m
    for i in range(1, n):
        for l in range(m):
            lo = K[:, i, l - 1] if l > 0 else 0.0
            hi = K[:, i - 1, l]
            K[:, i, l] = lo + u[:, pos] * (hi - lo)
            pos += 1
    entries = np.empty((count, n, n))
    entries[:, :, 0] = K[:, :, 0]
    if n > 2:
        entries[:, :, 1:-1] = np.diff(K, axis=2)
    entries[:, :, -1] = 1.0 - K[:, :, -1]
    return entries


def sample_entries(cfg: SampleConfig) -> np.ndarray:
    """All samples as a (count, n, n) array; the objects' fast-path twin."""
    if cfg.count == 0:
        return np.empty((0, cfg.n, cfg.n))
    starts = list(range(0, cfg.count, BATCH))

    def one(start: int) -> np.ndarray:
        stop = min(start + BATCH, cfg.count)
        return _chain_entries(cfg.seed, cfg.n, np.arange(start, stop))

    if cfg.workers > 1 and len(starts) > 1:
        with ThreadPoolExecutor(max_workers=cfg.workers) as pool:
            parts = list(pool.map(one, starts))
    else:
        parts = [one(s) for s in starts]
    return np.concatenate(parts, axis=0)


def sample_monotone(cfg: SampleConfig) -> Iterator[MonotoneMatrix]:
    """Stream of validated monotone matrices, in sample-index order."""
    for start in range(0, cfg.count, BATCH):
        stop = min(start + BATCH, cfg.count)
        batch = _chain_entries(cfg.seed, cfg.n, np.arange(start, stop))
        for row in batch:
            yield validate_monotone(row, DEFAULT_TOL)


# ---------------------------------------------------------------------------
# Datasets and records.
# ---------------------------------------------------------------------------

def _fmt_cell(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return f"{v:.17g}"
    return str(v)


@dataclass
class Dataset:
    """Columnar record stream with CSV / JSON-lines emission."""

    name: str
    columns: tuple[str, ...]
    rows: list[tuple] = field(default_factory=list)

    def append(self, *values):
        if len(values) != len(self.columns):
            raise ValueError(f"row width {len(values)} != {len(self.columns)}")
        self.rows.append(values)

    def to_csv(self) -> str:
        lines = [",".join(self.columns)]
        for row in self.rows:
            lines.append(",".join(_fmt_cell(v) for v in row))
        return "\n".join(lines) + "\n"

    def to_jsonl(self) -> str:
        import json

        lines = []
        for row in self.rows:
            lines.append(json.dumps(dict(zip(self.columns, row))))
        return "\n".join(lines) + "\n"

    def column(self, name: str) -> np.ndarray:
        idx = self.columns.index(name)
        return np.array([row[idx] for row in self.rows])


@dataclass(frozen=True)
class ExperimentRecord:
    """Per-sample record: id, matrix hash, spectrum, verdicts, slacks."""

    index: int
    matrix_hash: str
    spectrum: tuple[complex, ...]
    verdicts: tuple[tuple[str, bool], ...]
    slacks: tuple[float, ...]


def _matrix_hash(entries) -> str:
    return hashlib.sha256(matrix_to_text(entries).encode()).hexdigest()[:16]


def iter_records(cfg: SampleConfig) -> Iterator[ExperimentRecord]:
    """Per-sample records: spectrum, region verdicts, general-property slacks."""
    for index, M in enumerate(sample_monotone(cfg)):
        nontrivial = spectrum_of_stochastic(M).nontrivial() if cfg.n > 1 else ()
        slacks: tuple[float, ...] = ()
        verdicts: tuple[tuple[str, bool], ...] = ()
        if cfg.n >= 2:
            slacks = tuple(c.slack for c in check_general_properties(dominance_of(M)))
        if cfg.n == 3:
            v = xi3_pair_member((nontrivial[0].real, nontrivial[1].real))
            verdicts = (("xi3pair", v.member),)
        elif cfg.n == 4:
            verdicts = tuple(
                (f"theta3[{i}]", theta_member(z, 3, 1e-8).member)
                for i, z in enumerate(nontrivial)
            )
        yield ExperimentRecord(index, _matrix_hash(M.entries), nontrivial, verdicts, slacks)


def sample_records(cfg: SampleConfig) -> Dataset:
    """Flatten :func:`iter_records` into a CSV-ready dataset.

    Spectra of monotone matrices up to n = 3 are real, so those columns are
    plain lambda values; from n = 4 on, re/im pairs.
    """
    n = cfg.n
    real_spectrum = n <= 3
    eig_cols: list[str] = []
    for i in range(2, n + 1):
        eig_cols += [f"lambda{i}"] if real_spectrum else [f"re{i}", f"im{i}"]
    verdict_cols = ["all_member"] if n in (3, 4) else []
    ds = Dataset(
        f"sample_n{n}",
        ("index", "hash") + tuple(eig_cols) + tuple(verdict_cols) + ("min_slack",),
    )
    for rec in iter_records(cfg):
        row: list = [rec.index, rec.matrix_hash]
        for z in rec.spectrum:
            row += [z.real] if real_spectrum else [z.real, z.imag]
        if verdict_cols:
            row.append(all(ok for _, ok in rec.verdicts))
        row.append(min(rec.slacks) if rec.slacks else 0.0)
        ds.append(*row)
    return ds


# ---------------------------------------------------------------------------
# Experiments.
# ---------------------------------------------------------------------------

def _lemma1_slacks(entries: np.ndarray) -> tuple[tuple[str, ...], np.ndarray]:
    """Vectorized eight-constraint slacks for a stack of 3 x 3 matrices."""
    K = np.cumsum(entries, axis=2)[:, :, :-1]
    D = K[:, :-1, :] - K[:, 1:, :]
    np.maximum(D, 0.0, out=D)
    a, b, c, d = D[:, 0, 0], D[:, 0, 1], D[:, 1, 0], D[:, 1, 1]
    names = (
        "a+c<=1", "b+c<=1", "b+d<=1",
        "ac<=1/4", "bc<=1/4", "bd<=1/4",
        "trace>=0", "det>=-1/4",
    )
    slacks = np.stack(
        [
            1.0 - (a + c),
            1.0 - (b + c),
            1.0 - (b + d),
            0.25 - a * c,
            0.25 - b * c,
            0.25 - b * d,
            a + d,
            a * d - b * c + 0.25,
        ],
        axis=1,
    )
    return names, slacks


def _alpha_grid(lo: float, hi: float, step: float) -> np.ndarray:
    count = int(round((hi - lo) / step))
    return lo + step * np.arange(count + 1)


def _exp_figure1(cfg: SampleConfig, step: float = 1e-3) -> dict[str, Dataset]:
    """Eigenvalue traces of the two covering families.

    The type-2 alpha grid is the union of a uniform grid and the alpha
    images of a uniform lambda grid: d(lambda)/d(alpha) blows up at
    alpha = 1/2, so a uniform alpha grid alone would leave lambda gaps
    near 0 far wider than its step.
    """
    ds = Dataset("traces", ("family", "alpha", "lambda2", "lambda3"))
    for alpha in _alpha_grid(0.0, 1.0, step):
        pair = eigenpair_3x3(dominance_of(family_matrix(FamilyId("type1", alpha))))
        ds.append("type1", float(alpha), pair.lambda2, pair.lambda3)
    lam_grid = _alpha_grid(-0.5, 0.0, step)
    mapped = np.sqrt(np.maximum(0.25 - lam_grid * lam_grid, 0.0))
    alphas = np.unique(np.concatenate([_alpha_grid(0.0, 0.5, step), mapped]))
    for alpha in alphas:
        pair = eigenpair_3x3(dominance_of(family_matrix(FamilyId("type2", alpha))))
        ds.append("type2", float(alpha), pair.lambda2, pair.lambda3)
    return {"traces": ds}


def _xi3_boundary_polyline(points_per_curve: int = 200) -> Dataset:
    """The closed outline of xi3, walked curve by curve."""
    ds = Dataset("curves", ("curve", "param", "lambda2", "lambda3"))
    for t in np.linspace(0.0, 1.0, points_per_curve):
        ds.append("C1", float(t), float(t), float(t))
    for s in np.linspace(1.0, 0.0, points_per_curve):
        ds.append("C3", float(s), 1.0, float(s))
    for k in np.linspace(0.0, K_JUNCTION, points_per_curve):
        pair, _ = xi3_boundary(k)  # k = 0 gives (1, 0), the shared C3/C5 corner
        ds.append("C5", float(k), pair.lambda2, pair.lambda3)
    for k in np.linspace(K_JUNCTION, -1.0, points_per_curve):
        pair, _ = xi3_boundary(k)
        ds.append("C4", float(k), pair.lambda2, pair.lambda3)
    for s in np.linspace(0.5, 0.0, points_per_curve):
        ds.append("C2", float(s), float(s), float(-s))
    return ds


def _exp_figure2(cfg: SampleConfig) -> dict[str, Dataset]:
    """Sampled (lambda2, lambda3) scatter plus the xi3 boundary outline."""
    cfg3 = SampleConfig(3, cfg.count, cfg.seed, cfg.workers)
    entries = sample_entries(cfg3)
    spectra = spectrum3_batch(entries)
    points = Dataset("points", ("index", "lambda2", "lambda3", "member", "margin"))
    for i in range(len(spectra)):
        l2, l3 = spectra[i, 1].real, spectra[i, 2].real
        v = xi3_pair_member((l2, l3), 1e-9)
        points.append(i, float(l2), float(l3), v.member, v.margin)
    return {"points": points, "curves": _xi3_boundary_polyline()}


def _stochastic3_outline() -> Dataset:
    ds = Dataset("outer", ("segment", "lambda2", "lambda3"))
    corners = [(1.0, 1.0), (1.0, -1.0), (0.0, -1.0), (-0.5, -0.5), (1.0, 1.0)]
    names = ["lambda2<=1", "lambda3>=-1", "trace", "lambda2=lambda3"]
    for (x0, y0), (x1, y1), name in zip(corners[:-1], corners[1:], names):
        for t in np.linspace(0.0, 1.0, 50):
            ds.append(name, float(x0 + t * (x1 - x0)), float(y0 + t * (y1 - y0)))
    return ds


def _exp_figure3(cfg: SampleConfig) -> dict[str, Dataset]:
    """figure2 overlaid with the real-pair region of 3 x 3 stochastic matrices."""
    out = _exp_figure2(cfg)
    # sanity column: every sampled pair also satisfies the outer region
    points = out["points"]
    outer = Dataset("points", points.columns + ("outer_member",))
    for row in points.rows:
        v = stochastic3_real_pair_member((row[1], row[2]), 1e-9)
        outer.append(*row, v.member)
    out["points"] = outer
    out["outer"] = _stochastic3_outline()
    return out


def _exp_lemma1(cfg: SampleConfig) -> dict[str, Dataset]:
    """Slack statistics for the eight dominance constraints over samples."""
    cfg3 = SampleConfig(3, cfg.count, cfg.seed, cfg.workers)
    entries = sample_entries(cfg3)
    names, slacks = _lemma1_slacks(entries)
    ds = Dataset("slacks", ("index",) + names)
    for i in range(len(slacks)):
        ds.append(i, *(float(s) for s in slacks[i]))
    summary = Dataset("summary", ("constraint", "min_slack", "violations"))
    for j, name in enumerate(names):
        col = slacks[:, j]
        summary.append(name, float(col.min()), int((col < -1e-12).sum()))
    return {"slacks": ds, "summary": summary}


def _exp_reduction4(cfg: SampleConfig) -> dict[str, Dataset]:
    """Containment verdicts and similarity diagnostics for n = 4 samples."""
    cfg4 = SampleConfig(4, cfg.count, cfg.seed, cfg.workers)
    verdicts = Dataset(
        "verdicts",
        ("index", "block", "re", "im", "mu_re", "mu_im", "r", "member", "margin"),
    )
    blocks = Dataset("blocks", ("index", "block", "r", "rowsum_err", "mu_map_err"))
    for index, M in enumerate(sample_monotone(cfg4)):
        result = reduce_matrix(M)
        for b, blk in enumerate(result.blocks):
            rowsum_err = float(np.abs(blk.S.entries.sum(axis=1) - 1.0).max())
            mu_err = max(
                abs(mu * blk.r - lam) for lam, mu in zip(blk.lam, blk.mu)
            )
            blocks.append(index, b, blk.r, rowsum_err, float(mu_err))
            for lam, mu in zip(blk.lam, blk.mu):
                v = theta_member(lam, 3, 1e-8)
                verdicts.append(
                    index, b, lam.real, lam.imag, mu.real, mu.imag, blk.r,
                    v.member, v.margin,
                )
        for b, blk in enumerate(result.degenerate):
            v = theta_member(0.0, 3, 1e-8)
            verdicts.append(
                index, len(result.blocks) + b, 0.0, 0.0, 0.0, 0.0, blk.r,
                v.member, v.margin,
            )
    return {"verdicts": verdicts, "blocks": blocks}


_EXPERIMENTS = {
    "figure1": _exp_figure1,
    "figure2": _exp_figure2,
    "figure3": _exp_figure3,
    "lemma1": _exp_lemma1,
    "reduction4": _exp_reduction4,
}


def run_experiment(name: str, cfg: SampleConfig) -> dict[str, Dataset]:
    """Run a named experiment; returns datasets keyed by role."""
    try:
        fn = _EXPERIMENTS[name]
    except KeyError:
        raise UnknownExperiment(
            f"unknown experiment {name!r}; expected one of {', '.join(EXPERIMENT_NAMES)}"
        ) from None
    return fn(cfg)
