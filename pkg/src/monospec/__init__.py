"""Spectral analysis of monotone stochastic matrices.

A monotone stochastic matrix has each row stochastically dominated by the
next one.  Its dominance matrix (consecutive prefix-sum differences) is a
non-negative matrix one order lower carrying exactly the nontrivial
spectrum, which makes eigenvalue questions tractable: this package provides
the dominance calculus, the closed eigenvalue regions for orders up to 3,
the attainable eigenvalue-pair region with realising constructions, and the
Perron-similarity reduction placing higher-order spectra inside lower-order
stochastic regions, plus seeded Monte-Carlo drivers for all of it.
"""

from .dominance import (
    ConstraintCheck,
    DominanceMatrix,
    Infeasible,
    LiftWitness,
    check_general_properties,
    check_lemma1,
    check_liftable,
    dominance_of,
    lift,
)
from .errors import MonospecError
from .matrixcore import (
    DEFAULT_TOL,
    MonotoneMatrix,
    PrefixSumTable,
    StochasticMatrix,
    convex_combine,
    load_matrix,
    matrix_to_json,
    matrix_to_text,
    prefix_sums,
    validate_monotone,
    validate_stochastic,
)
from .realise import (
    FamilyId,
    equal_rows_matrix,
    family_matrix,
    family_parameter_inverse,
    realise_eigenvalue,
    realise_pair,
)
from .reduction import ReductionResult, check_containment, reduce
from .regions import (
    RegionVerdict,
    stochastic3_real_pair_member,
    theta_member,
    xi3_boundary,
    xi3_pair_member,
    xi_n_member,
)
from .sampler import Dataset, SampleConfig, run_experiment, sample_monotone
from .spectra import (
    EigenPair,
    NormalForm,
    PerronData,
    Spectrum,
    eigenpair_3x3,
    frobenius_normal_form,
    perron,
    spectrum_of_dominance,
    spectrum_of_stochastic,
)

__version__ = "0.1.0"

__all__ = [
    "ConstraintCheck",
    "Dataset",
    "DEFAULT_TOL",
    "DominanceMatrix",
    "EigenPair",
    "FamilyId",
    "Infeasible",
    "LiftWitness",
    "MonospecError",
    "MonotoneMatrix",
    "NormalForm",
    "PerronData",
    "PrefixSumTable",
    "ReductionResult",
    "RegionVerdict",
    "SampleConfig",
    "Spectrum",
    "StochasticMatrix",
    "check_containment",
    "check_general_properties",
    "check_lemma1",
    "check_liftable",
    "convex_combine",
    "dominance_of",
    "eigenpair_3x3",
    "equal_rows_matrix",
    "family_matrix",
    "family_parameter_inverse",
    "frobenius_normal_form",
    "lift",
    "load_matrix",
    "matrix_to_json",
    "matrix_to_text",
    "perron",
    "prefix_sums",
    "realise_eigenvalue",
    "realise_pair",
    "reduce",
    "run_experiment",
    "sample_monotone",
    "spectrum_of_dominance",
    "spectrum_of_stochastic",
    "stochastic3_real_pair_member",
    "theta_member",
    "validate_monotone",
    "validate_stochastic",
    "xi3_boundary",
    "xi3_pair_member",
    "xi_n_member",
]
