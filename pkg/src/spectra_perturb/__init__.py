"""Spectral distance bounds for perturbed normal matrices.

Given a normal matrix A and an arbitrary perturbation E, this package
computes the true minimum-cost matching distance between the spectra of
A and A + E, evaluates a catalog of Frobenius-norm upper bounds on that
distance, estimates the departure from normality of A + E, and verifies
by fixtures and seeded randomized campaigns that every bound dominates
the true distance.
"""

from .matrices import (
    STRUCTURE_TOL,
    as_matrix,
    as_spectrum,
    commutator_defect,
    conjugate_transpose,
    diagonal_part,
    frobenius_norm,
    is_hermitian,
    is_normal,
    load_matrix,
    matrix_from_json,
    matrix_to_json,
    save_matrix,
    strict_lower,
    strict_upper,
)
from .decomp import (
    BlockStructure,
    SchurForm,
    departure_from_normality,
    detect_block_structure,
    eigenvalues,
    hessenberg_reduce,
    numerical_rank,
    reorder_schur,
    schur_decompose,
    spectral_norm,
    validate_schur_form,
)
from .matching import (
    BRUTE_FORCE_LIMIT,
    SpectrumMatch,
    brute_force_match,
    optimal_match,
)
from .quantities import (
    delta,
    delta_spectral_form,
    phi1,
    phi2,
    phi3,
    w_lower,
    w_upper,
)
from .bounds import (
    CATALOG_IDS,
    D2_BOUND_IDS,
    DELTA_ESTIMATE_IDS,
    HERMITIAN_ONLY_IDS,
    SCHUR_DEPENDENT_IDS,
    BoundReport,
    BoundValue,
    NumericalConsistencyError,
    PerturbationCase,
    bandwidth_base_bounds,
    bandwidth_bounds,
    block_bounds,
    bound_hoffman_wielandt,
    bound_kahan,
    bound_li_sun,
    bound_li_vong_a,
    bound_li_vong_b,
    bound_sun_departure,
    bound_sun_sqrt_n,
    catalog_entries,
    evaluate_all,
    family_of,
    henrici_delta_upper,
    hermitian_bounds,
    make_case,
    rotated_perturbation,
    rotated_perturbation_residual,
    skew_delta_bounds,
    sun_delta_lower,
    worst_case_bounds,
)
from .ensembles import (
    FIXTURE_NAMES,
    KINDS,
    PHI_EXAMPLE_UNITARY,
    TRACE_MODES,
    EnsembleSpec,
    derive_trial_seed,
    fixture,
    fixture_expectations,
    fixture_matrices,
    random_case,
    random_hermitian_matrix,
    random_normal_matrix,
    random_perturbation,
    random_unitary,
)
from .campaigns import (
    ORDERING_PAIRS,
    CampaignConfig,
    CampaignSummary,
    TrialRecord,
    run_campaign,
    run_trial,
    write_trials_csv,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # matrices
    "STRUCTURE_TOL",
    "as_matrix",
    "as_spectrum",
    "commutator_defect",
    "conjugate_transpose",
    "diagonal_part",
    "frobenius_norm",
    "is_hermitian",
    "is_normal",
    "load_matrix",
    "matrix_from_json",
    "matrix_to_json",
    "save_matrix",
    "strict_lower",
    "strict_upper",
    # decomp
    "BlockStructure",
    "SchurForm",
    "departure_from_normality",
    "detect_block_structure",
    "eigenvalues",
    "hessenberg_reduce",
    "numerical_rank",
    "reorder_schur",
    "schur_decompose",
    "spectral_norm",
    "validate_schur_form",
    # matching
    "BRUTE_FORCE_LIMIT",
    "SpectrumMatch",
    "brute_force_match",
    "optimal_match",
    # quantities
    "delta",
    "delta_spectral_form",
    "phi1",
    "phi2",
    "phi3",
    "w_lower",
    "w_upper",
    # bounds
    "CATALOG_IDS",
    "D2_BOUND_IDS",
    "DELTA_ESTIMATE_IDS",
    "HERMITIAN_ONLY_IDS",
    "SCHUR_DEPENDENT_IDS",
    "BoundReport",
    "BoundValue",
    "NumericalConsistencyError",
    "PerturbationCase",
    "bandwidth_base_bounds",
    "bandwidth_bounds",
    "block_bounds",
    "bound_hoffman_wielandt",
    "bound_kahan",
    "bound_li_sun",
    "bound_li_vong_a",
    "bound_li_vong_b",
    "bound_sun_departure",
    "bound_sun_sqrt_n",
    "catalog_entries",
    "evaluate_all",
    "family_of",
    "henrici_delta_upper",
    "hermitian_bounds",
    "make_case",
    "rotated_perturbation",
    "rotated_perturbation_residual",
    "skew_delta_bounds",
    "sun_delta_lower",
    "worst_case_bounds",
    # ensembles
    "FIXTURE_NAMES",
    "KINDS",
    "PHI_EXAMPLE_UNITARY",
    "TRACE_MODES",
    "EnsembleSpec",
    "derive_trial_seed",
    "fixture",
    "fixture_expectations",
    "fixture_matrices",
    "random_case",
    "random_hermitian_matrix",
    "random_normal_matrix",
    "random_perturbation",
    "random_unitary",
    # campaigns
    "ORDERING_PAIRS",
    "CampaignConfig",
    "CampaignSummary",
    "TrialRecord",
    "run_campaign",
    "run_trial",
    "write_trials_csv",
]
