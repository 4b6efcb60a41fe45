"""Catalog of spectral-distance bounds and triangular-excess estimates.

A :class:`PerturbationCase` packages a normal matrix ``a``, a free
perturbation ``e``, and an ordered Schur form of ``a + e``.  The catalog
evaluates every known Frobenius bound on the optimal-matching distance
between the two spectra, plus upper/lower estimates of the triangular
excess ||strict_upper(T)||_F that several of those bounds consume.

Catalog entries carry stable string ids (``eq_1_4`` ... ``thm_4_3_b``)
used by the command-line tools and by campaign CSV columns.  The ids are
wire-format identifiers; treat them as opaque.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .decomp import (
    BlockStructure,
    SchurForm,
    detect_block_structure,
    eigenvalues,
    numerical_rank,
    reorder_schur,
    schur_decompose,
    spectral_norm,
    validate_schur_form,
)
from .matching import optimal_match
from .matrices import (
    STRUCTURE_TOL,
    as_matrix,
    conjugate_transpose,
    frobenius_norm,
    is_hermitian,
    is_normal,
    strict_upper,
)
from .quantities import delta, w_lower

__all__ = [
    "NumericalConsistencyError",
    "PerturbationCase",
    "make_case",
    "BoundValue",
    "BoundReport",
    "CATALOG_IDS",
    "D2_BOUND_IDS",
    "DELTA_ESTIMATE_IDS",
    "HERMITIAN_ONLY_IDS",
    "SCHUR_DEPENDENT_IDS",
    "catalog_entries",
    "family_of",
    "bound_hoffman_wielandt",
    "bound_sun_sqrt_n",
    "bound_li_sun",
    "bound_kahan",
    "bound_sun_departure",
    "bound_li_vong_a",
    "bound_li_vong_b",
    "bandwidth_bounds",
    "bandwidth_base_bounds",
    "worst_case_bounds",
    "block_bounds",
    "hermitian_bounds",
    "henrici_delta_upper",
    "sun_delta_lower",
    "skew_delta_bounds",
    "rotated_perturbation",
    "rotated_perturbation_residual",
    "evaluate_all",
]

# Relative slack below which a negative radicand is treated as round-off
# and clamped to zero; anything more negative is a real inconsistency.
RADICAND_TOL = 1e-9

# Default entry threshold, relative to ||.||_F, for bandwidth detection
# on rotated perturbations (floating-point products have no exact zeros).
W_PRODUCT_RTOL = 1e-13

# Default violation slack factor: a bound b flags as violated only when
# b < d2 - tol_factor * (1 + ||A||_F + ||E||_F).
VIOLATION_TOL_FACTOR = 1e-8

FAMILY_BASELINE = "baseline"
FAMILY_BANDWIDTH = "lemma_3_4"
FAMILY_BANDWIDTH_BASE = "lemma_3_5"
FAMILY_WORST_CASE = "theorem_3_6"
FAMILY_BLOCK = "theorem_3_10"
FAMILY_HERMITIAN = "theorem_4_2"
FAMILY_DELTA_ESTIMATE = "delta_estimate"


class NumericalConsistencyError(ArithmeticError):
    """A radicand that is nonnegative in exact arithmetic came out
    negative beyond round-off slack, so the case data is inconsistent
    (e.g. a Schur form that does not belong to ``a + e``)."""


def _safe_sqrt(radicand: float, scale: float, context: str) -> float:
    if radicand < 0.0:
        if radicand < -RADICAND_TOL * scale:
            raise NumericalConsistencyError(
                f"{context}: radicand {radicand:.3e} is negative beyond "
                f"round-off slack {RADICAND_TOL * scale:.3e}"
            )
        radicand = 0.0
    return math.sqrt(radicand)


# ---------------------------------------------------------------------------
# cases


@dataclass(eq=False)
class PerturbationCase:
    """A matrix pair (A, A + E) with an ordered Schur form of A + E.

    Instances are built by :func:`make_case` and treated as immutable.
    ``a_is_hermitian`` implies ``a_is_normal``.
    """

    a: np.ndarray
    e: np.ndarray
    a_tilde: np.ndarray
    schur_tilde: SchurForm
    block: BlockStructure
    a_is_normal: bool
    a_is_hermitian: bool

    @property
    def n(self) -> int:
        return self.a.shape[0]


def make_case(
    a,
    e,
    *,
    schur: SchurForm | None = None,
    structure_tol: float = STRUCTURE_TOL,
    block_tol: float = 1e-12,
) -> PerturbationCase:
    """Assemble a :class:`PerturbationCase` from a matrix pair.

    When ``schur`` is given it must be a valid Schur form of ``a + e``;
    it is validated and then reordered into the canonical eigenvalue
    order.  Otherwise a fresh decomposition is computed.  Eigenvalue
    blocks are detected on the ordered triangular factor at ``block_tol``
    relative to its Frobenius norm.
    """
    a = np.array(as_matrix(a, "a"), dtype=np.complex128, copy=True)
    e = np.array(as_matrix(e, "e"), dtype=np.complex128, copy=True)
    if a.shape != e.shape:
        raise ValueError(f"shape mismatch: a is {a.shape}, e is {e.shape}")
    a_tilde = a + e
    if schur is None:
        form = schur_decompose(a_tilde)
    else:
        form = SchurForm(
            q=np.array(schur.q, dtype=np.complex128, copy=True),
            t=np.array(schur.t, dtype=np.complex128, copy=True),
            eigenvalues=np.diag(schur.t).astype(np.complex128),
        )
        validate_schur_form(form, a_tilde)
    form = reorder_schur(form)
    block = detect_block_structure(form.t, tol=block_tol)
    hermitian = is_hermitian(a, structure_tol)
    # Hermitian implies normal; take the union so borderline tolerance
    # cases cannot leave the flags inconsistent.
    normal = hermitian or is_normal(a, structure_tol)
    return PerturbationCase(
        a=a,
        e=e,
        a_tilde=a_tilde,
        schur_tilde=form,
        block=block,
        a_is_normal=normal,
        a_is_hermitian=hermitian,
    )


def rotated_perturbation(case: PerturbationCase) -> np.ndarray:
    """The perturbation expressed in the Schur basis of A + E."""
    q = case.schur_tilde.q
    return conjugate_transpose(q) @ case.e @ q


def rotated_perturbation_residual(case: PerturbationCase) -> float:
    """||Q* E Q - strict_upper(T)||_F, the part of the rotated
    perturbation not explained by the triangular excess."""
    return frobenius_norm(rotated_perturbation(case) - strict_upper(case.schur_tilde.t))


# ---------------------------------------------------------------------------
# shared per-case quantities


class _Stats:
    __slots__ = (
        "n",
        "e_norm",
        "e2",
        "excess",
        "delta_e",
        "delta_a",
        "w",
        "s",
        "mix",
        "tilde_is_normal",
        "scale",
    )

    def __init__(self, case: PerturbationCase, w_rtol: float):
        n = case.n
        e_norm = frobenius_norm(case.e)
        excess = frobenius_norm(strict_upper(case.schur_tilde.t))
        rotated = rotated_perturbation(case)
        self.n = n
        self.e_norm = e_norm
        self.e2 = e_norm**2
        self.excess = excess
        self.delta_e = delta(case.e)
        self.delta_a = delta(case.a)
        self.w = w_lower(rotated, tol=w_rtol * frobenius_norm(rotated))
        self.s = case.block.s
        self.mix = min(frobenius_norm(case.a), math.sqrt(max(n - 1, 0)) * spectral_norm(case.a))
        self.tilde_is_normal = is_normal(case.a_tilde)
        self.scale = 1.0 + self.e2 + excess**2


def _rt(st: _Stats, extra: float, context: str) -> float:
    return _safe_sqrt(st.e2 + extra, st.scale, context)


# ---------------------------------------------------------------------------
# catalog

SQRT2 = math.sqrt(2.0)


@dataclass(frozen=True)
class _Entry:
    id: str
    family: str
    requires_hermitian: bool
    depends_on_schur_choice: bool


def _always(case: PerturbationCase, st: _Stats) -> bool:
    return True


def _tilde_normal(case: PerturbationCase, st: _Stats) -> bool:
    return st.tilde_is_normal


def _tilde_nonzero(case: PerturbationCase, st: _Stats) -> bool:
    return frobenius_norm(case.a_tilde) > 0.0


def _v_hw(case, st):
    return st.e_norm


def _v_1_4(case, st):
    return math.sqrt(st.n) * st.e_norm


def _v_1_5(case, st):
    return math.sqrt(st.n - st.s + 1) * st.e_norm


def _v_1_6(case, st):
    return SQRT2 * st.e_norm


def _v_1_7(case, st):
    return _rt(st, 2.0 * st.mix * st.excess - st.excess**2, "eq_1_7")


def _v_1_8(case, st):
    return _rt(st, SQRT2 * st.e_norm * st.excess, "eq_1_8")


def _v_1_9(case, st):
    return _rt(st, 2.0 * st.e_norm * st.excess - st.excess**2, "eq_1_9")


def _v_3_3a(case, st):
    return _rt(st, st.w * st.delta_e**2, "eq_3_3a")


def _v_3_3b(case, st):
    return _rt(st, math.sqrt(1.0 + st.w) * st.delta_e * st.excess, "eq_3_3b")


def _v_3_3c(case, st):
    return _rt(st, 2.0 * st.delta_e * st.excess + st.excess**2, "eq_3_3c")


def _v_3_3d(case, st):
    return _rt(st, 2.0 * math.sqrt(st.w) * st.delta_e * st.excess - st.excess**2, "eq_3_3d")


def _v_3_4a(case, st):
    return _rt(st, st.w / (1.0 + st.w) * st.delta_a**2, "eq_3_4a")


def _v_3_4b(case, st):
    ratio = st.w / (1.0 + st.w)
    return _rt(st, 2.0 * math.sqrt(ratio) * st.delta_a * st.excess - st.excess**2, "eq_3_4b")


def _v_3_5a(case, st):
    return _rt(st, (st.n - 1) * st.delta_e**2, "eq_3_5a")


def _v_3_5b(case, st):
    return _rt(st, math.sqrt(st.n) * st.delta_e * st.excess, "eq_3_5b")


def _v_3_5c(case, st):
    return _rt(st, 2.0 * st.delta_e * st.excess + st.excess**2, "eq_3_5c")


def _v_3_5d(case, st):
    return _rt(st, 2.0 * math.sqrt(st.n - 1) * st.delta_e * st.excess - st.excess**2, "eq_3_5d")


def _v_3_5e(case, st):
    return _rt(st, (st.n - 1) / st.n * st.delta_a**2, "eq_3_5e")


def _v_3_5f(case, st):
    return _rt(st, 2.0 * math.sqrt((st.n - 1) / st.n) * st.delta_a * st.excess - st.excess**2, "eq_3_5f")


def _v_3_11a(case, st):
    return _rt(st, (st.n - st.s) * st.delta_e**2, "eq_3_11a")


def _v_3_11b(case, st):
    return _rt(st, math.sqrt(st.n - st.s + 1) * st.delta_e * st.excess, "eq_3_11b")


def _v_3_11c(case, st):
    return _rt(st, 2.0 * math.sqrt(st.n - st.s) * st.delta_e * st.excess - st.excess**2, "eq_3_11c")


def _v_4_6a(case, st):
    return _rt(st, st.delta_e**2, "eq_4_6a")


def _v_4_6b(case, st):
    return _rt(st, SQRT2 * st.delta_e * st.excess, "eq_4_6b")


def _v_4_6c(case, st):
    return _rt(st, 2.0 * st.delta_e * st.excess - st.excess**2, "eq_4_6c")


def _v_4_6d(case, st):
    return _rt(st, 0.5 * st.delta_a**2, "eq_4_6d")


def _v_4_6e(case, st):
    return _rt(st, SQRT2 * st.delta_a * st.excess - st.excess**2, "eq_4_6e")


def _v_henrici(case, st):
    return henrici_delta_upper(case.a_tilde)


def _v_sun(case, st):
    return sun_delta_lower(case.a_tilde)


def _v_4_3a(case, st):
    return _skew_delta_bound(case.a_tilde, case.a_tilde)


def _v_4_3b(case, st):
    return _skew_delta_bound(case.e, case.a_tilde)


# (entry, applicability predicate, value function); catalog order is the
# report order and the campaign CSV column order.
_CATALOG: tuple[tuple[_Entry, object, object], ...] = (
    (_Entry("hoffman_wielandt", FAMILY_BASELINE, False, False), _tilde_normal, _v_hw),
    (_Entry("eq_1_4", FAMILY_BASELINE, False, False), _always, _v_1_4),
    (_Entry("eq_1_5", FAMILY_BASELINE, False, False), _always, _v_1_5),
    (_Entry("eq_1_6", FAMILY_BASELINE, True, False), _always, _v_1_6),
    (_Entry("eq_1_7", FAMILY_BASELINE, False, False), _always, _v_1_7),
    (_Entry("eq_1_8", FAMILY_BASELINE, True, False), _always, _v_1_8),
    (_Entry("eq_1_9", FAMILY_BASELINE, True, False), _always, _v_1_9),
    (_Entry("eq_3_3a", FAMILY_BANDWIDTH, False, True), _always, _v_3_3a),
    (_Entry("eq_3_3b", FAMILY_BANDWIDTH, False, True), _always, _v_3_3b),
    (_Entry("eq_3_3c", FAMILY_BANDWIDTH, False, True), _always, _v_3_3c),
    (_Entry("eq_3_3d", FAMILY_BANDWIDTH, False, True), _always, _v_3_3d),
    (_Entry("eq_3_4a", FAMILY_BANDWIDTH_BASE, False, True), _always, _v_3_4a),
    (_Entry("eq_3_4b", FAMILY_BANDWIDTH_BASE, False, True), _always, _v_3_4b),
    (_Entry("eq_3_5a", FAMILY_WORST_CASE, False, False), _always, _v_3_5a),
    (_Entry("eq_3_5b", FAMILY_WORST_CASE, False, False), _always, _v_3_5b),
    (_Entry("eq_3_5c", FAMILY_WORST_CASE, False, False), _always, _v_3_5c),
    (_Entry("eq_3_5d", FAMILY_WORST_CASE, False, False), _always, _v_3_5d),
    (_Entry("eq_3_5e", FAMILY_WORST_CASE, False, False), _always, _v_3_5e),
    (_Entry("eq_3_5f", FAMILY_WORST_CASE, False, False), _always, _v_3_5f),
    (_Entry("eq_3_11a", FAMILY_BLOCK, False, False), _always, _v_3_11a),
    (_Entry("eq_3_11b", FAMILY_BLOCK, False, False), _always, _v_3_11b),
    (_Entry("eq_3_11c", FAMILY_BLOCK, False, False), _always, _v_3_11c),
    (_Entry("eq_4_6a", FAMILY_HERMITIAN, True, False), _always, _v_4_6a),
    (_Entry("eq_4_6b", FAMILY_HERMITIAN, True, False), _always, _v_4_6b),
    (_Entry("eq_4_6c", FAMILY_HERMITIAN, True, False), _always, _v_4_6c),
    (_Entry("eq_4_6d", FAMILY_HERMITIAN, True, False), _always, _v_4_6d),
    (_Entry("eq_4_6e", FAMILY_HERMITIAN, True, False), _always, _v_4_6e),
    (_Entry("henrici_3_6", FAMILY_DELTA_ESTIMATE, False, False), _always, _v_henrici),
    (_Entry("sun_3_7", FAMILY_DELTA_ESTIMATE, False, False), _always, _v_sun),
    (_Entry("thm_4_3_a", FAMILY_DELTA_ESTIMATE, True, False), _tilde_nonzero, _v_4_3a),
    (_Entry("thm_4_3_b", FAMILY_DELTA_ESTIMATE, True, False), _tilde_nonzero, _v_4_3b),
)

CATALOG_IDS: tuple[str, ...] = tuple(entry.id for entry, _, _ in _CATALOG)
DELTA_ESTIMATE_IDS: tuple[str, ...] = tuple(
    entry.id for entry, _, _ in _CATALOG if entry.family == FAMILY_DELTA_ESTIMATE
)
D2_BOUND_IDS: tuple[str, ...] = tuple(
    entry.id for entry, _, _ in _CATALOG if entry.family != FAMILY_DELTA_ESTIMATE
)
HERMITIAN_ONLY_IDS: tuple[str, ...] = tuple(
    entry.id for entry, _, _ in _CATALOG if entry.requires_hermitian
)
SCHUR_DEPENDENT_IDS: tuple[str, ...] = tuple(
    entry.id for entry, _, _ in _CATALOG if entry.depends_on_schur_choice
)

_BY_ID = {entry.id: (entry, pred, value) for entry, pred, value in _CATALOG}


def catalog_entries() -> tuple[dict, ...]:
    """Metadata for every catalog entry, in report order."""
    return tuple(
        {
            "id": entry.id,
            "family": entry.family,
            "requires_hermitian": entry.requires_hermitian,
            "depends_on_schur_choice": entry.depends_on_schur_choice,
        }
        for entry, _, _ in _CATALOG
    )


def family_of(bound_id: str) -> str:
    try:
        return _BY_ID[bound_id][0].family
    except KeyError:
        raise KeyError(f"unknown bound id {bound_id!r}") from None


# ---------------------------------------------------------------------------
# triangular-excess estimates (matrix level)


def henrici_delta_upper(m) -> float:
    """((n^3 - n) / 12)^(1/4) * sqrt(||M M* - M* M||_F): an upper bound
    on the triangular excess of any Schur form of M."""
    m = as_matrix(m)
    n = m.shape[0]
    defect = frobenius_norm(m @ conjugate_transpose(m) - conjugate_transpose(m) @ m)
    return ((n**3 - n) / 12.0) ** 0.25 * math.sqrt(defect)


def sun_delta_lower(m) -> float:
    """sqrt(||M||_F^2 - sqrt(||M||_F^4 - ||M M* - M* M||_F^2 / 2)): a
    lower bound on the triangular excess of any Schur form of M."""
    m = as_matrix(m)
    nrm2 = frobenius_norm(m) ** 2
    defect = frobenius_norm(m @ conjugate_transpose(m) - conjugate_transpose(m) @ m)
    inner = nrm2**2 - 0.5 * defect**2
    scale = 1.0 + nrm2**2
    inner = _safe_sqrt(inner, scale, "sun_3_7 inner radicand")
    return _safe_sqrt(nrm2 - inner, 1.0 + nrm2, "sun_3_7")


def _skew_delta_bound(m, rank_source) -> float:
    """(1/sqrt(2)) * sqrt(||K||_F^2 - |tr K|^2 / r) for K = M - M* and
    r the numerical rank of ``rank_source``."""
    m = as_matrix(m)
    skew = m - conjugate_transpose(m)
    r = numerical_rank(as_matrix(rank_source))
    if r == 0:
        raise ValueError("rank source is numerically zero")
    nrm2 = frobenius_norm(skew) ** 2
    radicand = nrm2 - abs(complex(np.trace(skew))) ** 2 / r
    return _safe_sqrt(radicand, 1.0 + nrm2, "thm_4_3") / SQRT2


def skew_delta_bounds(case: PerturbationCase) -> tuple[float, float]:
    """Both skew-part excess bounds for a Hermitian-base case: one from
    A + E and one from E alone.  Equal in exact arithmetic because the
    skew parts coincide when A is Hermitian."""
    if not case.a_is_hermitian:
        raise ValueError("skew excess bounds require a Hermitian base matrix")
    if frobenius_norm(case.a_tilde) == 0.0:
        raise ValueError("perturbed matrix is zero")
    return (
        _skew_delta_bound(case.a_tilde, case.a_tilde),
        _skew_delta_bound(case.e, case.a_tilde),
    )


# ---------------------------------------------------------------------------
# single-bound convenience ops


def _single(case: PerturbationCase, bound_id: str, w_rtol: float = W_PRODUCT_RTOL) -> float:
    entry, pred, value = _BY_ID[bound_id]
    st = _Stats(case, w_rtol)
    if not pred(case, st):
        raise ValueError(f"{bound_id} is not applicable to this case")
    return float(value(case, st))


def bound_hoffman_wielandt(case: PerturbationCase) -> float:
    """||E||_F, valid only when A + E is itself normal."""
    return _single(case, "hoffman_wielandt")


def bound_sun_sqrt_n(case: PerturbationCase) -> float:
    """sqrt(n) * ||E||_F."""
    return _single(case, "eq_1_4")


def bound_li_sun(case: PerturbationCase) -> float:
    """sqrt(n - s + 1) * ||E||_F with s the eigenvalue block count."""
    return _single(case, "eq_1_5")


def bound_kahan(case: PerturbationCase) -> float:
    """sqrt(2) * ||E||_F, for Hermitian A."""
    return _single(case, "eq_1_6")


def bound_sun_departure(case: PerturbationCase) -> float:
    """Mixed-norm bound built from the triangular excess of A + E."""
    return _single(case, "eq_1_7")


def bound_li_vong_a(case: PerturbationCase) -> float:
    return _single(case, "eq_1_8")


def bound_li_vong_b(case: PerturbationCase) -> float:
    return _single(case, "eq_1_9")


def _family_values(
    case: PerturbationCase, ids: tuple[str, ...], w_rtol: float = W_PRODUCT_RTOL
) -> dict[str, float]:
    st = _Stats(case, w_rtol)
    out = {}
    for bound_id in ids:
        _, _, value = _BY_ID[bound_id]
        out[bound_id] = float(value(case, st))
    return out


def bandwidth_bounds(case: PerturbationCase, w_rtol: float = W_PRODUCT_RTOL) -> dict[str, float]:
    """The four rotated-bandwidth bounds (ids eq_3_3a..eq_3_3d)."""
    return _family_values(case, ("eq_3_3a", "eq_3_3b", "eq_3_3c", "eq_3_3d"), w_rtol)


def bandwidth_base_bounds(case: PerturbationCase, w_rtol: float = W_PRODUCT_RTOL) -> dict[str, float]:
    """The two bandwidth bounds phrased in delta(A) (ids eq_3_4a, eq_3_4b)."""
    return _family_values(case, ("eq_3_4a", "eq_3_4b"), w_rtol)


def worst_case_bounds(case: PerturbationCase) -> dict[str, float]:
    """The six bandwidth-free bounds (ids eq_3_5a..eq_3_5f)."""
    return _family_values(case, ("eq_3_5a", "eq_3_5b", "eq_3_5c", "eq_3_5d", "eq_3_5e", "eq_3_5f"))


def block_bounds(case: PerturbationCase) -> dict[str, float]:
    """The three block-count refinements (ids eq_3_11a..eq_3_11c)."""
    return _family_values(case, ("eq_3_11a", "eq_3_11b", "eq_3_11c"))


def hermitian_bounds(case: PerturbationCase) -> dict[str, float]:
    """The five Hermitian-base bounds (ids eq_4_6a..eq_4_6e)."""
    if not case.a_is_hermitian:
        raise ValueError("hermitian bounds require a Hermitian base matrix")
    return _family_values(case, ("eq_4_6a", "eq_4_6b", "eq_4_6c", "eq_4_6d", "eq_4_6e"))


# ---------------------------------------------------------------------------
# full evaluation


@dataclass(frozen=True)
class BoundValue:
    """One evaluated catalog entry.  ``value`` is None exactly when the
    entry is not applicable to the case."""

    id: str
    family: str
    value: float | None
    applicable: bool
    requires_hermitian: bool
    depends_on_schur_choice: bool


@dataclass(frozen=True)
class BoundReport:
    """Everything the catalog knows about one case: the true matching
    distances and every bound, in catalog order.  ``violations`` lists
    ids of applicable distance bounds that fell below d2 by more than
    the round-off slack; excess estimates never appear there."""

    d2: float
    d_inf: float
    bounds: tuple[BoundValue, ...]
    violations: tuple[str, ...]

    def value_of(self, bound_id: str) -> float | None:
        for bv in self.bounds:
            if bv.id == bound_id:
                return bv.value
        raise KeyError(f"unknown bound id {bound_id!r}")

    def as_dict(self) -> dict:
        return {
            "d2": self.d2,
            "d_inf": self.d_inf,
            "bounds": [
                {
                    "id": bv.id,
                    "family": bv.family,
                    "value": bv.value,
                    "applicable": bv.applicable,
                    "requires_hermitian": bv.requires_hermitian,
                    "depends_on_schur_choice": bv.depends_on_schur_choice,
                }
                for bv in self.bounds
            ],
            "violations": list(self.violations),
        }


def evaluate_all(
    case: PerturbationCase,
    include_hermitian: bool | None = None,
    tol_factor: float = VIOLATION_TOL_FACTOR,
    w_rtol: float = W_PRODUCT_RTOL,
) -> BoundReport:
    """Evaluate the full catalog against the true matching distance.

    ``include_hermitian`` forces the Hermitian-only entries on or off;
    the default None enables them exactly when the case's base matrix is
    Hermitian.  Hermitian-only entries are never evaluated on a
    non-Hermitian base even when forced on: they are reported as not
    applicable, since their hypotheses fail.
    """
    if include_hermitian is None:
        include_hermitian = case.a_is_hermitian
    st = _Stats(case, w_rtol)
    match = optimal_match(eigenvalues(case.a), case.schur_tilde.eigenvalues)
    tol = tol_factor * (1.0 + frobenius_norm(case.a) + st.e_norm)
    values: list[BoundValue] = []
    violations: list[str] = []
    for entry, pred, value_fn in _CATALOG:
        applicable = bool(pred(case, st))
        if entry.requires_hermitian:
            applicable = applicable and include_hermitian and case.a_is_hermitian
        value = float(value_fn(case, st)) if applicable else None
        values.append(
            BoundValue(
                id=entry.id,
                family=entry.family,
                value=value,
                applicable=applicable,
                requires_hermitian=entry.requires_hermitian,
                depends_on_schur_choice=entry.depends_on_schur_choice,
            )
        )
        if (
            applicable
            and entry.family != FAMILY_DELTA_ESTIMATE
            and value < match.d2 - tol
        ):
            violations.append(entry.id)
    return BoundReport(
        d2=match.d2,
        d_inf=match.d_inf,
        bounds=tuple(values),
        violations=tuple(violations),
    )
