"""Seeded random matrix generators and exact worked-example fixtures.

All randomness comes from the Philox 4x64 counter-based generator with
key ``(seed mod 2^64, 0)``, so matrices are bit-reproducible across runs
and machines for a given seed.  Campaign trials derive per-trial seeds
as ``seed XOR trial_index`` and therefore need no shared state.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .bounds import PerturbationCase, make_case
from .decomp import SchurForm, _order_key
from .matrices import as_matrix, frobenius_norm

__all__ = [
    "KINDS",
    "TRACE_MODES",
    "EnsembleSpec",
    "derive_trial_seed",
    "random_unitary",
    "random_normal_matrix",
    "random_hermitian_matrix",
    "random_perturbation",
    "random_case",
    "FIXTURE_NAMES",
    "PHI_EXAMPLE_UNITARY",
    "fixture",
    "fixture_matrices",
    "fixture_expectations",
]

KINDS = ("normal", "hermitian", "normal-blocked")
TRACE_MODES = ("zero", "generic")

_MASK64 = (1 << 64) - 1


@dataclass(frozen=True)
class EnsembleSpec:
    """Parameters of one random draw: size, matrix kind, perturbation
    norm, whether the perturbation is projected to zero trace, and the
    64-bit seed."""

    n: int
    kind: str = "normal"
    perturbation_scale: float = 1.0
    trace_mode: str = "generic"
    seed: int = 0

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 2:
            raise ValueError(f"n must be an integer >= 2, got {self.n!r}")
        if self.kind not in KINDS:
            raise ValueError(f"kind must be one of {KINDS}, got {self.kind!r}")
        if not (self.perturbation_scale > 0.0):
            raise ValueError("perturbation_scale must be positive")
        if self.trace_mode not in TRACE_MODES:
            raise ValueError(f"trace_mode must be one of {TRACE_MODES}, got {self.trace_mode!r}")
        if not isinstance(self.seed, int):
            raise ValueError("seed must be an integer")


def _generator(seed: int) -> np.random.Generator:
    key = np.array([seed & _MASK64, 0], dtype=np.uint64)
    return np.random.Generator(np.random.Philox(key=key))


def derive_trial_seed(seed: int, trial_index: int) -> int:
    """Seed for one campaign trial: seed XOR trial_index (mod 2^64)."""
    if trial_index < 0:
        raise ValueError("trial_index must be nonnegative")
    return (seed ^ trial_index) & _MASK64


def _complex_gaussian(rng: np.random.Generator, shape) -> np.ndarray:
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)


def _haar_unitary(n: int, rng: np.random.Generator) -> np.ndarray:
    z = _complex_gaussian(rng, (n, n))
    q, r = np.linalg.qr(z)
    d = np.diag(r).copy()
    d[d == 0] = 1.0  # zero pivots have probability zero; keep the phase defined
    return q * (d / np.abs(d))


def random_unitary(n: int, seed) -> np.ndarray:
    """Haar-distributed n x n unitary.  ``seed`` is an integer or an
    existing numpy Generator (consumed in place)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    rng = seed if isinstance(seed, np.random.Generator) else _generator(int(seed))
    return _haar_unitary(n, rng)


def _normal_from(rng: np.random.Generator, n: int, real_spectrum: bool) -> np.ndarray:
    u = _haar_unitary(n, rng)
    lam = rng.standard_normal(n) if real_spectrum else _complex_gaussian(rng, n)
    return (u * lam) @ u.conj().T


def random_normal_matrix(spec: EnsembleSpec) -> np.ndarray:
    """U diag(lambda) U* with Haar U; lambda complex Gaussian for the
    normal kind, real Gaussian for the hermitian kind."""
    return _normal_from(_generator(spec.seed), spec.n, real_spectrum=(spec.kind == "hermitian"))


def random_hermitian_matrix(spec: EnsembleSpec) -> np.ndarray:
    """Exactly Hermitian draw: a real-spectrum normal draw followed by
    symmetrization, which removes the last bits of round-off skew."""
    m = _normal_from(_generator(spec.seed), spec.n, real_spectrum=True)
    return (m + m.conj().T) / 2.0


def _perturbation_from(
    rng: np.random.Generator, n: int, scale: float, trace_mode: str
) -> np.ndarray:
    e = _complex_gaussian(rng, (n, n))
    if trace_mode == "zero":
        e -= (np.trace(e) / n) * np.eye(n)
    nrm = frobenius_norm(e)
    if nrm == 0.0:
        raise ArithmeticError("degenerate zero draw")
    return e * (scale / nrm)


def random_perturbation(spec: EnsembleSpec) -> np.ndarray:
    """Dense i.i.d. complex Gaussian matrix rescaled to Frobenius norm
    ``perturbation_scale``; trace_mode zero first projects out the trace
    (subtract (tr/n) I) so that delta(E) = ||E||_F exactly."""
    rng = _generator(spec.seed)
    return _perturbation_from(rng, spec.n, spec.perturbation_scale, spec.trace_mode)


def _blocked_case(spec: EnsembleSpec, rng: np.random.Generator) -> PerturbationCase:
    # Build A + E = U T U* with T genuinely block upper triangular, then
    # recover A as U diag(mu) U* so that E = U (T - diag(mu)) U* has
    # Frobenius norm exactly perturbation_scale.
    n = spec.n
    u = _haar_unitary(n, rng)
    lam = np.array(sorted(_complex_gaussian(rng, n), key=_order_key))
    s = int(rng.integers(2, n + 1))
    cuts = np.sort(rng.choice(np.arange(1, n), size=s - 1, replace=False))
    edges = np.concatenate(([0], cuts, [n]))
    # strictly upper positions inside blocks
    positions = [
        (i, j)
        for k in range(s)
        for i in range(edges[k], edges[k + 1])
        for j in range(i + 1, edges[k + 1])
    ]
    nu = _complex_gaussian(rng, n)
    noise = _complex_gaussian(rng, len(positions)) if positions else np.zeros(0, complex)
    if spec.trace_mode == "zero":
        nu -= nu.mean()
    total = math.sqrt(float(np.sum(np.abs(nu) ** 2) + np.sum(np.abs(noise) ** 2)))
    if total == 0.0:
        raise ArithmeticError("degenerate zero draw")
    factor = spec.perturbation_scale / total
    nu *= factor
    noise *= factor
    t = np.diag(lam)
    for (i, j), z in zip(positions, noise):
        t[i, j] = z
    mu = lam - nu
    a = (u * mu) @ u.conj().T
    a_tilde = u @ t @ u.conj().T
    form = SchurForm(q=u, t=t, eigenvalues=lam.copy())
    return make_case(a, a_tilde - a, schur=form)


def random_case(spec: EnsembleSpec) -> PerturbationCase:
    """One seeded trial: a base matrix of the requested kind plus a
    perturbation, assembled into a ready-to-evaluate case.  The base and
    the perturbation are drawn from a single stream, so the pair is a
    pure function of the spec."""
    rng = _generator(spec.seed)
    if spec.kind == "normal-blocked":
        return _blocked_case(spec, rng)
    if spec.kind == "hermitian":
        a = _normal_from(rng, spec.n, real_spectrum=True)
        a = (a + a.conj().T) / 2.0
    else:
        a = _normal_from(rng, spec.n, real_spectrum=False)
    e = _perturbation_from(rng, spec.n, spec.perturbation_scale, spec.trace_mode)
    return make_case(a, e)


# ---------------------------------------------------------------------------
# fixtures

FIXTURE_NAMES = ("intro_2x2", "phi_example", "example_4_4")

# Unitary witness for the phi functionals' basis dependence.
PHI_EXAMPLE_UNITARY = np.array([[1.0, 1.0j], [1.0j, 1.0]]) / math.sqrt(2.0)

_SQRT5 = math.sqrt(5.0)
_SQRT2 = math.sqrt(2.0)


def _intro_matrices() -> tuple[np.ndarray, np.ndarray]:
    a = np.array([[0.0, 0.0], [0.0, 3.0]], dtype=complex)
    a_tilde = np.array([[-1.0, -1.0], [1.0, 1.0]], dtype=complex)
    return a, a_tilde - a


def _phi_matrices() -> tuple[np.ndarray, np.ndarray]:
    a = np.array([[1.0 + 1.0j, 0.0], [0.0, 2.0]], dtype=complex)
    # exact rotation of a by PHI_EXAMPLE_UNITARY; entries are exact halves
    a_tilde = np.array([[3.0 + 1.0j, -1.0 - 1.0j], [1.0 + 1.0j, 3.0 + 1.0j]], dtype=complex) / 2.0
    return a, a_tilde - a


def _example_4_4_matrices(n: int) -> tuple[np.ndarray, np.ndarray]:
    a = np.eye(n, dtype=complex)
    a[0, 0] = a[1, 1] = 0.0
    a[0, 1] = a[1, 0] = 1.0
    e = np.zeros((n, n), dtype=complex)
    e[1, 0] = -1.0
    for i in range(2, n):
        e[i, i] = -1.0
    return a, e


def fixture_matrices(name: str, n: int | None = None) -> tuple[np.ndarray, np.ndarray]:
    """The exact (A, E) pair of a named fixture."""
    if name == "intro_2x2":
        pair = _intro_matrices()
    elif name == "phi_example":
        pair = _phi_matrices()
    elif name == "example_4_4":
        if n is None:
            n = 5
        if n < 3:
            raise ValueError("example_4_4 requires n >= 3")
        return _example_4_4_matrices(n)
    else:
        raise ValueError(f"unknown fixture {name!r}; expected one of {FIXTURE_NAMES}")
    if n is not None and n != 2:
        raise ValueError(f"fixture {name!r} is 2 x 2; n = {n} is not available")
    return pair


def fixture(name: str, n: int | None = None) -> PerturbationCase:
    """A named worked example as a ready case.  ``n`` selects the size
    for example_4_4 (default 5, minimum 3); the other fixtures are 2 x 2."""
    a, e = fixture_matrices(name, n)
    return make_case(a, e)


def fixture_expectations(name: str, n: int | None = None) -> dict:
    """Closed-form expected values for a fixture, keyed by quantity and
    catalog id.  Shipped alongside the matrices by the fixture command."""
    if name == "intro_2x2":
        return {
            "fixture": "intro_2x2",
            "n": 2,
            "d2": 3.0,
            "e_norm": math.sqrt(7.0),
            "excess": 2.0,
            "bounds": {
                "eq_1_4": math.sqrt(14.0),
                "eq_1_6": math.sqrt(14.0),
                "eq_1_7": math.sqrt(15.0),
                "eq_1_8": math.sqrt(7.0 + 2.0 * math.sqrt(14.0)),
                "eq_1_9": math.sqrt(3.0 + 4.0 * math.sqrt(7.0)),
                "eq_3_5a": math.sqrt(9.5),
                "eq_3_4b": 3.0,
                "eq_3_5f": 3.0,
                "eq_4_6d": math.sqrt(9.25),
                "eq_4_6e": 3.0,
                "henrici_3_6": 2.0,
                "sun_3_7": 2.0,
                "thm_4_3_a": 2.0,
                "thm_4_3_b": 2.0,
            },
        }
    if name == "phi_example":
        return {
            "fixture": "phi_example",
            "n": 2,
            "d2": 0.0,
            "phi1_base": 6.0 - 2.0 * _SQRT5,
            "phi2_base": 0.0,
            "phi3_base": 3.0 - 2.0 * _SQRT2,
            "phi1_rotated": 1.0,
            "phi2_rotated": 1.0,
            "phi3_rotated": 1.0,
            "delta": 1.0,
        }
    if name == "example_4_4":
        if n is None:
            n = 5
        if n < 3:
            raise ValueError("example_4_4 requires n >= 3")
        return {
            "fixture": "example_4_4",
            "n": n,
            "d2": math.sqrt(n),
            "e_norm_sq": float(n - 1),
            "delta_e": math.sqrt(3.0 - 4.0 / n),
            "delta_a": 2.0 * math.sqrt(1.0 - 1.0 / n),
            "excess": 1.0,
            "block_count": n - 1,
            "bounds": {
                "eq_4_6a": math.sqrt(n - 4.0 / n + 2.0),
                "eq_4_6b": math.sqrt(n + math.sqrt(6.0 - 8.0 / n) - 1.0),
                "eq_4_6c": math.sqrt(n + 2.0 * math.sqrt(3.0 - 4.0 / n) - 2.0),
                "eq_4_6d": math.sqrt(n - 2.0 / n + 1.0),
                "eq_4_6e": math.sqrt(n + 2.0 * math.sqrt(2.0 - 2.0 / n) - 2.0),
            },
        }
    raise ValueError(f"unknown fixture {name!r}; expected one of {FIXTURE_NAMES}")
