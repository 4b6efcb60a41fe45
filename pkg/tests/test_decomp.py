import math

import numpy as np
import pytest

from spectra_perturb import (
    SchurForm,
    departure_from_normality,
    detect_block_structure,
    eigenvalues,
    frobenius_norm,
    hessenberg_reduce,
    numerical_rank,
    optimal_match,
    reorder_schur,
    schur_decompose,
    spectral_norm,
    validate_schur_form,
)
from spectra_perturb.decomp import _order_key

from conftest import haar_rotated_diagonal, random_complex, rng_for
from oracles import char_poly_eigenvalues, match_distance


def schur_residuals(m, form):
    n = m.shape[0]
    unitarity = frobenius_norm(form.q.conj().T @ form.q - np.eye(n))
    triangularity = frobenius_norm(np.tril(form.t, -1))
    reconstruction = frobenius_norm(form.q @ form.t @ form.q.conj().T - m)
    return unitarity, triangularity, reconstruction


def test_hessenberg_reduce_properties(rng):
    m = random_complex(rng, (7, 7))
    q, h = hessenberg_reduce(m)
    n = 7
    assert frobenius_norm(q.conj().T @ q - np.eye(n)) < 1e-13 * n
    # everything below the first subdiagonal vanishes
    assert np.all(h[np.tril_indices(n, -2)] == 0)
    assert frobenius_norm(q @ h @ q.conj().T - m) < 1e-12 * max(1.0, frobenius_norm(m))


def test_schur_decompose_quality(rng):
    for n in (2, 3, 8, 17):
        m = random_complex(rng, (n, n))
        form = schur_decompose(m)
        tol = 1e-10 * n * max(1.0, frobenius_norm(m))
        for res in schur_residuals(m, form):
            assert res <= tol
        validate_schur_form(form, m)


def test_schur_eigenvalues_match_closed_forms(rng):
    for n in (2, 3):
        for _ in range(20):
            m = random_complex(rng, (n, n))
            form = schur_decompose(m)
            expected = char_poly_eigenvalues(m)
            d = match_distance(form.eigenvalues, expected)
            assert d < 1e-7 * (1.0 + frobenius_norm(m))


def test_schur_triangular_fast_path():
    t_in = np.array([[1.0, 5.0, 6.0], [0.0, 2.0, 7.0], [0.0, 0.0, 3.0]], dtype=complex)
    form = schur_decompose(t_in)
    assert np.array_equal(form.t, t_in)
    assert np.array_equal(form.q, np.eye(3, dtype=complex))


def test_schur_max_iter_floor():
    with pytest.raises(ValueError):
        schur_decompose(np.eye(4), max_iter=10)


def test_validate_schur_form_catches_mismatch(rng):
    m = random_complex(rng, (4, 4))
    form = schur_decompose(m)
    other = random_complex(rng, (4, 4))
    with pytest.raises(ValueError):
        validate_schur_form(form, other)


def test_reorder_schur_sorts_and_preserves(rng):
    for _ in range(10):
        m = random_complex(rng, (6, 6))
        form = schur_decompose(m)
        ordered = reorder_schur(form)
        # same matrix, still a valid decomposition
        validate_schur_form(ordered, m)
        mods = np.abs(ordered.eigenvalues)
        assert np.all(mods[:-1] >= mods[1:] - 1e-12)
        # eigenvalue multiset unchanged
        assert optimal_match(form.eigenvalues, ordered.eigenvalues).d2 < 1e-10 * (
            1 + frobenius_norm(m)
        )


def test_reorder_breaks_modulus_ties_deterministically():
    # eigenvalues i and -i share a modulus; descending real part wins
    t = np.diag([-1.0j, 1.0j])
    form = SchurForm(q=np.eye(2, dtype=complex), t=t.astype(complex), eigenvalues=np.diag(t))
    ordered = reorder_schur(form)
    assert abs(ordered.eigenvalues[0] - 1.0j) < 1e-14
    assert abs(ordered.eigenvalues[1] + 1.0j) < 1e-14


def test_reorder_rejects_unknown_key(rng):
    form = schur_decompose(random_complex(rng, (3, 3)))
    with pytest.raises(ValueError):
        reorder_schur(form, key="ascending")


def test_order_key_is_descending_modulus_then_real_then_imag():
    assert _order_key(2.0) < _order_key(1.0)
    assert _order_key(1.0) < _order_key(-1.0)
    assert _order_key(1.0j) < _order_key(-1.0j)


def test_eigenvalues_of_diagonal():
    lam = eigenvalues(np.diag([3.0, 1.0 + 1.0j]))
    assert match_distance(lam, [3.0, 1.0 + 1.0j]) < 1e-14


def test_spectral_norm_matches_numpy(rng):
    for _ in range(10):
        m = random_complex(rng, (5, 5))
        assert abs(spectral_norm(m) - np.linalg.norm(m, 2)) < 1e-10 * (1 + np.linalg.norm(m, 2))


def test_numerical_rank():
    assert numerical_rank(np.zeros((4, 4))) == 0
    assert numerical_rank(np.eye(4)) == 4
    # rank-1 outer product
    v = np.array([1.0, 2.0, 3.0])
    assert numerical_rank(np.outer(v, v)) == 1
    with pytest.raises(ValueError):
        numerical_rank(np.eye(2), rtol=-1.0)


def test_numerical_rank_random_products(rng):
    # G1 @ G2 with inner dimension 5 has rank exactly 5
    g1 = random_complex(rng, (8, 5))
    g2 = random_complex(rng, (5, 8))
    assert numerical_rank(g1 @ g2) == 5


def test_departure_vanishes_for_normal(rng):
    a = haar_rotated_diagonal(rng, 6)
    # the spectral formula loses half the digits near zero; see the docstring
    assert departure_from_normality(a) <= 1e-6 * max(1.0, frobenius_norm(a))


def test_departure_of_jordan_block():
    assert abs(departure_from_normality([[0.0, 1.0], [0.0, 0.0]]) - 1.0) < 1e-12


def test_departure_agrees_with_schur_excess(rng):
    # two routes: spectral formula vs norm of the strict upper Schur part
    for _ in range(10):
        m = random_complex(rng, (7, 7))
        form = schur_decompose(m)
        excess = frobenius_norm(np.triu(form.t, 1))
        assert abs(departure_from_normality(m) - excess) <= 1e-9 * max(1.0, frobenius_norm(m))


def test_departure_unitary_invariance(rng):
    m = random_complex(rng, (6, 6))
    z = random_complex(rng, (6, 6))
    q, _ = np.linalg.qr(z)
    rotated = q.conj().T @ m @ q
    assert abs(departure_from_normality(m) - departure_from_normality(rotated)) <= 1e-9 * max(
        1.0, frobenius_norm(m)
    )


def test_detect_block_structure_on_constructed_blocks():
    t = np.zeros((5, 5), dtype=complex)
    t[0, 0] = 4.0
    t[0, 1] = 1.0
    t[1, 1] = 3.0
    t[2, 2] = 2.0
    t[3, 3] = 1.0
    t[3, 4] = 0.5
    t[4, 4] = 0.5
    b = detect_block_structure(t)
    assert b.sizes == (2, 1, 2)
    assert b.s == 3


def test_detect_block_structure_edge_cases():
    assert detect_block_structure(np.zeros((3, 3))).s == 3
    assert detect_block_structure(np.diag([1.0, 2.0])).sizes == (1, 1)
    dense = np.triu(np.ones((4, 4)))
    assert detect_block_structure(dense).s == 1
    with pytest.raises(ValueError):
        detect_block_structure(np.ones((3, 3)))


def test_detect_block_structure_tolerance():
    t = np.array([[1.0, 1e-6], [0.0, 2.0]], dtype=complex)
    assert detect_block_structure(t, tol=1e-12).s == 1
    assert detect_block_structure(t, tol=1e-3).s == 2


def test_decomposition_quality_batch():
    # moderate version of the wider acceptance sweep
    rng = rng_for(99)
    for _ in range(50):
        n = int(rng.integers(2, 17))
        m = random_complex(rng, (n, n))
        form = schur_decompose(m)
        tol = 1e-10 * n * max(1.0, frobenius_norm(m))
        assert all(res <= tol for res in schur_residuals(m, form))
