import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from src.errors import InvalidInput, NotPositiveDefinite
from src.matcore import (
    as_matrix,
    eig_2x2,
    kron,
    lambda_max_sym,
    max_singular,
    spd_inv_sqrt,
    spd_sqrt,
    sym_eig,
)

MATRIX_DIMENSION = 5
ENTRY_BOUND = 10.0
ABS_TOLERANCE = 1e-9

entries = st.floats(min_value=-ENTRY_BOUND, max_value=ENTRY_BOUND, allow_subnormal=False)


@settings(max_examples=100, deadline=None, derandomize=True)
@given(m=arrays(np.float64, (MATRIX_DIMENSION, MATRIX_DIMENSION), elements=entries))
def test_sym_eig_reconstructs_matrix(m):
    s = 0.5 * (m + m.T)
    eigenvalues, vectors = sym_eig(s)

    scale = 1.0 + float(np.max(np.abs(s)))
    assert np.all(np.diff(eigenvalues) >= -ABS_TOLERANCE * scale)
    assert np.allclose(vectors.T @ vectors, np.eye(MATRIX_DIMENSION), atol=1e-10)
    assert np.allclose(vectors @ np.diag(eigenvalues) @ vectors.T, s, atol=ABS_TOLERANCE * scale)
    assert np.allclose(eigenvalues, np.linalg.eigvalsh(s), atol=ABS_TOLERANCE * scale)


@settings(max_examples=100, deadline=None, derandomize=True)
@given(m=arrays(np.float64, (3, 3), elements=entries))
def test_spd_square_roots(m):
    p = m.T @ m + np.eye(3)
    r = spd_inv_sqrt(p)
    root = spd_sqrt(p)

    scale = 1.0 + float(np.max(np.abs(p)))
    assert np.allclose(r @ p @ r, np.eye(3), atol=1e-8 * scale)
    assert np.allclose(root @ root, p, atol=1e-8 * scale)
    assert np.allclose(r, r.T)


@settings(max_examples=100, deadline=None, derandomize=True)
@given(m=arrays(np.float64, (4, 3), elements=entries))
def test_max_singular_matches_two_norm(m):
    expected = np.linalg.norm(m, 2)
    assert max_singular(m) == pytest.approx(expected, rel=1e-9, abs=1e-9)


def test_lambda_max_of_diagonal():
    assert lambda_max_sym(np.diag([3.0, -1.0, 7.5])) == pytest.approx(7.5)


def test_zero_matrix_has_zero_spectrum():
    eigenvalues, vectors = sym_eig(np.zeros((3, 3)))
    assert np.all(eigenvalues == 0.0)
    assert np.array_equal(vectors, np.eye(3))


def test_asymmetric_input_is_rejected():
    with pytest.raises(InvalidInput, match="not symmetric"):
        sym_eig([[1.0, 2.0], [0.0, 1.0]])


def test_indefinite_matrix_has_no_inverse_square_root():
    with pytest.raises(NotPositiveDefinite) as info:
        spd_inv_sqrt([[1.0, 0.0], [0.0, -2.0]])
    assert info.value.min_eigenvalue == pytest.approx(-2.0)


def test_eig_2x2_orders_by_real_part():
    first, second = eig_2x2([[0.0, -1.0], [2.0, -3.0]])
    assert first == pytest.approx(-1.0)
    assert second == pytest.approx(-2.0)


def test_eig_2x2_complex_pair():
    first, second = eig_2x2([[0.0, 1.0], [-1.0, 0.0]])
    assert first == pytest.approx(1j)
    assert second == pytest.approx(-1j)


def test_eig_2x2_rejects_other_shapes():
    with pytest.raises(InvalidInput):
        eig_2x2(np.eye(3))


def test_kron_matches_numpy():
    a = np.array([[1.0, -1.0], [-1.0, 1.0]])
    assert np.array_equal(kron(a, np.eye(3)), np.kron(a, np.eye(3)))


@settings(max_examples=100, deadline=None, derandomize=True)
@given(
    a=arrays(np.float64, (2, 3), elements=entries),
    b=arrays(np.float64, (3, 2), elements=entries),
    c=arrays(np.float64, (2, 2), elements=entries),
)
def test_kron_is_associative(a, b, c):
    left = kron(kron(a, b), c)
    right = kron(a, kron(b, c))

    assert left.shape == right.shape == (12, 12)
    scale = 1.0 + float(np.max(np.abs(left)))
    assert np.allclose(left, right, rtol=0.0, atol=1e-12 * scale)


@pytest.mark.parametrize(
    "value",
    [
        [1.0, 2.0],
        [[1.0, math.nan]],
        [[]],
        "not a matrix",
    ],
)
def test_as_matrix_rejects_bad_input(value):
    with pytest.raises(InvalidInput):
        as_matrix(value)
