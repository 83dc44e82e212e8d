import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from braidloc import fixtures
from braidloc.linalg import (
    DomainError,
    InputError,
    Tolerance,
    check_irreducible,
    dagger,
    eigenvalues,
    identity,
    is_unitary,
    kron,
    matrix_from_json,
    matrix_to_json,
    pf_eigendata,
)
from conftest import random_unitary

finite = st.floats(-10, 10, allow_nan=False, allow_infinity=False)


def cmats(shape):
    return st.tuples(arrays(float, shape, elements=finite), arrays(float, shape, elements=finite)).map(
        lambda t: t[0] + 1j * t[1]
    )


@settings(max_examples=40, deadline=None)
@given(cmats((2, 3)), cmats((3, 2)), cmats((2, 2)), cmats((2, 2)))
def test_kron_mixed_product(a, c, b, d):
    lhs = kron(a, b) @ kron(c, d)
    rhs = kron(a @ c, b @ d)
    assert np.allclose(lhs, rhs, atol=1e-8 * (1 + np.abs(rhs).max()))


@settings(max_examples=30, deadline=None)
@given(cmats((2, 2)), cmats((3, 1)), cmats((1, 2)))
def test_kron_associative(a, b, c):
    assert np.allclose(kron(kron(a, b), c), kron(a, kron(b, c)))


@settings(max_examples=30, deadline=None)
@given(cmats((3, 2)), cmats((2, 4)))
def test_dagger_reverses_products(a, b):
    assert np.allclose(dagger(a @ b), dagger(b) @ dagger(a))


def test_kron_of_antidiagonals_is_antidiagonal():
    j = np.fliplr(np.eye(4))
    assert np.array_equal(kron(j, j), np.fliplr(np.eye(16)))


def test_kron_block_layout():
    a = np.array([[1, 2], [3, 4]])
    b = np.array([[0, 1], [1, 0]])
    out = kron(a, b)
    assert np.array_equal(out[2:, :2], 3 * b)


def test_unitary_spectrum_on_circle():
    u = random_unitary(np.random.default_rng(5), 6)
    assert is_unitary(u)
    assert np.allclose(np.abs(eigenvalues(u)), 1, atol=1e-12)


def test_non_unitary_rejected():
    assert not is_unitary(np.array([[1, 1], [0, 1]]))


@pytest.mark.parametrize("ell", range(3, 13))
def test_pf_of_path_graph(ell):
    lam, v = pf_eigendata(fixtures.sl2_path(ell).nx)
    assert abs(lam - 2 * np.cos(np.pi / ell)) < 1e-9
    assert np.all(v > 0) and abs(v.sum() - 1) < 1e-12


def test_pf_of_periodic_matrix_converges():
    # a 3-cycle is imprimitive; plain power iteration would oscillate
    m = np.roll(np.eye(3, dtype=int), 1, axis=1)
    lam, v = pf_eigendata(m)
    assert abs(lam - 1) < 1e-12 and np.allclose(v, 1 / 3)


def test_reducible_matrix_rejected():
    with pytest.raises(DomainError, match="index 2"):
        check_irreducible(np.array([[0, 1, 0], [1, 0, 0], [0, 0, 1]]))


def test_pf_rejects_negative_entries():
    with pytest.raises(InputError):
        pf_eigendata(np.array([[0, -1], [1, 0]]))


def test_json_round_trip():
    u = random_unitary(np.random.default_rng(1), 3)
    assert np.array_equal(matrix_from_json(matrix_to_json(u)), u)


def test_json_length_mismatch():
    with pytest.raises(InputError, match="expected 4 entries"):
        matrix_from_json({"rows": 2, "cols": 2, "entries": [[1, 0]] * 3})


def test_tolerance_bound():
    tol = Tolerance(abs=1e-9, rel=1e-6)
    assert tol.accepts(1e-6, scale=1.0)
    assert not Tolerance.of(1e-9).accepts(1e-6, scale=1.0)
    with pytest.raises(InputError):
        Tolerance(abs=0, rel=0)


def test_identity_dtype():
    assert identity(3).dtype == np.complex128
