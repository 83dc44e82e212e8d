import numpy as np
import pytest

from braidloc.gybe import GybOperator
from braidloc.hecke import (
    catalan,
    closed_form_eta,
    fit_quadratic,
    markov_check,
    noncrossing_matchings,
    tl_diagrams,
    tl_gram,
    tl_quotient_dims,
)
from braidloc.linalg import DomainError, InputError
from oracles import tl_dims_by_paths

OMEGA = np.exp(1j * np.pi / 3)


def test_fit_quadratic_exact_hecke_generator():
    q = np.exp(0.4j)
    fit = fit_quadratic(np.diag([q, -1, q, -1]))
    assert abs(fit.q - q) < 1e-12 and fit.rescale == pytest.approx(1)
    assert fit.residual < 1e-12


def test_fit_quadratic_recovers_scale():
    s = 2 * np.exp(0.9j)
    fit = fit_quadratic(s * np.diag([OMEGA, -1, -1]))
    assert abs(fit.q - OMEGA) < 1e-12
    assert abs(fit.rescale * s - 1) < 1e-12


def test_fit_quadratic_rejects_three_eigenvalues():
    with pytest.raises(DomainError):
        fit_quadratic(np.diag([1, -1, 1j]))


def test_case_study_fit(case_op):
    from braidloc.gybe import build_generator

    fit = fit_quadratic(build_generator(case_op, 4, 1))
    assert fit.residual < 1e-10
    assert abs(fit.q**6 - 1) < 1e-10 and abs(fit.q**2 - 1) > 0.5 and abs(fit.q**3 - 1) > 0.5


def test_closed_form_eta_pole_at_sixth_root():
    assert abs(1 + OMEGA**3) < 1e-15
    assert closed_form_eta(np.exp(0.5j)) == pytest.approx((1 - np.exp(-1j)) / (1 + np.exp(1.5j)))


def test_markov_with_observed_eta(case_op):
    probe = markov_check(case_op, 4, 0)
    report = markov_check(case_op, 4, 4, eta=probe.eta_observed)
    assert report.eta_observed == pytest.approx(0.5)
    assert report.markov_residual <= 1e-10 and report.symmetry_residual <= 1e-10
    assert report.passed()


def test_markov_against_closed_form_is_singular(case_op):
    report = markov_check(case_op, 4, 2)
    assert report.eta_singular and not report.passed()


def test_markov_invariant_under_rescaling(case_op):
    # the phase must keep -chi nearest the negative axis; otherwise the fit picks the conjugate q
    scaled = GybOperator(3, 1, 2, 3 * np.exp(0.4j) * case_op.c)
    a = markov_check(case_op, 4, 3, eta=0.5)
    b = markov_check(scaled, 4, 3, eta=0.5)
    assert abs(a.q - b.q) < 1e-10
    assert abs(a.markov_residual - b.markov_residual) < 1e-10


def test_fit_picks_conjugate_when_phase_rotates_roles(case_op):
    scaled = GybOperator(3, 1, 2, 1j * case_op.c)
    assert abs(markov_check(scaled, 3, 1, eta=0.5).q - np.conj(OMEGA)) < 1e-10


def test_markov_needs_three_strands(case_op):
    with pytest.raises(InputError):
        markov_check(case_op, 2, 1)


@pytest.mark.parametrize("n", range(0, 7))
def test_matching_counts_are_catalan(n):
    assert len(list(noncrossing_matchings(2 * n))) == catalan(n)


def test_tl_diagrams_are_involutions():
    for d in tl_diagrams(3):
        assert all(d[d[p]] == p and d[p] != p for p in range(6))


def test_tl_gram_identity_entry():
    # closing the identity diagram gives n loops: delta^0
    g = tl_gram(3, 1.7)
    ident = tl_diagrams(3).index((3, 4, 5, 0, 1, 2))
    assert g[ident, ident] == pytest.approx(1.0)
    assert np.allclose(g, g.T)


@pytest.mark.parametrize("ell", [4, 5, 6, 7])
def test_tl_dims_match_path_counting(ell):
    n = 6 if ell <= 6 else 5
    assert tl_quotient_dims(ell, n) == [tl_dims_by_paths(ell, k) for k in range(1, n + 1)]


def test_tl_dims_frozen_values():
    assert tl_quotient_dims(6, 6) == [1, 2, 5, 14, 41, 122]
    assert tl_quotient_dims(3, 4) == [1, 1, 1, 1]


def test_tl_dims_generic_are_catalan():
    assert tl_quotient_dims(20, 6) == [catalan(k) for k in range(1, 7)]
