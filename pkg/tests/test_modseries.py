"""Reduced int64 kernels against the exact kernels, and the overflow guard."""

import numpy as np
import pytest

from q3series import modseries
from q3series.eta import euler_terms, jacobi_cube_terms
from q3series.series import mul_sparse, solve_monic_sparse


def test_solve_matches_exact():
    n, mod = 400, 3**15
    terms = jacobi_cube_terms(1, n)
    rhs = list(range(1, n + 1))
    exact = solve_monic_sparse(terms, rhs, n)
    reduced = modseries.solve_monic_sparse_mod(terms, np.array(rhs, dtype=np.int64), n, mod)
    assert [v % mod for v in exact] == [int(v) for v in reduced]


def test_mul_matches_exact():
    n, mod = 400, 3**15
    terms = euler_terms(2, n)
    dense = [((-1) ** k) * k for k in range(n)]
    exact = mul_sparse(dense, terms, n)
    reduced = modseries.mul_sparse_mod(np.array(dense, dtype=np.int64), terms, n, mod)
    assert [v % mod for v in exact] == [int(v) for v in reduced]


def test_python_fallback_matches_selected_impl():
    n, mod = 200, 3**7
    terms = jacobi_cube_terms(1, n)
    gaps = np.array([g for g, _ in terms[1:]], dtype=np.int64)
    coeffs = np.array([c % mod for _, c in terms[1:]], dtype=np.int64)
    rhs = np.zeros(n, dtype=np.int64)
    rhs[0] = 1
    via_py = modseries._solve_py(gaps, coeffs, rhs, mod)
    via_selected = modseries._solve_impl(gaps, coeffs, rhs, mod)
    assert (via_py == via_selected).all()
    dense = np.arange(n, dtype=np.int64)
    assert (modseries._mul_py(dense, gaps, coeffs, mod)
            == modseries._mul_impl(dense, gaps, coeffs, mod)).all()


def test_overflow_guard():
    with pytest.raises(OverflowError):
        modseries._check_overflow(nterms=10**6, mod=3**15)
    modseries._check_overflow(nterms=4000, mod=3**15)


def test_non_monic_rejected():
    with pytest.raises(ValueError):
        modseries.solve_monic_sparse_mod([(0, 2)], np.ones(4, dtype=np.int64), 4, 27)
