"""The compiled kernels and the numpy fallback must agree exactly."""

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from hypothesis.extra.numpy import arrays

from intervalbasis import _kernels_py as py_backend

cy_backend = pytest.importorskip("intervalbasis._kernels")

PRIMES = st.sampled_from([2, 3, 5, 2147483647])


def matrices(max_side=7):
    shape = st.tuples(st.integers(0, max_side), st.integers(0, max_side))
    return shape.flatmap(lambda s: arrays(np.int64, s, elements=st.integers(0, 6)))


@settings(max_examples=150, deadline=None)
@given(matrices(), PRIMES)
def test_rref_agrees(a, p):
    a = np.mod(a, p)
    r_py, piv_py = py_backend.rref_mod_p(a.copy(), p)
    r_cy, piv_cy = cy_backend.rref_mod_p(a.copy(), p)
    assert list(piv_py) == list(piv_cy)
    assert np.array_equal(r_py, r_cy)


@settings(max_examples=150, deadline=None)
@given(matrices(), PRIMES)
def test_column_reduction_agrees(a, p):
    a = np.mod(a, p)
    r_py, v_py = py_backend.reduce_columns_mod_p(a.copy(), p)
    r_cy, v_cy = cy_backend.reduce_columns_mod_p(a.copy(), p)
    assert np.array_equal(r_py, r_cy)
    assert np.array_equal(v_py, v_cy)
    # R = A V over Z_p
    assert np.array_equal(np.mod(a.astype(object) @ v_cy.astype(object), p).astype(np.int64), r_cy)


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 6), st.integers(0, 4), st.integers(0, 5), PRIMES, st.randoms(use_true_random=False))
def test_basis_extension_agrees(dim, k, m, p, rnd):
    u = np.array([[rnd.randrange(3) for _ in range(k)] for _ in range(dim)], dtype=np.int64).reshape(dim, k)
    w = np.array([[rnd.randrange(3) for _ in range(m)] for _ in range(dim)], dtype=np.int64).reshape(dim, m)
    u, w = np.mod(u, p), np.mod(w, p)
    assert list(py_backend.extend_basis_mod_p(u, w, p)) == list(cy_backend.extend_basis_mod_p(u, w, p))


def test_backend_selection():
    from intervalbasis import kernels

    assert kernels.BACKEND in ("cython", "python")
