# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled Z_p elimination kernels.

Same signatures and results as ``_kernels_py``.  Inner loops run without
the GIL so per-step tasks scheduled on threads can overlap.
"""

import numpy as np
cimport numpy as cnp

from libc.stdint cimport int64_t

cnp.import_array()


cdef inline int64_t _inv(int64_t a, int64_t p) noexcept nogil:
    cdef int64_t t = 0, new_t = 1, r = p, new_r = a % p, q, tmp
    while new_r != 0:
        q = r // new_r
        tmp = t - q * new_t
        t = new_t
        new_t = tmp
        tmp = r - q * new_r
        r = new_r
        new_r = tmp
    if t < 0:
        t += p
    return t


cdef inline int64_t _axpy(int64_t y, int64_t c, int64_t x, int64_t p) noexcept nogil:
    # (y - c*x) mod p for residues y, c, x
    cdef int64_t prod = (c * x) % p
    y -= prod
    if y < 0:
        y += p
    return y


def rref_mod_p(a, int64_t p):
    cdef cnp.ndarray[cnp.int64_t, ndim=2] arr = np.array(a, dtype=np.int64, copy=True, order="C")
    cdef int64_t[:, ::1] r = arr
    cdef Py_ssize_t rows = r.shape[0], cols = r.shape[1]
    cdef Py_ssize_t row = 0, col, i, k, src
    cdef int64_t tmp, scale, f
    pivots = []
    for col in range(cols):
        if row == rows:
            break
        with nogil:
            src = -1
            for i in range(row, rows):
                if r[i, col] != 0:
                    src = i
                    break
            if src >= 0:
                if src != row:
                    for k in range(cols):
                        tmp = r[row, k]
                        r[row, k] = r[src, k]
                        r[src, k] = tmp
                scale = _inv(r[row, col], p)
                for k in range(cols):
                    r[row, k] = (r[row, k] * scale) % p
                for i in range(rows):
                    if i == row:
                        continue
                    f = r[i, col]
                    if f == 0:
                        continue
                    for k in range(cols):
                        r[i, k] = _axpy(r[i, k], f, r[row, k], p)
        if src >= 0:
            pivots.append(col)
            row += 1
    return arr, pivots


def reduce_columns_mod_p(a, int64_t p):
    cdef cnp.ndarray[cnp.int64_t, ndim=2] arr_r = np.array(a, dtype=np.int64, copy=True, order="F")
    cdef Py_ssize_t rows = arr_r.shape[0], cols = arr_r.shape[1]
    cdef cnp.ndarray[cnp.int64_t, ndim=2] arr_v = np.asfortranarray(np.eye(cols, dtype=np.int64))
    cdef int64_t[::1, :] r = arr_r
    cdef int64_t[::1, :] v = arr_v
    cdef cnp.ndarray[cnp.int64_t, ndim=1] owner_arr = np.full(rows, -1, dtype=np.int64)
    cdef int64_t[::1] owner = owner_arr
    cdef Py_ssize_t j, k, low, i
    cdef int64_t gamma
    with nogil:
        for j in range(cols):
            while True:
                low = -1
                for k in range(rows - 1, -1, -1):
                    if r[k, j] != 0:
                        low = k
                        break
                if low < 0:
                    break
                i = owner[low]
                if i < 0:
                    owner[low] = j
                    break
                gamma = (r[low, j] * _inv(r[low, i], p)) % p
                for k in range(rows):
                    r[k, j] = _axpy(r[k, j], gamma, r[k, i], p)
                for k in range(cols):
                    v[k, j] = _axpy(v[k, j], gamma, v[k, i], p)
    return np.ascontiguousarray(arr_r), np.ascontiguousarray(arr_v)


cdef Py_ssize_t _push(int64_t[:, ::1] store, int64_t[::1] pivots, Py_ssize_t count,
                      int64_t[::1] vec, int64_t p) noexcept nogil:
    # reduce vec against the store; append it if a nonzero residual remains
    cdef Py_ssize_t dim = vec.shape[0], s, k, piv
    cdef int64_t c, scale
    for s in range(count):
        c = vec[pivots[s]]
        if c == 0:
            continue
        for k in range(dim):
            vec[k] = _axpy(vec[k], c, store[s, k], p)
    piv = -1
    for k in range(dim):
        if vec[k] != 0:
            piv = k
            break
    if piv < 0:
        return count
    scale = _inv(vec[piv], p)
    for k in range(dim):
        store[count, k] = (vec[k] * scale) % p
    pivots[count] = piv
    return count + 1


def extend_basis_mod_p(u, w, int64_t p):
    cdef cnp.ndarray[cnp.int64_t, ndim=2] ut = np.ascontiguousarray(np.asarray(u, dtype=np.int64).T)
    cdef cnp.ndarray[cnp.int64_t, ndim=2] wt = np.ascontiguousarray(np.asarray(w, dtype=np.int64).T)
    cdef Py_ssize_t dim = ut.shape[1]
    cdef Py_ssize_t cap = min(dim, ut.shape[0] + wt.shape[0])
    cdef cnp.ndarray[cnp.int64_t, ndim=2] store_arr = np.zeros((max(cap, 1), dim), dtype=np.int64)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] piv_arr = np.zeros(max(cap, 1), dtype=np.int64)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] work = np.zeros(dim, dtype=np.int64)
    cdef int64_t[:, ::1] store = store_arr
    cdef int64_t[::1] pivots = piv_arr
    cdef int64_t[::1] vec = work
    cdef Py_ssize_t count = 0, new_count, j, k
    accepted = []
    for j in range(ut.shape[0]):
        if count == cap:
            break
        for k in range(dim):
            vec[k] = ut[j, k]
        with nogil:
            count = _push(store, pivots, count, vec, p)
    for j in range(wt.shape[0]):
        if count == cap:
            break
        for k in range(dim):
            vec[k] = wt[j, k]
        with nogil:
            new_count = _push(store, pivots, count, vec, p)
        if new_count > count:
            accepted.append(j)
            count = new_count
    return accepted
