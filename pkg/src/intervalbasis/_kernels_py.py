"""Pure numpy fallback for the Z_p elimination kernels.

Mirrors ``_kernels.pyx`` function for function.  All inputs are int64
arrays with entries in ``[0, p)``; inputs are never modified.
"""

from __future__ import annotations

import numpy as np


def _inv(a: int, p: int) -> int:
    return pow(int(a), -1, p)


def rref_mod_p(a, p):
    """Reduced row echelon form. Returns ``(R, pivot_columns)``."""
    r = np.array(a, dtype=np.int64, copy=True)
    rows, cols = r.shape
    pivots = []
    row = 0
    for col in range(cols):
        if row == rows:
            break
        nz = np.flatnonzero(r[row:, col])
        if nz.size == 0:
            continue
        src = row + int(nz[0])
        if src != row:
            r[[row, src]] = r[[src, row]]
        r[row] = (r[row] * _inv(r[row, col], p)) % p
        factors = r[:, col].copy()
        factors[row] = 0
        hit = np.flatnonzero(factors)
        if hit.size:
            r[hit] = (r[hit] - np.outer(factors[hit], r[row])) % p
        pivots.append(col)
        row += 1
    return r, pivots


def reduce_columns_mod_p(a, p):
    """Left-to-right column reduction. Returns ``(R, V)`` with ``R = A V``."""
    r = np.array(a, dtype=np.int64, copy=True)
    rows, cols = r.shape
    v = np.eye(cols, dtype=np.int64)
    owner = np.full(rows, -1, dtype=np.int64)
    for j in range(cols):
        while True:
            nz = np.flatnonzero(r[:, j])
            if nz.size == 0:
                break
            low = int(nz[-1])
            i = int(owner[low])
            if i < 0:
                owner[low] = j
                break
            gamma = (int(r[low, j]) * _inv(r[low, i], p)) % p
            r[:, j] = (r[:, j] - gamma * r[:, i]) % p
            v[:, j] = (v[:, j] - gamma * v[:, i]) % p
    return r, v


def extend_basis_mod_p(u, w, p):
    """Indices of the columns of ``w`` that extend ``span(u)``, scanned in order."""
    store = []  # (pivot, vector with vector[pivot] == 1)

    def residual(vec):
        vec = vec.copy()
        for piv, basis in store:
            c = vec[piv]
            if c:
                vec = (vec - c * basis) % p
        return vec

    def push(vec):
        nz = np.flatnonzero(vec)
        if nz.size == 0:
            return False
        piv = int(nz[0])
        store.append((piv, (vec * _inv(vec[piv], p)) % p))
        return True

    for j in range(u.shape[1]):
        push(residual(np.asarray(u[:, j], dtype=np.int64)))
    accepted = []
    for j in range(w.shape[1]):
        if push(residual(np.asarray(w[:, j], dtype=np.int64))):
            accepted.append(j)
    return accepted
