"""Dense linear algebra over a :class:`~intervalbasis.field.Field`.

Matrices are 2-D numpy arrays in the field's dtype.  A set of vectors
(a "basis set") is a 2-D array whose *columns* are the vectors, so the
ambient dimension survives even when the set is empty.

Exact fields use Gaussian elimination (Z_p goes through the compiled
kernels); the real field uses the SVD for every rank decision.
"""

from __future__ import annotations

import numpy as np

from . import kernels
from .errors import ConvergenceFailure, DimensionMismatch, InconsistentSystem
from .field import Field, PrimeField, RealField


def _as_matrix(a, field: Field) -> np.ndarray:
    arr = field.asarray(a)
    if arr.ndim != 2:
        raise DimensionMismatch(f"expected a 2-D matrix, got shape {arr.shape}")
    return arr


def _scale(a: np.ndarray) -> float:
    return float(np.max(np.abs(a))) if a.size else 0.0


# -- exact elimination ---------------------------------------------------


def _rref_generic(a: np.ndarray, field: Field):
    r = a.copy()
    rows, cols = r.shape
    pivots: list[int] = []
    row = 0
    for col in range(cols):
        if row == rows:
            break
        nz = np.flatnonzero(field.nonzero(r[row:, col]))
        if nz.size == 0:
            continue
        src = row + int(nz[0])
        if src != row:
            r[[row, src]] = r[[src, row]]
        inv = field.inv(r[row, col])
        r[row] = field.asarray(r[row] * inv)
        for i in range(rows):
            if i != row and not field.is_zero(r[i, col]):
                r[i] = field.asarray(r[i] - r[i, col] * r[row])
        pivots.append(col)
        row += 1
    return r, pivots


def rref(a, field: Field):
    """Reduced row echelon form ``(R, pivot_columns)`` over an exact field."""
    if not field.exact:
        raise TypeError("rref is only defined for exact fields")
    a = _as_matrix(a, field)
    if isinstance(field, PrimeField):
        return kernels.rref_mod_p(a, field.p)
    return _rref_generic(a, field)


def singular_threshold(s: np.ndarray, shape, tol: float) -> float:
    """Cut-off below which a singular value counts as zero.

    Relative to the largest singular value, with an absolute floor so that
    round-off residue of an exactly-zero map is not mistaken for rank.
    """
    smax = float(s[0]) if s.size else 0.0
    return tol * max(shape) * max(1.0, smax)


def _svd(a: np.ndarray, full: bool = True):
    try:
        return np.linalg.svd(a, full_matrices=full)
    except np.linalg.LinAlgError as exc:
        raise ConvergenceFailure(str(exc)) from exc


def rank(a, field: Field) -> int:
    a = _as_matrix(a, field)
    if a.size == 0:
        return 0
    if isinstance(field, RealField):
        try:
            s = np.linalg.svd(a, compute_uv=False)
        except np.linalg.LinAlgError as exc:
            raise ConvergenceFailure(str(exc)) from exc
        return int(np.sum(s > singular_threshold(s, a.shape, field.tol)))
    return len(rref(a, field)[1])


def kernel_basis(a, field: Field) -> np.ndarray:
    """Columns spanning ``ker a``; ``cols(a) - rank(a)`` of them.

    Exact fields: one vector per free column of the RREF, in column order.
    Real: the trailing right singular vectors (orthonormal).
    """
    a = _as_matrix(a, field)
    rows, cols = a.shape
    if cols == 0:
        return field.zeros((0, 0))
    if isinstance(field, RealField):
        if rows == 0:
            return np.eye(cols)
        _, s, vh = _svd(a)
        nz = int(np.sum(s > singular_threshold(s, a.shape, field.tol)))
        return vh[nz:].T.copy()
    r, pivots = rref(a, field)
    free = [c for c in range(cols) if c not in set(pivots)]
    out = field.zeros((cols, len(free)))
    one = field.element(1)
    for j, f in enumerate(free):
        out[f, j] = one
        for i, pc in enumerate(pivots):
            out[pc, j] = field.neg(r[i, f])
    return out


def image_basis(a, field: Field) -> np.ndarray:
    """Columns spanning ``im a``: pivot columns of ``a`` (exact) or left singular vectors (real)."""
    a = _as_matrix(a, field)
    rows, cols = a.shape
    if rows == 0 or cols == 0:
        return field.zeros((rows, 0))
    if isinstance(field, RealField):
        u, s, _ = _svd(a)
        nz = int(np.sum(s > singular_threshold(s, a.shape, field.tol)))
        return u[:, :nz].copy()
    _, pivots = rref(a, field)
    return a[:, pivots].copy()


# -- basis completion ----------------------------------------------------


class _OrthoSpan:
    """Incrementally grown orthonormal basis used for real rank-increment tests."""

    def __init__(self, dim: int, tol: float):
        self.q = np.zeros((dim, 0))
        self.tol = tol

    def push(self, w: np.ndarray) -> bool:
        norm = float(np.linalg.norm(w))
        if norm == 0.0:
            return False
        r = w.astype(np.float64).copy()
        for _ in range(2):  # second pass restores orthogonality lost to cancellation
            r -= self.q @ (self.q.T @ r)
        rn = float(np.linalg.norm(r))
        if rn <= self.tol * norm:
            return False
        self.q = np.column_stack([self.q, r / rn])
        return True


def bca_indices(u, w, field: Field) -> list[int]:
    """Indices of the columns of ``w`` kept by basis completion of ``span(u)``.

    Columns of ``w`` are scanned left to right; one is kept iff it is not in
    the span of ``u`` together with the columns kept so far.
    """
    u = _as_matrix(u, field)
    w = _as_matrix(w, field)
    if u.shape[0] != w.shape[0]:
        raise DimensionMismatch(f"ambient dimensions differ: {u.shape[0]} vs {w.shape[0]}")
    dim = u.shape[0]
    if isinstance(field, PrimeField):
        return list(kernels.extend_basis_mod_p(u, w, field.p))
    if isinstance(field, RealField):
        span = _OrthoSpan(dim, field.tol)
        for j in range(u.shape[1]):
            span.push(u[:, j])
        return [j for j in range(w.shape[1]) if span.push(w[:, j])]

    store: list[tuple[int, np.ndarray]] = []

    def push(vec):
        vec = vec.copy()
        for piv, basis in store:
            c = vec[piv]
            if c != 0:
                vec = field.asarray(vec - c * basis)
        nz = np.flatnonzero(field.nonzero(vec))
        if nz.size == 0:
            return False
        piv = int(nz[0])
        store.append((piv, field.asarray(vec * field.inv(vec[piv]))))
        return True

    for j in range(u.shape[1]):
        push(u[:, j])
    return [j for j in range(w.shape[1]) if push(w[:, j])]


def bca(u, w, field: Field) -> np.ndarray:
    """Basis completion: the minimal left-to-right sublist of ``w`` extending ``span(u)``."""
    w = _as_matrix(w, field)
    return w[:, bca_indices(u, w, field)].copy()


# -- left-to-right reduction ----------------------------------------------


def low(col: np.ndarray, field: Field, scale: float = 1.0) -> int:
    """Row index of the lowest nonzero entry, or -1 for a zero column."""
    nz = np.flatnonzero(field.nonzero(col, scale))
    return int(nz[-1]) if nz.size else -1


def reduce_left_to_right(a, field: Field):
    """Column-reduce ``a``; returns ``(R, V)`` with ``R = a V``, ``V`` unit upper triangular.

    Each column is reduced against the earlier column owning its current low
    until its low is unique or the column vanishes.
    """
    a = _as_matrix(a, field)
    if isinstance(field, PrimeField):
        return kernels.reduce_columns_mod_p(a, field.p)
    rows, cols = a.shape
    r = a.copy()
    v = field.eye(cols)
    scale = _scale(a)
    owner: dict[int, int] = {}
    for j in range(cols):
        while True:
            lo = low(r[:, j], field, scale)
            if lo < 0:
                if not field.exact:
                    r[:, j] = 0.0
                break
            i = owner.get(lo)
            if i is None:
                owner[lo] = j
                break
            gamma = field.div(r[lo, j], r[lo, i])
            r[:, j] = field.asarray(r[:, j] - gamma * r[:, i])
            v[:, j] = field.asarray(v[:, j] - gamma * v[:, i])
            if not field.exact:
                r[lo, j] = 0.0
                r[~field.nonzero(r[:, j], scale), j] = 0.0
    return r, v


# -- real decomposition step ------------------------------------------------


def svd_step(a, field: RealField):
    """One matrix decomposition step over the reals.

    Returns ``(R, V, nz, dk)``: ``a = U S V^T``; ``nz`` the numerical rank,
    ``dk = cols - nz``; ``R = U S[:, :nz]`` is ``a`` restricted to the
    orthogonal complement of its kernel, in the coordinates of the first
    ``nz`` columns of ``V``; the last ``dk`` columns of ``V`` span ``ker a``.
    """
    if not isinstance(field, RealField):
        raise TypeError("svd_step requires the real field")
    a = _as_matrix(a, field)
    rows, cols = a.shape
    if rows == 0 or cols == 0:
        return np.zeros((rows, 0)), np.eye(cols), 0, cols
    u, s, vh = _svd(a)
    nz = int(np.sum(s > singular_threshold(s, a.shape, field.tol)))
    r = u[:, :nz] * s[:nz]
    return r, vh.T.copy(), nz, cols - nz


# -- linear systems ----------------------------------------------------------


def solve(a, b, field: Field) -> np.ndarray:
    """Solve ``a X = b`` for ``X`` (``a`` of full column rank).

    One elimination (exact) or one least-squares factorization (real) serves
    all right-hand sides.  Raises :class:`InconsistentSystem` if some column
    of ``b`` is not in the column space of ``a``.
    """
    a = _as_matrix(a, field)
    b = _as_matrix(b, field)
    rows, cols = a.shape
    if b.shape[0] != rows:
        raise DimensionMismatch(f"left side has {rows} rows, right side {b.shape[0]}")
    nrhs = b.shape[1]
    if isinstance(field, RealField):
        if cols == 0:
            x = np.zeros((0, nrhs))
        else:
            try:
                x = np.linalg.lstsq(a, b, rcond=None)[0]
            except np.linalg.LinAlgError as exc:
                raise ConvergenceFailure(str(exc)) from exc
        resid = a @ x - b if rows else np.zeros((0, nrhs))
        scale = max(1.0, _scale(a), _scale(b))
        limit = field.tol * max(1, rows, cols) * scale
        if resid.size and np.max(np.abs(resid)) > limit:
            raise InconsistentSystem(
                f"least-squares residual {np.max(np.abs(resid)):.3e} exceeds {limit:.3e}"
            )
        return x
    aug = np.concatenate([a, b], axis=1) if rows else field.zeros((0, cols + nrhs))
    r, pivots = rref(aug, field)
    if any(pc >= cols for pc in pivots):
        raise InconsistentSystem("right-hand side is not in the column space")
    x = field.zeros((cols, nrhs))
    for i, pc in enumerate(pivots):
        x[pc] = r[i, cols:]
    return x
