"""Harmonic persistence over the reals.

Each step is ``ker L_k`` of the Hodge Laplacian with an orthonormal basis
``V``; each map projects the pushed-forward harmonics back onto the
target's harmonics, ``Phi = V_D^T f_k V_C``.  Chain maps do not send
harmonics to harmonics, so only the projected map is ever used.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import linalg
from .errors import ConvergenceFailure, DimensionMismatch, NotAChainComplex, TolMismatch
from .field import RationalField, RealField
from .parallel import run_steps
from .pmodule import PersistenceModule
from .simplicial import ChainTower


@dataclass
class HarmonicStep:
    k: int
    V: np.ndarray  # orthonormal columns spanning ker L_k

    @property
    def dim(self) -> int:
        return self.V.shape[1]


def laplacian(d_k, d_k1, tol: float = 1e-9) -> np.ndarray:
    """``L_k = d_{k+1} d_{k+1}^T + d_k^T d_k`` for the standard inner product."""
    d_k = np.asarray(d_k, dtype=np.float64)
    d_k1 = np.asarray(d_k1, dtype=np.float64)
    if d_k.shape[1] != d_k1.shape[0]:
        raise NotAChainComplex(f"d_k has {d_k.shape[1]} columns but d_(k+1) has {d_k1.shape[0]} rows")
    prod = d_k @ d_k1
    scale = max(1.0, float(np.max(np.abs(d_k), initial=0.0)) * float(np.max(np.abs(d_k1), initial=0.0)))
    if prod.size and np.max(np.abs(prod)) > tol * scale * max(prod.shape):
        raise NotAChainComplex("d_k d_(k+1) != 0")
    return d_k1 @ d_k1.T + d_k.T @ d_k


def harmonic_step(d_k, d_k1, tol: float = 1e-9, k: int = 0, expected_betti: int | None = None) -> HarmonicStep:
    """Orthonormal basis of the harmonic ``k``-chains.

    Eigenvalues ``<= tol * max(1, lambda_max)`` count as zero.  With
    ``expected_betti`` the kernel dimension is cross-checked and a
    disagreement raises :class:`TolMismatch`.
    """
    lap = laplacian(d_k, d_k1, tol)
    n = lap.shape[0]
    if n == 0:
        return HarmonicStep(k, np.zeros((0, 0)))
    try:
        w, vecs = np.linalg.eigh(lap)
    except np.linalg.LinAlgError as exc:
        raise ConvergenceFailure(str(exc)) from exc
    cut = tol * max(1.0, float(w[-1]))
    kernel = vecs[:, w <= cut]
    if expected_betti is not None and kernel.shape[1] != expected_betti:
        raise TolMismatch(f"degree {k}: dim ker L = {kernel.shape[1]} but Betti number is {expected_betti}")
    return HarmonicStep(k, kernel.copy())


def harmonic_induced_map(f_k, src: HarmonicStep, dst: HarmonicStep) -> np.ndarray:
    f_k = np.asarray(f_k, dtype=np.float64)
    if f_k.shape != (dst.V.shape[0], src.V.shape[0]):
        raise DimensionMismatch(f"chain map has shape {f_k.shape}, expected {(dst.V.shape[0], src.V.shape[0])}")
    return dst.V.T @ f_k @ src.V


def hodge_decomposition(d_k, d_k1, tol: float = 1e-9):
    """Orthonormal bases ``(B, H, C)`` of ``im d_{k+1}``, ``ker L_k`` and ``im d_k^T``.

    Together the three blocks span the ``k``-chains and are mutually orthogonal.
    """
    real = RealField(tol)
    d_k = np.asarray(d_k, dtype=np.float64)
    d_k1 = np.asarray(d_k1, dtype=np.float64)
    boundaries = linalg.image_basis(d_k1, real)
    coboundaries = linalg.image_basis(d_k.T, real)
    return boundaries, harmonic_step(d_k, d_k1, tol).V, coboundaries


def _is_integral(m: np.ndarray) -> bool:
    arr = np.asarray(m, dtype=object)
    return all(Fraction(x).denominator == 1 for x in arr.reshape(-1))


def exact_betti(d_k, d_k1) -> int:
    """``dim ker d_k - rank d_{k+1}`` with exact rational ranks."""
    q = RationalField()
    return d_k.shape[1] - linalg.rank(q.asarray(d_k), q) - linalg.rank(q.asarray(d_k1), q)


def harmonic_steps(tower: ChainTower, k: int, tol: float = 1e-9, threads: int = 1,
                   check_betti: bool = True) -> list[HarmonicStep]:
    def one(i):
        d_k, d_k1 = tower.boundary(i, k), tower.boundary(i, k + 1)
        expected = None
        if check_betti and _is_integral(d_k) and _is_integral(d_k1):
            expected = exact_betti(d_k, d_k1)
        return harmonic_step(d_k, d_k1, tol, k, expected)

    return run_steps(one, [(i + 1, i) for i in range(len(tower))], threads)


def build_harmonic_module(tower: ChainTower, k: int, threads: int = 1, tol: float = 1e-9,
                          check_betti: bool = True, return_steps: bool = False):
    """Harmonic persistence module of ``tower`` in degree ``k`` (field: reals)."""
    real = RealField(tol)
    if tower.field != real:
        tower = tower.with_field(real)
    steps = harmonic_steps(tower, k, tol, threads, check_betti)
    maps = run_steps(lambda i: harmonic_induced_map(tower.chain_map(i, k), steps[i], steps[i + 1]),
                      [(i + 1, i) for i in range(len(tower) - 1)], threads)
    module = PersistenceModule(real, [s.dim for s in steps], maps)
    return (module, steps) if return_steps else module
