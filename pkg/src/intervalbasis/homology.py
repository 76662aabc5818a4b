"""Persistent homology module built step by step from a chain tower."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg
from .errors import InconsistentSystem, NotAChainComplex, NotInCycleSpace
from .field import Field
from .parallel import run_steps
from .pmodule import PersistenceModule
from .simplicial import ChainTower


@dataclass
class HomologyStep:
    """Splitting basis of ``Z_k``: cycle representatives of ``H_k`` plus a basis of ``B_k``."""

    k: int
    betti: int
    harmonic_reps: np.ndarray  # dim C_k x betti
    boundary_reps: np.ndarray  # dim C_k x r

    @property
    def cycle_basis(self) -> np.ndarray:
        return np.concatenate([self.harmonic_reps, self.boundary_reps], axis=1)


def _nonzero_column(col, field, scale) -> bool:
    return bool(field.nonzero(col, scale).any())


def homology_step(d_k, d_k1, field: Field, k: int = 0) -> HomologyStep:
    """Split ``Z_k = span(h) + B_k`` using left-to-right reductions of ``d_k`` and ``d_{k+1}``."""
    d_k = field.asarray(d_k)
    d_k1 = field.asarray(d_k1)
    if d_k.shape[1] != d_k1.shape[0]:
        raise NotAChainComplex(f"d_{k} has {d_k.shape[1]} columns but d_{k + 1} has {d_k1.shape[0]} rows")
    prod = field.matmul(d_k, d_k1)
    if prod.size and field.nonzero(prod).any():
        raise NotAChainComplex(f"d_{k} d_{k + 1} != 0")
    dim = d_k.shape[1]
    scale = max(1.0, float(np.max(np.abs(np.asarray(d_k1, dtype=float))))) if d_k1.size else 1.0

    r_k, v_k = linalg.reduce_left_to_right(d_k, field)
    r_k1, _ = linalg.reduce_left_to_right(d_k1, field)
    bnd = [r_k1[:, j] for j in range(r_k1.shape[1]) if _nonzero_column(r_k1[:, j], field, scale)]
    cyc = [v_k[:, j] for j in range(v_k.shape[1]) if not _nonzero_column(r_k[:, j], field, scale)]

    # boundary columns already have distinct lows; reduce each cycle against them
    # and against the cycles kept so far
    owner: dict[int, np.ndarray] = {}
    for b in bnd:
        owner[linalg.low(b, field, scale)] = b
    reps = []
    for z in cyc:
        z = z.copy()
        while True:
            lo = linalg.low(z, field, scale)
            if lo < 0 or lo not in owner:
                break
            piv = owner[lo]
            gamma = field.div(z[lo], piv[lo])
            z = field.asarray(z - gamma * piv)
            if not field.exact:
                z[lo] = 0.0
                z[~field.nonzero(z, scale)] = 0.0
        if lo >= 0:
            owner[lo] = z
            reps.append(z)
    h = field.asarray(np.column_stack(reps)) if reps else field.zeros((dim, 0))
    b = field.asarray(np.column_stack(bnd)) if bnd else field.zeros((dim, 0))
    return HomologyStep(k, len(reps), h, b)


def induced_map(f_k, src: HomologyStep, dst: HomologyStep, field: Field) -> np.ndarray:
    """Matrix of the induced map ``H_k(C) -> H_k(D)`` in the bases of ``src`` and ``dst``.

    Column ``i`` holds the ``h``-coordinates of ``f_k(h_i^C)`` written in
    the splitting basis of ``Z_k(D)``.
    """
    f_k = field.asarray(f_k)
    rhs = field.matmul(f_k, src.harmonic_reps)
    basis = dst.cycle_basis
    try:
        coeffs = linalg.solve(basis, rhs, field)
    except InconsistentSystem as exc:
        raise NotInCycleSpace(f"image of a cycle is not a cycle of the target: {exc}") from exc
    return field.asarray(coeffs[: dst.betti, :])


def homology_steps(tower: ChainTower, k: int, threads: int = 1) -> list[HomologyStep]:
    items = [(i + 1, i) for i in range(len(tower))]
    return run_steps(lambda i: homology_step(tower.boundary(i, k), tower.boundary(i, k + 1), tower.field, k),
                      items, threads)


def build_persistent_homology(tower: ChainTower, k: int, field: Field | None = None, threads: int = 1,
                              return_steps: bool = False):
    """The degree-``k`` persistent homology module of ``tower``.

    Steps and maps are computed as independent tasks.  With
    ``return_steps`` the per-step splitting bases are returned as well.
    """
    if field is not None and field != tower.field:
        tower = tower.with_field(field)
    steps = homology_steps(tower, k, threads)
    items = [(i + 1, i) for i in range(len(tower) - 1)]
    maps = run_steps(lambda i: induced_map(tower.chain_map(i, k), steps[i], steps[i + 1], tower.field),
                      items, threads)
    module = PersistenceModule(tower.field, [s.betti for s in steps], maps)
    return (module, steps) if return_steps else module
