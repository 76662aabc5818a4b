"""Interval-basis decomposition of a persistence module.

For every step ``b`` the generators born there are found independently:
grow a basis of ``im phi_{b-1}`` by kernel vectors of ``phi_{b,b+s}`` for
increasing ``s``.  A kernel vector that enlarges the span is a generator
born at ``b`` that dies at ``b + s``.  Steps share nothing, so they are
dispatched to a thread pool and merged by step index.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

import numpy as np

from . import linalg
from .field import RealField
from .parallel import run_steps
from .pmodule import PersistenceModule, PersistencePair


@dataclass
class BirthSet:
    """Generators born at ``step``: columns of ``vectors`` with index function ``J``."""

    step: int
    vectors: np.ndarray
    J: list[int] = dc_field(default_factory=list)

    def __len__(self):
        return len(self.J)


@dataclass(frozen=True)
class IntervalElement:
    vector: np.ndarray
    birth: int
    death: int


@dataclass
class IntervalBasis:
    elements: list[IntervalElement]
    module: PersistenceModule

    def pairs(self) -> list[PersistencePair]:
        return [PersistencePair(e.birth, e.death) for e in self.elements]

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


def _incoming(module: PersistenceModule, i: int) -> np.ndarray:
    if i == 1:
        return module.field.zeros((module.dims[0], 0))
    return module.map(i - 1)


def _empty_birth_set(module: PersistenceModule, i: int) -> BirthSet:
    return BirthSet(i, module.field.zeros((module.dims[i - 1], 0)), [])


def ssd(module: PersistenceModule, i: int) -> BirthSet:
    """Single step decomposition of ``M_i`` over any field.

    ``module`` must already be truncated (its last step zero-dimensional).
    """
    field = module.field
    dim = module.dims[i - 1]
    u = linalg.image_basis(_incoming(module, i), field)
    k = u.shape[1]
    if dim == 0 or k == dim:
        return _empty_birth_set(module, i)
    births: list[np.ndarray] = []
    J: list[int] = []
    r_mat = field.eye(dim)
    r = dim
    for s in range(module.n - i):
        r_mat = field.matmul(module.map(i + s), r_mat)
        r_new = linalg.rank(r_mat, field)
        if r_new < r:
            kernel = linalg.kernel_basis(r_mat, field)
            new = linalg.bca(u, kernel, field)
            if new.shape[1]:
                u = np.concatenate([u, new], axis=1)
                births.extend(new[:, c] for c in range(new.shape[1]))
                J.extend([s + 1] * new.shape[1])
            r = r_new
        if r == 0 or len(births) + k == dim:
            break
    vectors = np.column_stack(births) if births else field.zeros((dim, 0))
    return BirthSet(i, field.asarray(vectors), J)


def ssd_real(module: PersistenceModule, i: int) -> BirthSet:
    """Single step decomposition of ``M_i`` over the reals.

    Instead of recomputing kernels of ever longer composites, each step
    factors the composite restricted to the orthogonal complement of the
    kernel found so far.  ``v_tot`` accumulates the orthogonal changes of
    basis: its leading ``d - lk`` columns span that complement, the trailing
    ``lk`` columns the accumulated kernel.
    """
    field = module.field
    if not isinstance(field, RealField):
        raise TypeError("ssd_real requires a module over the reals")
    d = module.dims[i - 1]
    u = linalg.image_basis(_incoming(module, i), field)
    k = u.shape[1]
    if d == 0 or k == d:
        return _empty_birth_set(module, i)
    births: list[np.ndarray] = []
    J: list[int] = []
    lk = 0
    r_mat = np.eye(d)
    v_tot = np.eye(d)
    for s in range(module.n - i):
        r_mat = module.map(i + s) @ r_mat
        if r_mat.shape[0] == 0:
            width = r_mat.shape[1]
            v, nz, dk = np.eye(width), 0, width
            r_mat = np.zeros((0, 0))
        else:
            r_mat, v, nz, dk = linalg.svd_step(r_mat, field)
        width = v.shape[0]
        v_tmp = np.eye(d)
        v_tmp[:width, :width] = v
        v_tot = v_tot @ v_tmp
        if dk > 0:
            block = v_tot[:, d - lk - dk : d - lk]
            keep = linalg.bca_indices(u, block, field)
            u = np.concatenate([u, block], axis=1)
            births.extend(block[:, c].copy() for c in keep)
            J.extend([s + 1] * len(keep))
            lk += dk
        if nz == 0 or len(births) + k == d:
            break
    vectors = np.column_stack(births) if births else np.zeros((d, 0))
    return BirthSet(i, vectors, J)


def pmd(module: PersistenceModule, use_real_path: bool | None = None, threads: int = 1):
    """Persistence module decomposition.

    Returns ``(IntervalBasis, pairs)``.  Deaths equal to ``n + 1`` are the
    essential bars of the untruncated module.  Output is sorted by
    ``(birth, death, discovery order)`` and is independent of ``threads``.
    """
    module.validate()
    if use_real_path is None:
        use_real_path = isinstance(module.field, RealField)
    truncated = module.truncate_essential()
    step_fn = ssd_real if use_real_path else ssd
    items = [(b, b) for b in range(1, module.n + 1)]
    birth_sets = run_steps(lambda b: step_fn(truncated, b), items, threads)
    elements = []
    for bs in birth_sets:
        order = sorted(range(len(bs.J)), key=lambda c: (bs.J[c], c))
        for c in order:
            elements.append(IntervalElement(bs.vectors[:, c].copy(), bs.step, bs.step + bs.J[c]))
    basis = IntervalBasis(elements, module)
    return basis, basis.pairs()


# -- certificates ---------------------------------------------------------


def _composite(module: PersistenceModule, i: int, j: int):
    # maps past the last step are zero (truncation)
    if j > module.n:
        return module.field.zeros((0, module.dims[i - 1]))
    return module.compose(i, j)


def verify_interval_basis(module: PersistenceModule, basis: IntervalBasis) -> list[str]:
    """Check the interval-basis property; returns a list of violations (empty if valid).

    * at every step the images of the alive generators are independent and
      number exactly ``dim M_i``;
    * every generator dies exactly at its death index;
    * no generator lies in the image of the incoming map.
    """
    field = module.field
    problems: list[str] = []
    for i in range(1, module.n + 1):
        alive = [e for e in basis if e.birth <= i < e.death]
        if len(alive) != module.dims[i - 1]:
            problems.append(f"step {i}: {len(alive)} alive generators, dimension {module.dims[i - 1]}")
            continue
        if not alive:
            continue
        images = np.column_stack([field.matmul(module.compose(e.birth, i), e.vector) for e in alive])
        if linalg.rank(field.asarray(images), field) != len(alive):
            problems.append(f"step {i}: images of alive generators are dependent")
    for e in basis:
        scale = max(1.0, float(np.max(np.abs(np.asarray(e.vector, dtype=float))))) if e.vector.size else 1.0
        last = field.matmul(_composite(module, e.birth, e.death - 1), e.vector)
        if not field.nonzero(last, scale).any():
            problems.append(f"generator born at {e.birth} dies before {e.death}")
        if e.death <= module.n:
            dead = field.matmul(_composite(module, e.birth, e.death), e.vector)
            if field.nonzero(dead, scale).any():
                problems.append(f"generator born at {e.birth} survives step {e.death}")
        if e.birth > 1:
            img = linalg.image_basis(module.map(e.birth - 1), field)
            both = np.concatenate([img, field.asarray(e.vector.reshape(-1, 1))], axis=1)
            if linalg.rank(both, field) != img.shape[1] + 1:
                problems.append(f"generator born at {e.birth} lies in the incoming image")
    return problems
