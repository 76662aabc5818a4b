"""Random instance generators and small oracles shared by the tests."""

from __future__ import annotations

import itertools

import numpy as np

from intervalbasis import PersistenceModule, RealField
from intervalbasis.simplicial import closure, simplex


def example_module(field):
    """dims [1, 2, 1] with maps (1, 0)^T and (1 1)."""
    return PersistenceModule(field, [1, 2, 1], [[[1], [0]], [[1, 1]]])


def random_matrix(rng, rows, cols, field, low_rank=False):
    if low_rank and rows and cols:
        inner = int(rng.integers(0, min(rows, cols) + 1))
        a = rng.integers(-2, 3, size=(rows, inner)) @ rng.integers(-2, 3, size=(inner, cols))
    else:
        density = rng.uniform(0.15, 0.9)
        a = rng.integers(-2, 3, size=(rows, cols)) * (rng.random((rows, cols)) < density)
    return field.asarray(a.astype(np.int64))


def random_module(rng, field, max_dim=8, max_len=6):
    n = int(rng.integers(1, max_len + 1))
    dims = [int(rng.integers(0, max_dim + 1)) for _ in range(n)]
    low_rank = bool(rng.random() < 0.5)
    maps = [random_matrix(rng, dims[i + 1], dims[i], field, low_rank) for i in range(n - 1)]
    return PersistenceModule(field, dims, maps)


def random_filtration(rng, max_simplices=20, max_steps=5, n_vertices=6, max_dim=3):
    """Cumulative list of simplicial complexes, each closed under faces."""
    current: set = set()
    for _ in range(40):
        k = int(rng.choice(5, p=[0.1, 0.4, 0.3, 0.05, 0.15]))
        if k == 4:  # hollow tetrahedron, a 2-sphere
            verts = rng.choice(n_vertices, size=4, replace=False)
            cand = closure([simplex(verts)]) - {simplex(verts)}
        else:
            k = min(k, max_dim)
            cand = closure([simplex(rng.choice(n_vertices, size=k + 1, replace=False))])
        if len(current | cand) <= max_simplices:
            current |= cand
    n_steps = int(rng.integers(1, max_steps + 1))
    when = {}
    for s in sorted(current, key=len):
        t = int(rng.integers(1, n_steps + 1))
        if len(s) > 1:
            t = max([t] + [when[f] for f in itertools.combinations(s, len(s) - 1)])
        when[s] = t
    return [sorted((list(s) for s, t in when.items() if t <= i), key=lambda x: (len(x), x))
            for i in range(1, n_steps + 1)]


def pair_multiset(pairs):
    return sorted((p.birth, p.death) for p in pairs)


def orth(a, tol=1e-10):
    a = np.asarray(a, dtype=float)
    if a.size == 0:
        return np.zeros((a.shape[0], 0))
    u, s, _ = np.linalg.svd(a, full_matrices=False)
    return u[:, s > tol * max(1.0, s.max(initial=0.0))]


def subspace_angle(v, basis):
    """Angle in radians between vector ``v`` and ``span(basis)``."""
    v = np.asarray(v, dtype=float)
    q = orth(basis)
    norm = np.linalg.norm(v)
    if norm == 0:
        return 0.0
    resid = np.linalg.norm(v - q @ (q.T @ v))
    return float(np.arcsin(min(1.0, resid / norm)))


def as_real(module):
    return module.with_field(RealField(1e-9))


# Triangulated annulus built in three steps: two disjoint hollow triangles, then
# the strip joining them.  H_1 realizes the module of ``example_module``.
ANNULUS_INCREMENTS = [
    sorted(closure([(0, 1), (0, 2), (1, 2)])),
    sorted(closure([(3, 4), (3, 5), (4, 5)])),
    sorted(closure([(0, 1, 4), (0, 3, 4), (1, 2, 5), (1, 4, 5), (0, 2, 5), (0, 3, 5)])),
]
