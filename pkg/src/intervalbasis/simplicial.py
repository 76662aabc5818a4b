"""Simplicial filtrations and the chain towers they induce.

Simplices are tuples of strictly increasing vertex ids; that order fixes
the orientation.  Chain bases list the ``k``-simplices of a step in
lexicographic order.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from .errors import DimensionMismatch, NotAChainComplex, NotASubcomplex, NotClosedUnderFaces, ParseError
from .field import Field

Simplex = tuple


def simplex(vertices: Iterable[int]) -> Simplex:
    vs = tuple(int(v) for v in vertices)
    if not vs:
        raise ParseError("a simplex needs at least one vertex")
    if any(v < 0 for v in vs):
        raise ParseError(f"negative vertex in {list(vs)}")
    canon = tuple(sorted(set(vs)))
    if len(canon) != len(vs):
        raise ParseError(f"repeated vertex in {list(vs)}")
    return canon


def faces(s: Simplex) -> list[Simplex]:
    """Codimension-one faces, in the order of the omitted vertex."""
    if len(s) == 1:
        return []
    return [s[:i] + s[i + 1 :] for i in range(len(s))]


def closure(simplices: Iterable[Simplex]) -> frozenset:
    out = set()
    for s in simplices:
        for size in range(1, len(s) + 1):
            out.update(combinations(s, size))
    return frozenset(out)


def check_closed(simplices: Iterable[Simplex]) -> None:
    sset = set(simplices)
    for s in sorted(sset, key=lambda x: (len(x), x)):
        for f in faces(s):
            if f not in sset:
                raise NotClosedUnderFaces(s, f)


def k_simplices(simplices: Iterable[Simplex], k: int) -> list[Simplex]:
    return sorted(s for s in simplices if len(s) == k + 1)


def boundary_matrix(simplices: Iterable[Simplex], k: int, field: Field, check: bool = True) -> np.ndarray:
    """Matrix of the boundary ``C_k -> C_{k-1}`` in the lexicographic bases.

    ``k = 0`` gives the zero map onto the zero space (``0 x #vertices``).
    """
    simplices = set(simplices)
    if check:
        check_closed(simplices)
    cols = k_simplices(simplices, k)
    if k == 0:
        return field.zeros((0, len(cols)))
    rows = k_simplices(simplices, k - 1)
    index = {s: i for i, s in enumerate(rows)}
    out = np.zeros((len(rows), len(cols)), dtype=np.int64)
    for j, s in enumerate(cols):
        for i, f in enumerate(faces(s)):
            out[index[f], j] = -1 if i % 2 else 1
    return field.asarray(out)


def inclusion_chain_map(src: Iterable[Simplex], dst: Iterable[Simplex], k: int, field: Field) -> np.ndarray:
    """0/1 matrix sending each ``k``-simplex of ``src`` to itself inside ``dst``."""
    src_k = k_simplices(src, k)
    dst_k = k_simplices(dst, k)
    index = {s: i for i, s in enumerate(dst_k)}
    out = np.zeros((len(dst_k), len(src_k)), dtype=np.int64)
    for j, s in enumerate(src_k):
        if s not in index:
            raise NotASubcomplex(f"simplex {list(s)} of the source is missing from the target")
        out[index[s], j] = 1
    return field.asarray(out)


class FilteredComplex:
    """Nested simplicial complexes ``S_1 <= S_2 <= ... <= S_p``."""

    def __init__(self, steps: Sequence[Iterable[Sequence[int]]], validate: bool = True):
        self.steps = [frozenset(simplex(s) for s in step) for step in steps]
        if validate:
            self.validate()

    @classmethod
    def from_increments(cls, increments: Sequence[Iterable[Sequence[int]]]) -> "FilteredComplex":
        """Step ``i`` is the union of the first ``i`` increments."""
        acc: set = set()
        steps = []
        for inc in increments:
            acc |= {simplex(s) for s in inc}
            steps.append(frozenset(acc))
        return cls(steps)

    @classmethod
    def from_simplexwise(cls, entries: Iterable[tuple[Sequence[int], float]]) -> "FilteredComplex":
        """Compile ``(simplex, value)`` entries into one step per distinct value."""
        entries = [(simplex(v), float(t)) for v, t in entries]
        values = sorted({t for _, t in entries})
        return cls([[s for s, t in entries if t <= value] for value in values])

    def validate(self) -> None:
        for i, step in enumerate(self.steps):
            check_closed(step)
            if i and not self.steps[i - 1] <= step:
                missing = sorted(self.steps[i - 1] - step)[0]
                raise NotASubcomplex(f"simplex {list(missing)} of step {i} is missing from step {i + 1}")

    def __len__(self):
        return len(self.steps)

    @property
    def max_dim(self) -> int:
        return max((len(s) - 1 for step in self.steps for s in step), default=0)

    def tower(self, field: Field, max_degree: int | None = None) -> "ChainTower":
        """Boundary matrices ``d_0..d_K`` per step and inclusion chain maps per arrow."""
        top = self.max_dim if max_degree is None else max_degree
        boundaries = [[boundary_matrix(step, k, field, check=False) for k in range(top + 1)] for step in self.steps]
        maps = [
            [inclusion_chain_map(a, b, k, field) for k in range(top + 1)]
            for a, b in zip(self.steps, self.steps[1:])
        ]
        bases = [[k_simplices(step, k) for k in range(top + 1)] for step in self.steps]
        return ChainTower(field, boundaries, maps, bases=bases, validate=False)


class ChainTower:
    """A sequence of chain complexes joined by chain maps.

    ``boundaries[i][k]`` is ``d_k`` of step ``i`` (0-based) for
    ``k = 0..degrees``; ``maps[i][k]`` is ``f_k`` from step ``i`` to
    ``i + 1``.  Boundaries above ``degrees`` are taken to be zero.
    """

    def __init__(self, field: Field, boundaries, maps, bases=None, validate: bool = True):
        self.field = field
        self.boundaries = [[field.asarray(np.asarray(b, dtype=object)) if not isinstance(b, np.ndarray) else b
                            for b in step] for step in boundaries]
        self.maps = [[field.asarray(np.asarray(f, dtype=object)) if not isinstance(f, np.ndarray) else f
                      for f in arrow] for arrow in maps]
        self.bases = bases
        if validate:
            self.validate()

    @property
    def degrees(self) -> int:
        return len(self.boundaries[0]) - 1 if self.boundaries else -1

    def __len__(self):
        return len(self.boundaries)

    def chain_dim(self, i: int, k: int) -> int:
        if k < 0 or k > self.degrees:
            return 0
        return self.boundaries[i][k].shape[1]

    def boundary(self, i: int, k: int) -> np.ndarray:
        """``d_k`` of step ``i``; zero (with the right shape) outside ``0..degrees``."""
        if 0 <= k <= self.degrees:
            return self.boundaries[i][k]
        return self.field.zeros((self.chain_dim(i, k - 1), self.chain_dim(i, k)))

    def chain_map(self, i: int, k: int) -> np.ndarray:
        if 0 <= k <= self.degrees:
            return self.maps[i][k]
        return self.field.zeros((self.chain_dim(i + 1, k), self.chain_dim(i, k)))

    def with_field(self, field: Field) -> "ChainTower":
        conv = lambda m: field.asarray(np.asarray(m, dtype=object))  # noqa: E731
        return ChainTower(
            field,
            [[conv(b) for b in step] for step in self.boundaries],
            [[conv(f) for f in arrow] for arrow in self.maps],
            bases=self.bases,
            validate=False,
        )

    def validate(self) -> None:
        f = self.field
        if not self.boundaries:
            raise DimensionMismatch("a tower needs at least one step")
        degs = {len(step) for step in self.boundaries}
        if len(degs) != 1:
            raise DimensionMismatch("every step must list the same number of boundary matrices")
        if len(self.maps) != len(self.boundaries) - 1:
            raise DimensionMismatch(f"{len(self.boundaries)} steps need {len(self.boundaries) - 1} maps")
        K = self.degrees
        for i, step in enumerate(self.boundaries):
            if step[0].shape[0] != 0:
                raise DimensionMismatch(f"step {i + 1}: d_0 must map to the zero space")
            for k in range(1, K + 1):
                if step[k].shape[0] != step[k - 1].shape[1]:
                    raise DimensionMismatch(f"step {i + 1}: d_{k} has {step[k].shape[0]} rows, "
                                            f"C_{k - 1} has dimension {step[k - 1].shape[1]}")
                prod = f.matmul(step[k - 1], step[k])
                if prod.size and f.nonzero(prod).any():
                    raise NotAChainComplex(f"step {i + 1}: d_{k - 1} d_{k} != 0")
        for i, arrow in enumerate(self.maps):
            if len(arrow) != K + 1:
                raise DimensionMismatch(f"map {i + 1} must have {K + 1} components")
            for k in range(K + 1):
                want = (self.chain_dim(i + 1, k), self.chain_dim(i, k))
                if arrow[k].shape != want:
                    raise DimensionMismatch(f"map {i + 1}, degree {k}: shape {arrow[k].shape}, expected {want}")
            for k in range(K):
                lhs = f.matmul(arrow[k], self.boundaries[i][k + 1])
                rhs = f.matmul(self.boundaries[i + 1][k + 1], arrow[k + 1])
                if not f.array_equal(lhs, rhs):
                    raise NotAChainComplex(f"map {i + 1} does not commute with d_{k + 1}")
