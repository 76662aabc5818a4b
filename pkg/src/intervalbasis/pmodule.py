"""Persistence modules: a finite sequence of steps and structure maps.

Steps are 1-indexed.  A pair ``(b, d)`` means the generator is born in
``M_b``, stays nonzero in ``M_b .. M_{d-1}`` and vanishes in ``M_d``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import linalg
from .errors import IndexOutOfRange, MixedFields, ShapeMismatch
from .field import Field

INFINITY = math.inf


@dataclass(frozen=True, order=True)
class PersistencePair:
    birth: int
    death: float  # int, or INFINITY for an essential pair

    def __post_init__(self):
        if not self.birth < self.death:
            raise ValueError(f"birth {self.birth} must precede death {self.death}")


class PersistenceModule:
    """Steps ``M_1..M_n`` (by dimension) and maps ``phi_i: M_i -> M_{i+1}``."""

    def __init__(self, field: Field, dims: Sequence[int], maps: Sequence, validate: bool = True):
        self.field = field
        self.dims = tuple(int(d) for d in dims)
        self.maps = tuple(self._coerce(m) for m in maps)
        if validate:
            self.validate()

    def _coerce(self, m):
        arr = m if isinstance(m, np.ndarray) else np.asarray(m, dtype=object)
        if arr.ndim != 2:
            arr = arr.reshape(0, 0) if arr.size == 0 else arr
        if self.field.dtype is object or arr.dtype != self.field.dtype:
            arr = self.field.asarray(arr)
        return arr

    @property
    def n(self) -> int:
        return len(self.dims)

    def validate(self) -> None:
        if self.n < 1:
            raise ShapeMismatch(0, "a module needs at least one step")
        if any(d < 0 for d in self.dims):
            raise ShapeMismatch(0, "dimensions must be nonnegative")
        if len(self.maps) != self.n - 1:
            raise ShapeMismatch(
                min(len(self.maps), self.n - 1) + 1,
                f"{self.n} steps need {self.n - 1} maps, got {len(self.maps)}",
            )
        for i, m in enumerate(self.maps, start=1):
            want = (self.dims[i], self.dims[i - 1])
            if m.ndim != 2 or m.shape != want:
                raise ShapeMismatch(i, f"map {i} has shape {m.shape}, expected {want}")

    def map(self, i: int) -> np.ndarray:
        """``phi_i``, 1-based."""
        if not 1 <= i < self.n:
            raise IndexOutOfRange(f"map index {i} outside 1..{self.n - 1}")
        return self.maps[i - 1]

    def compose(self, i: int, j: int) -> np.ndarray:
        """``phi_{i,j} = phi_{j-1} ... phi_i``; the identity when ``i == j``."""
        if not 1 <= i <= j <= self.n:
            raise IndexOutOfRange(f"need 1 <= i <= j <= {self.n}, got i={i}, j={j}")
        out = self.field.eye(self.dims[i - 1])
        for k in range(i, j):
            out = self.field.matmul(self.maps[k - 1], out)
        return out

    def truncate_essential(self) -> "PersistenceModule":
        """Append a zero step and a zero map so that every bar dies by ``n + 1``."""
        last = self.field.zeros((0, self.dims[-1]))
        return PersistenceModule(self.field, self.dims + (0,), self.maps + (last,))

    def with_field(self, field: Field) -> "PersistenceModule":
        return PersistenceModule(field, self.dims, [field.asarray(np.asarray(m, dtype=object)) for m in self.maps])

    def __eq__(self, other):
        if not isinstance(other, PersistenceModule):
            return NotImplemented
        if self.field != other.field or self.dims != other.dims:
            return False
        return all(a.shape == b.shape and self.field.array_equal(a, b) for a, b in zip(self.maps, other.maps))

    def __repr__(self):
        return f"PersistenceModule(field={self.field}, dims={list(self.dims)})"


def check_same_field(*modules: PersistenceModule) -> None:
    fields = {m.field for m in modules}
    if len(fields) > 1:
        raise MixedFields(f"modules over different fields: {sorted(map(str, fields))}")


def rank_of_composite(module: PersistenceModule, i: int, j: int) -> int:
    return linalg.rank(module.compose(i, j), module.field)
