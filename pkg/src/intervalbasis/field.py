"""Coefficient fields.

A field object knows how to build numpy arrays of its elements and how to
do scalar arithmetic on them.  Matrices are plain 2-D numpy arrays whose
dtype depends on the field:

* ``PrimeField(p)``  -> ``int64`` with canonical representatives in ``[0, p)``
* ``RationalField()`` -> ``object`` holding :class:`fractions.Fraction`
* ``RealField(tol)``  -> ``float64``
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Any, ClassVar

import numpy as np

from .errors import DivisionByZero, MixedFields, ParseError

# products of two residues must fit in a signed 64-bit word
MAX_PRIME = 2**31


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for d in range(3, math.isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


class Field:
    kind: ClassVar[str]
    exact: ClassVar[bool]
    dtype: ClassVar[Any]

    # -- scalars -----------------------------------------------------------

    def element(self, x) -> Any:
        raise NotImplementedError

    def add(self, a, b):
        return self.element(a + b)

    def sub(self, a, b):
        return self.element(a - b)

    def mul(self, a, b):
        return self.element(a * b)

    def neg(self, a):
        return self.element(-a)

    def inv(self, a):
        raise NotImplementedError

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a, scale: float = 1.0) -> bool:
        return a == 0

    def scalar(self, x) -> "Scalar":
        return Scalar(self, self.element(x))

    # -- arrays ------------------------------------------------------------

    def asarray(self, data) -> np.ndarray:
        raise NotImplementedError

    def zeros(self, shape) -> np.ndarray:
        return self.asarray(np.zeros(shape, dtype=np.int64))

    def eye(self, n: int) -> np.ndarray:
        return self.asarray(np.eye(n, dtype=np.int64))

    def matmul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def nonzero(self, arr: np.ndarray, scale: float = 1.0) -> np.ndarray:
        """Boolean mask of entries that are not zero under this field's zero test."""
        return np.asarray(arr != 0, dtype=bool)

    def array_equal(self, a: np.ndarray, b: np.ndarray, scale: float = 1.0) -> bool:
        if a.shape != b.shape:
            return False
        return not self.nonzero(self.asarray(a) - self.asarray(b), scale).any()

    # -- serialization -------------------------------------------------------

    def to_json(self, x):
        raise NotImplementedError

    def from_json(self, x):
        return self.element(_parse_scalar(x))

    def check_same(self, other: "Field") -> None:
        if self != other:
            raise MixedFields(f"cannot combine elements of {self} and {other}")


def _parse_scalar(x):
    if isinstance(x, bool):
        raise ParseError(f"invalid scalar {x!r}")
    if isinstance(x, (int, float, Fraction)):
        return x
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"invalid scalar {x!r}") from exc
    raise ParseError(f"invalid scalar {x!r}")


@dataclass(frozen=True)
class PrimeField(Field):
    p: int
    kind: ClassVar[str] = "zp"
    exact: ClassVar[bool] = True
    dtype: ClassVar[Any] = np.int64

    def __post_init__(self):
        if not isinstance(self.p, int) or not is_prime(self.p):
            raise ValueError(f"{self.p!r} is not a prime")
        if self.p >= MAX_PRIME:
            raise ValueError(f"prime {self.p} exceeds the supported word size (< 2**31)")

    def __str__(self):
        return f"zp:{self.p}"

    def element(self, x):
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise DivisionByZero(f"{x} has no image in Z_{self.p}")
            return (x.numerator * pow(x.denominator, -1, self.p)) % self.p
        if isinstance(x, float):
            if not x.is_integer():
                raise ParseError(f"{x!r} is not an integer")
            x = int(x)
        return int(x) % self.p

    def inv(self, a):
        a = self.element(a)
        if a == 0:
            raise DivisionByZero(f"0 has no inverse in Z_{self.p}")
        return pow(a, -1, self.p)

    def asarray(self, data):
        arr = np.asarray(data)
        if arr.dtype == object:
            arr = np.vectorize(self.element, otypes=[np.int64])(arr) if arr.size else arr.astype(np.int64)
        elif arr.dtype.kind == "f":
            if not np.all(np.mod(arr, 1) == 0):
                raise ParseError("non-integer entry in a Z_p matrix")
            arr = arr.astype(np.int64)
        return np.mod(arr.astype(np.int64), self.p)

    def matmul(self, a, b):
        inner = a.shape[1] if a.ndim == 2 else a.shape[0]
        if inner * (self.p - 1) ** 2 < 2**63:
            return np.mod(a @ b, self.p)
        prod = a.astype(object) @ b.astype(object)
        return self.asarray(prod)

    def to_json(self, x):
        return int(x)


@dataclass(frozen=True)
class RationalField(Field):
    kind: ClassVar[str] = "rational"
    exact: ClassVar[bool] = True
    dtype: ClassVar[Any] = object

    def __str__(self):
        return "rational"

    def element(self, x):
        if isinstance(x, Fraction):
            return x
        if isinstance(x, (np.integer, int)):
            return Fraction(int(x))
        if isinstance(x, (np.floating, float)):
            return Fraction(float(x))
        return Fraction(x)

    def inv(self, a):
        a = self.element(a)
        if a == 0:
            raise DivisionByZero("0 has no inverse")
        return 1 / a

    def asarray(self, data):
        arr = np.asarray(data, dtype=object)
        out = np.empty(arr.shape, dtype=object)
        flat_in, flat_out = arr.reshape(-1), out.reshape(-1)
        for idx in range(flat_in.size):
            flat_out[idx] = self.element(flat_in[idx])
        return out

    def matmul(self, a, b):
        if a.ndim == 2 and a.shape[1] == 0:
            return self.zeros((a.shape[0],) + b.shape[1:])
        return self.asarray(a @ b)

    def to_json(self, x):
        x = self.element(x)
        return f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class RealField(Field):
    tol: float = 1e-9
    kind: ClassVar[str] = "real"
    exact: ClassVar[bool] = False
    dtype: ClassVar[Any] = np.float64

    def __post_init__(self):
        if not self.tol > 0:
            raise ValueError("tolerance must be positive")

    def __str__(self):
        return "real"

    def element(self, x):
        return float(x)

    def is_zero(self, a, scale: float = 1.0) -> bool:
        return abs(float(a)) <= self.tol * max(1.0, scale)

    def inv(self, a):
        if self.is_zero(a):
            raise DivisionByZero(f"{a!r} is zero within tolerance {self.tol}")
        return 1.0 / float(a)

    def asarray(self, data):
        arr = np.asarray(data)
        if arr.dtype == object:
            return np.vectorize(float, otypes=[np.float64])(arr) if arr.size else arr.astype(np.float64)
        return arr.astype(np.float64)

    def matmul(self, a, b):
        return a @ b

    def nonzero(self, arr, scale: float = 1.0):
        return np.abs(arr) > self.tol * max(1.0, scale)

    def to_json(self, x):
        return float(x)


def parse_field(text: str, tol: float | None = None) -> Field:
    """Parse ``"zp:<p>"``, ``"rational"`` or ``"real"``."""
    text = text.strip().lower()
    if text == "rational":
        return RationalField()
    if text == "real":
        return RealField() if tol is None else RealField(tol)
    if text.startswith("zp:"):
        try:
            p = int(text[3:])
        except ValueError as exc:
            raise ParseError(f"invalid prime in field string {text!r}") from exc
        try:
            return PrimeField(p)
        except ValueError as exc:
            raise ParseError(str(exc)) from exc
    raise ParseError(f"unknown field {text!r}; expected zp:<p>, rational or real")


@dataclass(frozen=True)
class Scalar:
    """An immutable field element tied to its field."""

    field: Field
    value: Any = dc_field(compare=True)

    def _other(self, other):
        if isinstance(other, Scalar):
            self.field.check_same(other.field)
            return other.value
        return self.field.element(other)

    def __add__(self, other):
        return Scalar(self.field, self.field.add(self.value, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return Scalar(self.field, self.field.sub(self.value, self._other(other)))

    def __rsub__(self, other):
        return Scalar(self.field, self.field.sub(self._other(other), self.value))

    def __mul__(self, other):
        return Scalar(self.field, self.field.mul(self.value, self._other(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return Scalar(self.field, self.field.div(self.value, self._other(other)))

    def __neg__(self):
        return Scalar(self.field, self.field.neg(self.value))

    def inv(self):
        return Scalar(self.field, self.field.inv(self.value))

    def is_zero(self, scale: float = 1.0) -> bool:
        return self.field.is_zero(self.value, scale)
