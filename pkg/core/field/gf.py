"""
Prime-field arithmetic and dense matrix linear algebra over F_p.

Matrices are numpy arrays whose entries are kept reduced into [0, p).
`numpy.int64` is used while p < 2^31 (products of two entries still fit),
object arrays of Python ints above that.
"""

import logging
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple, Union

import galois
import numpy as np

from core.errors import DimensionMismatch, NotPrime, NotSquare, SingularMatrix


logger = logging.getLogger(__name__)

INT64_MODULUS_LIMIT = 2 ** 31


def _dtype_for(p: int):
    return np.int64 if p < INT64_MODULUS_LIMIT else object


@dataclass(frozen=True)
class FieldElem:
    value: int
    p: int

    def __post_init__(self):
        if not 0 <= self.value < self.p:
            raise ValueError(f"{self.value} is not a canonical element of F_{self.p}")

    def _other(self, other: Union["FieldElem", int]) -> int:
        if isinstance(other, FieldElem):
            if other.p != self.p:
                raise DimensionMismatch(f"cannot mix F_{self.p} and F_{other.p}")
            return other.value
        return int(other) % self.p

    def __add__(self, other):
        return FieldElem((self.value + self._other(other)) % self.p, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElem((self.value - self._other(other)) % self.p, self.p)

    def __rsub__(self, other):
        return FieldElem((self._other(other) - self.value) % self.p, self.p)

    def __mul__(self, other):
        return FieldElem((self.value * self._other(other)) % self.p, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return FieldElem((-self.value) % self.p, self.p)

    def inverse(self) -> "FieldElem":
        if self.value == 0:
            raise ZeroDivisionError(f"0 has no inverse in F_{self.p}")
        return FieldElem(pow(self.value, -1, self.p), self.p)

    def __truediv__(self, other):
        return self * FieldElem(self._other(other), self.p).inverse()

    def __int__(self) -> int:
        return self.value


@dataclass(frozen=True)
class Field:
    """Handle for the prime field F_p. Construction verifies primality."""

    p: int

    def __post_init__(self):
        if self.p < 2 or not galois.is_prime(self.p):
            raise NotPrime(f"{self.p} is not prime")

    @property
    def dtype(self):
        return _dtype_for(self.p)

    def elem(self, value: int) -> FieldElem:
        return FieldElem(int(value) % self.p, self.p)

    def matrix(self, rows: Iterable[Iterable[int]], cols: Optional[int] = None) -> "Matrix":
        return Matrix.from_rows(rows, self.p, cols=cols)

    def zeros(self, rows: int, cols: int) -> "Matrix":
        return Matrix(np.zeros((rows, cols), dtype=self.dtype), self.p)

    def identity(self, n: int) -> "Matrix":
        return Matrix(np.eye(n, dtype=np.int64).astype(self.dtype), self.p)

    def random(self, rng: np.random.Generator, rows: int, cols: int) -> "Matrix":
        values = rng.integers(0, self.p, size=(rows, cols), dtype=np.int64)
        return Matrix(values.astype(self.dtype), self.p)


def field_new(p: int) -> Field:
    return Field(int(p))


@dataclass(frozen=True, eq=False)
class Matrix:
    """Dense rows x cols matrix over F_p. Immutable after construction."""

    data: np.ndarray
    p: int

    def __post_init__(self):
        array = np.array(self.data, dtype=_dtype_for(self.p), copy=True)
        if array.ndim != 2:
            raise DimensionMismatch(f"matrix data must be 2-dimensional, got shape {array.shape}")
        array %= self.p
        array.flags.writeable = False
        object.__setattr__(self, "data", array)

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]], p: int, cols: Optional[int] = None) -> "Matrix":
        rows = [[int(value) for value in row] for row in rows]
        if not rows:
            return cls(np.zeros((0, cols or 0), dtype=_dtype_for(p)), p)
        widths = {len(row) for row in rows}
        if len(widths) != 1 or (cols is not None and widths != {cols}):
            raise DimensionMismatch(f"ragged or mis-sized rows: widths {sorted(widths)}")
        return cls(np.array(rows, dtype=object).astype(_dtype_for(p)), p)

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    @property
    def shape(self) -> Tuple[int, int]:
        return self.data.shape

    @property
    def field(self) -> Field:
        return Field(self.p)

    def take_rows(self, indices: Sequence[int]) -> "Matrix":
        return Matrix(self.data[list(indices), :].reshape(len(indices), self.cols), self.p)

    def take_cols(self, indices: Sequence[int]) -> "Matrix":
        return Matrix(self.data[:, list(indices)].reshape(self.rows, len(indices)), self.p)

    def stack(self, other: "Matrix") -> "Matrix":
        _check_compatible(self, other, same_cols=True)
        return Matrix(np.concatenate([self.data, other.data], axis=0), self.p)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        return mat_mul(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.p == other.p and self.shape == other.shape and bool(np.array_equal(self.data, other.data))

    __hash__ = None

    def tolist(self) -> List[List[int]]:
        return [[int(value) for value in row] for row in self.data]

    def __repr__(self) -> str:
        return f"Matrix(F_{self.p}, {self.rows}x{self.cols}, {self.tolist()})"


def _check_compatible(a: Matrix, b: Matrix, same_cols: bool = False) -> None:
    if a.p != b.p:
        raise DimensionMismatch(f"moduli differ: {a.p} vs {b.p}")
    if same_cols and a.cols != b.cols:
        raise DimensionMismatch(f"column counts differ: {a.cols} vs {b.cols}")


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    _check_compatible(a, b)
    if a.cols != b.rows:
        raise DimensionMismatch(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    if a.p < INT64_MODULUS_LIMIT:
        # accumulate column by column so that no partial sum leaves int64
        result = np.zeros((a.rows, b.cols), dtype=np.int64)
        for k in range(a.cols):
            result = (result + np.outer(a.data[:, k], b.data[k, :])) % a.p
        return Matrix(result, a.p)
    return Matrix(a.data.dot(b.data), a.p)


def _eliminate(data: np.ndarray, p: int) -> Tuple[np.ndarray, List[int]]:
    """Fraction-free forward elimination; returns the echelon form and pivot columns.

    The pivot of each column is the first nonzero entry at or below the
    current row (lowest row index wins).
    """
    work = data.copy()
    n_rows, n_cols = work.shape
    pivots: List[int] = []
    row = 0
    for col in range(n_cols):
        if row == n_rows:
            break
        candidates = np.nonzero(work[row:, col])[0]
        if candidates.size == 0:
            continue
        pivot = row + int(candidates[0])
        if pivot != row:
            work[[row, pivot], :] = work[[pivot, row], :]
        pivot_value = work[row, col]
        below = work[row + 1:, col]
        work[row + 1:, :] = (pivot_value * work[row + 1:, :] - np.outer(below, work[row, :])) % p
        pivots.append(col)
        row += 1
    return work, pivots


def mat_rank(m: Matrix) -> int:
    if m.rows == 0 or m.cols == 0:
        return 0
    _, pivots = _eliminate(m.data, m.p)
    return len(pivots)


def mat_inverse(m: Matrix) -> Matrix:
    if m.rows != m.cols:
        raise NotSquare(f"cannot invert a {m.rows}x{m.cols} matrix")
    n = m.rows
    p = m.p
    if n == 0:
        return Matrix(np.zeros((0, 0), dtype=_dtype_for(p)), p)

    identity = np.eye(n, dtype=np.int64).astype(_dtype_for(p))
    augmented = np.concatenate([m.data.copy(), identity], axis=1)
    for col in range(n):
        candidates = np.nonzero(augmented[col:, col])[0]
        if candidates.size == 0:
            raise SingularMatrix(f"matrix is singular over F_{p} (no pivot in column {col})")
        pivot = col + int(candidates[0])
        if pivot != col:
            augmented[[col, pivot], :] = augmented[[pivot, col], :]
        scale = pow(int(augmented[col, col]), -1, p)
        augmented[col, :] = (augmented[col, :] * scale) % p
        factors = augmented[:, col].copy()
        factors[col] = 0
        augmented = (augmented - np.outer(factors, augmented[col, :])) % p
    return Matrix(augmented[:, n:], p)


def row_space_intersection_trivial(a: Matrix, b: Matrix) -> bool:
    _check_compatible(a, b, same_cols=True)
    return mat_rank(a.stack(b)) == mat_rank(a) + mat_rank(b)


def rank_by_enumeration(m: Matrix) -> int:
    """Brute-force rank: log_p of the number of distinct row combinations."""
    if m.rows == 0 or m.cols == 0:
        return 0
    p = m.p
    coefficients = np.array(np.unravel_index(np.arange(p ** m.rows), (p,) * m.rows)).T
    combos = Matrix(coefficients, p) @ m
    span = len({tuple(row) for row in combos.tolist()})
    rank = 0
    while p ** rank < span:
        rank += 1
    return rank
