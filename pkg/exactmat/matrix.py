"""
exactmat.matrix
---------------
Immutable arbitrary-precision integer matrices.

Heavy arithmetic (products, powers, determinants, characteristic polynomials) is
delegated to sympy's ``DomainMatrix`` over ``ZZ``: determinants use fraction-free
Bareiss elimination and characteristic polynomials the division-free Berkowitz
recurrence, so no rational intermediate ever appears.

The text literal used by the CLI and the tests is ``"rows cols; a11 a12 ...; a21 ..."``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Sequence

from sympy.polys.domains import ZZ
from sympy.polys.matrices import DomainMatrix

from common.errors import ParseError, PreconditionError, ShapeError
from polyalg.polynomial import IntPolynomial

logger = logging.getLogger(__name__)

_max_dim = 64


def set_max_dim(limit: int) -> None:
    """Change the largest accepted row/column count (default 64)."""
    global _max_dim
    if limit < 1:
        raise PreconditionError(f"max_dim must be positive, got {limit}")
    _max_dim = limit


def get_max_dim() -> int:
    return _max_dim


@dataclass(frozen=True)
class IntMatrix:
    """Row-major integer matrix. All arithmetic is exact."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.rows < 1 or self.cols < 1:
            raise ShapeError(f"matrix dimensions must be positive, got {self.rows}x{self.cols}")
        if self.rows > _max_dim or self.cols > _max_dim:
            raise ShapeError(f"matrix {self.rows}x{self.cols} exceeds the size cap {_max_dim}")
        if len(self.entries) != self.rows * self.cols:
            raise ShapeError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} entries, got {len(self.entries)}"
            )
        object.__setattr__(self, "entries", tuple(int(x) for x in self.entries))

    # construction

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> IntMatrix:
        if not rows:
            raise ShapeError("matrix needs at least one row")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ShapeError("ragged rows")
        return cls(len(rows), width, tuple(x for r in rows for x in r))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]]) -> IntMatrix:
        if not columns:
            raise ShapeError("matrix needs at least one column")
        return cls.from_rows(list(zip(*columns)))

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls(n, n, tuple(1 if i == j else 0 for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> IntMatrix:
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def from_domain(cls, dm: DomainMatrix) -> IntMatrix:
        return cls.from_rows([[int(x) for x in row] for row in dm.to_list()])

    def to_domain(self) -> DomainMatrix:
        return DomainMatrix([[ZZ(x) for x in row] for row in self.to_rows()], (self.rows, self.cols), ZZ)

    # access

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, index: tuple[int, int]) -> int:
        i, j = index
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"({i}, {j}) outside {self.rows}x{self.cols}")
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def columns(self) -> list[tuple[int, ...]]:
        return [self.column(j) for j in range(self.cols)]

    def is_zero(self) -> bool:
        return not any(self.entries)

    # arithmetic

    def _check_same_shape(self, other: IntMatrix) -> None:
        if self.shape != other.shape:
            raise ShapeError(f"shape mismatch: {self.shape} vs {other.shape}")

    def __add__(self, other: IntMatrix) -> IntMatrix:
        self._check_same_shape(other)
        return IntMatrix(self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: IntMatrix) -> IntMatrix:
        self._check_same_shape(other)
        return IntMatrix(self.rows, self.cols, tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> IntMatrix:
        return IntMatrix(self.rows, self.cols, tuple(-a for a in self.entries))

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.rows:
            raise ShapeError(f"cannot multiply {self.shape} by {other.shape}")
        return IntMatrix.from_domain(self.to_domain() * other.to_domain())

    def apply(self, vector: Sequence[int]) -> tuple[int, ...]:
        """Matrix-vector product."""
        if len(vector) != self.cols:
            raise ShapeError(f"vector of length {len(vector)} does not match {self.cols} columns")
        return tuple(sum(a * v for a, v in zip(self.row(i), vector)) for i in range(self.rows))

    def transpose(self) -> IntMatrix:
        return IntMatrix.from_rows([list(c) for c in self.columns()])

    def __str__(self) -> str:
        return format_matrix(self)


def hstack(*blocks: IntMatrix) -> IntMatrix:
    """Concatenate matrices with equal row counts side by side."""
    if not blocks:
        raise ShapeError("hstack needs at least one block")
    rows = blocks[0].rows
    if any(b.rows != rows for b in blocks):
        raise ShapeError("hstack blocks must share the row count")
    return IntMatrix.from_rows([[x for b in blocks for x in b.row(i)] for i in range(rows)])


def _require_square(A: IntMatrix, what: str) -> None:
    if not A.is_square:
        raise ShapeError(f"{what} needs a square matrix, got {A.rows}x{A.cols}")


def mat_pow(L: IntMatrix, k: int) -> IntMatrix:
    """Return L**k exactly; L**0 is the identity."""
    _require_square(L, "mat_pow")
    if k < 0:
        raise PreconditionError(f"exponent must be non-negative, got {k}")
    if k == 0:
        return IntMatrix.identity(L.rows)
    return IntMatrix.from_domain(L.to_domain() ** k)


def geometric_sum(L: IntMatrix, k: int) -> IntMatrix:
    """Return sum_{i=0}^{k-1} L**i (the zero matrix for k = 0)."""
    _require_square(L, "geometric_sum")
    total = IntMatrix.zeros(L.rows, L.cols)
    power = IntMatrix.identity(L.rows)
    for _ in range(k):
        total = total + power
        power = power @ L
    return total


def det(A: IntMatrix) -> int:
    """Exact determinant by fraction-free elimination."""
    _require_square(A, "det")
    value = int(A.to_domain().det())
    logger.debug("det of %dx%d matrix = %d", A.rows, A.cols, value)
    return value


def charpoly(A: IntMatrix) -> IntPolynomial:
    """det(xI - A) as a monic integer polynomial of degree n."""
    _require_square(A, "charpoly")
    high_first = [int(c) for c in A.to_domain().charpoly()]
    return IntPolynomial.from_high_first(high_first)


def solve_integer(A: IntMatrix, b: Sequence[int]) -> tuple[int, ...]:
    """Unique integer solution of A x = b for square nonsingular A (Cramer's rule).

    A non-integral solution raises PreconditionError.
    """
    _require_square(A, "solve_integer")
    if len(b) != A.rows:
        raise ShapeError(f"right-hand side of length {len(b)} for {A.rows} equations")
    d = det(A)
    if d == 0:
        raise PreconditionError("solve_integer needs a nonsingular matrix")
    solution = []
    for j in range(A.cols):
        replaced = IntMatrix.from_rows(
            [[b[i] if c == j else A[i, c] for c in range(A.cols)] for i in range(A.rows)]
        )
        numerator = det(replaced)
        if numerator % d:
            raise PreconditionError(f"system has no integer solution (component {j} = {numerator}/{d})")
        solution.append(numerator // d)
    return tuple(solution)


# literals

def parse_matrix(text: str) -> IntMatrix:
    """Parse ``"rows cols; a11 a12 ...; a21 ..."`` into an IntMatrix."""
    parts = [p.strip() for p in text.strip().split(";")]
    if len(parts) < 2:
        raise ParseError(f"matrix literal needs a 'rows cols' header and rows: {text!r}")
    try:
        header = [int(x) for x in parts[0].split()]
        body = [[int(x) for x in p.split()] for p in parts[1:] if p]
    except ValueError as exc:
        raise ParseError(f"non-integer entry in matrix literal {text!r}") from exc
    if len(header) != 2:
        raise ParseError(f"matrix header must be 'rows cols', got {parts[0]!r}")
    rows, cols = header
    if len(body) != rows or any(len(r) != cols for r in body):
        raise ParseError(f"matrix literal {text!r} does not match its {rows}x{cols} header")
    return IntMatrix.from_rows(body)


def format_matrix(A: IntMatrix) -> str:
    rows = "; ".join(" ".join(str(x) for x in A.row(i)) for i in range(A.rows))
    return f"{A.rows} {A.cols}; {rows}"


def identity_minus(L: IntMatrix) -> IntMatrix:
    """I - L."""
    _require_square(L, "identity_minus")
    return IntMatrix.identity(L.rows) - L


__all__ = [
    "IntMatrix",
    "charpoly",
    "det",
    "format_matrix",
    "geometric_sum",
    "get_max_dim",
    "hstack",
    "identity_minus",
    "mat_pow",
    "parse_matrix",
    "set_max_dim",
    "solve_integer",
]
