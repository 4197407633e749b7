"""Dense matrices over a finite field and the elimination routines built on them.

Matrices are immutable values; every operation returns new data.  Pivoting
takes the first nonzero entry in column order, so results are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DimensionMismatch, DuplicatePoints, SingularMatrix
from .field import Field


@dataclass(frozen=True)
class MatrixGF:
    field: Field
    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise DimensionMismatch(
                f"{len(self.entries)} entries for a {self.rows}x{self.cols} matrix")
        q = self.field.q
        for e in self.entries:
            if not (isinstance(e, int) and 0 <= e < q):
                raise ValueError(f"entry {e!r} is not an element of F_{q}")

    @classmethod
    def from_rows(cls, field: Field, rows: Sequence[Sequence[int]], cols: int | None = None) -> MatrixGF:
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise DimensionMismatch("ragged rows")
        return cls(field, len(rows), cols, tuple(e for r in rows for e in r))

    @classmethod
    def zeros(cls, field: Field, rows: int, cols: int) -> MatrixGF:
        return cls(field, rows, cols, (0,) * (rows * cols))

    @classmethod
    def identity(cls, field: Field, size: int) -> MatrixGF:
        return cls.from_rows(field, [[int(i == j) for j in range(size)] for i in range(size)], size)

    def row(self, i: int) -> list[int]:
        return list(self.entries[i * self.cols:(i + 1) * self.cols])

    def to_rows(self) -> list[list[int]]:
        return [self.row(i) for i in range(self.rows)]

    def column(self, j: int) -> list[int]:
        return list(self.entries[j::self.cols]) if self.cols else []

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i * self.cols + j]

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def transpose(self) -> MatrixGF:
        return MatrixGF.from_rows(self.field, [self.column(j) for j in range(self.cols)], self.rows)

    def select_columns(self, idx: Iterable[int]) -> MatrixGF:
        idx = list(idx)
        return MatrixGF.from_rows(self.field, [[r[j] for j in idx] for r in self.to_rows()], len(idx))

    def select_rows(self, idx: Iterable[int]) -> MatrixGF:
        return MatrixGF.from_rows(self.field, [self.row(i) for i in idx], self.cols)

    def vstack(self, other: MatrixGF) -> MatrixGF:
        if other.cols != self.cols or other.field != self.field:
            raise DimensionMismatch("vstack needs equal column counts over the same field")
        return MatrixGF(self.field, self.rows + other.rows, self.cols, self.entries + other.entries)

    def __matmul__(self, other: MatrixGF) -> MatrixGF:
        if self.cols != other.rows or self.field != other.field:
            raise DimensionMismatch(f"cannot multiply {self.shape} by {other.shape}")
        f = self.field
        bt = other.transpose().to_rows()
        return MatrixGF.from_rows(
            f, [[dot(f, a, b) for b in bt] for a in self.to_rows()], other.cols)

    def apply(self, x: Sequence[int]) -> list[int]:
        """Matrix-vector product ``A x``."""
        if len(x) != self.cols:
            raise DimensionMismatch(f"vector of length {len(x)} for {self.cols} columns")
        return [dot(self.field, r, x) for r in self.to_rows()]

    def is_zero(self) -> bool:
        return not any(self.entries)

    def to_text(self) -> str:
        return "".join(" ".join(str(e) for e in r) + "\n" for r in self.to_rows())

    @classmethod
    def from_text(cls, field: Field, text: str) -> MatrixGF:
        rows = [[int(tok) for tok in line.split(" ")] for line in text.splitlines() if line.strip()]
        return cls.from_rows(field, rows)


def dot(field: Field, a: Sequence[int], b: Sequence[int]) -> int:
    acc = 0
    for x, y in zip(a, b):
        if x and y:
            acc = field.add(acc, field.mul(x, y))
    return acc


def _eliminate(field: Field, rows: list[list[int]], cols: int) -> list[int]:
    """Reduce ``rows`` in place to RREF; return the pivot columns."""
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(cols):
        if r == nrows:
            break
        pivot = next((i for i in range(r, nrows) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = field.inv(rows[r][c])
        rows[r] = [field.mul(inv, e) for e in rows[r]]
        prow = rows[r]
        for i in range(nrows):
            if i != r and rows[i][c]:
                factor = rows[i][c]
                rows[i] = [field.sub(e, field.mul(factor, pe)) for e, pe in zip(rows[i], prow)]
        pivots.append(c)
        r += 1
    return pivots


def rref_rank(A: MatrixGF) -> tuple[MatrixGF, int]:
    """Reduced row-echelon form of ``A`` and its rank."""
    rows = A.to_rows()
    pivots = _eliminate(A.field, rows, A.cols)
    return MatrixGF.from_rows(A.field, rows, A.cols), len(pivots)


def rank(A: MatrixGF) -> int:
    return rref_rank(A)[1]


def solve_linear(A: MatrixGF, b: Sequence[int]) -> list[int]:
    """Unique solution of ``A x = b`` for square invertible ``A``."""
    if A.rows != A.cols:
        raise DimensionMismatch(f"solve_linear needs a square matrix, got {A.shape}")
    if len(b) != A.rows:
        raise DimensionMismatch("right-hand side length differs from matrix size")
    n = A.rows
    aug = [row + [bi] for row, bi in zip(A.to_rows(), b)]
    pivots = _eliminate(A.field, aug, n)
    if len(pivots) < n:
        raise SingularMatrix("matrix is not invertible")
    return [aug[i][n] for i in range(n)]


def null_space(A: MatrixGF) -> MatrixGF:
    """Basis (as rows) of the right kernel ``{x : A x = 0}``.

    The basis is read off the RREF: one vector per free column, with a 1 in
    that column and zeros in the other free columns.
    """
    f = A.field
    rows = A.to_rows()
    pivots = _eliminate(f, rows, A.cols)
    pivot_set = set(pivots)
    basis = []
    for free in range(A.cols):
        if free in pivot_set:
            continue
        x = [0] * A.cols
        x[free] = 1
        for i, pc in enumerate(pivots):
            x[pc] = f.neg(rows[i][free])
        basis.append(x)
    return MatrixGF.from_rows(f, basis, A.cols)


def rowspace_equal(A: MatrixGF, B: MatrixGF) -> bool:
    if A.cols != B.cols or A.field != B.field:
        raise DimensionMismatch("row spaces live in different ambient spaces")
    ra, rb = rank(A), rank(B)
    return ra == rb and rank(A.vstack(B)) == ra


def vandermonde(field: Field, points: Sequence[int], t: int) -> MatrixGF:
    """The ``t x t`` matrix with entry ``(j, l) = points[l] ** j``."""
    points = list(points)
    if len(set(points)) != len(points):
        raise DuplicatePoints("Vandermonde points must be pairwise distinct")
    if len(points) != t:
        raise DimensionMismatch(f"need exactly {t} points, got {len(points)}")
    return MatrixGF.from_rows(field, [[field.pow(x, j) for x in points] for j in range(t)], t)
