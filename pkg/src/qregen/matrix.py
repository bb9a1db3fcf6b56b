"""Dense exact linear algebra over GF(p).

Matrices are row-major int buffers tied to a GF instance. Every matrix in
this package has at most a few hundred entries, so the kernels are plain
cubic loops; exactness matters here, speed does not. Pivot selection always
takes the first nonzero entry in column order, which keeps eliminations
(and everything built on them) deterministic.
"""

from __future__ import annotations

from collections.abc import Sequence

from .errors import DimensionMismatch, Singular
from .gf import GF


class Mat:
    """A rows x cols matrix over GF(p)."""

    __slots__ = ("field", "rows", "cols", "data")

    def __init__(self, field: GF, rows: int, cols: int, data: Sequence[int]):
        if rows < 0 or cols < 0 or len(data) != rows * cols:
            raise DimensionMismatch(
                f"{rows}x{cols} matrix needs {rows * cols} entries, got {len(data)}"
            )
        self.field = field
        self.rows = rows
        self.cols = cols
        self.data = [x % field.p for x in data]

    @classmethod
    def from_rows(cls, field: GF, rows: Sequence[Sequence[int]]) -> "Mat":
        nrows = len(rows)
        ncols = len(rows[0]) if nrows else 0
        flat: list[int] = []
        for r in rows:
            if len(r) != ncols:
                raise DimensionMismatch("ragged rows")
            flat.extend(r)
        return cls(field, nrows, ncols, flat)

    @classmethod
    def zeros(cls, field: GF, rows: int, cols: int) -> "Mat":
        return cls(field, rows, cols, [0] * (rows * cols))

    @classmethod
    def identity(cls, field: GF, n: int) -> "Mat":
        m = cls.zeros(field, n, n)
        for i in range(n):
            m.data[i * n + i] = 1
        return m

    @classmethod
    def diag(cls, field: GF, entries: Sequence[int]) -> "Mat":
        n = len(entries)
        m = cls.zeros(field, n, n)
        for i, e in enumerate(entries):
            m.data[i * n + i] = e % field.p
        return m

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.data[i * self.cols + j]

    def row(self, i: int) -> list[int]:
        return self.data[i * self.cols : (i + 1) * self.cols]

    def col(self, j: int) -> list[int]:
        return self.data[j :: self.cols]

    def to_rows(self) -> list[list[int]]:
        return [self.row(i) for i in range(self.rows)]

    def copy(self) -> "Mat":
        return Mat(self.field, self.rows, self.cols, self.data)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Mat)
            and other.field == self.field
            and other.rows == self.rows
            and other.cols == self.cols
            and other.data == self.data
        )

    def __repr__(self) -> str:
        return f"Mat({self.field!r}, {self.to_rows()})"

    def _check_same_shape(self, other: "Mat") -> None:
        if self.field != other.field:
            raise DimensionMismatch("field mismatch")
        if self.rows != other.rows or self.cols != other.cols:
            raise DimensionMismatch(
                f"{self.rows}x{self.cols} vs {other.rows}x{other.cols}"
            )

    def __add__(self, other: "Mat") -> "Mat":
        self._check_same_shape(other)
        p = self.field.p
        return Mat(
            self.field, self.rows, self.cols,
            [(a + b) % p for a, b in zip(self.data, other.data)],
        )

    def __sub__(self, other: "Mat") -> "Mat":
        self._check_same_shape(other)
        p = self.field.p
        return Mat(
            self.field, self.rows, self.cols,
            [(a - b) % p for a, b in zip(self.data, other.data)],
        )

    def scale(self, c: int) -> "Mat":
        p = self.field.p
        c %= p
        return Mat(self.field, self.rows, self.cols, [c * a % p for a in self.data])

    def transpose(self) -> "Mat":
        out = Mat.zeros(self.field, self.cols, self.rows)
        for i in range(self.rows):
            for j in range(self.cols):
                out.data[j * self.rows + i] = self.data[i * self.cols + j]
        return out

    @property
    def T(self) -> "Mat":
        return self.transpose()

    def __matmul__(self, other: "Mat") -> "Mat":
        if self.field != other.field:
            raise DimensionMismatch("field mismatch")
        if self.cols != other.rows:
            raise DimensionMismatch(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        p = self.field.p
        out = Mat.zeros(self.field, self.rows, other.cols)
        for i in range(self.rows):
            arow = self.data[i * self.cols : (i + 1) * self.cols]
            for j in range(other.cols):
                s = 0
                for t in range(self.cols):
                    s += arow[t] * other.data[t * other.cols + j]
                out.data[i * other.cols + j] = s % p
        return out

    def is_zero(self) -> bool:
        return not any(self.data)

    def inv(self) -> "Mat":
        """Gauss-Jordan inverse; raises Singular when rank < n."""
        if self.rows != self.cols:
            raise DimensionMismatch("inverse needs a square matrix")
        n = self.rows
        p = self.field.p
        a = self.to_rows()
        b = Mat.identity(self.field, n).to_rows()
        for col in range(n):
            pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
            if pivot is None:
                raise Singular(f"rank < {n}")
            if pivot != col:
                a[col], a[pivot] = a[pivot], a[col]
                b[col], b[pivot] = b[pivot], b[col]
            inv_piv = self.field.inv(a[col][col])
            a[col] = [x * inv_piv % p for x in a[col]]
            b[col] = [x * inv_piv % p for x in b[col]]
            for r in range(n):
                if r == col or a[r][col] == 0:
                    continue
                f = a[r][col]
                a[r] = [(x - f * y) % p for x, y in zip(a[r], a[col])]
                b[r] = [(x - f * y) % p for x, y in zip(b[r], b[col])]
        return Mat.from_rows(self.field, b)

    def rref(self) -> tuple["Mat", list[int]]:
        """Reduced row echelon form and the list of pivot columns."""
        p = self.field.p
        a = self.to_rows()
        pivots: list[int] = []
        r = 0
        for col in range(self.cols):
            if r == self.rows:
                break
            pivot = next((i for i in range(r, self.rows) if a[i][col] != 0), None)
            if pivot is None:
                continue
            a[r], a[pivot] = a[pivot], a[r]
            inv_piv = self.field.inv(a[r][col])
            a[r] = [x * inv_piv % p for x in a[r]]
            for i in range(self.rows):
                if i == r or a[i][col] == 0:
                    continue
                f = a[i][col]
                a[i] = [(x - f * y) % p for x, y in zip(a[i], a[r])]
            pivots.append(col)
            r += 1
        red = Mat.from_rows(self.field, a) if a else self.copy()
        return red, pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def right_kernel(self) -> list[list[int]]:
        """Basis vectors v with self @ v = 0, one per free column."""
        red, pivots = self.rref()
        p = self.field.p
        pivot_set = set(pivots)
        free = [c for c in range(self.cols) if c not in pivot_set]
        basis = []
        for fcol in free:
            v = [0] * self.cols
            v[fcol] = 1
            for r, pcol in enumerate(pivots):
                v[pcol] = -red[r, fcol] % p
            basis.append(v)
        return basis


def vandermonde(field: GF, points: Sequence[int], cols: int) -> Mat:
    """Rows of successive powers: entry (i, j) = points[i]**j."""
    data: list[int] = []
    for pt in points:
        data.extend(field.pow(pt, j) for j in range(cols))
    return Mat(field, len(points), cols, data)


def blkdiag(field: GF, blocks: Sequence[Mat]) -> Mat:
    """Block-diagonal assembly; blocks may be rectangular."""
    rows = sum(b.rows for b in blocks)
    cols = sum(b.cols for b in blocks)
    out = Mat.zeros(field, rows, cols)
    r0 = c0 = 0
    for b in blocks:
        if b.field != field:
            raise DimensionMismatch("field mismatch")
        for i in range(b.rows):
            base = (r0 + i) * cols + c0
            out.data[base : base + b.cols] = b.row(i)
        r0 += b.rows
        c0 += b.cols
    return out


def hstack(blocks: Sequence[Mat]) -> Mat:
    rows = blocks[0].rows
    if any(b.rows != rows for b in blocks):
        raise DimensionMismatch("row counts differ")
    data: list[int] = []
    for i in range(rows):
        for b in blocks:
            data.extend(b.row(i))
    return Mat(blocks[0].field, rows, sum(b.cols for b in blocks), data)


def vstack(blocks: Sequence[Mat]) -> Mat:
    cols = blocks[0].cols
    if any(b.cols != cols for b in blocks):
        raise DimensionMismatch("column counts differ")
    data: list[int] = []
    for b in blocks:
        data.extend(b.data)
    return Mat(blocks[0].field, sum(b.rows for b in blocks), cols, data)


def solve(a: Mat, b: Mat) -> Mat:
    """Exact solution x of a @ x = b for square nonsingular a."""
    if a.rows != a.cols:
        raise DimensionMismatch("solve needs a square matrix")
    if a.rows != b.rows:
        raise DimensionMismatch("right-hand side height mismatch")
    return a.inv() @ b


def matvec(a: Mat, v: Sequence[int]) -> list[int]:
    if len(v) != a.cols:
        raise DimensionMismatch(f"vector length {len(v)} != {a.cols}")
    p = a.field.p
    return [
        sum(a.data[i * a.cols + t] * v[t] for t in range(a.cols)) % p
        for i in range(a.rows)
    ]


def dot(field: GF, x: Sequence[int], y: Sequence[int]) -> int:
    if len(x) != len(y):
        raise DimensionMismatch(f"lengths {len(x)} != {len(y)}")
    return sum(a * b for a, b in zip(x, y)) % field.p
