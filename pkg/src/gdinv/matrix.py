"""Immutable dense matrices over Q(i) and the shared JSON text format."""

from __future__ import annotations

import json
from typing import Iterable, Sequence

from .scalar import ZERO, ONE, GaussianRational, Scalar, as_scalar, conj, format_scalar, parse_scalar

__all__ = ["Matrix", "MatrixFormatError", "block", "blockdiag"]


class MatrixFormatError(ValueError):
    """Malformed matrix text or JSON."""


class Matrix:
    """Dense ``rows x cols`` matrix of canonical scalars.

    Instances are immutable; every operation returns a new matrix.
    ``data`` is a tuple of row tuples.
    """

    __slots__ = ("rows", "cols", "data", "_hash")

    def __init__(self, entries: Iterable[Sequence], rows: int | None = None, cols: int | None = None):
        data = tuple(tuple(as_scalar(x) for x in row) for row in entries)
        if rows is None:
            rows = len(data)
        if cols is None:
            cols = len(data[0]) if data else 0
        if len(data) != rows or any(len(r) != cols for r in data):
            raise MatrixFormatError(f"ragged or mis-sized entries for a {rows}x{cols} matrix")
        self.rows = rows
        self.cols = cols
        self.data = data
        self._hash = None

    @classmethod
    def _raw(cls, data: tuple, rows: int, cols: int) -> "Matrix":
        # trusted constructor: data already canonical tuples
        m = object.__new__(cls)
        m.rows = rows
        m.cols = cols
        m.data = data
        m._hash = None
        return m

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> "Matrix":
        cols = rows if cols is None else cols
        return cls._raw(tuple((ZERO,) * cols for _ in range(rows)), rows, cols)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls._raw(
            tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)), n, n
        )

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int) -> "Matrix":
        cols = len(columns)
        return cls([[columns[j][i] for j in range(cols)] for i in range(rows)], rows, cols)

    # -- basic protocol -------------------------------------------------
    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, idx):
        i, j = idx
        return self.data[i][j]

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.rows == other.rows and self.cols == other.cols and self.data == other.data

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.rows, self.cols, self.data))
        return self._hash

    def __repr__(self):
        body = ", ".join("[" + ", ".join(format_scalar(x) for x in row) + "]" for row in self.data)
        return f"Matrix([{body}], {self.rows}x{self.cols})"

    def tolist(self) -> list[list[Scalar]]:
        return [list(r) for r in self.data]

    def row(self, i: int) -> tuple:
        return self.data[i]

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self.data)

    def columns(self) -> list[tuple]:
        return [tuple(r[j] for r in self.data) for j in range(self.cols)]

    def is_zero(self) -> bool:
        return not any(x for r in self.data for x in r)

    @property
    def is_real(self) -> bool:
        return not any(type(x) is GaussianRational for r in self.data for x in r)

    # -- arithmetic -----------------------------------------------------
    def _check_same_shape(self, other: "Matrix"):
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other)
        return Matrix._raw(
            tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.data, other.data)),
            self.rows,
            self.cols,
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other)
        return Matrix._raw(
            tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.data, other.data)),
            self.rows,
            self.cols,
        )

    def __neg__(self) -> "Matrix":
        return Matrix._raw(tuple(tuple(-a for a in r) for r in self.data), self.rows, self.cols)

    def scale(self, c) -> "Matrix":
        c = as_scalar(c)
        return Matrix._raw(tuple(tuple(c * a for a in r) for r in self.data), self.rows, self.cols)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        ocols = other.columns()
        out = []
        for r in self.data:
            nz = [(k, a) for k, a in enumerate(r) if a]
            row = []
            for c in ocols:
                s = ZERO
                for k, a in nz:
                    b = c[k]
                    if b:
                        s = s + a * b
                row.append(s)
            out.append(tuple(row))
        return Matrix._raw(tuple(out), self.rows, other.cols)

    def __pow__(self, k: int) -> "Matrix":
        if not self.is_square:
            raise ValueError("matrix power needs a square matrix")
        if k < 0:
            raise ValueError("negative powers are not supported; use inverse()")
        result = Matrix.identity(self.rows)
        for _ in range(k):
            result = result @ self
        return result

    @property
    def T(self) -> "Matrix":
        return Matrix._raw(
            tuple(tuple(self.data[i][j] for i in range(self.rows)) for j in range(self.cols)),
            self.cols,
            self.rows,
        )

    @property
    def H(self) -> "Matrix":
        """Conjugate transpose."""
        return Matrix._raw(
            tuple(tuple(conj(self.data[i][j]) for i in range(self.rows)) for j in range(self.cols)),
            self.cols,
            self.rows,
        )

    def submatrix(self, row_slice: slice, col_slice: slice) -> "Matrix":
        data = tuple(r[col_slice] for r in self.data[row_slice])
        rows = len(range(*row_slice.indices(self.rows)))
        cols = len(range(*col_slice.indices(self.cols)))
        return Matrix._raw(data, rows, cols)

    def hstack(self, *others: "Matrix") -> "Matrix":
        mats = (self,) + others
        if len({m.rows for m in mats}) != 1:
            raise ValueError("hstack needs equal row counts")
        data = tuple(tuple(x for m in mats for x in m.data[i]) for i in range(self.rows))
        return Matrix._raw(data, self.rows, sum(m.cols for m in mats))

    def vstack(self, *others: "Matrix") -> "Matrix":
        mats = (self,) + others
        if len({m.cols for m in mats}) != 1:
            raise ValueError("vstack needs equal column counts")
        return Matrix._raw(tuple(r for m in mats for r in m.data), sum(m.rows for m in mats), self.cols)

    # -- text format ----------------------------------------------------
    def to_dict(self) -> dict:
        return {
            "rows": self.rows,
            "cols": self.cols,
            "entries": [[format_scalar(x) for x in r] for r in self.data],
        }

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)

    @classmethod
    def from_dict(cls, obj) -> "Matrix":
        if not isinstance(obj, dict) or not {"rows", "cols", "entries"} <= obj.keys():
            raise MatrixFormatError('matrix JSON must be an object with "rows", "cols", "entries"')
        rows, cols, entries = obj["rows"], obj["cols"], obj["entries"]
        if not isinstance(rows, int) or not isinstance(cols, int) or rows < 0 or cols < 0:
            raise MatrixFormatError("rows/cols must be non-negative integers")
        if not isinstance(entries, list) or any(not isinstance(r, list) for r in entries):
            raise MatrixFormatError("entries must be a list of rows")
        try:
            parsed = [[_parse_entry(s) for s in r] for r in entries]
        except (ValueError, TypeError) as exc:
            raise MatrixFormatError(str(exc)) from exc
        return cls(parsed, rows, cols)

    @classmethod
    def from_json(cls, text: str) -> "Matrix":
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise MatrixFormatError(f"invalid JSON: {exc}") from exc
        return cls.from_dict(obj)


def _parse_entry(s):
    if isinstance(s, bool):
        raise MatrixFormatError("booleans are not matrix entries")
    if isinstance(s, int):
        return as_scalar(s)
    if isinstance(s, str):
        return parse_scalar(s)
    raise MatrixFormatError(f"entry {s!r} must be a string like 'p/q' or an integer")


def blockdiag(*blocks: Matrix) -> Matrix:
    """Block-diagonal assembly; empty (0x0) blocks are absorbed."""
    n = sum(b.rows for b in blocks)
    m = sum(b.cols for b in blocks)
    out = []
    col0 = 0
    for b in blocks:
        for r in b.data:
            out.append((ZERO,) * col0 + r + (ZERO,) * (m - col0 - b.cols))
        col0 += b.cols
    return Matrix._raw(tuple(out), n, m)


def block(grid: Sequence[Sequence[Matrix]]) -> Matrix:
    """Assemble ``[[A, B], [C, D]]``-style block matrices."""
    rows = []
    for brow in grid:
        height = brow[0].rows
        if any(b.rows != height for b in brow):
            raise ValueError("blocks in one block-row need equal heights")
        for i in range(height):
            rows.append(tuple(x for b in brow for x in b.data[i]))
    cols = sum(b.cols for b in grid[0]) if grid else 0
    return Matrix._raw(tuple(rows), len(rows), cols)
