"""Exact dense linear algebra over a finite field.

Matrices are immutable tuples of rows of field elements. Everything here is
pure Python: the codes this package handles live at desk scale (lengths in
the tens), where exactness and auditability matter more than speed. The one
hot loop in the package (minimum-distance search) lives elsewhere and uses
numpy index tables instead.

Row bases returned by :meth:`Matrix.nullspace`, :meth:`Matrix.row_basis` and
:meth:`Matrix.row_space_intersection` are in reduced row echelon form, so a
subspace has exactly one representation and golden vectors compare exactly.
"""

from __future__ import annotations

from typing import NamedTuple

from .errors import FieldMismatch, ShapeMismatch
from .galois import FieldElement, FieldSpec


def vec(field: FieldSpec, items) -> tuple[FieldElement, ...]:
    """Vector (tuple of field elements) from elements or ints."""
    out = []
    for c in items:
        if isinstance(c, FieldElement):
            if c.field != field:
                raise FieldMismatch(f"{field} vs {c.field}")
            out.append(c)
        else:
            out.append(field.from_int(c))
    return tuple(out)


class RrefResult(NamedTuple):
    matrix: "Matrix"
    rank: int
    pivots: tuple[int, ...]


class Matrix:
    __slots__ = ("field", "nrows", "ncols", "entries", "_rref")

    def __init__(self, field: FieldSpec, entries, ncols=None):
        rows = [vec(field, r) for r in entries]
        if rows:
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise ShapeMismatch("ragged rows")
            if ncols is not None and ncols != width:
                raise ShapeMismatch(f"rows have {width} entries, expected {ncols}")
        else:
            if ncols is None:
                raise ShapeMismatch("empty matrix needs an explicit column count")
            width = ncols
        self.field = field
        self.nrows = len(rows)
        self.ncols = width
        self.entries = tuple(rows)
        self._rref = None

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> "Matrix":
        return cls(
            field,
            [[1 if i == j else 0 for j in range(n)] for i in range(n)],
            ncols=n,
        )

    @classmethod
    def zeros(cls, field: FieldSpec, nrows: int, ncols: int) -> "Matrix":
        return cls(field, [[0] * ncols for _ in range(nrows)], ncols=ncols)

    # -- basics ---------------------------------------------------------------

    def row(self, i: int):
        return self.entries[i]

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def rows(self):
        return iter(self.entries)

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.ncols == other.ncols
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.field, self.ncols, self.entries))

    def __repr__(self):
        body = "; ".join(
            " ".join(self.field.format(e) for e in row) for row in self.entries
        )
        return f"Matrix({self.field.name}, {self.nrows}x{self.ncols}: {body})"

    def transpose(self) -> "Matrix":
        return Matrix(
            self.field,
            [[self.entries[i][j] for i in range(self.nrows)] for j in range(self.ncols)],
            ncols=self.nrows,
        )

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            raise TypeError("matrix product needs a Matrix")
        if other.field != self.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")
        if self.ncols != other.nrows:
            raise ShapeMismatch(f"{self.nrows}x{self.ncols} @ {other.nrows}x{other.ncols}")
        zero = self.field.zero
        out = []
        for i in range(self.nrows):
            row = []
            left = self.entries[i]
            for j in range(other.ncols):
                acc = zero
                for k in range(self.ncols):
                    a = left[k]
                    if not a.is_zero():
                        acc = acc + a * other.entries[k][j]
                row.append(acc)
            out.append(row)
        return Matrix(self.field, out, ncols=other.ncols)

    def stack(self, other: "Matrix") -> "Matrix":
        if other.field != self.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")
        if other.ncols != self.ncols:
            raise ShapeMismatch(f"cannot stack widths {self.ncols} and {other.ncols}")
        return Matrix(self.field, list(self.entries) + list(other.entries), ncols=self.ncols)

    def is_zero(self) -> bool:
        return all(e.is_zero() for row in self.entries for e in row)

    # -- elimination -------------------------------------------------------------

    def rref(self) -> RrefResult:
        """Reduced row echelon form (pivots 1, zeros above and below)."""
        if self._rref is not None:
            return self._rref
        rows = [list(r) for r in self.entries]
        pivots = []
        r = 0
        for c in range(self.ncols):
            pivot_row = None
            for i in range(r, len(rows)):
                if not rows[i][c].is_zero():
                    pivot_row = i
                    break
            if pivot_row is None:
                continue
            rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
            inv = rows[r][c].inverse()
            rows[r] = [e * inv for e in rows[r]]
            for i in range(len(rows)):
                if i != r and not rows[i][c].is_zero():
                    coef = rows[i][c]
                    rows[i] = [a - coef * b for a, b in zip(rows[i], rows[r])]
            pivots.append(c)
            r += 1
            if r == len(rows):
                break
        result = RrefResult(
            Matrix(self.field, rows, ncols=self.ncols), r, tuple(pivots)
        )
        self._rref = result
        return result

    @property
    def rank(self) -> int:
        return self.rref().rank

    def row_basis(self) -> "Matrix":
        """Canonical (RREF) basis of the row space."""
        red = self.rref()
        return Matrix(
            self.field, red.matrix.entries[: red.rank], ncols=self.ncols
        )

    def det(self) -> FieldElement:
        if self.nrows != self.ncols:
            raise ShapeMismatch(f"determinant of {self.nrows}x{self.ncols} matrix")
        n = self.nrows
        if n == 0:
            return self.field.one
        rows = [list(r) for r in self.entries]
        det = self.field.one
        for c in range(n):
            pivot_row = None
            for i in range(c, n):
                if not rows[i][c].is_zero():
                    pivot_row = i
                    break
            if pivot_row is None:
                return self.field.zero
            if pivot_row != c:
                rows[c], rows[pivot_row] = rows[pivot_row], rows[c]
                det = -det
            det = det * rows[c][c]
            inv = rows[c][c].inverse()
            for i in range(c + 1, n):
                if not rows[i][c].is_zero():
                    coef = rows[i][c] * inv
                    rows[i] = [a - coef * b for a, b in zip(rows[i], rows[c])]
        return det

    def is_nonsingular(self) -> bool:
        return not self.det().is_zero()

    # -- subspace operations ------------------------------------------------------

    def nullspace(self) -> "Matrix":
        """Canonical basis of {v : M v^T = 0}, as rows."""
        red = self.rref()
        pivot_set = set(red.pivots)
        free = [c for c in range(self.ncols) if c not in pivot_set]
        basis = []
        for f in free:
            v = [self.field.zero] * self.ncols
            v[f] = self.field.one
            for i, c in enumerate(red.pivots):
                v[c] = -red.matrix.entries[i][f]
            basis.append(v)
        return Matrix(self.field, basis, ncols=self.ncols).row_basis()

    def row_space_contains(self, vector) -> bool:
        v = list(vec(self.field, vector))
        if len(v) != self.ncols:
            raise ShapeMismatch(f"vector of length {len(v)} vs {self.ncols} columns")
        red = self.rref()
        for i, c in enumerate(red.pivots):
            if not v[c].is_zero():
                coef = v[c]
                row = red.matrix.entries[i]
                for j in range(c, self.ncols):
                    v[j] = v[j] - coef * row[j]
        return all(e.is_zero() for e in v)

    def row_space_equal(self, other: "Matrix") -> bool:
        if other.field != self.field or other.ncols != self.ncols:
            return False
        return self.row_basis() == other.row_basis()

    def row_space_intersection(self, other: "Matrix") -> "Matrix":
        """Canonical basis of rowspace(self) & rowspace(other).

        Every left-kernel vector (u | v) of the stacked matrix gives a
        common row-space vector u @ self; together these span the whole
        intersection.
        """
        if other.field != self.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")
        if other.ncols != self.ncols:
            raise ShapeMismatch(f"widths {self.ncols} and {other.ncols}")
        stacked = self.stack(other)
        left_kernel = stacked.transpose().nullspace()
        rows = []
        for w in left_kernel.rows():
            u = w[: self.nrows]
            rows.append(
                [
                    sum(
                        (u[i] * self.entries[i][j] for i in range(self.nrows)),
                        self.field.zero,
                    )
                    for j in range(self.ncols)
                ]
            )
        result = Matrix(self.field, rows, ncols=self.ncols).row_basis()
        assert result.nrows == self.rank + other.rank - stacked.rank
        return result


class RowReducer:
    """Incremental row-echelon accumulator for rank closure loops.

    Rows added through :meth:`add` are kept pivot-normalized but not
    inter-reduced; enough for rank and membership queries at closure time.
    """

    def __init__(self, field: FieldSpec, ncols: int):
        self.field = field
        self.ncols = ncols
        self.pivot_rows: dict[int, list[FieldElement]] = {}

    @property
    def rank(self) -> int:
        return len(self.pivot_rows)

    def add(self, row) -> bool:
        """Fold one vector in; True when it enlarged the span."""
        v = list(vec(self.field, row))
        if len(v) != self.ncols:
            raise ShapeMismatch(f"vector of length {len(v)} vs {self.ncols} columns")
        for c in range(self.ncols):
            if v[c].is_zero():
                continue
            pivot = self.pivot_rows.get(c)
            if pivot is None:
                inv = v[c].inverse()
                self.pivot_rows[c] = [e * inv for e in v]
                return True
            coef = v[c]
            for j in range(c, self.ncols):
                v[j] = v[j] - coef * pivot[j]
        return False

    def contains(self, row) -> bool:
        v = list(vec(self.field, row))
        for c in range(self.ncols):
            if v[c].is_zero():
                continue
            pivot = self.pivot_rows.get(c)
            if pivot is None:
                return False
            coef = v[c]
            for j in range(c, self.ncols):
                v[j] = v[j] - coef * pivot[j]
        return True
