"""Matrices over F_q[x]: minors and determinantal divisors.

Sized for stacked generator matrices of desk-scale codes (a handful of rows
and columns), so determinants are computed by Laplace expansion with
memoization on (row tuple, column tuple) subproblems.
"""

from __future__ import annotations

from itertools import combinations

from .errors import ConditionNotMet, FieldMismatch, ShapeMismatch
from .galois import FieldSpec
from .polyring import Poly, gcd_many


class PolyMatrix:
    __slots__ = ("field", "nrows", "ncols", "entries")

    def __init__(self, field: FieldSpec, entries):
        rows = []
        for r in entries:
            row = []
            for e in r:
                if not isinstance(e, Poly):
                    e = Poly.constant(field, e)
                if e.field != field:
                    raise FieldMismatch(f"{field} vs {e.field}")
                row.append(e)
            rows.append(tuple(row))
        if not rows:
            raise ShapeMismatch("empty polynomial matrix")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ShapeMismatch("ragged rows")
        self.field = field
        self.nrows = len(rows)
        self.ncols = width
        self.entries = tuple(rows)

    def __repr__(self):
        body = "; ".join(", ".join(str(e) for e in row) for row in self.entries)
        return f"PolyMatrix({self.field.name}[x], {self.nrows}x{self.ncols}: {body})"

    def _det_sub(self, rows: tuple, cols: tuple, memo: dict) -> Poly:
        if not rows:
            return Poly.one(self.field)
        key = (rows, cols)
        cached = memo.get(key)
        if cached is not None:
            return cached
        top, rest = rows[0], rows[1:]
        acc = Poly.zero(self.field)
        sign = 1
        for j, c in enumerate(cols):
            e = self.entries[top][c]
            if not e.is_zero():
                term = e * self._det_sub(rest, cols[:j] + cols[j + 1 :], memo)
                acc = acc + term if sign > 0 else acc - term
            sign = -sign
        memo[key] = acc
        return acc

    def det(self) -> Poly:
        if self.nrows != self.ncols:
            raise ShapeMismatch(f"determinant of {self.nrows}x{self.ncols} matrix")
        if self.nrows > 8:
            raise ShapeMismatch(
                f"cofactor expansion is capped at 8x8, got {self.nrows}x{self.ncols}"
            )
        return self._det_sub(tuple(range(self.nrows)), tuple(range(self.ncols)), {})

    def minors(self, k: int) -> list[Poly]:
        """All k x k minors, ordered lexicographically by (row subset, column
        subset). Zero minors are included, so callers can show the full list."""
        if k < 0 or k > self.nrows or k > self.ncols:
            raise ShapeMismatch(f"no {k}x{k} minors in a {self.nrows}x{self.ncols} matrix")
        memo: dict = {}
        out = []
        for rows in combinations(range(self.nrows), k):
            for cols in combinations(range(self.ncols), k):
                out.append(self._det_sub(rows, cols, memo))
        return out

    def determinantal_divisor(self, k: int) -> Poly:
        """Monic gcd of the nonzero k x k minors."""
        nonzero = [m for m in self.minors(k) if not m.is_zero()]
        if not nonzero:
            raise ConditionNotMet(f"every {k}x{k} minor vanishes")
        return gcd_many(nonzero)
