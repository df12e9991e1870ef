"""Generic linear codes over a finite field.

A code is held as a generator matrix whose rows may be redundant; the
dimension is its rank. Duals, hulls and the LCD/self-orthogonal/
dual-containing predicates are exact. LCD-ness is always computed twice,
through the hull dimension and through the Gram determinant, and the two
routes must agree or the run aborts: they are independent enough that a
disagreement means a bug somewhere below.

Minimum distance is the one genuinely combinatorial computation in the
package, so it alone is vectorized with numpy. Messages are enumerated up
to scalar normalization (first nonzero symbol fixed to 1), which covers
every codeword weight once per projective point: (q^k - 1)/(q - 1)
candidates instead of q^k - 1.
"""

from __future__ import annotations

import numpy as np

from .errors import CapExceeded, InternalCheckError
from .matfq import Matrix

DEFAULT_CAP = 100_000_000
_CHUNK = 1 << 16


class LinearCode:
    __slots__ = ("gen", "_dual", "_hull")

    def __init__(self, gen: Matrix):
        self.gen = gen
        self._dual = None
        self._hull = None

    @property
    def field(self):
        return self.gen.field

    @property
    def length(self) -> int:
        return self.gen.ncols

    @property
    def dimension(self) -> int:
        return self.gen.rank

    def __repr__(self):
        return f"LinearCode[{self.length},{self.dimension}] over {self.field.name}"

    def contains(self, word) -> bool:
        return self.gen.row_space_contains(word)

    def equals(self, other: "LinearCode") -> bool:
        return self.gen.row_space_equal(other.gen)

    def dual(self) -> "LinearCode":
        """The Euclidean dual, with a canonical (RREF) basis."""
        if self._dual is None:
            self._dual = LinearCode(self.gen.nullspace())
        return self._dual

    def hull(self) -> "LinearCode":
        """C intersected with its dual, with a canonical basis."""
        if self._hull is None:
            basis = self.gen.row_basis().row_space_intersection(self.dual().gen)
            self._hull = LinearCode(basis)
        return self._hull

    def gram(self) -> Matrix:
        """R R^T for a full-rank row basis R of the code."""
        basis = self.gen.row_basis()
        return basis @ basis.transpose()

    def is_lcd(self) -> bool:
        """Hull-is-zero, cross-checked against det(R R^T) != 0."""
        by_hull = self.hull().dimension == 0
        by_gram = self.gram().is_nonsingular()
        if by_hull != by_gram:
            raise InternalCheckError(
                f"LCD routes disagree on {self!r}: hull says {by_hull}, Gram says {by_gram}"
            )
        return by_hull

    def is_self_orthogonal(self) -> bool:
        return (self.gen @ self.gen.transpose()).is_zero()

    def is_dual_containing(self) -> bool:
        return all(self.gen.row_space_contains(r) for r in self.dual().gen.rows())

    # -- minimum distance -------------------------------------------------------

    def min_distance(self, cap: int = DEFAULT_CAP) -> int:
        """Exact minimum weight by exhaustive normalized-message enumeration.

        Raises CapExceeded (carrying the required candidate count) when the
        projective message count (q^k - 1)/(q - 1) exceeds ``cap``.
        """
        k = self.dimension
        if k == 0:
            raise ValueError("the zero code has no nonzero codewords")
        q = self.field.order
        required = (q**k - 1) // (q - 1)
        if required > cap:
            raise CapExceeded(required, cap)
        basis = self.gen.row_basis()
        if self.field.d == 1:
            return self._min_distance_prime(basis, q)
        return self._min_distance_tables(basis, q)

    def _min_distance_prime(self, basis: Matrix, q: int) -> int:
        rows = np.array(
            [[e.index for e in row] for row in basis.entries], dtype=np.int64
        )
        k, n = rows.shape
        best = n + 1
        for lead in range(k):
            rem = k - lead - 1
            tail = rows[lead + 1 :]
            pows = q ** np.arange(rem, dtype=np.int64)
            total = q**rem
            for lo in range(0, total, _CHUNK):
                nums = np.arange(lo, min(lo + _CHUNK, total), dtype=np.int64)
                digits = (nums[:, None] // pows[None, :]) % q
                words = (digits @ tail + rows[lead]) % q
                w = int(np.count_nonzero(words, axis=1).min())
                if w < best:
                    best = w
                    if best == 1:
                        return 1
        return best

    def _min_distance_tables(self, basis: Matrix, q: int) -> int:
        add, mul = self.field.numpy_tables()
        rows = np.array(
            [[e.index for e in row] for row in basis.entries], dtype=np.int16
        )
        k, n = rows.shape
        best = n + 1
        for lead in range(k):
            rem = k - lead - 1
            pows = q ** np.arange(rem, dtype=np.int64)
            total = q**rem
            for lo in range(0, total, _CHUNK):
                nums = np.arange(lo, min(lo + _CHUNK, total), dtype=np.int64)
                digits = ((nums[:, None] // pows[None, :]) % q).astype(np.int16)
                words = np.repeat(rows[lead][None, :], len(nums), axis=0)
                for t in range(rem):
                    scaled = mul[digits[:, t], :][:, rows[lead + 1 + t]]
                    words = add[words, scaled]
                w = int(np.count_nonzero(words, axis=1).min())
                if w < best:
                    best = w
                    if best == 1:
                        return 1
        return best
