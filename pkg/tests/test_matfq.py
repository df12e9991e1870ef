"""Dense linear algebra over finite fields: rank, RREF, nullspace, hull plumbing."""

import random

import pytest
from hypothesis import given, strategies as st

from mtcodes.errors import ShapeMismatch
from mtcodes.galois import FieldSpec
from mtcodes.matfq import Matrix, RowReducer, vec

F2 = FieldSpec(2)
F3 = FieldSpec(3)
F4 = FieldSpec(2, 2, [1, 1, 1])
F5 = FieldSpec(5)

FIELDS = [F2, F3, F4, F5]


def random_matrix(field, nrows, ncols, rng):
    els = list(field.elements())
    return Matrix(
        field,
        [[rng.choice(els) for _ in range(ncols)] for _ in range(nrows)],
        ncols=ncols,
    )


matrix_cases = st.tuples(
    st.sampled_from(FIELDS),
    st.integers(1, 5),
    st.integers(1, 5),
    st.integers(0, 2 ** 30),
)


# -- construction ------------------------------------------------------------------


def test_ragged_rows_rejected():
    with pytest.raises(ShapeMismatch):
        Matrix(F5, [[1, 2], [1]])


def test_empty_matrix_needs_column_count():
    with pytest.raises(ShapeMismatch):
        Matrix(F5, [])
    m = Matrix(F5, [], ncols=4)
    assert m.nrows == 0 and m.ncols == 4
    assert m.rank == 0


def test_int_entries_are_lifted():
    m = Matrix(F5, [[7, 1]])
    assert m[0, 0] == F5.from_int(2)


# -- rank and RREF -----------------------------------------------------------------


def test_identity_is_its_own_rref():
    eye = Matrix.identity(F5, 4)
    assert eye.rref().matrix == eye
    assert eye.rank == 4
    assert eye.is_nonsingular()


def test_zero_matrix_rank():
    assert Matrix.zeros(F5, 3, 4).rank == 0


@given(matrix_cases)
def test_rank_equals_transpose_rank(case):
    field, r, c, seed = case
    m = random_matrix(field, r, c, random.Random(seed))
    assert m.rank == m.transpose().rank


@given(matrix_cases, st.integers(1, 5))
def test_product_rank_bound(case, inner):
    field, r, c, seed = case
    rng = random.Random(seed)
    a = random_matrix(field, r, inner, rng)
    b = random_matrix(field, inner, c, rng)
    assert (a @ b).rank <= min(a.rank, b.rank)


@given(matrix_cases)
def test_rank_nullity(case):
    field, r, c, seed = case
    m = random_matrix(field, r, c, random.Random(seed))
    assert m.rank + m.nullspace().nrows == m.ncols


@given(matrix_cases)
def test_nullspace_annihilates(case):
    field, r, c, seed = case
    m = random_matrix(field, r, c, random.Random(seed))
    null = m.nullspace()
    for v in null.rows():
        image = m @ Matrix(field, [v], ncols=c).transpose()
        assert image.is_zero()
    assert null.rref().matrix == null  # canonical basis


def test_nullspace_edges():
    assert Matrix.identity(F5, 3).nullspace().nrows == 0
    z = Matrix.zeros(F5, 2, 3)
    assert z.nullspace().nrows == 3
    assert z.nullspace().rank == 3


# -- products and transposes ---------------------------------------------------------


def test_matmul_shapes():
    a = Matrix(F3, [[1, 2, 0]])
    with pytest.raises(ShapeMismatch):
        a @ a


def test_identity_is_neutral():
    rng = random.Random(11)
    a = random_matrix(F4, 3, 3, rng)
    assert a @ Matrix.identity(F4, 3) == a
    assert a.transpose().transpose() == a


def test_det_multiplicative():
    rng = random.Random(5)
    for field in FIELDS:
        a = random_matrix(field, 3, 3, rng)
        b = random_matrix(field, 3, 3, rng)
        assert (a @ b).det() == a.det() * b.det()


def test_det_requires_square():
    with pytest.raises(ShapeMismatch):
        Matrix.zeros(F5, 2, 3).det()


@given(matrix_cases)
def test_nonsingular_iff_full_rank(case):
    field, r, _, seed = case
    m = random_matrix(field, r, r, random.Random(seed))
    assert m.is_nonsingular() == (m.rank == r)
    assert m.is_nonsingular() == (not m.det().is_zero())


# -- row spaces ----------------------------------------------------------------------


def test_row_space_membership():
    m = Matrix(F5, [[1, 2, 3], [0, 1, 4]])
    r1, r2 = m.row(0), m.row(1)
    two = F5.from_int(2)
    combo = tuple(two * a + b for a, b in zip(r1, r2))
    assert m.row_space_contains(combo)
    assert not m.row_space_contains(vec(F5, [0, 0, 1]))
    assert not Matrix.zeros(F5, 2, 3).row_space_contains(vec(F5, [1, 0, 0]))


def test_row_space_equal_ignores_presentation():
    a = Matrix(F3, [[1, 1, 0], [0, 0, 1]])
    doubled = Matrix(F3, [[2, 2, 0], [1, 1, 1], [0, 0, 2]])
    assert a.row_space_equal(doubled)
    assert not a.row_space_equal(Matrix.identity(F3, 3))


@given(matrix_cases)
def test_intersection_dimension_bound(case):
    """dim(A row space meet B) = rk A + rk B - rk [A; B]."""
    field, r, c, seed = case
    rng = random.Random(seed)
    a = random_matrix(field, r, c, rng)
    b = random_matrix(field, r, c, rng)
    meet = a.row_space_intersection(b)
    assert meet.nrows == a.rank + b.rank - a.stack(b).rank
    for v in meet.rows():
        assert a.row_space_contains(v)
        assert b.row_space_contains(v)


def test_intersection_edges():
    a = Matrix(F5, [[1, 0, 0]])
    b = Matrix(F5, [[0, 1, 0]])
    assert a.row_space_intersection(b).nrows == 0
    assert a.row_space_intersection(a).row_space_equal(a)


def test_row_basis_is_canonical():
    m = Matrix(F5, [[2, 4, 6], [1, 2, 3], [0, 0, 1]])
    basis = m.row_basis()
    assert basis.nrows == 2
    assert basis.rref().matrix == basis


# -- incremental reducer ----------------------------------------------------------------


def test_row_reducer_matches_matrix_rank():
    rng = random.Random(99)
    for field in FIELDS:
        m = random_matrix(field, 6, 4, rng)
        red = RowReducer(field, 4)
        for row in m.rows():
            red.add(row)
        assert red.rank == m.rank
        for row in m.rows():
            assert red.contains(row)
            assert not red.add(row)
