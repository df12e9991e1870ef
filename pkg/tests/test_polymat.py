"""Polynomial matrices: determinants, minors, determinantal divisors."""

import random

import pytest
from hypothesis import given, strategies as st

from mtcodes.errors import ConditionNotMet, ShapeMismatch
from mtcodes.galois import FieldSpec
from mtcodes.matfq import Matrix
from mtcodes.polymat import PolyMatrix
from mtcodes.polyring import Poly

F3 = FieldSpec(3)
F4 = FieldSpec(2, 2, [1, 1, 1])
F5 = FieldSpec(5)


def P(field, text):
    return Poly.parse(field, text)


def random_poly_matrix(field, nrows, ncols, rng, max_deg=2):
    els = list(field.elements())
    return PolyMatrix(
        field,
        [
            [
                Poly(field, [rng.choice(els) for _ in range(rng.randint(0, max_deg) + 1)])
                for _ in range(ncols)
            ]
            for _ in range(nrows)
        ],
    )


# -- determinants ------------------------------------------------------------------


def test_det_of_diagonal_binomials():
    m = PolyMatrix(
        F3,
        [
            [P(F3, "x^5 - 2"), Poly.zero(F3)],
            [Poly.zero(F3), P(F3, "x^7 - 1")],
        ],
    )
    assert m.det() == P(F3, "x^5 - 2") * P(F3, "x^7 - 1")


def test_det_with_zero_row_vanishes():
    m = PolyMatrix(F5, [[P(F5, "x"), P(F5, "1")], [Poly.zero(F5), Poly.zero(F5)]])
    assert m.det().is_zero()


def test_det_requires_square():
    with pytest.raises(ShapeMismatch):
        PolyMatrix(F5, [[P(F5, "x"), P(F5, "1")]]).det()


def test_det_size_cap():
    big = PolyMatrix(F3, [[P(F3, "1")] * 9 for _ in range(9)])
    with pytest.raises(ShapeMismatch, match="capped"):
        big.det()


def test_det_2x2_sign():
    m = PolyMatrix(F5, [[P(F5, "x"), P(F5, "1")], [P(F5, "2"), P(F5, "x")]])
    assert m.det() == P(F5, "x^2 - 2")


def test_constant_matrix_det_matches_field_det():
    rng = random.Random(17)
    els = list(F5.elements())
    rows = [[rng.choice(els) for _ in range(3)] for _ in range(3)]
    pm = PolyMatrix(F5, [[Poly.constant(F5, e) for e in r] for r in rows])
    assert pm.det() == Poly.constant(F5, Matrix(F5, rows).det())


# -- minors ------------------------------------------------------------------------


def test_full_size_minor_is_det():
    rng = random.Random(3)
    m = random_poly_matrix(F4, 3, 3, rng)
    assert m.minors(3) == [m.det()]


def test_minor_count_and_order():
    """2x2 minors of a 3x2 matrix: one per row pair, lexicographic."""
    a, b, c = P(F5, "x"), P(F5, "x + 1"), P(F5, "x + 2")
    one = Poly.one(F5)
    m = PolyMatrix(F5, [[a, one], [b, one], [c, one]])
    minors = m.minors(2)
    assert minors == [a - b, a - c, b - c]


def test_minors_rejects_bad_size():
    m = PolyMatrix(F5, [[P(F5, "x")]])
    with pytest.raises(ShapeMismatch):
        m.minors(2)
    with pytest.raises(ShapeMismatch):
        m.minors(-1)


# -- determinantal divisors -----------------------------------------------------------


def test_divisor_of_diagonal_stack():
    """With no generator rows, the l-th divisor is the product of the moduli."""
    moduli = [P(F5, "x^3 - 2"), P(F5, "x^9 - 3")]
    m = PolyMatrix(
        F5,
        [
            [moduli[0], Poly.zero(F5)],
            [Poly.zero(F5), moduli[1]],
        ],
    )
    assert m.determinantal_divisor(2) == (moduli[0] * moduli[1]).monic()


def test_divisor_when_all_minors_vanish():
    m = PolyMatrix(F5, [[Poly.zero(F5), Poly.zero(F5)]])
    with pytest.raises(ConditionNotMet, match="vanishes"):
        m.determinantal_divisor(1)


def test_divisor_is_monic():
    m = PolyMatrix(F3, [[P(F3, "2*x + 1"), P(F3, "2")]])
    d = m.determinantal_divisor(1)
    assert d.leading_coeff() == F3.one


cases = st.tuples(
    st.sampled_from([F3, F4, F5]), st.integers(2, 4), st.integers(0, 2 ** 30)
)


@given(cases)
def test_divisor_chain(case):
    """d_k divides d_{k+1} whenever both are defined."""
    field, size, seed = case
    rng = random.Random(seed)
    m = random_poly_matrix(field, size, size, rng)
    prev = None
    for k in range(1, size + 1):
        try:
            cur = m.determinantal_divisor(k)
        except ConditionNotMet:
            break
        if prev is not None:
            assert (cur % prev).is_zero()
        prev = cur


@given(cases)
def test_divisor_invariant_under_row_operations(case):
    """Left multiplication by an invertible constant matrix fixes each divisor."""
    field, size, seed = case
    rng = random.Random(seed)
    m = random_poly_matrix(field, size, size, rng)
    els = list(field.elements())
    while True:
        u = Matrix(field, [[rng.choice(els) for _ in range(size)] for _ in range(size)])
        if u.is_nonsingular():
            break
    transformed = PolyMatrix(
        field,
        [
            [
                sum(
                    (Poly.constant(field, u[i, t]) * m.entries[t][j] for t in range(size)),
                    Poly.zero(field),
                )
                for j in range(size)
            ]
            for i in range(size)
        ],
    )
    for k in range(1, size + 1):
        try:
            before = m.determinantal_divisor(k)
        except ConditionNotMet:
            with pytest.raises(ConditionNotMet):
                transformed.determinantal_divisor(k)
            continue
        assert transformed.determinantal_divisor(k) == before
