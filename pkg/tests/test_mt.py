"""Multi-twisted layer: shifts, expansion, projections, duals, verdicts."""

import pytest

from mtcodes.errors import ConditionNotMet
from mtcodes.galois import FieldSpec
from mtcodes.matfq import vec
from mtcodes import mt
from mtcodes.mt import MTSpec, Verdict
from mtcodes.polyring import Poly

F3 = FieldSpec(3)
F4 = FieldSpec(2, 2, [1, 1, 1])
F5 = FieldSpec(5)


def P(field, text):
    return Poly.parse(field, text)


def make_spec(field, lengths, shift_texts, gen_rows):
    return MTSpec(
        field,
        tuple(lengths),
        tuple(field.parse(t) for t in shift_texts),
        tuple(tuple(P(field, g) for g in row) for row in gen_rows),
    )


# a two-generator spec over F_5 with blocks of length 3 and 9
TWO_GEN = make_spec(
    F5,
    (3, 9),
    ("2", "3"),
    [("1 + x", "2 + x^2"), ("x^2", "1 + x^4")],
)

# single-generator spec over F_4 whose quotients are coprime
COPRIME_F4 = make_spec(
    F4,
    (5, 5),
    ("w", "w"),
    [("w + w*x + x^2", "1 + x + w*x^2 + x^3")],
)

# both quotients come out as (x+2)^2 over F_5; the generator entry is (x+2)^3
SHARED_F5 = make_spec(
    F5,
    (5, 5),
    ("3", "3"),
    [("3 + 2*x + x^2 + x^3", "3 + 2*x + x^2 + x^3")],
)


# -- spec validation ---------------------------------------------------------------


def test_rejects_zero_shift():
    with pytest.raises(ValueError, match="nonzero"):
        make_spec(F5, (3,), ("0",), [("1",)])


def test_rejects_empty_blocks():
    with pytest.raises(ValueError, match="at least one block"):
        MTSpec(F5, (), (), ((),))


def test_rejects_shift_count_mismatch():
    with pytest.raises(ValueError, match="shift constants"):
        make_spec(F5, (3, 4), ("2",), [("1", "1")])


def test_rejects_ragged_generator_row():
    with pytest.raises(ValueError, match="generator row"):
        make_spec(F5, (3, 4), ("2", "3"), [("1",)])


def test_rejects_empty_generators():
    with pytest.raises(ValueError, match="at least one generator"):
        MTSpec(F5, (3,), (F5.from_int(2),), ())


def test_rejects_foreign_field_shift():
    with pytest.raises(ValueError, match="different field"):
        MTSpec(F5, (3,), (F3.from_int(2),), ((P(F5, "1"),),))


def test_rejects_nonpositive_length():
    with pytest.raises(ValueError, match=">= 1"):
        make_spec(F5, (0,), ("2",), [("1",)])


def test_generators_are_reduced_mod_modulus():
    spec = make_spec(F5, (3,), ("2",), [("x^5",)])
    # x^5 = x^2 * x^3 = 2 x^2 mod (x^3 - 2)
    assert spec.generators[0][0] == P(F5, "2*x^2")


def test_block_modulus():
    assert TWO_GEN.block_modulus(0) == P(F5, "x^3 - 2")
    assert TWO_GEN.block_modulus(1) == P(F5, "x^9 - 3")
    assert TWO_GEN.length == 12
    assert TWO_GEN.num_blocks == 2
    assert TWO_GEN.num_generators == 2


# -- the twisted rotation -----------------------------------------------------------


def test_shift_single_block():
    spec = make_spec(F5, (3,), ("2",), [("1",)])
    assert mt.shift_word(spec, vec(F5, [1, 0, 0])) == vec(F5, [0, 1, 0])
    assert mt.shift_word(spec, vec(F5, [0, 0, 1])) == vec(F5, [2, 0, 0])


def test_shift_two_blocks():
    spec = make_spec(F5, (2, 2), ("1", "3"), [("1", "1")])
    got = mt.shift_word(spec, vec(F5, [0, 1, 0, 1]))
    assert got == vec(F5, [1, 0, 3, 0])


def test_shift_wrong_length():
    from mtcodes.errors import ShapeMismatch

    with pytest.raises(ShapeMismatch):
        mt.shift_word(TWO_GEN, vec(F5, [1, 0]))


def test_shift_order_divides_block_data():
    """m applications of T multiply each block by its shift constant."""
    spec = make_spec(F5, (4,), ("3",), [("1",)])
    word = vec(F5, [1, 2, 0, 4])
    out = word
    for _ in range(4):
        out = mt.shift_word(spec, out)
    lam = F5.from_int(3)
    assert out == tuple(lam * c for c in word)


# -- expansion ------------------------------------------------------------------------


def test_expand_is_shift_invariant():
    code = mt.expand(TWO_GEN)
    for row in code.gen.rows():
        assert code.contains(mt.shift_word(TWO_GEN, row))


def test_unit_generator_spans_everything():
    spec = make_spec(F5, (4,), ("1",), [("1",)])
    assert mt.expand(spec).dimension == 4


def test_zero_generator_spans_nothing():
    spec = make_spec(F5, (3, 4), ("2", "3"), [("0", "0")])
    assert mt.expand(spec).dimension == 0


def test_expand_contains_generator_words():
    code = mt.expand(TWO_GEN)
    for row in TWO_GEN.generators:
        assert code.contains(mt.generator_word(TWO_GEN, row))


# -- block generator polynomials -------------------------------------------------------


def test_block_gen_poly_is_monic_divisor_of_modulus():
    for spec in (TWO_GEN, COPRIME_F4, SHARED_F5):
        for i in range(spec.num_blocks):
            g = mt.block_gen_poly(spec, i)
            assert g.leading_coeff() == spec.field.one
            assert (spec.block_modulus(i) % g).is_zero()
            q = mt.quotient_poly(spec, i)
            assert g * q == spec.block_modulus(i)


def test_block_gen_poly_of_coprime_f4_spec():
    """gcd against x^5 - w recovers both factors of the generator row."""
    assert mt.block_gen_poly(COPRIME_F4, 0) == P(F4, "w + w*x + x^2")
    assert mt.block_gen_poly(COPRIME_F4, 1) == P(F4, "1 + x + w*x^2 + x^3")


def test_block_gen_poly_all_zero_projections():
    spec = make_spec(F5, (3, 4), ("2", "3"), [("0", "1")])
    assert mt.block_gen_poly(spec, 0) == P(F5, "x^3 - 2")
    assert mt.quotient_poly(spec, 0) == P(F5, "1")


# -- projections ------------------------------------------------------------------------


def test_projection_code_dimensions():
    for spec in (TWO_GEN, COPRIME_F4, SHARED_F5):
        for i in range(spec.num_blocks):
            g = mt.block_gen_poly(spec, i)
            proj = mt.projection_code(spec, i)
            assert proj.length == spec.block_lengths[i]
            assert proj.dimension == spec.block_lengths[i] - g.degree


def test_projection_of_shared_spec_is_mds():
    proj = mt.projection_code(SHARED_F5, 0)
    assert (proj.length, proj.dimension, proj.min_distance()) == (5, 2, 4)


def test_projection_of_unit_block_is_full_space():
    spec = make_spec(F5, (3,), ("2",), [("1",)])
    assert mt.projection_code(spec, 0).dimension == 3


def test_projection_of_modulus_block_is_zero():
    spec = make_spec(F5, (3, 4), ("2", "3"), [("0", "1")])
    assert mt.projection_code(spec, 0).dimension == 0


# -- duals --------------------------------------------------------------------------------


def test_dual_code_dimension():
    code = mt.expand(TWO_GEN)
    dual = mt.dual_code(TWO_GEN)
    assert code.dimension + dual.dimension == TWO_GEN.length


def test_dual_of_full_space_is_zero():
    spec = make_spec(F5, (4,), ("1",), [("1",)])
    assert mt.dual_code(spec).dimension == 0
    dspec = mt.dual_spec(spec)
    assert mt.expand(dspec).dimension == 0


def test_dual_spec_inverts_shifts():
    dspec = mt.dual_spec(TWO_GEN)
    assert dspec.block_lengths == TWO_GEN.block_lengths
    for lam, mu in zip(TWO_GEN.shifts, dspec.shifts):
        assert lam * mu == F5.one
    back = mt.dual_spec(dspec)
    assert back.shifts == TWO_GEN.shifts


def test_dual_spec_expands_to_the_dual():
    dspec = mt.dual_spec(TWO_GEN)
    assert mt.expand(dspec).equals(mt.dual_code(TWO_GEN))


def test_dual_of_dual_is_the_code():
    dd = mt.dual_spec(mt.dual_spec(TWO_GEN))
    assert mt.expand(dd).equals(mt.expand(TWO_GEN))


# -- dimension formula -----------------------------------------------------------------


def test_stacked_matrix_shape():
    pm = mt.stacked_matrix(TWO_GEN)
    assert (pm.nrows, pm.ncols) == (4, 2)
    pm1 = mt.stacked_matrix(COPRIME_F4)
    assert (pm1.nrows, pm1.ncols) == (3, 2)


def test_dimension_formula_unit_generator():
    spec = make_spec(F5, (4,), ("1",), [("1",)])
    cert = mt.dimension_formula(spec)
    assert cert.dimension == 4
    assert cert.divisor == Poly.one(F5)
    assert cert.minors == (P(F5, "1"), P(F5, "x^4 - 1"))


def test_dimension_formula_matches_rank():
    for spec in (TWO_GEN, COPRIME_F4, SHARED_F5):
        cert = mt.dimension_formula(spec)
        assert cert.dimension == mt.expand(spec).dimension
        assert cert.divisor.leading_coeff() == spec.field.one
        assert spec.length - cert.divisor.degree == cert.dimension


def test_divisor_divides_product_of_moduli():
    for spec in (TWO_GEN, COPRIME_F4, SHARED_F5):
        cert = mt.dimension_formula(spec)
        product = Poly.one(spec.field)
        for i in range(spec.num_blocks):
            product = product * spec.block_modulus(i)
        assert (product % cert.divisor).is_zero()


# -- coprimality and direct sums -------------------------------------------------------


def test_coprimality_of_coprime_f4_spec():
    check = mt.coprimality_condition(COPRIME_F4)
    assert check.holds
    assert check.quotients[0] == P(F4, "1 + x + w*x^2 + x^3")
    assert check.quotients[1] == P(F4, "w + w*x + x^2")
    assert check.failing_pair is None


def test_coprimality_failure_names_the_witness():
    check = mt.coprimality_condition(SHARED_F5)
    assert not check.holds
    assert check.failing_pair == (0, 1)
    # both quotients are (x+2)^2
    assert check.quotients[0] == P(F5, "4 + 4*x + x^2")
    assert check.common_factor == P(F5, "4 + 4*x + x^2")


def test_direct_sum_certificate():
    cert = mt.direct_sum_check(COPRIME_F4)
    assert cert.block_dims == (3, 2)
    assert cert.dimension == 5
    assert [c.length for c in cert.components] == [5, 5]


def test_direct_sum_single_block_is_trivial():
    spec = make_spec(F5, (3,), ("2",), [("1 + x",)])
    cert = mt.direct_sum_check(spec)
    assert cert.dimension == mt.expand(spec).dimension
    assert len(cert.components) == 1


def test_direct_sum_requires_coprimality():
    with pytest.raises(ConditionNotMet):
        mt.direct_sum_check(SHARED_F5)


def test_projection_duality_under_coprimality():
    """pi_i(dual of C) equals the dual of pi_i(C) when the condition holds."""
    dspec = mt.dual_spec(COPRIME_F4)
    for i in range(COPRIME_F4.num_blocks):
        left = mt.projection_code(dspec, i)
        right = mt.projection_code(COPRIME_F4, i).dual()
        assert left.equals(right)


# -- LCD verdicts ----------------------------------------------------------------------


def test_verdict_lcd_without_block_conditions():
    """Shift constants whose square is not 1 impose nothing."""
    v = mt.lcd_verdict(COPRIME_F4)
    assert v.status == Verdict.LCD
    assert v.failing_block is None
    assert mt.expand(COPRIME_F4).is_lcd()


def test_verdict_inconclusive_when_quotients_share_a_factor():
    v = mt.lcd_verdict(SHARED_F5)
    assert v.status == Verdict.INCONCLUSIVE
    assert not v.coprimality.holds


def test_verdict_not_lcd_by_reciprocal_clause():
    # x^4 - 1 over F_5; g = x - 2 is not self-reciprocal
    spec = make_spec(F5, (4,), ("1",), [("x + 3",)])
    v = mt.lcd_verdict(spec)
    assert v.status == Verdict.NOT_LCD
    assert v.failing_block == 0
    assert v.failing_clause == "self-reciprocal"
    assert not mt.expand(spec).is_lcd()


def test_verdict_not_lcd_by_quotient_clause():
    # x^3 - 1 = (x - 1)^3 over F_3; g = (x - 1)^2 shares x - 1 with its quotient
    spec = make_spec(F3, (3,), ("1",), [("1 + x + x^2",)])
    v = mt.lcd_verdict(spec)
    assert v.status == Verdict.NOT_LCD
    assert v.failing_block == 0
    assert v.failing_clause == "quotient-coprime"
    assert not mt.expand(spec).is_lcd()


def test_verdict_lcd_with_self_inverse_shifts():
    # cyclic block of length 3 over F_5: g = x - 1 is self-reciprocal
    spec = make_spec(F5, (3,), ("1",), [("x + 4",)])
    v = mt.lcd_verdict(spec)
    assert v.status == Verdict.LCD
    assert mt.expand(spec).is_lcd()


def test_verdict_matches_hull_on_conclusive_specs():
    for spec in (TWO_GEN, COPRIME_F4):
        v = mt.lcd_verdict(spec)
        if v.status == Verdict.INCONCLUSIVE:
            continue
        assert (v.status == Verdict.LCD) == mt.expand(spec).is_lcd()


# -- the older sufficient condition ------------------------------------------------------


def test_legacy_true_case_implies_lcd():
    spec = make_spec(F5, (2, 3), ("2", "3"), [("1", "1")])
    check = mt.legacy_lcd_condition(spec)
    assert check.holds
    assert mt.lcd_verdict(spec).status == Verdict.LCD
    assert mt.expand(spec).is_lcd()


def test_legacy_fails_on_repeated_modulus():
    check = mt.legacy_lcd_condition(COPRIME_F4)
    assert not check.holds
    assert "share the factor" in check.detail


def test_legacy_fails_on_self_inverse_shift():
    spec = make_spec(F5, (3,), ("1",), [("x + 4",)])
    check = mt.legacy_lcd_condition(spec)
    assert not check.holds
    assert "self-inverse" in check.detail


def test_legacy_fails_on_moduli_sharing_a_factor():
    """lambda = (2, 3) over F_5 passes the shift test but x^3-2 divides x^9-3."""
    check = mt.legacy_lcd_condition(TWO_GEN)
    assert not check.holds
    assert "share the factor" in check.detail
    from mtcodes.polyring import gcd

    g = gcd(P(F5, "x^3 - 2"), P(F5, "x^9 - 3"))
    assert g == P(F5, "3 + x^3")


# -- hypothesis report --------------------------------------------------------------------


def test_hypothesis_report_structure():
    report = mt.refuted_hypotheses(TWO_GEN)
    names = {c.name for c in report.cases}
    assert names == {
        "small-dim-lcd",
        "dim-min-lcd-so",
        "dual-min-lcd-dc",
        "projections-lcd",
    }
    for case in report.cases:
        assert case.counterexample == (case.hypothesis and not case.conclusion)
    with pytest.raises(KeyError):
        report.case("no-such-claim")


def test_hypothesis_report_facts_are_exact():
    report = mt.refuted_hypotheses(TWO_GEN)
    code = mt.expand(TWO_GEN)
    assert report.dimension == code.dimension
    assert report.dual_dimension == TWO_GEN.length - code.dimension
    assert report.min_block_length == 3
    assert report.is_lcd == code.is_lcd()
