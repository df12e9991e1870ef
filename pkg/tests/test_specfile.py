"""Spec-file format: parsing, semantic validation, round-trips."""

import random
from pathlib import Path

import pytest

from mtcodes.errors import SpecFileError
from mtcodes.galois import FieldSpec
from mtcodes.mt import MTSpec
from mtcodes.polyring import Poly
from mtcodes.specfile import format_spec, load_spec, parse_spec

F5 = FieldSpec(5)

GOOD = """\
[field]
p = 5

[blocks]
lengths = [3, 9]
shifts = ["2", "3"]

[[generator]]
blocks = ["1 + x", "2"]

[[generator]]
blocks = ["0", "x^2"]
"""


def test_parse_happy_path():
    spec = parse_spec(GOOD)
    assert spec.field == F5
    assert spec.block_lengths == (3, 9)
    assert spec.shifts == (F5.from_int(2), F5.from_int(3))
    assert spec.num_generators == 2
    assert spec.generators[0][0] == Poly.parse(F5, "1 + x")


def test_parse_extension_field():
    text = """\
[field]
p = 2
degree = 2
modulus = [1, 1, 1]

[blocks]
lengths = [5]
shifts = ["w"]

[[generator]]
blocks = ["w + w*x + x^2"]
"""
    spec = parse_spec(text)
    assert spec.field.order == 4
    assert spec.shifts[0] == spec.field.omega


def test_syntax_error_carries_location():
    with pytest.raises(SpecFileError, match="syntax error"):
        parse_spec("[field\np = 5\n")


def test_missing_field_section():
    with pytest.raises(SpecFileError, match=r"missing \[field\]"):
        parse_spec("[blocks]\nlengths = [3]\nshifts = [\"2\"]\n")


def test_missing_blocks_section():
    with pytest.raises(SpecFileError, match=r"missing \[blocks\]"):
        parse_spec('[field]\np = 5\n\n[[generator]]\nblocks = ["1"]\n')


def test_missing_generator_section():
    with pytest.raises(SpecFileError, match="generator"):
        parse_spec('[field]\np = 5\n\n[blocks]\nlengths = [3]\nshifts = ["2"]\n')


def test_unknown_top_level_section():
    with pytest.raises(SpecFileError, match="unknown keys: extra"):
        parse_spec(GOOD + "\n[extra]\nx = 1\n")


def test_unknown_field_key():
    bad = GOOD.replace("p = 5", "p = 5\nq = 25")
    with pytest.raises(SpecFileError, match=r"\[field\] has unknown keys: q"):
        parse_spec(bad)


def test_missing_required_key():
    bad = GOOD.replace('shifts = ["2", "3"]\n', "")
    with pytest.raises(SpecFileError, match="missing required key 'shifts'"):
        parse_spec(bad)


def test_length_shift_mismatch():
    bad = GOOD.replace('shifts = ["2", "3"]', 'shifts = ["2"]')
    with pytest.raises(SpecFileError, match="2 lengths but 1 shifts"):
        parse_spec(bad)


def test_empty_blocks_rejected():
    bad = GOOD.replace("lengths = [3, 9]", "lengths = []").replace(
        'shifts = ["2", "3"]', "shifts = []"
    )
    with pytest.raises(SpecFileError, match="must not be empty"):
        parse_spec(bad)


def test_bad_shift_literal():
    bad = GOOD.replace('"2", "3"', '"2", "z"')
    with pytest.raises(SpecFileError, match=r"shifts\[1\].*does not parse"):
        parse_spec(bad)


def test_zero_shift_is_a_semantic_error():
    bad = GOOD.replace('"2", "3"', '"2", "0"')
    with pytest.raises(SpecFileError, match="inconsistent spec.*nonzero"):
        parse_spec(bad)


def test_bad_generator_literal():
    bad = GOOD.replace('"0", "x^2"', '"0", "x^"')
    with pytest.raises(SpecFileError, match=r"blocks\[1\].*does not parse"):
        parse_spec(bad)


def test_generator_entry_count_mismatch():
    bad = GOOD.replace('blocks = ["0", "x^2"]', 'blocks = ["0"]')
    with pytest.raises(SpecFileError, match="one per block"):
        parse_spec(bad)


def test_non_field_parameters():
    bad = GOOD.replace("p = 5", "p = 6")
    with pytest.raises(SpecFileError, match="does not define a field"):
        parse_spec(bad)


def test_types_are_checked():
    bad = GOOD.replace("lengths = [3, 9]", 'lengths = ["3", "9"]')
    with pytest.raises(SpecFileError, match="list of integers"):
        parse_spec(bad)
    bad = GOOD.replace('shifts = ["2", "3"]', "shifts = [2, 3]")
    with pytest.raises(SpecFileError, match="list of strings"):
        parse_spec(bad)


# -- files ------------------------------------------------------------------------


def test_load_spec_missing_file(tmp_path):
    with pytest.raises(SpecFileError, match="cannot read"):
        load_spec(str(tmp_path / "nope.spec"))


def test_load_spec_reads_utf8(tmp_path):
    path = tmp_path / "ok.spec"
    path.write_text("# échantillon\n" + GOOD, encoding="utf-8")
    assert parse_spec(GOOD).generators == load_spec(str(path)).generators


def test_shipped_spec_files_parse():
    spec_dir = Path(__file__).resolve().parents[1] / "specs"
    files = sorted(spec_dir.glob("*.spec"))
    assert len(files) == 7
    for f in files:
        spec = load_spec(str(f))
        assert spec.length >= 5


# -- round trips -------------------------------------------------------------------


def test_format_then_parse_is_identity():
    spec = parse_spec(GOOD)
    again = parse_spec(format_spec(spec, comment="two generators\nsecond line"))
    assert again == spec


def test_round_trip_random_specs():
    rng = random.Random(2024)
    fields = [FieldSpec(2), FieldSpec(3), F5, FieldSpec(2, 2, [1, 1, 1])]
    for _ in range(40):
        field = rng.choice(fields)
        ell = rng.randint(1, 3)
        lengths = tuple(rng.randint(1, 6) for _ in range(ell))
        nonzero = [e for e in field.nonzero_elements()]
        shifts = tuple(rng.choice(nonzero) for _ in range(ell))
        els = list(field.elements())
        gens = tuple(
            tuple(
                Poly(field, [rng.choice(els) for _ in range(rng.randint(0, m))])
                for m in lengths
            )
            for _ in range(rng.randint(1, 3))
        )
        spec = MTSpec(field, lengths, shifts, gens)
        assert parse_spec(format_spec(spec)) == spec
