"""mtcodes: multi-twisted codes over small finite fields.

Exact tools for building multi-twisted (blockwise constacyclic) codes from
polynomial generators, computing their dimension two independent ways,
deciding LCD-ness both by structural certificate and by exact hull
computation, and reproducing a suite of worked examples and counterexamples.
"""

from .code_core import DEFAULT_CAP, LinearCode
from .errors import (
    CapExceeded,
    ConditionNotMet,
    FieldMismatch,
    InternalCheckError,
    PropertyViolation,
    ShapeMismatch,
    SpecFileError,
)
from .galois import FieldElement, FieldSpec
from .matfq import Matrix
from .mt import (
    MTSpec,
    Verdict,
    coprimality_condition,
    dimension_formula,
    direct_sum_check,
    dual_code,
    dual_spec,
    expand,
    lcd_verdict,
    legacy_lcd_condition,
    refuted_hypotheses,
)
from .polyring import Poly
from .report import Report, build_report
from .specfile import format_spec, load_spec, parse_spec

__all__ = [
    "CapExceeded",
    "ConditionNotMet",
    "DEFAULT_CAP",
    "FieldElement",
    "FieldMismatch",
    "FieldSpec",
    "InternalCheckError",
    "LinearCode",
    "MTSpec",
    "Matrix",
    "Poly",
    "PropertyViolation",
    "Report",
    "ShapeMismatch",
    "SpecFileError",
    "Verdict",
    "build_report",
    "coprimality_condition",
    "dimension_formula",
    "direct_sum_check",
    "dual_code",
    "dual_spec",
    "expand",
    "format_spec",
    "lcd_verdict",
    "legacy_lcd_condition",
    "load_spec",
    "parse_spec",
    "refuted_hypotheses",
]
