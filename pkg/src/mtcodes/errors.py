"""Exception types shared across the package."""


class FieldMismatch(ValueError):
    """Two operands belong to different finite fields."""


class ShapeMismatch(ValueError):
    """Matrix/vector dimensions are incompatible for the requested operation."""


class CapExceeded(RuntimeError):
    """An enumeration would exceed the configured budget.

    The ``required`` attribute holds the number of candidates the full
    enumeration would need, so callers can rerun with a larger cap.
    """

    def __init__(self, required: int, cap: int):
        self.required = required
        self.cap = cap
        super().__init__(
            f"enumeration needs {required} candidates, cap is {cap}"
        )


class InternalCheckError(AssertionError):
    """Two independent computations of the same quantity disagree.

    Raised by the built-in cross-checks (dimension formula vs. rank,
    hull-based vs. Gram-based LCD test, direct-sum certificates). Any
    occurrence is a bug, not a property of the input.
    """


class ConditionNotMet(RuntimeError):
    """A structural precondition (e.g. pairwise-coprime quotients) fails,
    so the requested decomposition is not available for this input."""


class SpecFileError(ValueError):
    """A code specification file failed to parse or validate."""


class PropertyViolation(AssertionError):
    """A randomized audit trial falsified an invariant.

    Carries the violated property's name and a spec-file serialization of
    the offending configuration so the trial can be rerun in isolation.
    """

    def __init__(self, prop: str, spec_text: str, detail: str = ""):
        self.prop = prop
        self.spec_text = spec_text
        msg = f"property {prop} violated"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg + "; reproducer spec:\n" + spec_text)
