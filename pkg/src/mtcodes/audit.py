"""Randomized self-audit: throw random specs at the package and check the
invariants that must hold for every input.

Per trial:
  * dimension-formula     minor-gcd dimension equals the expanded rank
  * dim-plus-dual         dim C + dim C-dual = n
  * shift-invariance      the twisted shift maps the code into itself
  * hull-of-dual          hull(C) = hull(C-dual) as row spaces
  * verdict-vs-hull       among coprime-quotient specs the structural
                          verdict matches the exact hull test exactly
  * legacy-implies-lcd    the older whole-modulus condition never fires
                          without the quotient-based verdict firing too

The run also counts how often each LCD detector fires, which quantifies
how much further the quotient-based condition reaches.

Reproducibility: the base seed derives one sub-seed per trial, so a trial
can be replayed without rerunning its predecessors. A violation raises
PropertyViolation carrying the offending spec in spec-file form.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dataclass_field

from . import mt
from .errors import PropertyViolation
from .galois import FieldSpec
from .polyring import Poly
from .specfile import format_spec

_FIELD_POOL = (
    FieldSpec(2),
    FieldSpec(3),
    FieldSpec(2, 2, [1, 1, 1]),
    FieldSpec(5),
)

PROPERTY_NAMES = (
    "dimension-formula",
    "dim-plus-dual",
    "shift-invariance",
    "hull-of-dual",
    "verdict-vs-hull",
    "legacy-implies-lcd",
)


@dataclass(frozen=True)
class AuditResult:
    trials: int
    seed: int
    checks: dict[str, int] = dataclass_field(default_factory=dict)
    coprime_cases: int = 0
    verdict_lcd_detections: int = 0
    legacy_detections: int = 0
    exact_lcd_cases: int = 0


def random_spec(rng: random.Random, max_blocks: int = 3, max_len: int = 8,
                max_gens: int = 3, fields=_FIELD_POOL) -> mt.MTSpec:
    field = rng.choice(list(fields))
    ell = rng.randint(1, max_blocks)
    lengths = tuple(rng.randint(1, max_len) for _ in range(ell))
    nonzero = list(field.nonzero_elements())
    shifts = tuple(rng.choice(nonzero) for _ in range(ell))
    elems = list(field.elements())
    rho = rng.randint(1, max_gens)
    generators = tuple(
        tuple(
            Poly(field, [rng.choice(elems) for _ in range(m)])
            for m in lengths
        )
        for _ in range(rho)
    )
    return mt.MTSpec(field, lengths, shifts, generators)


def _fail(prop: str, spec: mt.MTSpec, trial: int, trial_seed: int, detail: str):
    text = format_spec(spec, comment=f"audit reproducer, trial {trial}, sub-seed {trial_seed}")
    raise PropertyViolation(prop, text, detail)


def run_audit(trials: int, seed: int, max_blocks: int = 3, max_len: int = 8,
              max_gens: int = 3, fields=_FIELD_POOL) -> AuditResult:
    if trials < 1:
        raise ValueError("trials must be >= 1")
    base = random.Random(seed)
    trial_seeds = [base.getrandbits(63) for _ in range(trials)]
    checks = {name: 0 for name in PROPERTY_NAMES}
    coprime_cases = 0
    verdict_lcd = 0
    legacy_hits = 0
    exact_lcd = 0

    for t, ts in enumerate(trial_seeds):
        rng = random.Random(ts)
        spec = random_spec(rng, max_blocks, max_len, max_gens, fields)
        code = mt.expand(spec)
        cert = mt.dimension_formula(spec)
        if cert.dimension != code.dimension:
            _fail("dimension-formula", spec, t, ts,
                  f"formula {cert.dimension}, rank {code.dimension}")
        checks["dimension-formula"] += 1

        dual = mt.dual_code(spec)
        if code.dimension + dual.dimension != spec.length:
            _fail("dim-plus-dual", spec, t, ts,
                  f"{code.dimension} + {dual.dimension} != {spec.length}")
        checks["dim-plus-dual"] += 1

        for row in code.gen.rows():
            if not code.contains(mt.shift_word(spec, row)):
                _fail("shift-invariance", spec, t, ts, "shifted row left the code")
        checks["shift-invariance"] += 1

        hull = code.hull()
        dual_hull = dual.hull()
        if not hull.equals(dual_hull):
            _fail("hull-of-dual", spec, t, ts,
                  f"dims {hull.dimension} vs {dual_hull.dimension}")
        checks["hull-of-dual"] += 1

        is_lcd = code.is_lcd()
        verdict = mt.lcd_verdict(spec)
        if verdict.status is not mt.Verdict.INCONCLUSIVE:
            coprime_cases += 1
            if (verdict.status is mt.Verdict.LCD) != is_lcd:
                _fail("verdict-vs-hull", spec, t, ts,
                      f"verdict {verdict.status.value}, hull dim {hull.dimension}")
            checks["verdict-vs-hull"] += 1

        legacy = mt.legacy_lcd_condition(spec)
        if legacy.holds and verdict.status is not mt.Verdict.LCD:
            _fail("legacy-implies-lcd", spec, t, ts,
                  f"legacy fired but verdict is {verdict.status.value}")
        checks["legacy-implies-lcd"] += 1

        if verdict.status is mt.Verdict.LCD:
            verdict_lcd += 1
        if legacy.holds:
            legacy_hits += 1
        if is_lcd:
            exact_lcd += 1

    return AuditResult(
        trials=trials,
        seed=seed,
        checks=checks,
        coprime_cases=coprime_cases,
        verdict_lcd_detections=verdict_lcd,
        legacy_detections=legacy_hits,
        exact_lcd_cases=exact_lcd,
    )


def render_audit(result: AuditResult) -> str:
    out = [f"audit: {result.trials} trials, seed {result.seed}"]
    for name in PROPERTY_NAMES:
        out.append(f"  {name}: {result.checks[name]} checks, 0 violations")
    out.append(f"coprime-quotient cases: {result.coprime_cases}")
    out.append(f"exactly LCD: {result.exact_lcd_cases}")
    out.append(
        f"detections: quotient-based verdict {result.verdict_lcd_detections},"
        f" legacy condition {result.legacy_detections}"
    )
    return "\n".join(out) + "\n"
