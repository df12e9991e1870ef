"""Analysis report: one structure holding every fact about a code spec,
with a human rendering and a line-oriented machine rendering.

The machine form is ``key=value``, one per line, and round-trips: the
parser recovers every quantity the renderer wrote. Output is fully
deterministic (no timestamps, no environment echo), so identical inputs
give byte-identical reports.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import mt
from .code_core import DEFAULT_CAP, LinearCode
from .matfq import Matrix
from .polyring import Poly


@dataclass(frozen=True)
class Report:
    spec: mt.MTSpec
    dimension: int
    divisor: Poly
    coprimality: mt.CoprimalityCheck
    verdict: mt.LcdVerdict
    exact_lcd: bool
    hull_basis: Matrix
    self_orthogonal: bool
    dual_containing: bool
    legacy: mt.LegacyCheck
    hypotheses: mt.HypothesisReport
    dual_dimension: int
    dual_coprime: bool
    dual_verdict: mt.Verdict
    min_distance: int | None = None

    @property
    def hull_dimension(self) -> int:
        return self.hull_basis.nrows


def build_report(spec: mt.MTSpec, mindist: bool = False,
                 cap: int = DEFAULT_CAP) -> Report:
    """Run every analysis on one spec.

    ``mindist`` adds the exhaustive minimum-distance pass (subject to
    ``cap``); everything else is polynomial-time in the code length.
    """
    cert = mt.dimension_formula(spec)
    code = mt.expand(spec)
    check = mt.coprimality_condition(spec)
    verdict = mt.lcd_verdict(spec)
    hull = code.hull()
    legacy = mt.legacy_lcd_condition(spec)
    hyps = mt.refuted_hypotheses(spec)
    dspec = mt.dual_spec(spec)
    dual_check = mt.coprimality_condition(dspec)
    dual_verdict = mt.lcd_verdict(dspec)
    dist = None
    if mindist and code.dimension > 0:
        dist = code.min_distance(cap)
    return Report(
        spec=spec,
        dimension=cert.dimension,
        divisor=cert.divisor,
        coprimality=check,
        verdict=verdict,
        exact_lcd=code.is_lcd(),
        hull_basis=hull.gen,
        self_orthogonal=code.is_self_orthogonal(),
        dual_containing=code.is_dual_containing(),
        legacy=legacy,
        hypotheses=hyps,
        dual_dimension=spec.length - cert.dimension,
        dual_coprime=dual_check.holds,
        dual_verdict=dual_verdict.status,
        min_distance=dist,
    )


def _field_line(spec: mt.MTSpec) -> str:
    f = spec.field
    if f.d == 1:
        return f"{f.name} (p = {f.p})"
    mod = Poly(f, [f.from_int(c) for c in f.modulus])
    return f"{f.name} (p = {f.p}, degree {f.d}, modulus {mod})"


def _fmt_row(spec: mt.MTSpec, row) -> str:
    return ", ".join(spec.field.format(el) for el in row)


def render_text(report: Report) -> str:
    spec = report.spec
    f = spec.field
    out = []
    out.append(f"field: {_field_line(spec)}")
    out.append(f"blocks: lengths = {list(spec.block_lengths)},"
               f" shifts = [{', '.join(f.format(s) for s in spec.shifts)}]")
    for gi, row in enumerate(spec.generators, 1):
        out.append(f"generator {gi}: " + " | ".join(str(p) for p in row))
    out.append(f"length {spec.length}, dimension {report.dimension}"
               " (rank and minor-gcd formula agree)")
    out.append(f"determinantal divisor: {report.divisor}")
    check = report.coprimality
    for i in range(spec.num_blocks):
        out.append(f"block {i + 1}: g = {check.block_gens[i]},"
                   f" quotient = {check.quotients[i]}")
    if check.holds:
        out.append("quotients pairwise coprime: yes")
    else:
        i, j = check.failing_pair
        out.append(f"quotients pairwise coprime: no"
                   f" (blocks {i + 1} and {j + 1} share {check.common_factor})")
    v = report.verdict
    if v.status is mt.Verdict.NOT_LCD:
        out.append(f"verdict: {v.status.value}"
                   f" (block {v.failing_block + 1} fails the {v.failing_clause} clause)")
    else:
        out.append(f"verdict: {v.status.value}")
    out.append(f"exact: {'LCD' if report.exact_lcd else 'not LCD'}"
               f" (hull dimension {report.hull_dimension})")
    if report.hull_dimension:
        out.append("hull basis:")
        for row in report.hull_basis.rows():
            out.append(f"  [{_fmt_row(spec, row)}]")
    out.append(f"self-orthogonal: {'yes' if report.self_orthogonal else 'no'};"
               f" dual-containing: {'yes' if report.dual_containing else 'no'}")
    if report.min_distance is not None:
        out.append(f"minimum distance: {report.min_distance}")
    leg = report.legacy
    out.append("legacy condition: " + ("holds" if leg.holds else f"fails ({leg.detail})"))
    out.append(f"dual side: dimension {report.dual_dimension},"
               f" coprime {'yes' if report.dual_coprime else 'no'},"
               f" verdict {report.dual_verdict.value}")
    out.append("hypothesis cases (claims known to be unreliable):")
    for case in report.hypotheses.cases:
        tag = "counterexample here" if case.counterexample else (
            "conclusion holds" if case.hypothesis else "hypothesis not met")
        out.append(f"  {case.name}: {tag}")
    return "\n".join(out) + "\n"


def machine_dict(report: Report) -> dict[str, str]:
    """All reported quantities as flat string pairs, insertion-ordered."""
    spec = report.spec
    f = spec.field
    d: dict[str, str] = {}
    d["field.p"] = str(f.p)
    d["field.degree"] = str(f.d)
    if f.d > 1:
        d["field.modulus"] = ",".join(str(c) for c in f.modulus)
    d["blocks.lengths"] = ",".join(str(m) for m in spec.block_lengths)
    d["blocks.shifts"] = ",".join(f.format(s) for s in spec.shifts)
    for gi, row in enumerate(spec.generators, 1):
        d[f"generator.{gi}"] = " | ".join(str(p) for p in row)
    d["length"] = str(spec.length)
    d["dimension"] = str(report.dimension)
    d["divisor"] = str(report.divisor)
    check = report.coprimality
    for i in range(spec.num_blocks):
        d[f"block.{i + 1}.gen"] = str(check.block_gens[i])
        d[f"block.{i + 1}.quotient"] = str(check.quotients[i])
    d["coprime"] = str(check.holds).lower()
    if not check.holds:
        d["coprime.pair"] = f"{check.failing_pair[0] + 1},{check.failing_pair[1] + 1}"
        d["coprime.factor"] = str(check.common_factor)
    d["verdict"] = report.verdict.status.value
    if report.verdict.failing_block is not None:
        d["verdict.block"] = str(report.verdict.failing_block + 1)
        d["verdict.clause"] = report.verdict.failing_clause
    d["exact_lcd"] = str(report.exact_lcd).lower()
    d["hull.dimension"] = str(report.hull_dimension)
    for ri, row in enumerate(report.hull_basis.rows(), 1):
        d[f"hull.row.{ri}"] = _fmt_row(spec, row)
    d["self_orthogonal"] = str(report.self_orthogonal).lower()
    d["dual_containing"] = str(report.dual_containing).lower()
    if report.min_distance is not None:
        d["min_distance"] = str(report.min_distance)
    d["legacy"] = str(report.legacy.holds).lower()
    if report.legacy.detail:
        d["legacy.detail"] = report.legacy.detail
    d["dual.dimension"] = str(report.dual_dimension)
    d["dual.coprime"] = str(report.dual_coprime).lower()
    d["dual.verdict"] = report.dual_verdict.value
    for case in report.hypotheses.cases:
        d[f"hypothesis.{case.name}.hypothesis"] = str(case.hypothesis).lower()
        d[f"hypothesis.{case.name}.conclusion"] = str(case.conclusion).lower()
        d[f"hypothesis.{case.name}.counterexample"] = str(case.counterexample).lower()
    return d


def render_machine(report: Report) -> str:
    return "".join(f"{k}={v}\n" for k, v in machine_dict(report).items())


def parse_machine(text: str) -> dict[str, str]:
    """Invert render_machine. Unknown keys pass through untouched."""
    out: dict[str, str] = {}
    for ln, line in enumerate(text.splitlines(), 1):
        if not line.strip():
            continue
        if "=" not in line:
            raise ValueError(f"line {ln} is not key=value: {line!r}")
        key, value = line.split("=", 1)
        out[key] = value
    return out
