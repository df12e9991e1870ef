"""Multi-twisted codes and their structural certificates.

A multi-twisted (MT) code of block lengths (m_1..m_l) with nonzero shift
constants (lambda_1..lambda_l) is a linear code of length n = sum(m_i) that
is invariant under the blockwise twisted rotation

    T: block i, (c_0, ..., c_{m_i-1})  ->  (lambda_i * c_{m_i-1}, c_0, ..., c_{m_i-2}).

Equivalently it is an F_q[x]-submodule of the product of the quotient rings
F_q[x]/(x^{m_i} - lambda_i), given here by rho generator tuples of
polynomials (one polynomial per block). This module materializes such codes
as generator matrices and decides the structural questions exactly:

* dimension, both as a rank and through the determinantal divisor of the
  stacked generator/diagonal polynomial matrix (the two must agree);
* the projection onto each block, a lambda_i-constacyclic code with a gcd
  generator polynomial;
* the dual (an MT code for the inverse shift constants);
* a direct-sum decomposition certificate when the per-block quotient
  polynomials are pairwise coprime;
* an LCD trichotomy: under the same coprimality hypothesis, the code is LCD
  exactly when every block whose shift constant squares to 1 has a
  self-reciprocal generator polynomial coprime to its quotient; without the
  hypothesis the structural test is inconclusive and only the exact hull
  computation answers;
* two predicate families kept for comparison purposes: an older, more
  restrictive sufficient condition for LCD-ness, and the hypotheses of
  several disproved dimension-based classification claims, paired with the
  exact facts so counterexamples can be asserted mechanically.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from .code_core import LinearCode
from .errors import ConditionNotMet, InternalCheckError, ShapeMismatch
from .galois import FieldElement, FieldSpec
from .matfq import Matrix, RowReducer
from .polymat import PolyMatrix
from .polyring import Poly, gcd, gcd_many


@dataclass(frozen=True)
class MTSpec:
    """An MT code presented by module generators.

    generators is a rho x l grid of polynomials: entry (k, i) is the i-th
    block of the k-th generator, stored reduced mod x^{m_i} - lambda_i.
    """

    field: FieldSpec
    block_lengths: tuple[int, ...]
    shifts: tuple[FieldElement, ...]
    generators: tuple[tuple[Poly, ...], ...]

    def __post_init__(self):
        lengths = tuple(int(m) for m in self.block_lengths)
        if not lengths:
            raise ValueError("at least one block is required")
        if any(m < 1 for m in lengths):
            raise ValueError(f"block lengths must be >= 1, got {lengths}")
        shifts = tuple(self.shifts)
        if len(shifts) != len(lengths):
            raise ValueError(
                f"{len(lengths)} block lengths but {len(shifts)} shift constants"
            )
        for lam in shifts:
            if lam.field != self.field:
                raise ValueError("shift constant from a different field")
            if lam.is_zero():
                raise ValueError("shift constants must be nonzero")
        if not self.generators:
            raise ValueError("at least one generator is required")
        reduced = []
        for row in self.generators:
            row = tuple(row)
            if len(row) != len(lengths):
                raise ValueError(
                    f"generator row has {len(row)} blocks, expected {len(lengths)}"
                )
            out = []
            for i, p in enumerate(row):
                if p.field != self.field:
                    raise ValueError("generator polynomial from a different field")
                out.append(p % _binomial(self.field, lengths[i], shifts[i]))
            reduced.append(tuple(out))
        object.__setattr__(self, "block_lengths", lengths)
        object.__setattr__(self, "shifts", shifts)
        object.__setattr__(self, "generators", tuple(reduced))

    @property
    def num_blocks(self) -> int:
        return len(self.block_lengths)

    @property
    def num_generators(self) -> int:
        return len(self.generators)

    @property
    def length(self) -> int:
        return sum(self.block_lengths)

    def block_offset(self, i: int) -> int:
        return sum(self.block_lengths[:i])

    def block_modulus(self, i: int) -> Poly:
        """x^{m_i} - lambda_i."""
        return _binomial(self.field, self.block_lengths[i], self.shifts[i])


def _binomial(field: FieldSpec, m: int, lam: FieldElement) -> Poly:
    coeffs = [-lam] + [field.zero] * (m - 1) + [field.one]
    return Poly(field, coeffs)


def shift_word(spec: MTSpec, word) -> tuple:
    """One application of the twisted rotation T to a length-n word."""
    word = tuple(word)
    if len(word) != spec.length:
        raise ShapeMismatch(f"word of length {len(word)}, code length {spec.length}")
    out = []
    pos = 0
    for m, lam in zip(spec.block_lengths, spec.shifts):
        block = word[pos : pos + m]
        out.append(lam * block[-1])
        out.extend(block[:-1])
        pos += m
    return tuple(out)


def generator_word(spec: MTSpec, row: tuple[Poly, ...]) -> tuple:
    """Coefficient expansion of one generator tuple into a length-n word."""
    out = []
    for i, p in enumerate(row):
        out.extend(p.padded(spec.block_lengths[i]))
    return tuple(out)


@lru_cache(maxsize=512)
def expand(spec: MTSpec) -> LinearCode:
    """The code itself: smallest T-invariant subspace containing the generators.

    Rank closure: seed with the expanded generator words, and keep applying T
    to every row that enlarged the span until a full pass adds nothing. Any
    row that did not enlarge the span is a combination of stored rows, so its
    T-image is already covered by theirs.
    """
    n = spec.length
    reducer = RowReducer(spec.field, n)
    kept: list[tuple] = []
    frontier: list[tuple] = []
    for row in spec.generators:
        v = generator_word(spec, row)
        if reducer.add(v):
            kept.append(v)
            frontier.append(v)
    while frontier:
        new_frontier = []
        for v in frontier:
            s = shift_word(spec, v)
            if reducer.add(s):
                kept.append(s)
                new_frontier.append(s)
        frontier = new_frontier
    return LinearCode(Matrix(spec.field, kept, ncols=n))


def block_gen_poly(spec: MTSpec, i: int) -> Poly:
    """Monic generator polynomial of the i-th projection:
    gcd of x^{m_i} - lambda_i and every generator's i-th block."""
    polys = [spec.block_modulus(i)] + [row[i] for row in spec.generators]
    return gcd_many(polys)


def quotient_poly(spec: MTSpec, i: int) -> Poly:
    """(x^{m_i} - lambda_i) / g_i, the cofactor of the block generator."""
    return spec.block_modulus(i) // block_gen_poly(spec, i)


def projection_code(spec: MTSpec, i: int) -> LinearCode:
    """The i-th block projection: the constacyclic code generated by g_i.

    Built directly from the rows x^j * g_i (0 <= j < m_i - deg g_i), then
    cross-checked against the column-block projection of the expanded code.
    """
    g = block_gen_poly(spec, i)
    m = spec.block_lengths[i]
    dim = m - g.degree
    rows = [(Poly.x_pow(spec.field, j) * g).padded(m) for j in range(dim)]
    code = LinearCode(Matrix(spec.field, rows, ncols=m))

    off = spec.block_offset(i)
    projected = Matrix(
        spec.field,
        [row[off : off + m] for row in expand(spec).gen.rows()],
        ncols=m,
    )
    if not code.gen.row_space_equal(projected):
        raise InternalCheckError(
            f"projection of block {i} disagrees with its generator polynomial {g}"
        )
    return code


def dual_code(spec: MTSpec) -> LinearCode:
    """Dual of the expanded code, certified invariant under the inverse-shift
    rotation (the dual of an MT code is MT for the inverse shift constants)."""
    dual = expand(spec).dual()
    inverse = _inverse_shift_spec_shell(spec)
    for row in dual.gen.rows():
        if not dual.gen.row_space_contains(shift_word(inverse, row)):
            raise InternalCheckError(
                "dual basis row leaves the dual under the inverse-shift rotation"
            )
    return dual


def _inverse_shift_spec_shell(spec: MTSpec) -> MTSpec:
    """Same blocks, inverse shifts, placeholder generator (shift map only)."""
    zero_row = tuple(Poly.zero(spec.field) for _ in spec.block_lengths)
    return MTSpec(
        spec.field,
        spec.block_lengths,
        tuple(lam.inverse() for lam in spec.shifts),
        (zero_row,),
    )


@lru_cache(maxsize=512)
def dual_spec(spec: MTSpec) -> MTSpec:
    """The dual code presented as an MT spec: inverse shifts, and the dual
    basis rows reinterpreted as module generators (one all-zero generator
    when the dual is trivial). The expansion of the result is cross-checked
    to equal the dual exactly."""
    dual = dual_code(spec)
    rows = list(dual.gen.rows())
    field = spec.field
    gens = []
    for row in rows:
        blocks = []
        for i, m in enumerate(spec.block_lengths):
            off = spec.block_offset(i)
            blocks.append(Poly(field, row[off : off + m]))
        gens.append(tuple(blocks))
    if not gens:
        gens.append(tuple(Poly.zero(field) for _ in spec.block_lengths))
    result = MTSpec(
        field,
        spec.block_lengths,
        tuple(lam.inverse() for lam in spec.shifts),
        tuple(gens),
    )
    if not expand(result).gen.row_space_equal(dual.gen):
        raise InternalCheckError("dual spec expansion differs from the dual code")
    return result


# -- dimension ------------------------------------------------------------------


@dataclass(frozen=True)
class DimensionCertificate:
    dimension: int
    divisor: Poly
    minors: tuple[Poly, ...]


def stacked_matrix(spec: MTSpec) -> PolyMatrix:
    """The (rho + l) x l polynomial matrix [generator grid; diag moduli]."""
    rows = [list(row) for row in spec.generators]
    zero = Poly.zero(spec.field)
    for i in range(spec.num_blocks):
        row = [zero] * spec.num_blocks
        row[i] = spec.block_modulus(i)
        rows.append(row)
    return PolyMatrix(spec.field, rows)


def dimension_formula(spec: MTSpec) -> DimensionCertificate:
    """dim C = n - deg d_l, where d_l is the monic gcd of the l x l minors
    of the stacked matrix. Asserted equal to the rank of the expansion."""
    ell = spec.num_blocks
    pm = stacked_matrix(spec)
    minors = tuple(pm.minors(ell))
    # the diagonal modulus block guarantees at least one nonzero maximal minor
    divisor = pm.determinantal_divisor(ell)
    dim = spec.length - divisor.degree
    rank = expand(spec).dimension
    if dim != rank:
        raise InternalCheckError(
            f"dimension formula gives {dim} but the expanded rank is {rank}"
        )
    return DimensionCertificate(dim, divisor, minors)


# -- coprimality, direct sum, LCD -------------------------------------------------


@dataclass(frozen=True)
class CoprimalityCheck:
    """Pairwise-coprimality status of the quotients q_i = (x^{m_i}-lambda_i)/g_i."""

    holds: bool
    block_gens: tuple[Poly, ...]
    quotients: tuple[Poly, ...]
    failing_pair: tuple[int, int] | None = None
    common_factor: Poly | None = None


def coprimality_condition(spec: MTSpec) -> CoprimalityCheck:
    gens = tuple(block_gen_poly(spec, i) for i in range(spec.num_blocks))
    quots = tuple(
        spec.block_modulus(i) // gens[i] for i in range(spec.num_blocks)
    )
    for i in range(len(quots)):
        for j in range(i + 1, len(quots)):
            g = gcd(quots[i], quots[j])
            if g.degree != 0:
                return CoprimalityCheck(False, gens, quots, (i, j), g)
    return CoprimalityCheck(True, gens, quots)


@dataclass(frozen=True)
class DirectSumCertificate:
    components: tuple[LinearCode, ...]
    block_dims: tuple[int, ...]
    dimension: int


def direct_sum_check(spec: MTSpec) -> DirectSumCertificate:
    """Certify C = direct sum of its block projections (valid whenever the
    quotients are pairwise coprime).

    Checks, and raises InternalCheckError on any failure:
      (a) dim C = sum of (m_i - deg g_i);
      (b) each projection, embedded back at its block position, lies in C;
      (c) the projection of the dual is the dual of the projection.
    """
    check = coprimality_condition(spec)
    if not check.holds:
        i, j = check.failing_pair
        raise ConditionNotMet(
            f"quotients of blocks {i} and {j} share the factor {check.common_factor}"
        )
    code = expand(spec)
    components = tuple(projection_code(spec, i) for i in range(spec.num_blocks))
    dims = tuple(c.dimension for c in components)
    if code.dimension != sum(dims):
        raise InternalCheckError(
            f"direct-sum certificate: dim {code.dimension} != {' + '.join(map(str, dims))}"
        )
    zero = spec.field.zero
    n = spec.length
    for i, comp in enumerate(components):
        off = spec.block_offset(i)
        m = spec.block_lengths[i]
        for row in comp.gen.rows():
            embedded = (zero,) * off + tuple(row) + (zero,) * (n - off - m)
            if not code.contains(embedded):
                raise InternalCheckError(
                    f"embedded projection row of block {i} is not in the code"
                )
    dspec = dual_spec(spec)
    for i, comp in enumerate(components):
        dual_proj = projection_code(dspec, i)
        if not dual_proj.equals(comp.dual()):
            raise InternalCheckError(
                f"block {i}: projection of the dual differs from the dual of the projection"
            )
    return DirectSumCertificate(components, dims, sum(dims))


class Verdict(Enum):
    LCD = "LCD"
    NOT_LCD = "NotLCD"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class LcdVerdict:
    """Outcome of the structural LCD test.

    Under pairwise-coprime quotients the test is exact (an iff): LCD holds
    precisely when every block with lambda_i^2 = 1 has a self-reciprocal g_i
    with gcd(g_i, q_i) = 1. When coprimality fails the verdict is
    INCONCLUSIVE and ``coprimality`` carries the witness pair.
    """

    status: Verdict
    coprimality: CoprimalityCheck
    failing_block: int | None = None
    failing_clause: str | None = None


def lcd_verdict(spec: MTSpec) -> LcdVerdict:
    check = coprimality_condition(spec)
    if not check.holds:
        return LcdVerdict(Verdict.INCONCLUSIVE, check)
    one = spec.field.one
    for i, lam in enumerate(spec.shifts):
        if lam * lam != one:
            continue
        g = check.block_gens[i]
        if not g.is_self_reciprocal():
            return LcdVerdict(Verdict.NOT_LCD, check, i, "self-reciprocal")
        if gcd(g, check.quotients[i]).degree != 0:
            return LcdVerdict(Verdict.NOT_LCD, check, i, "quotient-coprime")
    return LcdVerdict(Verdict.LCD, check)


@dataclass(frozen=True)
class LegacyCheck:
    """The older sufficient condition kept for comparison: whole-block
    moduli x^{m_i} - lambda_i pairwise coprime AND no shift constant equal
    to its own inverse. Strictly weaker at detecting LCD codes than the
    quotient-based verdict."""

    holds: bool
    detail: str = ""


def legacy_lcd_condition(spec: MTSpec) -> LegacyCheck:
    for i, lam in enumerate(spec.shifts):
        if lam == lam.inverse():
            return LegacyCheck(False, f"shift constant of block {i + 1} is self-inverse")
    for i in range(spec.num_blocks):
        for j in range(i + 1, spec.num_blocks):
            g = gcd(spec.block_modulus(i), spec.block_modulus(j))
            if g.degree != 0:
                return LegacyCheck(
                    False, f"block moduli {i + 1} and {j + 1} share the factor {g}"
                )
    return LegacyCheck(True)


# -- refuted dimension-based classification claims --------------------------------


@dataclass(frozen=True)
class HypothesisCase:
    """One disproved claim: a hypothesis on the spec and the conclusion it
    was supposed to force. ``counterexample`` means the hypothesis holds
    while the conclusion fails."""

    name: str
    hypothesis: bool
    conclusion: bool

    @property
    def counterexample(self) -> bool:
        return self.hypothesis and not self.conclusion


@dataclass(frozen=True)
class HypothesisReport:
    dimension: int
    dual_dimension: int
    min_block_length: int
    shifts_non_self_inverse: bool
    nontrivial_projection_pairs: tuple[bool, ...]
    is_lcd: bool
    is_self_orthogonal: bool
    is_dual_containing: bool
    cases: tuple[HypothesisCase, ...]

    def case(self, name: str) -> HypothesisCase:
        for c in self.cases:
            if c.name == name:
                return c
        raise KeyError(name)


def refuted_hypotheses(spec: MTSpec) -> HypothesisReport:
    """Evaluate the four disproved classification claims on this spec.

    All four assume every shift constant differs from its own inverse; on
    top of that they claim:
      * small-dim-lcd:     dim C or dim dual < min m_i    =>  C is LCD
      * dim-min-lcd-so:    dim C = min m_i                =>  C is LCD or self-orthogonal
      * dual-min-lcd-dc:   dim dual = min m_i             =>  C is LCD or dual-containing
      * projections-lcd:   for each block, the projection of C or of its
                           dual is a proper subcode       =>  C is LCD
    """
    code = expand(spec)
    dspec = dual_spec(spec)
    dim = code.dimension
    dual_dim = spec.length - dim
    min_m = min(spec.block_lengths)
    one = spec.field.one
    non_self_inv = all(lam * lam != one for lam in spec.shifts)
    proper_pairs = tuple(
        block_gen_poly(spec, i).degree > 0 or block_gen_poly(dspec, i).degree > 0
        for i in range(spec.num_blocks)
    )
    is_lcd = code.is_lcd()
    is_so = code.is_self_orthogonal()
    is_dc = code.is_dual_containing()
    cases = (
        HypothesisCase(
            "small-dim-lcd",
            non_self_inv and (dim < min_m or dual_dim < min_m),
            is_lcd,
        ),
        HypothesisCase(
            "dim-min-lcd-so",
            non_self_inv and dim == min_m,
            is_lcd or is_so,
        ),
        HypothesisCase(
            "dual-min-lcd-dc",
            non_self_inv and dual_dim == min_m,
            is_lcd or is_dc,
        ),
        HypothesisCase(
            "projections-lcd",
            non_self_inv and all(proper_pairs),
            is_lcd,
        ),
    )
    return HypothesisReport(
        dimension=dim,
        dual_dimension=dual_dim,
        min_block_length=min_m,
        shifts_non_self_inverse=non_self_inv,
        nontrivial_projection_pairs=proper_pairs,
        is_lcd=is_lcd,
        is_self_orthogonal=is_so,
        is_dual_containing=is_dc,
        cases=cases,
    )
