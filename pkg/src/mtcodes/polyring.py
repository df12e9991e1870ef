"""Univariate polynomials over a finite field.

Dense immutable polynomials with Euclidean division, gcd/lcm, reciprocals
and CRT idempotents. Coefficients are stored ascending with no trailing
zeros; the zero polynomial has an empty coefficient tuple and degree
``None``.

Text form mirrors the element literals: terms like ``3``, ``x``, ``x^4``,
``w^2*x^3`` joined by ``+`` or ``-``, e.g. ``1 + 4*x + 3*x^2``.
"""

from __future__ import annotations

from .errors import ConditionNotMet, FieldMismatch
from .galois import FieldElement, FieldSpec


class Poly:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: FieldSpec, coeffs=()):
        """Build from ascending coefficients (field elements or ints)."""
        norm = []
        for c in coeffs:
            if isinstance(c, FieldElement):
                if c.field != field:
                    raise FieldMismatch(f"{field} vs {c.field}")
                norm.append(c)
            else:
                norm.append(field.from_int(c))
        while norm and norm[-1].is_zero():
            norm.pop()
        self.field = field
        self.coeffs = tuple(norm)

    # -- constructors ----------------------------------------------------------

    @classmethod
    def zero(cls, field: FieldSpec) -> "Poly":
        return cls(field)

    @classmethod
    def one(cls, field: FieldSpec) -> "Poly":
        return cls(field, [1])

    @classmethod
    def constant(cls, field: FieldSpec, c) -> "Poly":
        return cls(field, [c])

    @classmethod
    def x_pow(cls, field: FieldSpec, e: int) -> "Poly":
        return cls(field, [0] * e + [1])

    # -- basic queries -----------------------------------------------------------

    @property
    def degree(self):
        """Degree as an int, or ``None`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading_coeff(self) -> FieldElement:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __getitem__(self, i: int) -> FieldElement:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.field.zero

    def padded(self, n: int):
        """Coefficients as a length-n tuple (requires degree < n)."""
        if len(self.coeffs) > n:
            raise ValueError(f"polynomial of degree {self.degree} does not fit in {n} slots")
        return self.coeffs + (self.field.zero,) * (n - len(self.coeffs))

    # -- ring operations --------------------------------------------------------

    def _check(self, other: "Poly"):
        if not isinstance(other, Poly):
            raise TypeError(f"cannot combine Poly with {type(other).__name__}")
        if other.field != self.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")

    def __add__(self, other):
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(self.field, out)

    def __neg__(self):
        return Poly(self.field, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, FieldElement):
            other = Poly.constant(self.field, other)
        self._check(other)
        if self.is_zero() or other.is_zero():
            return Poly.zero(self.field)
        out = [self.field.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(self.field, out)

    def __divmod__(self, other):
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dlen = len(other.coeffs)
        if len(rem) < dlen:
            return Poly.zero(self.field), self
        inv_lead = other.leading_coeff().inverse()
        quot = [self.field.zero] * (len(rem) - dlen + 1)
        for shift in range(len(rem) - dlen, -1, -1):
            c = rem[shift + dlen - 1] * inv_lead
            if c.is_zero():
                continue
            quot[shift] = c
            for i, dc in enumerate(other.coeffs):
                rem[shift + i] = rem[shift + i] - c * dc
        return Poly(self.field, quot), Poly(self.field, rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __eq__(self, other):
        return (
            isinstance(other, Poly)
            and self.field == other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.field, self.coeffs))

    # -- derived operations --------------------------------------------------

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        lead = self.leading_coeff()
        if lead == self.field.one:
            return self
        return self * lead.inverse()

    def reciprocal(self) -> "Poly":
        """x^deg * p(1/x): the coefficient sequence reversed."""
        if self.is_zero():
            raise ValueError("reciprocal of the zero polynomial is undefined")
        return Poly(self.field, list(reversed(self.coeffs)))

    def is_self_reciprocal(self) -> bool:
        """True when p is a nonzero scalar multiple of its reciprocal."""
        if self.is_zero():
            raise ValueError("self-reciprocal test needs a nonzero polynomial")
        return self.monic() == self.reciprocal().monic()

    def eval(self, v: FieldElement) -> FieldElement:
        acc = self.field.zero
        for c in reversed(self.coeffs):
            acc = acc * v + c
        return acc

    def is_associate(self, other: "Poly") -> bool:
        """Equal up to a nonzero scalar factor."""
        self._check(other)
        return self.monic() == other.monic()

    # -- text form ------------------------------------------------------------

    @classmethod
    def parse(cls, field: FieldSpec, text: str) -> "Poly":
        """Parse a polynomial literal (see module docstring for the grammar)."""
        s = text.strip()
        if not s:
            raise ValueError("empty polynomial literal")
        chunks: list[tuple[int, str]] = []
        sign, cur, depth = 1, "", 0
        for ch in s:
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
                if depth < 0:
                    raise ValueError(f"unbalanced parentheses in {text!r}")
            if ch in "+-" and depth == 0:
                if cur.strip():
                    chunks.append((sign, cur))
                    sign = 1
                elif chunks:
                    raise ValueError(f"dangling sign in polynomial literal {text!r}")
                if ch == "-":
                    sign = -sign
                cur = ""
            else:
                cur += ch
        if depth != 0:
            raise ValueError(f"unbalanced parentheses in {text!r}")
        if not cur.strip():
            raise ValueError(f"trailing sign in polynomial literal {text!r}")
        chunks.append((sign, cur))

        coeffs: dict[int, FieldElement] = {}
        for sgn, chunk in chunks:
            coeff, exp = cls._parse_term(field, chunk.strip())
            if sgn < 0:
                coeff = -coeff
            coeffs[exp] = coeffs.get(exp, field.zero) + coeff
        if not coeffs:
            return cls.zero(field)
        out = [field.zero] * (max(coeffs) + 1)
        for e, c in coeffs.items():
            out[e] = c
        return cls(field, out)

    @staticmethod
    def _parse_term(field: FieldSpec, term: str):
        if not term:
            raise ValueError("empty term in polynomial literal")
        if "*" in term:
            coeff_txt, _, xpart = term.partition("*")
            coeff = field.parse(coeff_txt)
            xpart = xpart.strip()
        elif term == "x" or term.startswith("x^"):
            coeff, xpart = field.one, term
        else:
            return field.parse(term), 0
        if xpart == "x":
            return coeff, 1
        if xpart.startswith("x^"):
            try:
                e = int(xpart[2:])
            except ValueError:
                raise ValueError(f"bad exponent in term {term!r}") from None
            if e < 0:
                raise ValueError(f"negative exponent in term {term!r}")
            return coeff, e
        raise ValueError(f"bad term {term!r} in polynomial literal")

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for e, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            if e == 0:
                parts.append(self.field.format(c))
                continue
            xpart = "x" if e == 1 else f"x^{e}"
            if c == self.field.one:
                parts.append(xpart)
            else:
                parts.append(f"{self.field.format(c)}*{xpart}")
        return " + ".join(parts)

    def __repr__(self):
        return f"{self.field.name}[x]: {self}"


# -- gcd family ---------------------------------------------------------------


def gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd; gcd(a, 0) is monic(a), gcd(0, 0) is an error."""
    a._check(b)
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def gcd_many(polys) -> Poly:
    it = iter(polys)
    try:
        acc = next(it)
    except StopIteration:
        raise ValueError("gcd of an empty collection") from None
    for p in it:
        acc = gcd(acc, p)
        if acc.degree == 0:
            break
    return acc.monic()


def xgcd(a: Poly, b: Poly):
    """(g, u, v) with u*a + v*b = g and g the monic gcd."""
    a._check(b)
    field = a.field
    r0, r1 = a, b
    u0, u1 = Poly.one(field), Poly.zero(field)
    v0, v1 = Poly.zero(field), Poly.one(field)
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        u0, u1 = u1, u0 - q * u1
        v0, v1 = v1, v0 - q * v1
    if r0.is_zero():
        return r0, u0, v0
    scale = r0.leading_coeff().inverse()
    return r0 * scale, u0 * scale, v0 * scale


def lcm(a: Poly, b: Poly) -> Poly:
    if a.is_zero() or b.is_zero():
        raise ValueError("lcm needs nonzero arguments")
    return ((a * b) // gcd(a, b)).monic()


def crt_idempotents(moduli) -> list[Poly]:
    """Orthogonal idempotents for pairwise-coprime moduli.

    Returns f_1..f_k with f_i = 1 mod m_i and f_i = 0 mod m_j (j != i),
    each reduced modulo the product of the moduli. Raises ConditionNotMet
    naming the first offending pair if the moduli are not pairwise coprime.
    """
    moduli = list(moduli)
    if not moduli:
        raise ValueError("no moduli given")
    field = moduli[0].field
    for m in moduli:
        if m.is_zero() or m.degree == 0:
            raise ValueError("CRT moduli must have degree >= 1")
    for i in range(len(moduli)):
        for j in range(i + 1, len(moduli)):
            g = gcd(moduli[i], moduli[j])
            if g.degree != 0:
                raise ConditionNotMet(
                    f"moduli {i} and {j} share the factor {g}, CRT needs pairwise coprime moduli"
                )
    product = Poly.one(field)
    for m in moduli:
        product = product * m
    out = []
    for m in moduli:
        rest = product // m
        g, u, _ = xgcd(rest, m)
        assert g == Poly.one(field)
        out.append((u * rest) % product)
    return out
