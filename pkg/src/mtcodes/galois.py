"""Arithmetic in small finite fields GF(p^d).

Elements are coefficient tuples over the prime subfield with respect to a
monic irreducible modulus; every element of a field is interned once and all
arithmetic runs through precomputed index tables, so equality is cheap and
exact. Field sizes are capped at 256, which covers everything this package
works with (desk-scale codes over F2..F9) while keeping table construction
instant.

Symbolic I/O uses ``w`` for the residue class of x (the adjoined generator):
``w^3``, ``2``, and tuple literals like ``(2,1)`` all parse to elements.
"""

from __future__ import annotations

from .errors import FieldMismatch

MAX_ORDER = 256


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    k = 2
    while k * k <= n:
        if n % k == 0:
            return False
        k += 1
    return True


def _int_poly_divmod(num: list[int], den: list[int], p: int):
    """Division with remainder for dense int-coefficient polys over Z_p.

    Used only during field construction (irreducibility trial division),
    before Poly objects exist.
    """
    num = [c % p for c in num]
    den = [c % p for c in den]
    while den and den[-1] == 0:
        den.pop()
    inv_lead = pow(den[-1], -1, p)
    quot = [0] * max(len(num) - len(den) + 1, 0)
    rem = num[:]
    for shift in range(len(num) - len(den), -1, -1):
        coeff = rem[shift + len(den) - 1] * inv_lead % p
        if coeff == 0:
            continue
        quot[shift] = coeff
        for i, dc in enumerate(den):
            rem[shift + i] = (rem[shift + i] - coeff * dc) % p
    while rem and rem[-1] == 0:
        rem.pop()
    return quot, rem


def _is_irreducible(modulus: list[int], p: int, d: int) -> bool:
    """Trial division by every monic polynomial of degree 1..d//2."""
    for deg in range(1, d // 2 + 1):
        for idx in range(p**deg):
            div = []
            v = idx
            for _ in range(deg):
                div.append(v % p)
                v //= p
            div.append(1)
            _, rem = _int_poly_divmod(modulus, div, p)
            if not rem:
                return False
    return True


class FieldElement:
    """One element of a :class:`FieldSpec`, identified by its table index."""

    __slots__ = ("field", "index", "coeffs")

    def __init__(self, field: "FieldSpec", index: int, coeffs: tuple[int, ...]):
        self.field = field
        self.index = index
        self.coeffs = coeffs

    def _other_index(self, other) -> int:
        if not isinstance(other, FieldElement):
            raise TypeError(f"cannot combine field element with {type(other).__name__}")
        if other.field != self.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")
        return other.index

    def __add__(self, other):
        f = self.field
        return f._elements[f._add[self.index][self._other_index(other)]]

    def __sub__(self, other):
        f = self.field
        j = f._neg[self._other_index(other)]
        return f._elements[f._add[self.index][j]]

    def __neg__(self):
        f = self.field
        return f._elements[f._neg[self.index]]

    def __mul__(self, other):
        f = self.field
        return f._elements[f._mul[self.index][self._other_index(other)]]

    def __truediv__(self, other):
        f = self.field
        j = self._other_index(other)
        if j == 0:
            raise ZeroDivisionError("division by zero field element")
        return f._elements[f._mul[self.index][f._inv[j]]]

    def __pow__(self, k: int):
        f = self.field
        if self.index == 0:
            if k == 0:
                return f.one
            if k < 0:
                raise ZeroDivisionError("zero has no negative powers")
            return self
        k %= f.order - 1
        result = f.one
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self) -> "FieldElement":
        f = self.field
        if self.index == 0:
            raise ZeroDivisionError("zero is not invertible")
        return f._elements[f._inv[self.index]]

    def is_zero(self) -> bool:
        return self.index == 0

    def __eq__(self, other):
        return (
            isinstance(other, FieldElement)
            and self.field == other.field
            and self.index == other.index
        )

    def __hash__(self):
        return hash((self.field, self.index))

    def __str__(self):
        return self.field.format(self)

    def __repr__(self):
        return f"{self.field.name}:{self.field.format(self)}"


class FieldSpec:
    """A finite field GF(p^d) with fully tabulated arithmetic.

    Args:
        p: prime characteristic.
        d: extension degree (1 for prime fields).
        modulus: ascending coefficients of a monic degree-d polynomial over
            Z_p, irreducible for d >= 2. Optional for d == 1 (defaults to x).

    The residue class of x is exposed as ``omega``; ``omega_order`` is its
    multiplicative order (``None`` when omega is zero, i.e. for the default
    prime-field modulus).
    """

    def __init__(self, p: int, d: int = 1, modulus=None):
        if not _is_prime(p):
            raise ValueError(f"characteristic {p} is not prime")
        if d < 1:
            raise ValueError(f"extension degree must be >= 1, got {d}")
        order = p**d
        if order > MAX_ORDER:
            raise ValueError(f"field order {order} exceeds supported maximum {MAX_ORDER}")
        if modulus is None:
            if d != 1:
                raise ValueError("an explicit modulus is required for extension fields")
            modulus = [0, 1]
        modulus = [int(c) % p for c in modulus[:-1]] + [int(modulus[-1])]
        if len(modulus) != d + 1:
            raise ValueError(
                f"modulus must have degree {d} (got {len(modulus) - 1} coefficients above constant)"
            )
        if modulus[-1] != 1:
            raise ValueError("modulus must be monic")
        if d >= 2 and not _is_irreducible(modulus, p, d):
            raise ValueError("modulus is reducible, so the quotient ring is not a field")

        self.p = p
        self.d = d
        self.order = order
        self.modulus = tuple(modulus)
        self.name = f"F{order}"

        self._elements: list[FieldElement] = []
        for idx in range(order):
            v = idx
            coeffs = []
            for _ in range(d):
                coeffs.append(v % p)
                v //= p
            self._elements.append(FieldElement(self, idx, tuple(coeffs)))

        self._add = [
            [self._index_of([a + b for a, b in zip(x.coeffs, y.coeffs)]) for y in self._elements]
            for x in self._elements
        ]
        self._neg = [self._index_of([-a for a in x.coeffs]) for x in self._elements]
        self._mul = [[self._mul_raw(x, y) for y in self._elements] for x in self._elements]
        self._inv = [0] * order
        for a in range(1, order):
            for b in range(1, order):
                if self._mul[a][b] == 1:
                    self._inv[a] = b
                    break

        self.zero = self._elements[0]
        self.one = self._elements[1]
        if d >= 2:
            self.omega = self._elements[p]
        else:
            self.omega = self._elements[(-modulus[0]) % p]
        self.omega_order = None
        self._omega_log: dict[int, int] = {}
        if not self.omega.is_zero():
            acc = self.one
            for k in range(1, order):
                acc = acc * self.omega
                self._omega_log.setdefault(acc.index, k)
                if acc.index == 1:
                    self.omega_order = k
                    break
        self._np_tables = None

    def _index_of(self, coeffs: list[int]) -> int:
        idx = 0
        for c in reversed(coeffs):
            idx = idx * self.p + (c % self.p)
        return idx

    def _mul_raw(self, x: FieldElement, y: FieldElement) -> int:
        prod = [0] * (2 * self.d - 1)
        for i, a in enumerate(x.coeffs):
            if a:
                for j, b in enumerate(y.coeffs):
                    prod[i + j] += a * b
        _, rem = _int_poly_divmod(prod, list(self.modulus), self.p)
        rem += [0] * (self.d - len(rem))
        return self._index_of(rem)

    # -- element constructors ------------------------------------------------

    def element(self, coeffs) -> FieldElement:
        """Element from ascending coefficients over the prime subfield."""
        coeffs = list(coeffs)
        if len(coeffs) > self.d:
            raise ValueError(f"coefficient tuple longer than extension degree {self.d}")
        coeffs += [0] * (self.d - len(coeffs))
        return self._elements[self._index_of(coeffs)]

    def from_int(self, n: int) -> FieldElement:
        """Prime-subfield element n mod p."""
        return self.element([n % self.p])

    def omega_pow(self, k: int) -> FieldElement:
        if self.omega.is_zero():
            raise ValueError(f"{self.name} with modulus x has no generator literal")
        return self.omega**k

    def elements(self):
        return iter(self._elements)

    def nonzero_elements(self):
        return iter(self._elements[1:])

    # -- literals --------------------------------------------------------------

    def parse(self, text: str) -> FieldElement:
        """Parse an element literal: decimal, ``w``, ``w^k``, or ``(c0,c1,...)``."""
        t = text.strip()
        if not t:
            raise ValueError("empty element literal")
        if t == "w":
            return self.omega_pow(1)
        if t.startswith("w^"):
            try:
                k = int(t[2:])
            except ValueError:
                raise ValueError(f"bad generator power in element literal {text!r}") from None
            return self.omega_pow(k)
        if t.startswith("("):
            if not t.endswith(")"):
                raise ValueError(f"unterminated tuple in element literal {text!r}")
            parts = t[1:-1].split(",")
            try:
                coeffs = [int(s.strip()) for s in parts]
            except ValueError:
                raise ValueError(f"bad tuple entry in element literal {text!r}") from None
            if len(coeffs) != self.d:
                raise ValueError(
                    f"tuple literal {text!r} has {len(coeffs)} entries, {self.name} needs {self.d}"
                )
            return self.element(coeffs)
        try:
            n = int(t)
        except ValueError:
            raise ValueError(f"bad element literal {text!r} for {self.name}") from None
        return self.from_int(n)

    def format(self, el: FieldElement) -> str:
        """Shortest literal for an element (inverse of :meth:`parse`)."""
        if el.field != self:
            raise FieldMismatch(f"{self} vs {el.field}")
        if all(c == 0 for c in el.coeffs[1:]):
            return str(el.coeffs[0])
        k = self._omega_log.get(el.index)
        if k is not None:
            return "w" if k == 1 else f"w^{k}"
        return "(" + ",".join(str(c) for c in el.coeffs) + ")"

    # -- numpy tables for the vectorized distance engine ----------------------

    def numpy_tables(self):
        """(add, mul) index tables as int16 arrays, built on first use."""
        if self._np_tables is None:
            import numpy as np

            add = np.array(self._add, dtype=np.int16)
            mul = np.array(self._mul, dtype=np.int16)
            self._np_tables = (add, mul)
        return self._np_tables

    def __eq__(self, other):
        return (
            isinstance(other, FieldSpec)
            and self.p == other.p
            and self.d == other.d
            and self.modulus == other.modulus
        )

    def __hash__(self):
        return hash((self.p, self.d, self.modulus))

    def __repr__(self):
        if self.d == 1:
            return f"{self.name} = GF({self.p})"
        mod = " + ".join(
            _mod_term(c, i) for i, c in enumerate(self.modulus) if c
        )
        return f"{self.name} = GF({self.p}^{self.d}) mod {mod}"


def _mod_term(c: int, i: int) -> str:
    if i == 0:
        return str(c)
    x = "x" if i == 1 else f"x^{i}"
    return x if c == 1 else f"{c}{x}"
