"""Exact arithmetic in finite fields GF(p^n) of order q = p^n <= 64.

Elements are identified by integer indices in [0, q): the index encodes
the element's coefficient vector in the polynomial basis, least
significant digit first (index = sum(coeffs[i] * p**i)), so elements of
the prime subfield coincide with their integer values.  All arithmetic
is table-driven, built once per field from a monic primitive modulus.

Built-in moduli are Conway polynomials, which makes fields of equal
order identical across runs and guarantees that the residue class of
the indeterminate generates the multiplicative group.  A caller may
supply a different modulus; it is accepted only if the same generation
property holds (that single check also rules out reducible moduli,
since the unit group of a reducible quotient is too small to contain an
element of order q - 1).
"""

from __future__ import annotations

import cmath

__all__ = ["MAX_ORDER", "Field", "FieldElement", "field_of_order", "is_prime"]

MAX_ORDER = 64

# Conway polynomials C(p, n), ascending coefficients (constant term first,
# leading 1 last), for every prime power p**n <= 64.  Degree-1 entries are
# x - r with r the smallest primitive root mod p.
_CONWAY: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 1): (1, 1),
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 5): (1, 0, 1, 0, 0, 1),
    (2, 6): (1, 1, 0, 1, 1, 0, 1),
    (3, 1): (1, 1),
    (3, 2): (2, 2, 1),
    (3, 3): (1, 2, 0, 1),
    (5, 1): (3, 1),
    (5, 2): (2, 4, 1),
    (7, 1): (4, 1),
    (7, 2): (3, 6, 1),
    (11, 1): (9, 1),
    (13, 1): (11, 1),
    (17, 1): (14, 1),
    (19, 1): (17, 1),
    (23, 1): (18, 1),
    (29, 1): (27, 1),
    (31, 1): (28, 1),
    (37, 1): (35, 1),
    (41, 1): (35, 1),
    (43, 1): (40, 1),
    (47, 1): (42, 1),
    (53, 1): (51, 1),
    (59, 1): (57, 1),
    (61, 1): (59, 1),
}


def is_prime(m: int) -> bool:
    if m < 2:
        return False
    d = 2
    while d * d <= m:
        if m % d == 0:
            return False
        d += 1
    return True


def _prime_power(q: int) -> tuple[int, int]:
    """Factor q = p**n with p prime; raise ValueError otherwise."""
    if not isinstance(q, int) or q < 2:
        raise ValueError(f"field order must be an integer >= 2, got {q!r}")
    p = 2
    while q % p:
        p += 1
    n, m = 0, q
    while m % p == 0:
        m //= p
        n += 1
    if m != 1:
        raise ValueError(f"{q} is not a prime power")
    return p, n


class FieldElement:
    """An element of a :class:`Field`, identified by its canonical index."""

    __slots__ = ("field", "index")

    def __init__(self, field: "Field", index: int):
        self.field = field
        self.index = index

    @property
    def coeffs(self) -> tuple[int, ...]:
        """Coefficient vector in the polynomial basis, constant term first."""
        p, n, i = self.field.p, self.field.n, self.index
        out = []
        for _ in range(n):
            out.append(i % p)
            i //= p
        return tuple(out)

    def _coerce(self, other):
        if not isinstance(other, FieldElement):
            return None
        if other.field != self.field:
            raise ValueError(
                f"elements of different fields: {self.field!r} vs {other.field!r}"
            )
        return other

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return FieldElement(self.field, self.field._add[self.index][other.index])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        f = self.field
        return FieldElement(f, f._add[self.index][f._neg[other.index]])

    def __neg__(self):
        return FieldElement(self.field, self.field._neg[self.index])

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return FieldElement(self.field, self.field._mul[self.index][other.index])

    def inverse(self) -> "FieldElement":
        if self.index == 0:
            raise ZeroDivisionError("0 has no multiplicative inverse")
        return FieldElement(self.field, self.field._inv[self.index])

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        f = self.field
        if self.index == 0:
            if k > 0:
                return f.zero
            if k == 0:
                return f.one
            raise ZeroDivisionError("0 cannot be raised to a negative power")
        e = (f._log[self.index] * k) % (f.q - 1)
        return FieldElement(f, f._pow_of_alpha[e])

    def trace(self) -> int:
        """Trace into the prime subfield, as an integer in [0, p)."""
        return self.field._trace[self.index]

    def __eq__(self, other):
        return (
            isinstance(other, FieldElement)
            and other.index == self.index
            and other.field == self.field
        )

    def __hash__(self):
        return hash((self.field._key, self.index))

    def __int__(self):
        return self.index

    def __bool__(self):
        return self.index != 0

    def __repr__(self):
        return f"F{self.field.q}({self.index})"


class Field:
    """The finite field GF(p^n), with table-driven exact arithmetic.

    Parameters
    ----------
    p : int
        Prime characteristic.
    n : int
        Extension degree; the order q = p**n must not exceed ``max_order``.
    modulus : sequence of int, optional
        Ascending coefficients (c0, ..., cn) of a monic primitive degree-n
        polynomial over Z_p.  Defaults to the built-in Conway polynomial.
    """

    def __init__(self, p: int, n: int, modulus=None, max_order: int = MAX_ORDER):
        if not isinstance(p, int) or not is_prime(p):
            raise ValueError(f"characteristic must be prime, got {p!r}")
        if not isinstance(n, int) or n < 1:
            raise ValueError(f"extension degree must be a positive integer, got {n!r}")
        q = p**n
        if q > max_order:
            raise ValueError(f"order {q} exceeds the supported bound {max_order}")
        if modulus is None:
            modulus = _CONWAY.get((p, n))
            if modulus is None:
                raise ValueError(f"no built-in modulus for q={q}; supply one explicitly")
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != n + 1 or modulus[-1] != 1:
            raise ValueError(
                f"modulus must be monic of degree {n} (got coefficients {modulus})"
            )
        self.p, self.n, self.q = p, n, q
        self.modulus = modulus
        self._key = (p, n, modulus)

        self._build_tables()
        self.zero = FieldElement(self, 0)
        self.one = FieldElement(self, 1)
        self.alpha = FieldElement(self, self._alpha_idx)
        self.elements: tuple[FieldElement, ...] = tuple(
            FieldElement(self, i) for i in range(q)
        )
        #: alpha**0 .. alpha**(q-2), the full multiplicative group in power order
        self.alpha_powers: tuple[FieldElement, ...] = tuple(
            FieldElement(self, i) for i in self._pow_of_alpha
        )
        self._omega = cmath.exp(2j * cmath.pi / p)
        self._omega_pow = tuple(self._omega**t for t in range(p))

    # -- table construction -------------------------------------------------

    def _build_tables(self):
        p, n, q = self.p, self.n, self.q

        def to_coeffs(i):
            out = []
            for _ in range(n):
                out.append(i % p)
                i //= p
            return out

        def to_index(c):
            i = 0
            for d in reversed(c):
                i = i * p + d
            return i

        # x**m mod modulus, for m in [n, 2n-2]
        red = [(-c) % p for c in self.modulus[:n]]
        xm = {n: red}
        for m in range(n + 1, 2 * n - 1):
            prev = xm[m - 1]
            shifted = [0] + prev[:-1]
            top = prev[-1]
            xm[m] = [(shifted[j] + top * red[j]) % p for j in range(n)]

        def polymul(a, b):
            prod = [0] * (2 * n - 1)
            for i, ai in enumerate(a):
                if ai:
                    for j, bj in enumerate(b):
                        prod[i + j] = (prod[i + j] + ai * bj) % p
            for m in range(2 * n - 2, n - 1, -1):
                c = prod[m]
                if c:
                    prod[m] = 0
                    for j, rj in enumerate(xm[m]):
                        prod[j] = (prod[j] + c * rj) % p
            return prod[:n]

        coeffs = [to_coeffs(i) for i in range(q)]
        self._add = [
            [to_index([(a + b) % p for a, b in zip(coeffs[i], coeffs[j])]) for j in range(q)]
            for i in range(q)
        ]
        self._neg = [to_index([(-a) % p for a in coeffs[i]]) for i in range(q)]
        self._mul = [
            [to_index(polymul(coeffs[i], coeffs[j])) for j in range(q)] for i in range(q)
        ]

        self._alpha_idx = p if n > 1 else (p - self.modulus[0]) % p

        # Walk alpha's powers.  Hitting 1 early, repeating, or leaving the
        # unit group means the modulus is reducible or imprimitive.
        pw = []
        cur = 1
        for _ in range(q - 1):
            pw.append(cur)
            cur = self._mul[cur][self._alpha_idx]
        if cur != 1 or len(set(pw)) != q - 1 or 0 in pw:
            raise ValueError(
                f"modulus {self.modulus} is not primitive over Z_{p}: "
                "the residue class of x does not generate the multiplicative group"
            )
        self._pow_of_alpha = pw
        self._log = [0] * q
        for j, idx in enumerate(pw):
            self._log[idx] = j
        self._inv = [0] * q
        self._inv[1] = 1
        for j in range(1, q - 1):
            self._inv[pw[j]] = pw[q - 1 - j]

        # trace(e) = sum of the n Frobenius images e**(p**k)
        tr = [0] * q
        for e in range(1, q):
            s, f = 0, e
            for _ in range(n):
                s = self._add[s][f]
                f = pw[(self._log[f] * p) % (q - 1)]
            if s >= p:
                raise AssertionError("trace left the prime subfield")
            tr[e] = s
        self._trace = tr

    # -- element constructors ------------------------------------------------

    def from_index(self, i: int) -> FieldElement:
        if not isinstance(i, int) or not 0 <= i < self.q:
            raise ValueError(f"element index must lie in [0, {self.q}), got {i!r}")
        return FieldElement(self, i)

    def from_coeffs(self, coeffs) -> FieldElement:
        coeffs = tuple(int(c) for c in coeffs)
        if len(coeffs) != self.n or any(not 0 <= c < self.p for c in coeffs):
            raise ValueError(
                f"need {self.n} coefficients in [0, {self.p}), got {coeffs}"
            )
        i = 0
        for d in reversed(coeffs):
            i = i * self.p + d
        return FieldElement(self, i)

    def __call__(self, i: int) -> FieldElement:
        return self.from_index(i)

    # -- field-level maps ----------------------------------------------------

    @property
    def half(self) -> FieldElement:
        """Inverse of 1 + 1; exists only in odd characteristic."""
        if self.p == 2:
            raise ValueError("1/2 does not exist in characteristic 2")
        return (self.one + self.one).inverse()

    def omega_power(self, t: int) -> complex:
        """exp(2 pi i / p) raised to an integer power."""
        return self._omega_pow[t % self.p]

    def character_sum(self, g: FieldElement) -> complex:
        """Sum of omega**trace(b*g) over all b; equals q for g=0, else 0."""
        if g.field != self:
            raise ValueError("element belongs to a different field")
        total = 0j
        for b in self.elements:
            total += self._omega_pow[(b * g).trace()]
        return total

    # -- serialization and identity -------------------------------------------

    def as_dict(self) -> dict:
        return {"p": self.p, "n": self.n, "modulus": list(self.modulus)}

    @classmethod
    def from_dict(cls, obj: dict) -> "Field":
        return cls(int(obj["p"]), int(obj["n"]), modulus=obj["modulus"])

    def __eq__(self, other):
        return isinstance(other, Field) and other._key == self._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return f"GF({self.q})"


def field_of_order(q: int, modulus=None, max_order: int = MAX_ORDER) -> Field:
    """Build GF(q) from its order alone (q must be a prime power)."""
    p, n = _prime_power(q)
    return Field(p, n, modulus=modulus, max_order=max_order)
