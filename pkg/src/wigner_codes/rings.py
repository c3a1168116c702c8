"""Galois rings GR(4, n) and their Teichmuller coordinates.

GR(4, n) = Z4[x] / (h(x)), where h is the monic degree-n lift of the
binary field modulus obtained by one root-squaring step; the residue
class xi of x then has multiplicative order 2**n - 1.  The Teichmuller
set T = {0, 1, xi, ..., xi**(2**n - 2)} is a multiplicatively closed
section of GF(2**n): reducing coefficients mod 2 restricts to a
bijection T -> GF(2**n).  Every ring element splits uniquely as
g = a + 2b with a, b in T, and the ring trace is the sum of the n
generalized Frobenius images of that splitting.
"""

from __future__ import annotations

from .fields import Field, FieldElement

__all__ = ["GaloisRing", "RingElement"]


def _lift_modulus(fmod: tuple[int, ...]) -> tuple[int, ...]:
    """Monic Z4 lift of a binary modulus by one root-squaring step.

    Writing f(x) = e(x^2) + x o(x^2), the lift is h(y) = +-(e(y)^2 - y o(y)^2)
    with the sign chosen to keep h monic; h == f mod 2 and h divides
    y**(2**n - 1) - 1 over Z4, which is exactly what makes xi a root of unity.
    """
    n = len(fmod) - 1
    e = list(fmod[0::2])
    o = list(fmod[1::2])

    def sq(a):
        out = [0] * (2 * len(a) - 1) if a else [0]
        for i, ai in enumerate(a):
            for j, aj in enumerate(a):
                out[i + j] = (out[i + j] + ai * aj) % 4
        return out

    e2 = sq(e)
    yo2 = [0] + sq(o)
    h = [0] * (n + 1)
    for m in range(n + 1):
        a = e2[m] if m < len(e2) else 0
        b = yo2[m] if m < len(yo2) else 0
        h[m] = (a - b) % 4
    if n % 2:
        h = [(-c) % 4 for c in h]
    if h[n] != 1:
        raise AssertionError("root-squaring lift failed to stay monic")
    if tuple(c % 2 for c in h) != tuple(fmod):
        raise AssertionError("root-squaring lift does not reduce to the field modulus")
    return tuple(h)


class RingElement:
    """An element of GR(4, n), stored as a Z4 coefficient vector."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: "GaloisRing", coeffs: tuple[int, ...]):
        self.ring = ring
        self.coeffs = coeffs

    def _coerce(self, other):
        if not isinstance(other, RingElement):
            return None
        if other.ring is not self.ring and other.ring._key != self.ring._key:
            raise ValueError("elements of different Galois rings")
        return other

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RingElement(
            self.ring,
            tuple((a + b) % 4 for a, b in zip(self.coeffs, other.coeffs)),
        )

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RingElement(
            self.ring,
            tuple((a - b) % 4 for a, b in zip(self.coeffs, other.coeffs)),
        )

    def __neg__(self):
        return RingElement(self.ring, tuple((-a) % 4 for a in self.coeffs))

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RingElement(self.ring, self.ring._mul(self.coeffs, other.coeffs))

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        out = self.ring.one
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        return (
            isinstance(other, RingElement)
            and other.coeffs == self.coeffs
            and other.ring._key == self.ring._key
        )

    def __hash__(self):
        return hash((self.ring._key, self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    def __repr__(self):
        return f"GR4_{self.ring.n}{self.coeffs}"


class GaloisRing:
    """GR(4, n), the degree-n Galois extension of Z4, for 2**n <= 64."""

    def __init__(self, n: int, max_order: int = 64):
        if not isinstance(n, int) or n < 1 or 2**n > max_order:
            raise ValueError(f"extension degree must satisfy 1 <= n, 2**n <= {max_order}")
        self.n = n
        self.field = Field(2, n)
        self.modulus = _lift_modulus(self.field.modulus)
        self._key = (n, self.modulus)

        # x**m mod modulus for m in [n, 2n-2]
        red = [(-c) % 4 for c in self.modulus[:n]]
        self._xm = {n: red}
        for m in range(n + 1, 2 * n - 1):
            prev = self._xm[m - 1]
            shifted = [0] + prev[:-1]
            top = prev[-1]
            self._xm[m] = [(shifted[j] + top * red[j]) % 4 for j in range(n)]

        self.zero = RingElement(self, (0,) * n)
        self.one = RingElement(self, (1,) + (0,) * (n - 1))
        if n > 1:
            self.xi = RingElement(self, (0, 1) + (0,) * (n - 2))
        else:
            self.xi = RingElement(self, ((-self.modulus[0]) % 4,))

        # Teichmuller enumeration [0, 1, xi, xi^2, ...]; xi must have order 2**n - 1
        powers = [self.one]
        cur = self.one
        for _ in range(2**n - 2):
            cur = cur * self.xi
            powers.append(cur)
        if cur * self.xi != self.one or len(set(powers)) != 2**n - 1:
            raise AssertionError(
                f"lifted modulus {self.modulus} gives xi of wrong multiplicative order"
            )
        self.teichmuller: tuple[RingElement, ...] = (self.zero, *powers)

        # mod-2 reduction is a bijection T -> GF(2**n)
        self._lift_by_index: dict[int, RingElement] = {}
        self._teich_pos: dict[tuple[int, ...], int] = {}
        for pos, t in enumerate(self.teichmuller):
            i = self.reduce(t).index
            if i in self._lift_by_index:
                raise AssertionError("Teichmuller reduction is not injective")
            self._lift_by_index[i] = t
            self._teich_pos[t.coeffs] = pos

        self._decomp: dict[tuple[int, ...], tuple[RingElement, RingElement]] | None = None

    # -- arithmetic backend ---------------------------------------------------

    def _mul(self, a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
        n = self.n
        prod = [0] * (2 * n - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    prod[i + j] = (prod[i + j] + ai * bj) % 4
        for m in range(2 * n - 2, n - 1, -1):
            c = prod[m]
            if c:
                prod[m] = 0
                for j, rj in enumerate(self._xm[m]):
                    prod[j] = (prod[j] + c * rj) % 4
        return tuple(prod[:n])

    def from_coeffs(self, coeffs) -> RingElement:
        coeffs = tuple(int(c) % 4 for c in coeffs)
        if len(coeffs) != self.n:
            raise ValueError(f"need {self.n} coefficients, got {len(coeffs)}")
        return RingElement(self, coeffs)

    def elements(self):
        """Iterate over all 4**n ring elements (coefficient lex order)."""
        n = self.n
        for i in range(4**n):
            c = []
            j = i
            for _ in range(n):
                c.append(j % 4)
                j //= 4
            yield RingElement(self, tuple(c))

    # -- Teichmuller structure --------------------------------------------------

    def reduce(self, g: RingElement) -> FieldElement:
        """Coefficient-wise mod-2 reduction into GF(2**n)."""
        return self.field.from_coeffs(tuple(c % 2 for c in g.coeffs))

    def lift(self, e: FieldElement) -> RingElement:
        """The unique Teichmuller element reducing to e."""
        if e.field != self.field:
            raise ValueError("element belongs to a different field")
        return self._lift_by_index[e.index]

    def teich_index(self, v) -> int:
        """Position of a Teichmuller element in the enumeration [0, 1, xi, ...].

        Accepts a Teichmuller RingElement or a FieldElement (lifted first).
        """
        if isinstance(v, FieldElement):
            v = self.lift(v)
        pos = self._teich_pos.get(v.coeffs)
        if pos is None:
            raise ValueError(f"{v!r} is not a Teichmuller element")
        return pos

    def decompose(self, g: RingElement) -> tuple[RingElement, RingElement]:
        """The unique (a, b) in T x T with g = a + 2b."""
        if self._decomp is None:
            table = {}
            for a in self.teichmuller:
                for b in self.teichmuller:
                    key = (a + b + b).coeffs
                    if key in table:
                        raise AssertionError("Teichmuller splitting is not unique")
                    table[key] = (a, b)
            self._decomp = table
        return self._decomp[g.coeffs]

    def trace(self, g: RingElement) -> int:
        """Ring trace into Z4: sum over k of a**(2**k) + 2 b**(2**k)."""
        a, b = self.decompose(g)
        total = self.zero
        for _ in range(self.n):
            total = total + a + b + b
            a = a * a
            b = b * b
        if any(total.coeffs[1:]):
            raise AssertionError("ring trace left the prime subring")
        return total.coeffs[0]

    def as_dict(self) -> dict:
        return {"n": self.n, "modulus": list(self.modulus)}

    def __eq__(self, other):
        return isinstance(other, GaloisRing) and other._key == self._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return f"GR(4,{self.n})"
