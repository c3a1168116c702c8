"""Linear block codes over GF(q): the Hamming metric, the length-(q+1)
simplex and Hamming codes, duals, standard (Slepian) coset arrays,
weight distributions, and the classical packing bounds.

Coordinate convention for the length-(q+1) codes: positions are indexed
by the basis labels [inf, 0, alpha^0, alpha^1, ..., alpha^(q-2)].  The
simplex generator rows are g1 = [1, 0, 1, alpha, ..., alpha^(q-2)] and
g2 = [0, 1, 1, ..., 1], so the entry of g1 at a field-labeled position
equals that position's label.  Every nonzero simplex codeword then has
exactly one zero coordinate, i.e. weight q.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from math import comb

from .fields import Field, FieldElement

__all__ = [
    "Word",
    "LinearCode",
    "CosetTable",
    "hamming_distance",
    "simplex_code",
    "hamming_code",
    "dual",
    "coset_table",
    "weight_distribution",
    "hamming_bound",
    "singleton_bound",
    "is_perfect",
    "is_mds",
]

# Above this size, min_distance switches from enumerating all codewords to a
# layered search for low-weight words checked against the dual generator.
_ENUMERATION_LIMIT = 200_000


class Word:
    """A fixed-length tuple of field elements with coordinatewise arithmetic."""

    __slots__ = ("field", "symbols")

    def __init__(self, field: Field, symbols):
        symbols = tuple(symbols)
        if not symbols:
            raise ValueError("words must have positive length")
        for s in symbols:
            if not isinstance(s, FieldElement) or s.field != field:
                raise ValueError(f"symbol {s!r} does not belong to {field!r}")
        self.field = field
        self.symbols = symbols

    @classmethod
    def from_indices(cls, field: Field, indices) -> "Word":
        return cls(field, tuple(field.from_index(int(i)) for i in indices))

    @property
    def indices(self) -> tuple[int, ...]:
        return tuple(s.index for s in self.symbols)

    @property
    def weight(self) -> int:
        return sum(1 for s in self.symbols if s.index)

    def _coerce(self, other):
        if not isinstance(other, Word):
            return None
        if other.field != self.field or len(other) != len(self):
            raise ValueError("words of different fields or lengths")
        return other

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Word(self.field, tuple(a + b for a, b in zip(self.symbols, other.symbols)))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Word(self.field, tuple(a - b for a, b in zip(self.symbols, other.symbols)))

    def __neg__(self):
        return Word(self.field, tuple(-a for a in self.symbols))

    def __rmul__(self, c):
        if not isinstance(c, FieldElement):
            return NotImplemented
        if c.field != self.field:
            raise ValueError("scalar from a different field")
        return Word(self.field, tuple(c * a for a in self.symbols))

    def dot(self, other) -> FieldElement:
        other = self._coerce(other)
        if other is None:
            raise ValueError("dot product needs another word")
        acc = self.field.zero
        for a, b in zip(self.symbols, other.symbols):
            acc = acc + a * b
        return acc

    def __len__(self):
        return len(self.symbols)

    def __iter__(self):
        return iter(self.symbols)

    def __getitem__(self, i):
        return self.symbols[i]

    def __eq__(self, other):
        return (
            isinstance(other, Word)
            and other.field == self.field
            and other.symbols == self.symbols
        )

    def __hash__(self):
        return hash((self.field._key, self.indices))

    def __repr__(self):
        return "(" + ",".join(str(i) for i in self.indices) + ")"


def hamming_distance(v: Word, w: Word) -> int:
    """Number of coordinates where two equal-length words differ."""
    if not isinstance(v, Word) or not isinstance(w, Word):
        raise ValueError("hamming_distance needs two words")
    if v.field != w.field or len(v) != len(w):
        raise ValueError("words of different fields or lengths are incomparable")
    return sum(1 for a, b in zip(v.symbols, w.symbols) if a.index != b.index)


def _rref(field: Field, rows: list[list[FieldElement]]):
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    rows = [list(r) for r in rows]
    ncols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c].index), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [inv * a for a in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c].index:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return rows[:r], pivots


class LinearCode:
    """A k-dimensional linear code of length N over GF(q).

    The generator rows must be linearly independent.  Codewords are
    enumerated in message order with the first generator row as the least
    significant base-q digit.
    """

    def __init__(self, field: Field, generator, length: int | None = None):
        generator = tuple(generator)
        if generator:
            length = len(generator[0])
            for g in generator:
                if not isinstance(g, Word) or g.field != field or len(g) != length:
                    raise ValueError("generator rows must be same-length words over the field")
            _, pivots = _rref(field, [list(g.symbols) for g in generator])
            if len(pivots) != len(generator):
                raise ValueError("generator rows are linearly dependent")
        elif length is None:
            raise ValueError("an empty generator needs an explicit length")
        self.field = field
        self.generator = generator
        self.length = length
        self.dimension = len(generator)
        self._codewords: list[Word] | None = None
        self._min_distance: int | None = None
        self._parity_rows: tuple[Word, ...] | None = None

    @property
    def codewords(self) -> list[Word]:
        if self._codewords is None:
            q, k = self.field.q, self.dimension
            words = []
            for m in range(q**k):
                acc = Word(self.field, (self.field.zero,) * self.length)
                mm = m
                for row in self.generator:
                    d = mm % q
                    if d:
                        acc = acc + self.field.from_index(d) * row
                    mm //= q
                words.append(acc)
            self._codewords = words
        return self._codewords

    @property
    def size(self) -> int:
        return self.field.q**self.dimension

    def min_distance(self) -> int:
        if self._min_distance is None:
            if self.dimension == 0:
                raise ValueError("minimum distance of the trivial code {0} is undefined")
            if self.size <= _ENUMERATION_LIMIT:
                self._min_distance = min(w.weight for w in self.codewords if w.weight)
            else:
                self._min_distance = self._lowest_codeword_weight()
        return self._min_distance

    def _lowest_codeword_weight(self) -> int:
        """Smallest t with a weight-t codeword, by searching supports upward.

        A candidate is a codeword iff it is orthogonal to every dual
        generator row; scaling invariance pins the first nonzero symbol to 1.
        """
        field, N = self.field, self.length
        nonzero = field.elements[1:]
        checks = [h.symbols for h in self.parity_rows]
        for t in range(1, N + 1):
            for support in combinations(range(N), t):
                cols = [[h[i] for i in support] for h in checks]
                for rest in product(nonzero, repeat=t - 1):
                    values = (field.one, *rest)
                    if all(
                        not sum((c * v for c, v in zip(col, values)), field.zero)
                        for col in cols
                    ):
                        return t
        raise AssertionError("a nonzero code has a nonzero codeword")

    @property
    def parity_rows(self) -> tuple[Word, ...]:
        """Generator of the dual code, used as parity checks."""
        if self._parity_rows is None:
            self._parity_rows = dual(self).generator
        return self._parity_rows

    def __contains__(self, word) -> bool:
        if not isinstance(word, Word) or word.field != self.field or len(word) != self.length:
            return False
        return all(not h.dot(word) for h in self.parity_rows)

    def __repr__(self):
        return f"[{self.length},{self.dimension}] code over GF({self.field.q})"


def simplex_code(field: Field) -> LinearCode:
    """The [q+1, 2, q] equidistant code in the canonical coordinate order."""
    one, zero = field.one, field.zero
    g1 = Word(field, (one, zero, *field.alpha_powers))
    g2 = Word(field, (zero,) + (one,) * field.q)
    return LinearCode(field, (g1, g2))


def dual(code: LinearCode) -> LinearCode:
    """The dual code under the standard bilinear form."""
    field, N = code.field, code.length
    if code.dimension == 0:
        rows = [
            Word(field, tuple(field.one if j == i else field.zero for j in range(N)))
            for i in range(N)
        ]
        return LinearCode(field, rows)
    rref_rows, pivots = _rref(field, [list(g.symbols) for g in code.generator])
    free = [c for c in range(N) if c not in pivots]
    basis = []
    for f in free:
        v = [field.zero] * N
        v[f] = field.one
        for r, pc in enumerate(pivots):
            v[pc] = -rref_rows[r][f]
        basis.append(Word(field, v))
    return LinearCode(field, basis, length=N)


def hamming_code(field: Field) -> LinearCode:
    """The [q+1, q-1, 3] code whose parity checks are the simplex generators.

    Built in systematic form, independent of the generic ``dual``
    computation: row j carries 1 at the position labeled alpha^j, and the
    unique compensating entries -alpha^j at the infinity position and -1 at
    the zero position.  Each row is a weight-3 codeword, witnessing d = 3.
    """
    q = field.q
    rows = []
    for j, a in enumerate(field.alpha_powers):
        symbols = [field.zero] * (q + 1)
        symbols[0] = -a
        symbols[1] = -field.one
        symbols[2 + j] = field.one
        rows.append(Word(field, symbols))
    return LinearCode(field, rows)


def weight_distribution(code: LinearCode) -> tuple[int, ...]:
    """(A_0, ..., A_N): the number of codewords of each weight."""
    counts = [0] * (code.length + 1)
    for w in code.codewords:
        counts[w.weight] += 1
    return tuple(counts)


def hamming_bound(q: int, N: int, d: int) -> int:
    """Sphere-packing bound on |C| (floor), exact integer arithmetic."""
    t = (d - 1) // 2
    sphere = sum(comb(N, i) * (q - 1) ** i for i in range(t + 1))
    return q**N // sphere


def singleton_bound(q: int, N: int, d: int) -> int:
    return q ** (N - d + 1)


def is_perfect(code: LinearCode) -> bool:
    """Whether radius-t spheres around codewords tile the whole space exactly."""
    q, N = code.field.q, code.length
    t = (code.min_distance() - 1) // 2
    sphere = sum(comb(N, i) * (q - 1) ** i for i in range(t + 1))
    return code.size * sphere == q**N


def is_mds(code: LinearCode) -> bool:
    """Whether the code meets the Singleton bound with equality."""
    return code.size == singleton_bound(code.field.q, code.length, code.min_distance())


@dataclass(frozen=True)
class CosetTable:
    """Standard array: one row per coset, led by a minimum-weight word.

    Rows are ordered by (leader weight, leader lexicographic order); within
    a row, words appear in the code's message enumeration order, so the
    leader itself is always the first entry.
    """

    leaders: tuple[Word, ...]
    rows: tuple[tuple[Word, ...], ...]


def coset_table(code: LinearCode, max_cosets: int = 10**6, max_words: int = 2 * 10**6) -> CosetTable:
    """All cosets of the code, with minimum-weight leaders.

    Leader ties are broken by the smallest canonical integer encoding,
    i.e. lexicographic order on the index tuple read left to right.
    """
    field, N, k = code.field, code.length, code.dimension
    q = field.q
    n_cosets = q ** (N - k)
    if n_cosets > max_cosets or q**N > max_words:
        raise ValueError(
            f"enumeration bound exceeded: {n_cosets} cosets / {q**N} words"
        )
    check_rows = code.parity_rows
    nonzero = field.elements[1:]

    def syndrome(word: Word) -> tuple[int, ...]:
        return tuple(h.dot(word).index for h in check_rows)

    best: dict[tuple[int, ...], tuple[int, tuple[int, ...], Word]] = {}
    for t in range(N + 1):
        for support in combinations(range(N), t):
            for values in product(nonzero, repeat=t):
                symbols = [field.zero] * N
                for pos, val in zip(support, values):
                    symbols[pos] = val
                w = Word(field, symbols)
                key = (t, w.indices)
                s = syndrome(w)
                cur = best.get(s)
                if cur is None or key < cur[:2]:
                    best[s] = (*key, w)
        if len(best) == n_cosets:
            break
    leaders = sorted((entry for entry in best.values()))
    leader_words = tuple(entry[2] for entry in leaders)
    rows = tuple(tuple(lw + c for c in code.codewords) for lw in leader_words)
    return CosetTable(leaders=leader_words, rows=rows)
