"""Complete sets of q+1 mutually unbiased bases in prime-power dimension q,
and the shift/clock (Weyl-Heisenberg) operators that permute them.

Odd characteristic uses quadratic phases over GF(q),

    |psi_B^V>  =  q^(-1/2) * sum_k  omega^( tr(B k^2 / 2  -  V k) ) |k>,

with omega = exp(2 pi i / p) and k running over the field.  Characteristic 2
replaces the field exponent by a Z4-valued one from the Galois ring GR(4, n):

    |psi_B^V>  =  q^(-1/2) * sum_k  i^( tr(B k^2) + 2 tr(V k) ) |k>,

with B, V, k running over the Teichmuller set, identified with field
elements by mod-2 reduction.  In both cases the extra (q+1)-st basis is the
computational one, labeled "infinity", and kets are mapped to row indices
through the canonical field index.

Basis labels are enumerated in the canonical order
[inf, 0, alpha^0, alpha^1, ..., alpha^(q-2)]; this matches the simplex-code
coordinate order in :mod:`wigner_codes.codes`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .fields import Field, FieldElement
from .rings import GaloisRing

__all__ = [
    "INFINITY",
    "canonical_basis_labels",
    "MubSet",
    "overlap_deviation",
    "shift_op",
    "clock_op",
    "WeylOp",
    "weyl_op",
    "stabilizer_projector",
    "conjugated_mub_label",
]


class _Infinity:
    """Label of the computational basis."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "inf"


INFINITY = _Infinity()


def canonical_basis_labels(field: Field) -> tuple:
    """The q+1 basis labels in canonical order: inf, 0, then powers of alpha."""
    return (INFINITY, field.zero, *field.alpha_powers)


class MubSet:
    """A complete set of q+1 mutually unbiased bases for GF(q)."""

    def __init__(self, field: Field, matrices: np.ndarray, ring: GaloisRing | None):
        self.field = field
        self.q = field.q
        self.labels = canonical_basis_labels(field)
        self.ring = ring
        self._mats = matrices
        self._positions = {INFINITY: 0}
        for pos, lab in enumerate(self.labels[1:], start=1):
            self._positions[lab] = pos
        self._proj: np.ndarray | None = None

    @classmethod
    def build(cls, field: Field) -> "MubSet":
        q, p, n = field.q, field.p, field.n
        mats = np.zeros((q + 1, q, q), dtype=complex)
        mats[0] = np.eye(q)
        norm = 1.0 / math.sqrt(q)
        field_labels = (field.zero, *field.alpha_powers)
        ring = None
        if p != 2:
            half = field.half
            wpow = [field.omega_power(t) for t in range(p)]
            for pos, b in enumerate(field_labels, start=1):
                hb = half * b
                for v in field.elements:
                    for k in field.elements:
                        e = (hb * k * k - v * k).trace()
                        mats[pos, k.index, v.index] = wpow[e] * norm
        else:
            ring = GaloisRing(n)
            ipow = (1.0, 1.0j, -1.0, -1.0j)
            teich = ring.teichmuller
            rows = [ring.reduce(k).index for k in teich]
            for pos, b_field in enumerate(field_labels, start=1):
                b = ring.lift(b_field)
                for v_field in field.elements:
                    v = ring.lift(v_field)
                    col = v_field.index
                    for k, row in zip(teich, rows):
                        e = (ring.trace(b * k * k) + 2 * ring.trace(v * k)) % 4
                        mats[pos, row, col] = ipow[e] * norm
        return cls(field, mats, ring)

    # -- access ---------------------------------------------------------------

    def position(self, label) -> int:
        try:
            return self._positions[label]
        except KeyError:
            raise ValueError(f"{label!r} is not a basis label of {self.field!r}") from None

    def label_at(self, pos: int):
        return self.labels[pos]

    def basis_matrix(self, label_or_pos) -> np.ndarray:
        """The q x q matrix whose columns are the basis vectors, by V index."""
        pos = label_or_pos if isinstance(label_or_pos, int) else self.position(label_or_pos)
        return self._mats[pos]

    def vector(self, label_or_pos, v) -> np.ndarray:
        """Basis vector |psi_B^V>; v may be a FieldElement or its index."""
        pos = label_or_pos if isinstance(label_or_pos, int) else self.position(label_or_pos)
        col = v.index if isinstance(v, FieldElement) else int(v)
        return self._mats[pos, :, col]

    def projector(self, label_or_pos, v) -> np.ndarray:
        psi = self.vector(label_or_pos, v)
        return np.outer(psi, psi.conj())

    @property
    def projectors(self) -> np.ndarray:
        """All rank-1 projectors, as an array of shape (q+1, q, q, q)."""
        if self._proj is None:
            q = self.q
            proj = np.empty((q + 1, q, q, q), dtype=complex)
            for b in range(q + 1):
                for v in range(q):
                    psi = self._mats[b, :, v]
                    proj[b, v] = np.outer(psi, psi.conj())
            self._proj = proj
        return self._proj

    def teich_index(self, v: FieldElement) -> int:
        """Even q only: position of v's Teichmuller lift in [0, 1, xi, ...]."""
        if self.ring is None:
            raise ValueError("Teichmuller coordinates exist only in characteristic 2")
        return self.ring.teich_index(v)

    def __repr__(self):
        return f"MubSet(q={self.q})"


def overlap_deviation(m: MubSet) -> float:
    """Largest deviation of |<psi|phi>| from the mutually-unbiased pattern.

    Targets: identity within one basis, constant 1/sqrt(q) across bases.
    """
    q = m.q
    target_cross = 1.0 / math.sqrt(q)
    eye = np.eye(q)
    worst = 0.0
    for b in range(q + 1):
        for b2 in range(b, q + 1):
            g = np.abs(m._mats[b].conj().T @ m._mats[b2])
            dev = np.abs(g - eye).max() if b == b2 else np.abs(g - target_cross).max()
            worst = max(worst, float(dev))
    return worst


# -- Weyl-Heisenberg operators -------------------------------------------------


def shift_op(field: Field, x: FieldElement) -> np.ndarray:
    """Permutation matrix |k> -> |k + x>."""
    q = field.q
    m = np.zeros((q, q), dtype=complex)
    for k in field.elements:
        m[(k + x).index, k.index] = 1.0
    return m


def clock_op(field: Field, z: FieldElement) -> np.ndarray:
    """Diagonal matrix |k> -> omega^tr(k z) |k>."""
    q = field.q
    m = np.zeros((q, q), dtype=complex)
    for k in field.elements:
        m[k.index, k.index] = field.omega_power((k * z).trace())
    return m


@dataclass(frozen=True)
class WeylOp:
    """A displacement operator: shift by x composed with clock by z."""

    x: FieldElement
    z: FieldElement
    phased: bool
    matrix: np.ndarray


def weyl_op(field: Field, x: FieldElement, z: FieldElement, phased: bool | None = None) -> WeylOp:
    """The operator X(x) Z(z), with the odd-q phase omega^tr(x z / 2).

    ``phased`` defaults to True in odd characteristic; requesting the phased
    variant in characteristic 2 is an error (no square root of -1 exists
    among p-th roots of unity there).
    """
    if phased is None:
        phased = field.p != 2
    if phased and field.p == 2:
        raise ValueError("phased displacement operators are undefined for p = 2")
    m = shift_op(field, x) @ clock_op(field, z)
    if phased:
        m = field.omega_power((field.half * x * z).trace()) * m
    return WeylOp(x=x, z=z, phased=phased, matrix=m)


def stabilizer_projector(field: Field, b, v: FieldElement) -> np.ndarray:
    """Rank-1 projector onto |psi_b^v> as a displacement-operator average.

    For a field label b (odd characteristic):
        P = (1/q) sum_k omega^(-tr(k v)) D(k, k b).
    The infinity label returns the computational projector directly.
    """
    q = field.q
    if b is INFINITY:
        m = np.zeros((q, q), dtype=complex)
        m[v.index, v.index] = 1.0
        return m
    if field.p == 2:
        raise ValueError("displacement-average projectors need odd characteristic")
    acc = np.zeros((q, q), dtype=complex)
    for k in field.elements:
        phase = field.omega_power((-(k * v)).trace())
        acc += phase * weyl_op(field, k, k * b).matrix
    return acc / q


def conjugated_mub_label(field: Field, x: FieldElement, z: FieldElement, b, v: FieldElement):
    """Label transport under conjugation by the displacement D(x, z), odd q.

    The basis is preserved; the vector label moves as
        inf:  V -> V + x
        b:    V -> V - z + x b.
    """
    if field.p == 2:
        raise ValueError("label-level conjugation is defined for odd characteristic only")
    if b is INFINITY:
        return b, v + x
    return b, v - z + x * b
