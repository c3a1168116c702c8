"""Hermitian operators built by summing one projector per basis of a MUB set.

A label assigns to each chosen basis B a vector index V(B).  The face
operator is

    A  =  J * sum_B P_B^{V(B)}  -  K * I,

with the scale J and identity offset K chosen so that Tr(A^2) = q and, for
the full-size (facet) case, Tr A = 1.  Two normalizations are provided:

* ``face_operator``: J = 1, K = (s - sqrt(q^2 - q s + s)) / q for s chosen
  bases.  Facets (s = q+1) get K = 1 and unit trace.
* ``unit_trace_face_operator``: J = sqrt((q+1)/s), K = (-1 + sqrt(s(q+1)))/q,
  which keeps Tr A = 1 and Tr A^2 = q at every size.

For two labels over the same bases, with d coordinates differing,

    Tr(A^r A^s)  =  q - d                    (first normalization)
    Tr(A^r A^s)  =  q - (q+1) d / s          (unit-trace normalization)

so Hilbert-Schmidt geometry of these operators reproduces Hamming geometry
of the labels exactly.  ``jam_state`` turns a facet operator into a bipartite
pure state (I (x) A acting on the maximally entangled ket), for which trace
and Fubini-Study distances are again exact functions of d.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .codes import Word, simplex_code
from .fields import FieldElement
from .linalg import hs_inner, kron, max_entangled, partial_trace_first
from .mub import INFINITY, MubSet, canonical_basis_labels

__all__ = [
    "FaceLabel",
    "identity_offset",
    "FaceOperator",
    "face_operator",
    "unit_trace_face_operator",
    "predicted_overlap",
    "predicted_overlap_unit_trace",
    "hs_distance",
    "trace_distance",
    "fs_distance",
    "jam_state",
    "conjugate_label",
    "wh_orbit",
    "PurityStats",
    "purity_stats",
]


@dataclass(frozen=True)
class FaceLabel:
    """A choice of vector V(B) in each of a subset of the q+1 bases.

    ``bases`` holds basis labels (INFINITY or field elements) in canonical
    order; ``values`` holds the corresponding field elements V(B).
    """

    bases: tuple
    values: tuple

    def __post_init__(self):
        if len(self.bases) != len(self.values) or not self.bases:
            raise ValueError("need one value per chosen basis, and at least one basis")
        field = None
        for v in self.values:
            if not isinstance(v, FieldElement):
                raise ValueError("values must be field elements")
            if field is None:
                field = v.field
            elif v.field != field:
                raise ValueError("values come from different fields")
        order = canonical_basis_labels(field)
        pos = []
        for b in self.bases:
            try:
                pos.append(order.index(b))
            except ValueError:
                raise ValueError(f"{b!r} is not a basis label of {field!r}") from None
        if any(a >= b for a, b in zip(pos, pos[1:])):
            raise ValueError("bases must be distinct and in canonical order")

    @classmethod
    def facet(cls, values) -> "FaceLabel":
        """Full-size label from a length q+1 word or element sequence."""
        vals = tuple(values)
        if not vals:
            raise ValueError("empty facet label")
        field = vals[0].field
        labels = canonical_basis_labels(field)
        if len(vals) != len(labels):
            raise ValueError(f"facet label needs {len(labels)} values, got {len(vals)}")
        return cls(bases=labels, values=vals)

    @property
    def field(self):
        return self.values[0].field

    @property
    def size(self) -> int:
        return len(self.bases)

    @property
    def is_facet(self) -> bool:
        return self.size == self.field.q + 1

    def word(self) -> Word:
        """The label as a codeword-style symbol tuple (facets only)."""
        if not self.is_facet:
            raise ValueError("only facet labels form full-length words")
        return Word(self.field, self.values)

    def delta(self, other: "FaceLabel") -> int:
        """Hamming distance between two labels over the same bases."""
        if self.bases != other.bases:
            raise ValueError("labels choose different bases")
        return sum(1 for a, b in zip(self.values, other.values) if a != b)

    def __repr__(self):
        parts = ", ".join(f"{b!r}:{int(v)}" for b, v in zip(self.bases, self.values))
        return f"FaceLabel({parts})"


def identity_offset(q: int, size: int) -> float:
    """Offset K with J = 1 making Tr(A^2) = q for ``size`` chosen bases."""
    return (size - math.sqrt(q * q - q * size + size)) / q


@dataclass(frozen=True)
class FaceOperator:
    label: FaceLabel
    scale: float
    offset: float
    matrix: np.ndarray

    @property
    def field(self):
        return self.label.field


def _projector_sum(m: MubSet, label: FaceLabel) -> np.ndarray:
    pos = [m.position(b) for b in label.bases]
    cols = [v.index for v in label.values]
    return m.projectors[pos, cols].sum(axis=0)


def face_operator(m: MubSet, label: FaceLabel) -> FaceOperator:
    """A = sum_B P_B^{V(B)} - K I with Tr(A^2) = q."""
    if label.field != m.field:
        raise ValueError("label and basis set use different fields")
    k = identity_offset(m.q, label.size)
    matrix = _projector_sum(m, label) - k * np.eye(m.q)
    return FaceOperator(label=label, scale=1.0, offset=k, matrix=matrix)


def unit_trace_face_operator(m: MubSet, label: FaceLabel) -> FaceOperator:
    """A = J sum_B P_B^{V(B)} - K I with Tr A = 1 and Tr(A^2) = q."""
    if label.field != m.field:
        raise ValueError("label and basis set use different fields")
    q, s = m.q, label.size
    j = math.sqrt((q + 1) / s)
    k = (-1.0 + math.sqrt(s * (q + 1))) / q
    matrix = j * _projector_sum(m, label) - k * np.eye(q)
    return FaceOperator(label=label, scale=j, offset=k, matrix=matrix)


def predicted_overlap(q: int, delta: int) -> float:
    """Tr(A^r A^s) for J = 1 operators whose labels differ in delta places."""
    return float(q - delta)


def predicted_overlap_unit_trace(q: int, size: int, delta: int) -> float:
    """Tr(A^r A^s) for unit-trace operators of the same size."""
    return q - (q + 1) * delta / size


def hs_distance(q: int, delta: int) -> float:
    """Hilbert-Schmidt distance between J = 1 face operators."""
    return math.sqrt(2.0 * delta)


def trace_distance(q: int, delta: int) -> float:
    """Trace distance between the bipartite pure states of two facets."""
    return math.sqrt(2.0 * q * delta - delta * delta) / q


def fs_distance(q: int, delta: int) -> float:
    """Fubini-Study (chordal) distance between the bipartite pure states."""
    return math.sqrt(2.0 * (1.0 - abs(1.0 - delta / q)))


def jam_state(op: FaceOperator) -> np.ndarray:
    """Bipartite pure state (I (x) A) |Omega> for a facet operator.

    |Omega> is the maximally entangled ket; the result is normalized because
    Tr(A^2) = q.  Overlaps satisfy <J^r|J^s> = 1 - delta/q.
    """
    q = op.field.q
    return kron(np.eye(q), op.matrix) @ max_entangled(q)


def conjugate_label(label: FaceLabel, x: FieldElement, z: FieldElement) -> FaceLabel:
    """Facet label transport under conjugation by D(x, z), odd q.

    In codeword form this is r -> r + x g1 - z g2 with g1, g2 the simplex
    generators, equivalently V(B) -> V(B) - z + x B per basis (with the
    infinity coordinate moving by +x).
    """
    field = label.field
    if field.p == 2:
        raise ValueError("label-level conjugation is defined for odd characteristic only")
    if not label.is_facet:
        raise ValueError("conjugation transport is defined on facet labels")
    g1, g2 = simplex_code(field).generator
    moved = label.word() + x * g1 + (-z) * g2
    return FaceLabel.facet(moved.symbols)


def wh_orbit(m: MubSet, label: FaceLabel, tol: float = 1e-6) -> set:
    """Orbit of a facet label under conjugation by all q^2 X(x) Z(z).

    Works at the matrix level (valid in every characteristic): for each
    conjugated operator the basis structure is intact, and within each basis
    the unique vector whose projector overlap is 1 is read off.
    """
    if not label.is_facet:
        raise ValueError("orbits are computed for facet labels")
    field = m.field
    q = m.q
    base = face_operator(m, label).matrix
    proj = m.projectors
    out = set()
    for x in field.elements:
        sx = np.zeros((q, q), dtype=complex)
        for k in field.elements:
            sx[(k + x).index, k.index] = 1.0
        for z in field.elements:
            dz = np.array([field.omega_power((k * z).trace()) for k in field.elements])
            u = sx * dz[np.newaxis, :]
            conj = u @ base @ u.conj().T
            values = []
            for b in range(q + 1):
                ov = np.einsum("vij,ji->v", proj[b], conj).real
                v = int(np.argmax(ov))
                if ov[v] < 1.0 - tol:
                    raise RuntimeError(
                        f"conjugated operator does not align with basis {b} "
                        f"(best projector weight {ov[v]:.6f})"
                    )
                values.append(field.from_index(v))
            out.add(FaceLabel.facet(values))
    return out


@dataclass(frozen=True)
class PurityStats:
    """Reduced-state purity of facet states, against the Haar average."""

    mean: float
    haar_mean: float
    count: int
    exhaustive: bool
    stderr: float


def purity_stats(
    m: MubSet,
    max_exhaustive: int = 4096,
    samples: int = 100_000,
    seed: int = 0,
) -> PurityStats:
    """Average purity of the A-side reduced state over all facet labels.

    Exhausts all q^(q+1) labels when that count is at most ``max_exhaustive``
    (tracing out honestly from the bipartite state); otherwise samples labels
    uniformly and uses the closed form purity = Tr(A^4) / q^2, which equals
    the reduced-state purity because the reduction of the facet state is
    A^2 / q.
    """
    field = m.field
    q = m.q
    total = q ** (q + 1)
    haar = 2.0 * q / (q * q + 1.0)
    if total <= max_exhaustive:
        acc = 0.0
        for idx in range(total):
            digits = []
            t = idx
            for _ in range(q + 1):
                digits.append(field.from_index(t % q))
                t //= q
            op = face_operator(m, FaceLabel.facet(digits))
            psi = jam_state(op)
            rho = partial_trace_first(np.outer(psi, psi.conj()))
            acc += hs_inner(rho, rho).real
        return PurityStats(
            mean=acc / total, haar_mean=haar, count=total, exhaustive=True, stderr=0.0
        )
    rng = np.random.default_rng(seed)
    vals = np.empty(samples)
    for i in range(samples):
        digits = [field.from_index(int(d)) for d in rng.integers(0, q, size=q + 1)]
        a = face_operator(m, FaceLabel.facet(digits)).matrix
        a2 = a @ a
        vals[i] = hs_inner(a2, a2).real / (q * q)
    return PurityStats(
        mean=float(vals.mean()),
        haar_mean=haar,
        count=samples,
        exhaustive=False,
        stderr=float(vals.std(ddof=1) / math.sqrt(samples)),
    )
