"""Discrete Wigner functions on the q x q phase space over GF(q).

The q^2 phase-point operators are the facet operators of one coset of the
two-dimensional simplex code: starting from a leader word w, the point
(x, z) carries A at label w + x g1 - z g2, where g1, g2 generate the
simplex code.  These operators are pairwise Hilbert-Schmidt orthogonal
(between distinct coset members the label distance is always q, giving
overlap 0) and each has norm-squared q, so

    W(x, z)  =  (1/q) Tr(A_{x,z} rho)

is an exact expansion: rho = sum_{x,z} W(x, z) A_{x,z}, and the total mass
sum W equals Tr rho.  Negativity of W and membership in the polytope cut
out by all MUB probability constraints are diagnostics for nonclassicality.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .codes import simplex_code
from .faceops import FaceLabel, face_operator
from .fields import Field
from .linalg import DEFAULT_TOL, hermiticity_defect
from .mub import MubSet

__all__ = [
    "DiscreteWigner",
    "PolytopeReport",
    "polytope_minimum",
    "polytope_minimum_exhaustive",
    "parity_matrix",
    "parity_deviation",
    "PositivitySurvey",
    "positivity_survey",
    "stabilizer_count",
]


class DiscreteWigner:
    """Phase-point operators and Wigner transforms for one simplex coset."""

    def __init__(self, m: MubSet, leader: FaceLabel | None = None):
        field = m.field
        q = field.q
        if leader is None:
            leader = FaceLabel.facet([field.zero] * (q + 1))
        elif leader.field != field:
            raise ValueError("leader label uses a different field")
        elif not leader.is_facet:
            raise ValueError("leader must be a facet label")
        self.m = m
        self.field = field
        self.q = q
        self.leader = leader
        g1, g2 = simplex_code(field).generator
        w = leader.word()
        ops = np.empty((q, q, q, q), dtype=complex)
        labels = [[None] * q for _ in range(q)]
        for x in field.elements:
            for z in field.elements:
                lab = FaceLabel.facet((w + x * g1 + (-z) * g2).symbols)
                labels[x.index][z.index] = lab
                ops[x.index, z.index] = face_operator(m, lab).matrix
        self.ops = ops
        self.labels = labels

    def values(self, rho: np.ndarray, tol: float = DEFAULT_TOL) -> np.ndarray:
        """The q x q table W(x, z) = Tr(A_{x,z} rho) / q."""
        rho = np.asarray(rho, dtype=complex)
        if rho.shape != (self.q, self.q):
            raise ValueError(f"state must be {self.q} x {self.q}, got {rho.shape}")
        defect = hermiticity_defect(rho)
        if defect > tol:
            raise ValueError(f"state is not Hermitian (defect {defect:.3e})")
        tr = rho.trace().real
        if abs(tr - 1.0) > 1e-6:
            warnings.warn(f"state has trace {tr:.6f}, not 1", stacklevel=2)
        w = np.einsum("xzij,ji->xz", self.ops, rho) / self.q
        imag = np.abs(w.imag).max()
        if imag > max(tol, 1e-12):
            raise ValueError(f"Wigner table has imaginary residue {imag:.3e}")
        return w.real

    def reconstruct(self, table: np.ndarray) -> np.ndarray:
        """Invert ``values``: rho = sum_{x,z} W(x, z) A_{x,z}."""
        table = np.asarray(table, dtype=float)
        if table.shape != (self.q, self.q):
            raise ValueError(f"table must be {self.q} x {self.q}, got {table.shape}")
        return np.einsum("xz,xzij->ij", table, self.ops)

    def negativity(self, rho: np.ndarray) -> float:
        """Total negative mass of the Wigner table: sum of max(0, -W)."""
        w = self.values(rho)
        return float(np.clip(-w, 0.0, None).sum())


@dataclass(frozen=True)
class PolytopeReport:
    """Result of minimizing Tr(A rho) over all q^(q+1) facet operators."""

    minimum: float
    argmin: FaceLabel
    member: bool


def polytope_minimum(m: MubSet, rho: np.ndarray, tol: float = DEFAULT_TOL) -> PolytopeReport:
    """Minimum facet expectation via per-basis minimization.

    Tr(A rho) = sum_B p(B, V(B)) - 1 for a facet, with independent V(B), so
    the minimum picks the least likely outcome in every basis.  The state is
    in the face-operator polytope exactly when the minimum is >= 0.
    """
    rho = np.asarray(rho, dtype=complex)
    q = m.q
    if rho.shape != (q, q):
        raise ValueError(f"state must be {q} x {q}, got {rho.shape}")
    probs = np.einsum("bvij,ji->bv", m.projectors, rho).real
    vmin = probs.argmin(axis=1)
    minimum = float(probs.min(axis=1).sum() - 1.0)
    values = [m.field.from_index(int(v)) for v in vmin]
    label = FaceLabel.facet(values)
    return PolytopeReport(minimum=minimum, argmin=label, member=minimum >= -tol)


def polytope_minimum_exhaustive(
    m: MubSet, rho: np.ndarray, tol: float = DEFAULT_TOL
) -> PolytopeReport:
    """Brute-force check of ``polytope_minimum`` over all q^(q+1) facets."""
    rho = np.asarray(rho, dtype=complex)
    field = m.field
    q = m.q
    best = None
    for idx in range(q ** (q + 1)):
        digits = []
        t = idx
        for _ in range(q + 1):
            digits.append(field.from_index(t % q))
            t //= q
        lab = FaceLabel.facet(digits)
        val = np.einsum("ij,ji->", face_operator(m, lab).matrix, rho).real
        if best is None or val < best[0]:
            best = (float(val), lab)
    return PolytopeReport(minimum=best[0], argmin=best[1], member=best[0] >= -tol)


def parity_matrix(field: Field) -> np.ndarray:
    """The permutation |k> -> |-k>."""
    q = field.q
    m = np.zeros((q, q), dtype=complex)
    for k in field.elements:
        m[(-k).index, k.index] = 1.0
    return m


def parity_deviation(field: Field, m: MubSet | None = None) -> float:
    """Max-norm gap between the all-zero phase-point operator and parity.

    Odd characteristic only: A at the zero label equals the permutation
    k -> -k.
    """
    if field.p == 2:
        raise ValueError("the parity identity holds in odd characteristic only")
    if m is None:
        m = MubSet.build(field)
    zero_label = FaceLabel.facet([field.zero] * (field.q + 1))
    a = face_operator(m, zero_label).matrix
    return float(np.abs(a - parity_matrix(field)).max())


@dataclass(frozen=True)
class PositivitySurvey:
    """Classification of random pure states by Wigner negativity."""

    q: int
    samples: int
    negative: int
    near_mub: int
    nonnegative_nonmub: int
    example: np.ndarray | None


def positivity_survey(
    field: Field,
    samples: int = 1000,
    seed: int = 0,
    tol: float = DEFAULT_TOL,
    neg_floor: float = 1e-6,
) -> PositivitySurvey:
    """Sample Haar-random pure states and sort them by Wigner negativity.

    Prime dimension only.  A state counts as negative when its negativity
    exceeds ``neg_floor``; otherwise it is either within Fubini-Study
    distance 1e-6 of some MUB vector or a genuine nonnegative non-MUB state
    (possible only at q = 2, where the Wigner-positive pure states fill a
    positive fraction of the sphere).
    """
    if field.n != 1:
        raise ValueError("the positivity survey is defined for prime q only")
    q = field.q
    m = MubSet.build(field)
    dw = DiscreteWigner(m)
    rng = np.random.default_rng(seed)
    negative = near_mub = nonneg = 0
    example = None
    flat = m._mats.reshape(-1, q)
    for _ in range(samples):
        v = rng.standard_normal(q) + 1j * rng.standard_normal(q)
        v /= np.linalg.norm(v)
        rho = np.outer(v, v.conj())
        neg = dw.negativity(rho)
        if neg > neg_floor:
            negative += 1
            continue
        overlaps = np.abs(flat.conj() @ v)
        fs = math.sqrt(max(0.0, 2.0 * (1.0 - overlaps.max())))
        if fs < 1e-6:
            near_mub += 1
        else:
            nonneg += 1
            if example is None:
                example = v
    return PositivitySurvey(
        q=q,
        samples=samples,
        negative=negative,
        near_mub=near_mub,
        nonnegative_nonmub=nonneg,
        example=example,
    )


def stabilizer_count(p: int, n: int) -> int:
    """Number of stabilizer states in dimension p^n: p^n prod_i (p^i + 1)."""
    out = p**n
    for i in range(1, n + 1):
        out *= p**i + 1
    return out
