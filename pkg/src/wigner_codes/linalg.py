"""Dense complex linear algebra helpers at dimensions q and q**2."""

from __future__ import annotations

import math

import numpy as np

__all__ = [
    "DEFAULT_TOL",
    "hs_inner",
    "kron",
    "partial_trace_first",
    "max_entangled",
    "random_pure_state",
    "hermiticity_defect",
    "is_hermitian",
    "matrix_to_json",
    "matrix_from_json",
    "vector_to_json",
    "vector_from_json",
    "state_from_json",
]

DEFAULT_TOL = 1e-9


def _square(m) -> np.ndarray:
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    return m


def hs_inner(a, b) -> complex:
    """Hilbert-Schmidt inner product Tr(a^dagger b)."""
    a, b = _square(a), _square(b)
    if a.shape != b.shape:
        raise ValueError(f"dimension mismatch: {a.shape} vs {b.shape}")
    return complex(np.vdot(a, b))


def kron(a, b) -> np.ndarray:
    """Kronecker product."""
    return np.kron(np.asarray(a, dtype=complex), np.asarray(b, dtype=complex))


def partial_trace_first(m) -> np.ndarray:
    """Trace out the first tensor factor of a (d*d) x (d*d) matrix."""
    m = _square(m)
    d = math.isqrt(m.shape[0])
    if d * d != m.shape[0]:
        raise ValueError(f"dimension {m.shape[0]} is not a perfect square")
    return np.einsum("ikil->kl", m.reshape(d, d, d, d))


def max_entangled(q: int) -> np.ndarray:
    """The vector sum_k |kk> / sqrt(q) in C^(q*q)."""
    if q < 1:
        raise ValueError("dimension must be positive")
    v = np.zeros(q * q, dtype=complex)
    v[:: q + 1] = 1.0 / math.sqrt(q)
    return v


def random_pure_state(q: int, seed=None) -> np.ndarray:
    """A Haar-random unit vector in C^q (deterministic for a fixed seed)."""
    rng = np.random.default_rng(seed)
    v = rng.standard_normal(q) + 1j * rng.standard_normal(q)
    return v / np.linalg.norm(v)


def hermiticity_defect(m) -> float:
    """Largest entrywise deviation of m from its own conjugate transpose."""
    m = _square(m)
    return float(np.abs(m - m.conj().T).max()) if m.size else 0.0


def is_hermitian(m, tol: float = DEFAULT_TOL) -> bool:
    return hermiticity_defect(m) <= tol


# -- JSON formats ------------------------------------------------------------
#
# matrix: {"dim": d, "entries": [[[re, im], ...] per row]}
# vector: {"dim": d, "entries": [[re, im], ...]}


def matrix_to_json(m) -> dict:
    m = _square(m)
    return {
        "dim": m.shape[0],
        "entries": [[[float(z.real), float(z.imag)] for z in row] for row in m],
    }


def matrix_from_json(obj: dict) -> np.ndarray:
    d = int(obj["dim"])
    entries = obj["entries"]
    if len(entries) != d or any(len(row) != d for row in entries):
        raise ValueError(f"matrix entries do not form a {d}x{d} grid")
    m = np.empty((d, d), dtype=complex)
    for i, row in enumerate(entries):
        for j, (re, im) in enumerate(row):
            m[i, j] = complex(re, im)
    return m


def vector_to_json(v) -> dict:
    v = np.asarray(v, dtype=complex)
    if v.ndim != 1:
        raise ValueError(f"expected a vector, got shape {v.shape}")
    return {"dim": v.shape[0], "entries": [[float(z.real), float(z.imag)] for z in v]}


def vector_from_json(obj: dict) -> np.ndarray:
    d = int(obj["dim"])
    entries = obj["entries"]
    if len(entries) != d:
        raise ValueError(f"vector entries do not have length {d}")
    return np.array([complex(re, im) for re, im in entries], dtype=complex)


def state_from_json(obj: dict) -> np.ndarray:
    """Read a density matrix; a vector is promoted to its pure-state projector."""
    if not isinstance(obj, dict) or "dim" not in obj or "entries" not in obj:
        raise ValueError('state JSON needs "dim" and "entries" keys')
    entries = obj["entries"]
    if entries and isinstance(entries[0], list) and entries[0] and isinstance(entries[0][0], list):
        return matrix_from_json(obj)
    v = vector_from_json(obj)
    norm = np.linalg.norm(v)
    if norm == 0:
        raise ValueError("state vector is zero")
    v = v / norm
    return np.outer(v, v.conj())
