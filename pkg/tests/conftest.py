import numpy as np
import pytest

from wigner_codes import Field, MubSet, field_of_order

SUPPORTED_Q = (2, 3, 4, 5, 7, 8, 9)

_FIELDS: dict[int, Field] = {}
_MUBS: dict[int, MubSet] = {}


def get_field(q: int) -> Field:
    if q not in _FIELDS:
        _FIELDS[q] = field_of_order(q)
    return _FIELDS[q]


def get_mub(q: int) -> MubSet:
    if q not in _MUBS:
        _MUBS[q] = MubSet.build(get_field(q))
    return _MUBS[q]


def rand_hermitian(q: int, rng) -> np.ndarray:
    g = rng.standard_normal((q, q)) + 1j * rng.standard_normal((q, q))
    return (g + g.conj().T) / 2


@pytest.fixture(scope="session")
def fields():
    return get_field


@pytest.fixture(scope="session")
def mubs():
    return get_mub
