"""The bundled invariant suite: result structure and per-q coverage."""

import pytest

from wigner_codes import run_checks


def test_qubit_suite_passes_and_names_are_stable():
    results = run_checks(2)
    assert all(r.passed for r in results), [r for r in results if not r.passed]
    names = [r.name for r in results]
    assert names == [
        "mub-unbiased",
        "mub-2design",
        "codes",
        "overlap-dictionary",
        "trace-identities",
        "distance-identities",
        "purity",
        "conjugation-orbit",
        "wigner-roundtrip",
        "positivity",
        "polytope",
    ]
    assert all(isinstance(r.detail, str) and r.detail for r in results)


def test_odd_prime_suite_includes_odd_only_checks():
    results = run_checks(3)
    assert all(r.passed for r in results), [r for r in results if not r.passed]
    names = {r.name for r in results}
    assert {"conjugation-law", "parity"} <= names
    purity = next(r for r in results if r.name == "purity")
    assert "59/81" in purity.detail


def test_prime_power_suite_skips_prime_only_checks():
    results = run_checks(4)
    assert all(r.passed for r in results), [r for r in results if not r.passed]
    names = {r.name for r in results}
    assert "positivity" not in names
    assert "parity" not in names
    assert "conjugation-law" not in names
    assert "conjugation-orbit" in names


def test_unsupported_order_raises():
    with pytest.raises(ValueError):
        run_checks(6)


def test_seed_changes_sampling_but_not_outcomes():
    a = run_checks(3, seed=0)
    b = run_checks(3, seed=12345)
    assert [r.name for r in a] == [r.name for r in b]
    assert all(r.passed for r in a) and all(r.passed for r in b)
