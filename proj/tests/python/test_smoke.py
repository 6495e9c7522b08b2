"""Smoke tests for the gausssum extension module."""

import cmath
import json
import math

import pytest

gs = pytest.importorskip("gausssum")


def test_exact_value_algebra():
    i = gs.ExactValue.root8(1, octant=2)
    one_plus_i = gs.ExactValue.root8(1, radicand=2, octant=1)
    assert i * i == gs.ExactValue.root8(1, octant=4)
    assert (one_plus_i * one_plus_i.conj()) == gs.ExactValue.integer(2)
    assert complex(one_plus_i) == pytest.approx(1 + 1j)
    z, err = one_plus_i.to_complex()
    assert abs(z - (1 + 1j)) <= err


def test_exact_value_json_roundtrip():
    v = gs.ExactValue.root8(3, 2, radicand=5, octant=6)
    text = v.to_json()
    parsed = json.loads(text)
    assert parsed["kind"] == "root8"
    assert parsed["coeff"] == "3/2"
    assert gs.ExactValue.from_json(text) == v
    assert json.loads(gs.ExactValue.zero().to_json()) == {"kind": "zero"}


def test_phi_exact_known_values():
    assert gs.phi_exact(15, 2) == gs.ExactValue.root8(1, octant=2)  # i
    assert gs.phi_exact(5, 2) == gs.ExactValue.integer(1)
    assert gs.phi_exact(6, 2).is_zero
    assert complex(gs.phi_exact(4, 2)) == pytest.approx(1 + 1j)


def test_phi_exact_rejects_odd_numerator():
    with pytest.raises(ValueError):
        gs.phi_exact(7, 3)
    with pytest.raises(ValueError):
        gs.phi_exact(0, 2)


def test_phi_numeric_matches_definition():
    a, b = 12, 5
    z, err = gs.phi_numeric(a, b)
    expected = sum(cmath.exp(1j * math.pi * n * n * b / a) for n in range(a))
    expected /= math.sqrt(a)
    assert abs(z - expected) < 1e-9
    assert err < 1e-9


def test_exact_matches_numeric_on_a_grid():
    for a in range(1, 40):
        for b in range(-10, 12, 2):
            z, err = gs.phi_numeric(a, b)
            w, werr = gs.phi_exact(a, b).to_complex()
            assert abs(z - w) <= err + werr


def test_trace_replay():
    value, steps = gs.phi_exact_with_trace(90, 4)
    assert steps, "expected a nonempty derivation"
    product = gs.ExactValue.integer(1)
    for step in steps:
        product = product * step["factor"]
    assert product == value


def test_bound_error_maps_to_python():
    with pytest.raises(gs.BoundError):
        gs.phi_numeric(10**7, 2, bound=10**6)


def test_modular_helpers():
    assert gs.factorize(9999) == [(3, 2), (11, 1), (101, 1)]
    assert gs.legendre(2, 5) == -1
    assert gs.is_prime(101)
    assert gs.count_sqrt_closed(1, 2, 3) == 4
    assert gs.count_sqrt_brute(1, 8) == 4
    assert gs.sylvester_count(3, 5) == gs.sylvester_brute(3, 5) == 4


def test_counting_agreement_small_prime_powers():
    for p, j in [(2, 5), (3, 3), (5, 2), (7, 1)]:
        m = p**j
        for t in range(m):
            assert gs.count_sqrt_closed(t, p, j) == gs.count_sqrt_brute(t, m)


def test_reflection_product():
    assert gs.reflection_product(7, 3, 2) == gs.ExactValue.integer(1)
    assert gs.reflection_product(2, 5, 3) == gs.ExactValue.integer(2)


def test_verify_ls_grid():
    for a in range(1, 13):
        for b in range(1, 13):
            report = gs.verify_ls(a, b)
            assert report["pass"], report


def test_fourier_check():
    report = gs.fourier_check(2, 3, 1)
    assert report["pass"]
    assert report["lhs"] == pytest.approx(1 + 1j, abs=1e-9)


def test_induction_check():
    assert gs.induction_check(1, 1, 3, 1)["pass"]
    assert gs.induction_check(5, 1, 2, 2)["pass"]
    with pytest.raises(ValueError):
        gs.induction_check(10, 3, 2, 1)


def test_phi_assuming_ls():
    # odd numerator over an even modulus, against direct summation
    z, err = gs.phi_numeric(10, 3)
    w, werr = gs.phi_assuming_ls(10, 3).to_complex()
    assert abs(z - w) <= err + werr
