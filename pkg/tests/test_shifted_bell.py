import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from partstats.exactnum import bell
from partstats.recursions import dim_moments_range, int_moments_range
from partstats.shifted_bell import (
    DomainError,
    FitError,
    FitProfile,
    ShiftedBellPolynomial,
    default_sample_points,
    fit,
    profile_dim,
    profile_generic,
    profile_int,
)


def test_evaluate_simple():
    # n*B_{n-1}: count of singleton blocks aggregated
    r = ShiftedBellPolynomial.from_dict({-1: [0, 1]})
    for n in range(1, 10):
        assert r.evaluate(n) == n * bell(n - 1)


def test_evaluate_domain_error():
    r = ShiftedBellPolynomial.from_dict({-2: [1]})
    with pytest.raises(DomainError):
        r.evaluate(1)


def test_canonical_text_and_serialize():
    r = ShiftedBellPolynomial.from_dict({1: [4, 1], 2: [-2]})
    assert r.canonical_text() == "j=1: 4 + 1*n ; j=2: -2"
    assert r.serialize() == "shift 1: 4 1\nshift 2: -2\n"
    assert r.to_dict() == {
        "shifts": [
            {"shift": 1, "coefficients": ["4", "1"]},
            {"shift": 2, "coefficients": ["-2"]},
        ]
    }


def test_zero_polynomial():
    r = ShiftedBellPolynomial.from_dict({0: [0], 3: []})
    assert r.is_zero()
    assert r.canonical_text() == "0"
    assert r.evaluate(5) == 0


def test_profile_shapes():
    g = profile_generic(2, 1)
    assert g.shifts == (-1, 0, 1, 2)
    assert g.degree_bounds == (2, 2, 1, 0)
    d = profile_dim(2)
    assert d.shifts == (0, 1, 2, 3, 4)
    assert d.degree_bounds == (1, 1, 2, 1, 0)
    i = profile_int(1)
    assert i.shifts == (-1, 0, 1, 2)
    assert i.degree_bounds == (3, 2, 1, 0)


def test_profile_validation():
    with pytest.raises(ValueError):
        FitProfile((0, 0), (1, 1))
    with pytest.raises(ValueError):
        FitProfile((0, 1), (1, -1))
    with pytest.raises(ValueError):
        FitProfile((0,), (1, 1))


def test_default_sample_points_cover_unknowns():
    p = profile_int(2)
    pts = default_sample_points(p)
    assert len(pts) == p.unknowns + 3
    assert pts[0] == max(1, -p.shifts[0])


def test_fit_recovers_known_dim_mean():
    k = 1
    profile = profile_dim(k)
    pts = default_sample_points(profile)
    moments = dim_moments_range(k, max(pts))
    r = fit([(n, moments[n][k]) for n in pts], profile)
    assert r.coefficient(1) == (Fraction(4), Fraction(1))
    assert r.coefficient(2) == (Fraction(-2),)
    assert r.coefficient(0) == ()


def test_fit_recovers_known_int_mean():
    k = 1
    profile = profile_int(k)
    pts = default_sample_points(profile)
    moments = int_moments_range(k, max(pts))
    r = fit([(n, moments[n][k]) for n in pts], profile)
    # fitted mean aggregate must reproduce exact values well past the samples
    extra = int_moments_range(k, max(pts) + 6)
    for n in range(1, max(pts) + 7):
        assert r.evaluate(n) == extra[n][k]


def test_fit_insufficient_points():
    profile = profile_dim(1)
    pts = default_sample_points(profile)[:3]
    moments = dim_moments_range(1, max(pts))
    with pytest.raises(FitError, match="insufficient"):
        fit([(n, moments[n][1]) for n in pts], profile)


def test_fit_wrong_profile_detected():
    # 2^n is not a shifted Bell polynomial with these shifts/degrees
    profile = profile_generic(1, 0)
    pts = default_sample_points(profile)
    with pytest.raises(FitError, match="cannot represent"):
        fit([(n, 2 ** n) for n in pts], profile)


@settings(max_examples=20, deadline=None)
@given(st.integers(min_value=0, max_value=10 ** 6))
def test_fit_roundtrip_random_polynomials(seed):
    rng = random.Random(seed)
    profile = profile_generic(rng.randint(0, 2), rng.randint(0, 2))
    mapping = {}
    for j, b in zip(profile.shifts, profile.degree_bounds):
        mapping[j] = [
            Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(b + 1)
        ]
    truth = ShiftedBellPolynomial.from_dict(mapping)
    pts = default_sample_points(profile)
    fitted = fit([(n, truth.evaluate(n)) for n in pts], profile)
    for n in pts + [max(pts) + 1, max(pts) + 5]:
        assert fitted.evaluate(n) == truth.evaluate(n)
