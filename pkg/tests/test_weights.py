from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from sl4kostant.errors import NonIntegral
from sl4kostant.weights import (
    RHO, FWeight, RWeight, fweight_to_rweight, integral_root_coords, root_to_fweight,
    rweight_to_fweight,
)

ints = st.integers(min_value=-50, max_value=50)


def test_rho_in_root_coordinates():
    assert fweight_to_rweight(FWeight(1, 1, 1)) == RWeight(Fraction(3, 2), 2, Fraction(3, 2))
    assert RHO.coords == (Fraction(3, 2), 2, Fraction(3, 2))


def test_rho_is_half_sum_of_positive_roots():
    total = [0, 0, 0]
    for root in ((1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (0, 1, 1), (1, 1, 1)):
        total = [a + b for a, b in zip(total, root)]
    assert RHO == RWeight(*(Fraction(t, 2) for t in total))


def test_conversion_examples():
    assert fweight_to_rweight(FWeight(0, 0, 0)) == RWeight(0, 0, 0)
    assert fweight_to_rweight(FWeight(1, 0, 1)) == RWeight(1, 1, 1)
    assert rweight_to_fweight(RWeight(1, 1, 1)) == FWeight(1, 0, 1)
    assert rweight_to_fweight(RWeight(0, 0, 0)) == FWeight(0, 0, 0)
    assert rweight_to_fweight(RWeight(1, 0, 0)) == FWeight(2, -1, 0)


def test_non_integral_inverse_raises():
    with pytest.raises(NonIntegral):
        rweight_to_fweight(RWeight(Fraction(1, 2), 0, 0))
    with pytest.raises(NonIntegral):
        RWeight(Fraction(1, 4), 0, 0).as_ints()


def test_integral_root_coords_examples():
    assert integral_root_coords(FWeight(2, -1, 0)) == (1, 0, 0)
    assert integral_root_coords(FWeight(0, 0, 0)) == (0, 0, 0)
    assert integral_root_coords(FWeight(1, 0, 0)) is None


def test_fweight_rejects_non_integers():
    with pytest.raises(TypeError):
        FWeight(1.5, 0, 0)
    with pytest.raises(TypeError):
        FWeight(True, 0, 0)


def test_dominance():
    assert FWeight(0, 3, 1).is_dominant()
    assert not FWeight(0, -1, 1).is_dominant()


@given(ints, ints, ints)
def test_root_coords_round_trip(x, y, z):
    assert integral_root_coords(root_to_fweight(x, y, z)) == (x, y, z)
    assert rweight_to_fweight(RWeight(x, y, z)) == root_to_fweight(x, y, z)


@given(ints, ints, ints)
def test_integrality_matches_divisibility(m, n, k):
    w = FWeight(m, n, k)
    divisible = (3 * m + 2 * n + k) % 4 == 0 and (m + 2 * n + k) % 2 == 0 \
        and (m + 2 * n + 3 * k) % 4 == 0
    assert (integral_root_coords(w) is not None) == divisible
    assert (integral_root_coords(w) is not None) == fweight_to_rweight(w).is_integral()


@given(ints, ints, ints)
def test_fundamental_round_trip(m, n, k):
    w = FWeight(m, n, k)
    assert rweight_to_fweight(fweight_to_rweight(w)) == w


@given(ints, ints, ints, ints, ints, ints, st.integers(-5, 5), st.integers(-5, 5))
def test_conversion_is_linear(m1, n1, k1, m2, n2, k2, a, b):
    u, v = FWeight(m1, n1, k1), FWeight(m2, n2, k2)
    lhs = fweight_to_rweight(a * u + b * v)
    rhs = a * fweight_to_rweight(u) + b * fweight_to_rweight(v)
    assert lhs == rhs
