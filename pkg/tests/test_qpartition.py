import itertools

import pytest
from hypothesis import given, settings, strategies as st

from sl4kostant.errors import NegativeInput, PreconditionViolated
from sl4kostant.qpartition import (
    applicable_count_cases, applicable_parts, closed_coefficient, closed_partition_count,
    closed_qpartition, colored_partitions, kostant_count, lowest_exponent, mirror,
    oracle_triple_sum, oracle_vector_partitions,
)
from sl4kostant.qpoly import QPoly

P = lambda **kw: QPoly({int(k[1:]): v for k, v in kw.items()})
small = st.integers(0, 9)


@pytest.mark.parametrize("engine", [oracle_triple_sum, oracle_vector_partitions, closed_qpartition])
def test_engine_examples(engine):
    assert engine(0, 0, 0) == QPoly.one()
    assert engine(1, 2, 2) == P(e2=1, e3=3, e4=2, e5=1)
    assert engine(1, 2, 0) == P(e2=1, e3=1)
    assert engine(1, 0, 1) == P(e2=1)
    assert engine(1, 1, 1) == P(e1=1, e2=2, e3=1)
    assert engine(-1, 0, 0) == QPoly.zero()
    assert engine(3, -2, 5) == QPoly.zero()


def test_frozen_reference_polynomials():
    # values computed once with the two enumeration oracles
    assert oracle_triple_sum(2, 2, 2) == P(e2=1, e3=2, e4=4, e5=2, e6=1)
    assert oracle_triple_sum(3, 1, 2) == P(e4=1, e5=2, e6=1)
    assert oracle_triple_sum(0, 4, 0) == P(e4=1)


def test_colored_partition_examples():
    assert colored_partitions(4) == 9
    assert colored_partitions(0, 0, 0, 0) == 1
    assert colored_partitions(2, 1, 2, 2) == 3
    assert colored_partitions(-1) == 0


def test_count_examples():
    assert closed_partition_count(5, 2, 7) == 10
    assert closed_partition_count(0, 0, 0) == 1
    assert closed_partition_count(1, 2, 2) == 7
    assert kostant_count(-1, 3, 3) == 0
    with pytest.raises(NegativeInput):
        closed_partition_count(1, -1, 0)


def test_mirror():
    assert mirror(1, 2, 3) == (3, 2, 1)
    assert mirror(2, 2, 2) == (2, 2, 2)
    assert closed_qpartition(1, 2, 3) == closed_qpartition(3, 2, 1)


def test_part_selection():
    assert applicable_parts(1, 1, 1) == [1, 2, 3, 4, 5]
    assert applicable_parts(5, 2, 1) == [2]
    assert applicable_parts(1, 4, 2) == [5]
    with pytest.raises(PreconditionViolated):
        closed_qpartition(5, 2, 1, part=4)
    with pytest.raises(PreconditionViolated):
        closed_partition_count(5, 2, 1, case=1)


def test_integer_inputs_only():
    with pytest.raises(TypeError):
        closed_qpartition(1.0, 2, 2)


def test_oracles_and_every_applicable_part_agree():
    for m, n, k in itertools.product(range(9), repeat=3):
        ref = oracle_triple_sum(m, n, k)
        assert oracle_vector_partitions(m, n, k) == ref, (m, n, k)
        for part in applicable_parts(m, n, k):
            assert closed_qpartition(m, n, k, part=part) == ref, (m, n, k, part)


def test_count_cases_agree_including_overlaps():
    overlaps = set()
    for m, n, k in itertools.product(range(13), repeat=3):
        value = oracle_triple_sum(m, n, k).eval_at_one()
        cases = applicable_count_cases(m, n, k)
        if {4, 6} <= set(cases) or {5, 7} <= set(cases):
            overlaps.add((m, n, k))
        for case in cases:
            assert closed_partition_count(m, n, k, case=case) == value, (m, n, k, case)
    assert overlaps


def test_support_matches_summation_range():
    for m, n, k in itertools.product(range(9), repeat=3):
        poly = closed_qpartition(m, n, k)
        assert poly.degree() == m + n + k
        assert poly.low_degree() == max(lowest_exponent(m, n, k, p) for p in applicable_parts(m, n, k))
        assert all(c > 0 for _, c in poly)


def test_coefficients_outside_range_are_zero():
    assert closed_coefficient(2, 3, 4, 0) == 0
    assert closed_coefficient(2, 3, 4, 10) == 0
    assert closed_coefficient(2, 3, 4, 9) == 1


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 40), st.integers(0, 40), st.integers(0, 40))
def test_closed_matches_triple_sum_on_larger_inputs(m, n, k):
    assert closed_qpartition(m, n, k) == oracle_triple_sum(m, n, k)


@given(small, small, small)
def test_bijection_with_colored_partitions(m, n, k):
    poly = oracle_vector_partitions(m, n, k)
    total = m + n + k
    for t in range(total + 1):
        assert colored_partitions(t, m, n, k) == poly.coefficient(total - t)


@given(small, small, small)
def test_first_count_case(m, n, k):
    if m >= n and k >= n:
        assert kostant_count(m, n, k) == (n + 1) * (n + 2) * (n + 3) // 6
