import itertools
import random

import pytest

from sl4kostant.alternation import altset
from sl4kostant.errors import PreconditionViolated
from sl4kostant.qmult import (
    CASES, VANISHING_WORDS, ZTABLE, match_case, mq_closed, mq_direct, multiplicity,
    vanished_elements_check,
)
from sl4kostant.qpoly import QPoly
from sl4kostant.weights import FWeight, integral_root_coords
from sl4kostant.weyl import PQR_ROWS, act_on_fweight, all_elements, element, pqr_values

ZERO = FWeight(0, 0, 0)


def _dominant(top):
    return [FWeight(*c) for c in itertools.product(range(top + 1), repeat=3)]


def test_ztable_matches_action_rows():
    for label, (word, p, q, r) in ZTABLE.items():
        assert PQR_ROWS[word] == (p, q, r), label


def test_case_table_shape():
    assert [c.case_id for c in CASES] == list(range(1, 15))
    assert CASES[0].label() == "Z1 - Z11 - Z3 + Z5 + Z10 - Z7"
    assert CASES[10].label() == "Z1 - Z3"
    assert CASES[-1].label() == "Z1"


def test_examples():
    assert mq_direct(FWeight(1, 0, 1), ZERO) == QPoly({1: 1, 2: 1, 3: 1})
    assert mq_closed(FWeight(1, 0, 1), ZERO) == QPoly({1: 1, 2: 1, 3: 1})
    assert mq_direct(ZERO, ZERO) == QPoly.one()
    target = QPoly({2: 1, 3: 3, 4: 2, 5: 1})
    assert mq_direct(FWeight(1, 2, 3), FWeight(1, 1, 1)) == target
    assert mq_closed(FWeight(1, 2, 3), FWeight(1, 1, 1)) == target
    poly, case = mq_closed(FWeight(1, 3, 0), FWeight(1, 1, 0), with_case=True)
    assert poly == QPoly({2: 1, 3: 1, 4: 1}) and case.label() == "Z1 - Z3"
    assert mq_closed(FWeight(1, 0, 0), FWeight(0, 1, 0)) == QPoly.zero()


def test_multiplicities():
    assert multiplicity(FWeight(1, 0, 1), ZERO) == 3
    assert multiplicity(FWeight(1, 2, 3), FWeight(1, 1, 1)) == 7
    assert multiplicity(ZERO, ZERO) == 1


def test_highest_weight_has_multiplicity_one():
    for lam in _dominant(5):
        assert mq_closed(lam, lam) == QPoly.one()


def test_dominance_is_enforced():
    with pytest.raises(PreconditionViolated):
        mq_closed(FWeight(-1, 0, 0), ZERO)
    with pytest.raises(PreconditionViolated):
        mq_closed(ZERO, FWeight(0, -1, 0))
    # the direct sum has no such restriction
    mq_direct(FWeight(-1, 0, 0), ZERO)


def test_closed_equals_direct_and_case_support_is_the_alternation_set():
    for lam in _dominant(4):
        for mu in _dominant(4):
            if integral_root_coords(lam - mu) is None:
                assert mq_closed(lam, mu) == QPoly.zero()
                continue
            poly, case = mq_closed(lam, mu, with_case=True)
            assert poly == mq_direct(lam, mu), (lam, mu)
            support = case.support() if case else frozenset()
            assert support == frozenset(altset(lam, mu).elements()), (lam, mu)
            assert all(c >= 0 for _, c in poly), (lam, mu)


def test_guards_are_mutually_exclusive():
    for lam in _dominant(5):
        for mu in _dominant(3):
            xyz = integral_root_coords(lam - mu)
            if xyz is None:
                continue
            vals = pqr_values(xyz, mu)
            assert sum(c.matches(vals) for c in CASES) <= 1, (lam, mu)


def _orbit_size(mu):
    return len({act_on_fweight(e, mu) for e in all_elements()})


def _weyl_dimension(m, n, k):
    return (m + 1) * (n + 1) * (k + 1) * (m + n + 2) * (n + k + 2) * (m + n + k + 3) // 12


@pytest.mark.parametrize("lam", _dominant(3), ids=str)
def test_weight_multiplicities_add_up_to_dimension(lam):
    # a dominant weight of L(lam) has coordinate sum at most that of lam
    total = 0
    for mu in _dominant(sum(lam.coords)):
        if sum(mu.coords) > sum(lam.coords):
            continue
        total += multiplicity(lam, mu) * _orbit_size(mu)
    assert total == _weyl_dimension(*lam.coords)


def test_vanishing_elements():
    rng = random.Random(5)
    assert len(VANISHING_WORDS) == 13
    for _ in range(100):
        lam = FWeight(*(rng.randint(0, 9) for _ in range(3)))
        mu = FWeight(*(rng.randint(0, 9) for _ in range(3)))
        found = vanished_elements_check(lam, mu)
        assert element("s1s2s3s1s2s1") in found and element("s3s1s2") in found
        assert len(found) == 13
    with pytest.raises(PreconditionViolated):
        vanished_elements_check(FWeight(0, -1, 0), ZERO)
