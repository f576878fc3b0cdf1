"""The q-analog of Kostant's weight multiplicity formula for sl4.

    m_q(lam, mu) = sum over sigma in W of (-1)^len(sigma) P_q(sigma(lam+rho) - (mu+rho))

:func:`mq_direct` evaluates all 24 terms.  :func:`mq_closed` uses the fact
that for dominant lam, mu at most eleven terms can survive; which ones is
decided by the sign pattern of the P/Q/R values, giving fourteen signed
combinations of the terms ``Z1..Z11`` (and 0 when no pattern matches).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, FrozenSet, Optional, Tuple

from .errors import PreconditionViolated
from .qpartition import closed_qpartition
from .qpoly import QPoly
from .weights import FWeight, integral_root_coords
from .weyl import WeylElement, element, all_elements, pqr_values, shifted_root_coords

__all__ = [
    "ZTABLE", "MultCase", "CASES", "mq_direct", "mq_closed", "match_case",
    "multiplicity", "VANISHING_WORDS", "vanished_elements_check",
]

# Z label -> (Weyl element word, P, Q, R)
ZTABLE: Dict[str, Tuple[str, str, str, str]] = {
    "Z1": ("1", "P1", "Q1", "R1"),
    "Z2": ("s1s2s1", "P3", "Q4", "R1"),
    "Z3": ("s3", "P1", "Q1", "R4"),
    "Z4": ("s1s2", "P3", "Q6", "R1"),
    "Z5": ("s2s3", "P1", "Q5", "R4"),
    "Z6": ("s1", "P4", "Q1", "R1"),
    "Z7": ("s2s3s2", "P1", "Q5", "R3"),
    "Z8": ("s2s1", "P4", "Q4", "R1"),
    "Z9": ("s3s1", "P4", "Q1", "R4"),
    "Z10": ("s3s2", "P1", "Q6", "R3"),
    "Z11": ("s2", "P1", "Q6", "R1"),
}


@dataclass(frozen=True)
class MultCase:
    """``combo`` lists (sign, Z label); the guard is
    all of ``in_n`` in N, none of ``not_in_n`` in N, and for each pair in
    ``not_both`` at least one value outside N.
    """
    case_id: int
    combo: Tuple[Tuple[int, str], ...]
    in_n: Tuple[str, ...]
    not_in_n: Tuple[str, ...]
    not_both: Tuple[Tuple[str, str], ...] = ()

    def label(self) -> str:
        out = []
        for sign, z in self.combo:
            if not out:
                out.append(z if sign > 0 else "-" + z)
            else:
                out.append((" + " if sign > 0 else " - ") + z)
        return "".join(out)

    def matches(self, vals: Dict[str, int]) -> bool:
        nat = lambda name: vals[name] >= 0
        return (all(nat(v) for v in self.in_n)
                and not any(nat(v) for v in self.not_in_n)
                and all(not (nat(a) and nat(b)) for a, b in self.not_both))

    def support(self) -> FrozenSet[WeylElement]:
        return frozenset(element(ZTABLE[z][0]) for _, z in self.combo)


def _case(case_id, combo, in_n, not_in_n, not_both=()):
    terms = []
    for tok in combo.split():
        sign = -1 if tok.startswith("-") else 1
        terms.append((sign, tok.lstrip("+-")))
    return MultCase(case_id, tuple(terms), tuple(in_n.split()), tuple(not_in_n.split()),
                    tuple(not_both))


CASES: Tuple[MultCase, ...] = (
    _case(1, "Z1 -Z11 -Z3 +Z5 +Z10 -Z7", "P1 Q1 R1 Q6 R4 Q5 R3", "P4 P3"),
    _case(2, "Z1 -Z6 -Z3 +Z4 +Z8 -Z2", "P1 Q1 R1 P4 Q6 P3 Q4", "R4 R3"),
    _case(3, "Z1 -Z6 -Z11 -Z3 +Z8 +Z9", "P1 Q1 R1 P4 R4 Q6 Q4", "P3 Q5 R3"),
    _case(4, "Z1 -Z6 -Z11 -Z3 +Z9 +Z5", "P1 Q1 R1 P4 Q6 R4 Q5", "P3 Q4 R3"),
    _case(5, "Z1 -Z6 -Z11 -Z3 +Z9", "P1 Q1 R1 P4 Q6 R4", "P3 Q4 Q5 R3"),
    _case(6, "Z1 -Z11 -Z3 +Z5", "P1 Q1 R1 Q6 R4 Q5", "P4 P3 R3"),
    _case(7, "Z1 -Z6 -Z3 +Z9", "P1 Q1 R1 P4 R4", "Q6 Q4 Q5"),
    _case(8, "Z1 -Z6 -Z11 +Z8", "P1 Q1 R1 P4 Q6 Q4", "R4 P3 R3"),
    _case(9, "Z1 -Z11 -Z3", "P1 Q1 R1 Q6 R4", "P4 P3 Q5 R3"),
    _case(10, "Z1 -Z6 -Z11", "P1 Q1 R1 P4 Q6", "R4 P3 Q4 R3"),
    _case(11, "Z1 -Z3", "P1 Q1 R1 R4", "Q6 P4 Q5", [("P3", "Q4")]),
    _case(12, "Z1 -Z11", "P1 Q1 R1 Q6", "P4 R4 R3 P3"),
    _case(13, "Z1 -Z6", "P1 Q1 R1 P4", "Q6 R4 Q4", [("Q5", "R3")]),
    _case(14, "Z1", "P1 Q1 R1", "R4 P4 Q6", [("P3", "Q4"), ("Q5", "R3")]),
)


def _term(sigma: WeylElement, lam: FWeight, mu: FWeight) -> QPoly:
    target = shifted_root_coords(sigma, lam, mu)
    if target is None:
        return QPoly.zero()
    return closed_qpartition(*target)


def mq_direct(lam: FWeight, mu: FWeight) -> QPoly:
    """The full alternating sum over W; any integral weights are accepted."""
    total = QPoly.zero()
    for e in all_elements():
        term = _term(e, lam, mu)
        if term:
            total = total + term * e.sign
    return total


def _check_dominant(lam: FWeight, mu: FWeight):
    if not lam.is_dominant():
        raise PreconditionViolated(f"lambda = {lam} is not dominant")
    if not mu.is_dominant():
        raise PreconditionViolated(f"mu = {mu} is not dominant")


def match_case(lam: FWeight, mu: FWeight) -> Optional[MultCase]:
    """The first case whose guard holds, or None (multiplicity 0)."""
    _check_dominant(lam, mu)
    xyz = integral_root_coords(lam - mu)
    if xyz is None:
        return None
    vals = pqr_values(xyz, mu)
    for case in CASES:
        if case.matches(vals):
            return case
    return None


def mq_closed(lam: FWeight, mu: FWeight, with_case: bool = False):
    """m_q for dominant lam, mu through the case table.

    With ``with_case=True`` returns ``(polynomial, case or None)``.
    """
    case = match_case(lam, mu)
    result = QPoly.zero()
    if case is not None:
        vals = pqr_values(integral_root_coords(lam - mu), mu)
        for sign, z in case.combo:
            _, p, q, r = ZTABLE[z]
            term = closed_qpartition(vals[p], vals[q], vals[r])
            result = result + term * sign
    return (result, case) if with_case else result


def multiplicity(lam: FWeight, mu: FWeight) -> int:
    """Dimension of the mu weight space of the irreducible module L(lam)."""
    return mq_closed(lam, mu).eval_at_one()


VANISHING_WORDS: Tuple[str, ...] = (
    "s2s3s1", "s3s2s1", "s2s3s2s1", "s3s1s2s1", "s2s3s1s2", "s2s3s1s2s1",
    "s1s2s3", "s1s2s3s2", "s1s2s3s1", "s1s2s3s2s1", "s1s2s3s1s2", "s1s2s3s1s2s1",
    "s3s1s2",
)


def vanished_elements_check(lam: FWeight, mu: FWeight) -> FrozenSet[WeylElement]:
    """The 13 elements that never contribute for dominant weights.

    Raises AssertionError with the offending element if one of them does
    contribute at this pair.
    """
    _check_dominant(lam, mu)
    out = []
    for word in VANISHING_WORDS:
        e = element(word)
        term = _term(e, lam, mu)
        if not term.is_zero():
            raise AssertionError(f"{word} contributes {term} at lambda={lam}, mu={mu}")
        out.append(e)
    return frozenset(out)
