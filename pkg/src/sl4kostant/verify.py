"""Self-check suites run by ``sl4kostant verify``."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional

from .alternation import (
    LatticeWindow, default_mu_set, enumerate_distinct_altsets, load_catalogue,
)
from .qmult import mq_closed, mq_direct
from .qpartition import (
    closed_partition_count, closed_qpartition, colored_partitions, oracle_triple_sum,
    oracle_vector_partitions,
)
from .weights import FWeight, integral_root_coords

__all__ = ["SuiteResult", "verify_partition", "verify_altsets", "verify_mult", "SUITES"]

EXPECTED_DISTINCT = 195
EXPECTED_MAX_CARD = 6


@dataclass
class SuiteResult:
    name: str
    ok: bool
    summary: str
    counterexample: Optional[str] = None

    def lines(self) -> List[str]:
        out = [f"{self.name}: {self.summary}"]
        if self.counterexample:
            out.append(f"  first counterexample: {self.counterexample}")
        return out


def verify_partition(max_coord: Optional[int] = None, workers: Optional[int] = None) -> SuiteResult:
    """Closed formulas against both oracles, the bijection, mirror and q = 1."""
    top = 12 if max_coord is None else max_coord
    checked = 0
    for m, n, k in itertools.product(range(top + 1), repeat=3):
        closed = closed_qpartition(m, n, k)
        if closed != oracle_triple_sum(m, n, k) or closed != oracle_vector_partitions(m, n, k):
            return SuiteResult("partition", False, f"{checked} triples agreed before a mismatch",
                               f"({m},{n},{k}): closed gives {closed}")
        if closed != closed_qpartition(k, n, m):
            return SuiteResult("partition", False, "mirror symmetry failed", f"({m},{n},{k})")
        if closed.eval_at_one() != closed_partition_count(m, n, k):
            return SuiteResult("partition", False, "count formula mismatch", f"({m},{n},{k})")
        if max(m, n, k) <= 10:
            total = m + n + k
            for t in range(total + 1):
                if colored_partitions(t, m, n, k) != closed.coefficient(total - t):
                    return SuiteResult("partition", False, "colored partition mismatch",
                                       f"({m},{n},{k}), t={t}")
        checked += 1
    return SuiteResult("partition", True, f"{checked}/{checked} triples agree")


def verify_altsets(max_coord: Optional[int] = None, workers: Optional[int] = None) -> SuiteResult:
    """The distinct-set count over the standard window; max_coord bounds mu."""
    cmax = 4 if max_coord is None else max_coord
    win = LatticeWindow.cube(-20, 20, default_mu_set(cmax))
    reg = enumerate_distinct_altsets(win, workers=workers)
    catalogue = {s.mask for s in load_catalogue()}
    outside = [s for s in reg.sets if s.mask and s.mask not in catalogue]
    found = len(reg)
    summary = (f"{found}/{EXPECTED_DISTINCT} distinct sets found (expected {EXPECTED_DISTINCT}), "
               f"max cardinality {reg.max_cardinality()}")
    if outside:
        return SuiteResult("altsets", False, summary, f"set {outside[0]} is not catalogued")
    ok = found == EXPECTED_DISTINCT and reg.max_cardinality() == EXPECTED_MAX_CARD
    return SuiteResult("altsets", ok, summary)


def verify_mult(max_coord: Optional[int] = None, workers: Optional[int] = None) -> SuiteResult:
    """Case table against the alternating sum on all dominant pairs."""
    top = 4 if max_coord is None else max_coord
    checked = 0
    coords = list(itertools.product(range(top + 1), repeat=3))
    for lc in coords:
        lam = FWeight(*lc)
        for mc in coords:
            mu = FWeight(*mc)
            if integral_root_coords(lam - mu) is None:
                continue
            closed, case = mq_closed(lam, mu, with_case=True)
            direct = mq_direct(lam, mu)
            if closed != direct:
                label = case.label() if case else "none"
                return SuiteResult("mult", False, f"{checked} pairs agreed before a mismatch",
                                   f"lambda={lam}, mu={mu}: case {label} gives {closed}, "
                                   f"direct sum gives {direct}")
            checked += 1
    return SuiteResult("mult", True, f"{checked}/{checked} dominant pairs agree")


SUITES: Dict[str, Callable[..., SuiteResult]] = {
    "partition": verify_partition,
    "altsets": verify_altsets,
    "mult": verify_mult,
}
