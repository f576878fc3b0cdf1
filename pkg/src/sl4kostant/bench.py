"""Timing of the q-partition engines on a cube of inputs."""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from .qpartition import ENGINES

__all__ = ["BenchResult", "run_bench", "EngineMismatch"]


class EngineMismatch(AssertionError):
    """Two engines returned different polynomials for the same input."""


@dataclass
class BenchResult:
    lo: int
    hi: int
    evaluations: int
    mean_seconds: Dict[str, float]

    def speedup(self, slow: str = "sum", fast: str = "closed") -> float:
        return self.mean_seconds[slow] / self.mean_seconds[fast]

    def table(self) -> List[str]:
        out = [f"range {self.lo} <= m,n,k < {self.hi}: {self.evaluations} evaluations per engine",
               f"{'engine':<8} {'mean ms':>10}"]
        for name, secs in self.mean_seconds.items():
            out.append(f"{name:<8} {secs * 1e3:>10.4f}")
        if "sum" in self.mean_seconds and "closed" in self.mean_seconds:
            out.append(f"speedup closed vs sum: {self.speedup():.1f}x")
        return out


def run_bench(lo: int = 60, hi: int = 70, engines: Sequence[str] = ("closed", "sum"),
              repeat: int = 1) -> BenchResult:
    """Mean wall time per evaluation for each engine over ``lo <= m,n,k < hi``.

    Outputs are compared across engines on every triple first; a mismatch
    raises :class:`EngineMismatch` before any timing is reported.
    """
    for name in engines:
        if name not in ENGINES:
            raise ValueError(f"unknown engine {name!r}")
    triples: List[Tuple[int, int, int]] = list(itertools.product(range(lo, hi), repeat=3))
    for t in triples:
        results = [ENGINES[name](*t) for name in engines]
        if any(r != results[0] for r in results[1:]):
            raise EngineMismatch(f"engines disagree at {t}")
    means: Dict[str, float] = {}
    for name in engines:
        fn = ENGINES[name]
        start = time.perf_counter()
        for _ in range(repeat):
            for t in triples:
                fn(*t)
        elapsed = time.perf_counter() - start
        means[name] = elapsed / max(1, repeat * len(triples))
    return BenchResult(lo, hi, len(triples), means)
