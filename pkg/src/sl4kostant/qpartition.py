"""The q-analog of Kostant's partition function for sl4.

``qpartition(m, n, k)`` is the polynomial whose coefficient of ``q^i`` counts
the ways of writing ``m*alpha1 + n*alpha2 + k*alpha3`` as a sum of exactly
``i`` positive roots.  Three independent engines are provided:

* :func:`oracle_triple_sum` -- the known triple-sum formula,
* :func:`oracle_vector_partitions` -- direct enumeration of 6-tuples of root
  multiplicities,
* :func:`closed_qpartition` -- constant-time-per-coefficient closed formulas,
  one for each of five orderings of ``(m, n, k)``.

The closed formulas count restricted ``{1r, 1b, 2}``-colored partitions of
``t = m + n + k - i`` (see :func:`colored_partitions`).  Negative coordinates
are in-domain everywhere and give the zero polynomial.
"""

from __future__ import annotations

import operator
from typing import Callable, Dict, List, Optional

from .errors import NegativeInput, PreconditionViolated
from .qpoly import QPoly

__all__ = [
    "oracle_triple_sum", "oracle_vector_partitions", "colored_partitions",
    "closed_qpartition", "closed_coefficient", "applicable_parts", "mirror",
    "closed_partition_count", "applicable_count_cases", "kostant_count",
    "lowest_exponent", "ENGINES",
]


def _ints(m, n, k):
    return operator.index(m), operator.index(n), operator.index(k)


# --- oracles ---------------------------------------------------------------

def oracle_triple_sum(m: int, n: int, k: int) -> QPoly:
    m, n, k = _ints(m, n, k)
    if min(m, n, k) < 0:
        return QPoly.zero()
    total = m + n + k
    coeffs = [0] * (total + 1)
    for f in range(min(m, n, k) + 1):
        for d in range(min(m - f, n - f) + 1):
            for e in range(min(n - d - f, k - f) + 1):
                coeffs[total - 2 * f - d - e] += 1
    return QPoly.from_dense(coeffs)


def oracle_vector_partitions(m: int, n: int, k: int) -> QPoly:
    """Enumerate (a, b, c, d, e, f) with
    ``a + d + f = m``, ``b + d + e + f = n``, ``c + e + f = k``
    where d, e, f count alpha1+alpha2, alpha2+alpha3 and alpha1+alpha2+alpha3.
    """
    m, n, k = _ints(m, n, k)
    if min(m, n, k) < 0:
        return QPoly.zero()
    counts: Dict[int, int] = {}
    for d in range(min(m, n) + 1):
        for e in range(min(n, k) + 1):
            for f in range(min(m, n, k) + 1):
                a = m - d - f
                b = n - d - e - f
                c = k - e - f
                if a < 0 or b < 0 or c < 0:
                    continue
                parts = a + b + c + d + e + f
                counts[parts] = counts.get(parts, 0) + 1
    return QPoly(counts)


def colored_partitions(t: int, m: Optional[int] = None, n: Optional[int] = None,
                       k: Optional[int] = None) -> int:
    """Count ``d*1r + e*1b + f*2 = t`` with ``d+f <= m``, ``d+e+f <= n``, ``e+f <= k``.

    A bound left as ``None`` is not imposed.
    """
    if t < 0:
        return 0
    count = 0
    for f in range(t // 2 + 1):
        for d in range(t - 2 * f + 1):
            e = t - 2 * f - d
            if m is not None and d + f > m:
                continue
            if n is not None and d + e + f > n:
                continue
            if k is not None and e + f > k:
                continue
            count += 1
    return count


# --- closed formulas -------------------------------------------------------

def _part1(m, n, k, t):
    # m, k >= n
    L = min(t // 2, n - (t - t // 2))
    if L < 0:
        return 0
    return (L + 1) * (L + t % 2 + 1)


def _part2_like(small, n, t):
    # m >= n >= k with small = k, or k >= n >= m with small = m
    F2 = min(t // 2, small)
    F1 = max(t - n, 0)
    L = F2 - F1
    if L < 0:
        return 0
    par = t % 2
    J = small - F2 - par
    if J < 0:
        return (L + 1) * (2 * small - 2 * F2 + L + 2) // 2
    if J <= L:
        return (((L + 1) * (L + 2) - F2 * (F2 + 1) - small * (small - 1)) // 2
                + F2 * small + small * L - F2 * L + (small - F2) * par)
    return (L + 1) * (L + par + 1)


def _part4_like(mid, n, small, t):
    # n >= m >= k with (mid, small) = (m, k), or n >= k >= m with (k, m)
    F1 = max(0, t - min(mid + small, n))
    F2 = min(t // 2, small)
    if F2 < F1:
        return 0
    u = t - mid
    if u < 0:
        S1 = (t - F2) * (F2 + 1)
    elif u <= F2:
        S1 = (u * (u + 1) + F1 * (F1 - 1) - 2 * F2 * (F2 + 1)
              + 2 * mid * (u - F1 + 1) + 2 * t * (F2 - u)) // 2
    else:
        raise RuntimeError(f"unreachable: t - m > F2 at (t={t}, m={mid}, F2={F2})")
    v = t - small
    if v < 0:
        S2 = 0
    elif v <= F2:
        S2 = v * (v - F1 + 1) - (v * (v + 1) - F1 * (F1 - 1)) // 2
    else:
        S2 = v * (F2 - F1 + 1) - (F2 * (F2 + 1) - F1 * (F1 - 1)) // 2
    return S1 - S2 + F2 - F1 + 1


_PARTS: Dict[int, tuple] = {
    # part: (applicability test, lowest exponent, coefficient of t)
    1: (lambda m, n, k: m >= n and k >= n,
        lambda m, n, k: m + k - n,
        _part1),
    2: (lambda m, n, k: m >= n >= k,
        lambda m, n, k: m,
        lambda m, n, k, t: _part2_like(k, n, t)),
    3: (lambda m, n, k: k >= n >= m,
        lambda m, n, k: k,
        lambda m, n, k, t: _part2_like(m, n, t)),
    4: (lambda m, n, k: n >= m >= k,
        lambda m, n, k: n,
        lambda m, n, k, t: _part4_like(m, n, k, t)),
    5: (lambda m, n, k: n >= k >= m,
        lambda m, n, k: n,
        lambda m, n, k, t: _part4_like(k, n, m, t)),
}


def applicable_parts(m: int, n: int, k: int) -> List[int]:
    """Closed-formula cases whose ordering hypothesis holds for (m, n, k)."""
    m, n, k = _ints(m, n, k)
    if min(m, n, k) < 0:
        return []
    return [p for p, (ok, _, _) in _PARTS.items() if ok(m, n, k)]


def lowest_exponent(m: int, n: int, k: int, part: Optional[int] = None) -> int:
    """Lower end of the summation range of the selected case."""
    parts = applicable_parts(m, n, k)
    if not parts:
        raise PreconditionViolated(f"no closed case for ({m},{n},{k})")
    return _PARTS[part or parts[0]][1](m, n, k)


def closed_coefficient(m: int, n: int, k: int, i: int, part: Optional[int] = None) -> int:
    """Coefficient of ``q^i`` in ``qpartition(m, n, k)`` from the closed formulas."""
    m, n, k = _ints(m, n, k)
    parts = applicable_parts(m, n, k)
    if not parts:
        return 0
    if part is None:
        part = parts[0]
    elif part not in parts:
        raise PreconditionViolated(f"case {part} does not apply to ({m},{n},{k})")
    _, low, coeff = _PARTS[part]
    if i < low(m, n, k) or i > m + n + k:
        return 0
    return coeff(m, n, k, m + n + k - i)


def closed_qpartition(m: int, n: int, k: int, part: Optional[int] = None) -> QPoly:
    """``qpartition(m, n, k)`` via the five-case closed formulas.

    With ``part=None`` the first applicable case is used; boundary inputs
    (e.g. ``m == n == k``) satisfy several orderings and every applicable
    case gives the same result.
    """
    m, n, k = _ints(m, n, k)
    parts = applicable_parts(m, n, k)
    if not parts:
        return QPoly.zero()
    if part is None:
        part = parts[0]
    elif part not in parts:
        raise PreconditionViolated(f"case {part} does not apply to ({m},{n},{k})")
    _, low, coeff = _PARTS[part]
    lo = low(m, n, k)
    total = m + n + k
    return QPoly.from_dense((coeff(m, n, k, total - i) for i in range(lo, total + 1)), lo)


def mirror(m: int, n: int, k: int):
    """Swap the alpha1 and alpha3 coordinates; qpartition is invariant."""
    return (k, n, m)


# --- q = 1 -----------------------------------------------------------------

def _count6(m, n, k):
    return (-2 * k ** 3 - (m - n) ** 2 * (3 + m - n) + 3 * k ** 2 * (n - 1)
            + 2 * (3 + 2 * m + n)
            + k * (5 - 3 * m ** 2 - 3 * (n - 2) * n + m * (3 + 6 * n))) // 6


_COUNT_CASES: Dict[int, tuple] = {
    1: (lambda m, n, k: m >= n and k >= n,
        lambda m, n, k: (n + 1) * (n + 2) * (n + 3) // 6),
    2: (lambda m, n, k: m >= n >= k,
        lambda m, n, k: (k + 1) * (k + 2) * (k + 3 * (n - k) + 3) // 6),
    3: (lambda m, n, k: k >= n >= m,
        lambda m, n, k: (m + 1) * (m + 2) * (m + 3 * (n - m) + 3) // 6),
    4: (lambda m, n, k: n >= m >= k and n >= m + k,
        lambda m, n, k: (k + 1) * (k + 2) * (3 * m - k + 3) // 6),
    5: (lambda m, n, k: n >= k >= m and n >= m + k,
        lambda m, n, k: (m + 1) * (m + 2) * (3 * k - m + 3) // 6),
    6: (lambda m, n, k: n >= m >= k and m + k >= n,
        _count6),
    7: (lambda m, n, k: n >= k >= m and m + k >= n,
        lambda m, n, k: _count6(k, n, m)),
}


def applicable_count_cases(m: int, n: int, k: int) -> List[int]:
    m, n, k = _ints(m, n, k)
    return [c for c, (ok, _) in _COUNT_CASES.items() if ok(m, n, k)]


def closed_partition_count(m: int, n: int, k: int, case: Optional[int] = None) -> int:
    """Kostant's partition function via the seven-case polynomial formulas."""
    m, n, k = _ints(m, n, k)
    if min(m, n, k) < 0:
        raise NegativeInput(f"negative coordinate in ({m},{n},{k})")
    cases = applicable_count_cases(m, n, k)
    if case is None:
        case = cases[0]
    elif case not in cases:
        raise PreconditionViolated(f"case {case} does not apply to ({m},{n},{k})")
    return _COUNT_CASES[case][1](m, n, k)


def kostant_count(m: int, n: int, k: int) -> int:
    """Like :func:`closed_partition_count` but 0 on negative coordinates."""
    if min(m, n, k) < 0:
        return 0
    return closed_partition_count(m, n, k)


ENGINES: Dict[str, Callable[[int, int, int], QPoly]] = {
    "closed": closed_qpartition,
    "sum": oracle_triple_sum,
    "enum": oracle_vector_partitions,
}
