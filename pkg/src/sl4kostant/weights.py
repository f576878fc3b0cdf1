"""Integral weights of sl4 in the fundamental-weight and simple-root bases.

A weight ``m*w1 + n*w2 + k*w3`` is an :class:`FWeight`; the same weight
written as ``a1*alpha1 + a2*alpha2 + a3*alpha3`` is an :class:`RWeight`.
Conversion goes through

    w1 = (3 alpha1 + 2 alpha2 + alpha3) / 4
    w2 = (alpha1 + 2 alpha2 + alpha3) / 2
    w3 = (alpha1 + 2 alpha2 + 3 alpha3) / 4

so root coordinates are quarter-integers in general.  Everything is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from .errors import NonIntegral

__all__ = [
    "FWeight", "RWeight", "RHO", "RHO_F",
    "fweight_to_rweight", "rweight_to_fweight", "integral_root_coords",
    "root_to_fweight",
]


@dataclass(frozen=True)
class FWeight:
    """Coefficients of the fundamental weights w1, w2, w3."""
    m: int
    n: int
    k: int

    def __post_init__(self):
        for name in ("m", "n", "k"):
            v = getattr(self, name)
            if isinstance(v, bool) or int(v) != v:
                raise TypeError(f"FWeight.{name} must be an integer, got {v!r}")
            object.__setattr__(self, name, int(v))

    @property
    def coords(self) -> Tuple[int, int, int]:
        return (self.m, self.n, self.k)

    def is_dominant(self) -> bool:
        return self.m >= 0 and self.n >= 0 and self.k >= 0

    def __add__(self, other: FWeight) -> FWeight:
        return FWeight(self.m + other.m, self.n + other.n, self.k + other.k)

    def __sub__(self, other: FWeight) -> FWeight:
        return FWeight(self.m - other.m, self.n - other.n, self.k - other.k)

    def __neg__(self) -> FWeight:
        return FWeight(-self.m, -self.n, -self.k)

    def __rmul__(self, c: int) -> FWeight:
        return FWeight(c * self.m, c * self.n, c * self.k)

    def __str__(self):
        return f"({self.m},{self.n},{self.k})"


@dataclass(frozen=True)
class RWeight:
    """Coefficients of the simple roots alpha1, alpha2, alpha3 (exact rationals)."""
    a1: Fraction
    a2: Fraction
    a3: Fraction

    def __post_init__(self):
        for name in ("a1", "a2", "a3"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))

    @property
    def coords(self) -> Tuple[Fraction, Fraction, Fraction]:
        return (self.a1, self.a2, self.a3)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coords)

    def as_ints(self) -> Tuple[int, int, int]:
        """Integer coordinates; raises :class:`NonIntegral` otherwise."""
        if not self.is_integral():
            raise NonIntegral(f"{self} is not in the root lattice")
        return (int(self.a1), int(self.a2), int(self.a3))

    def __add__(self, other: RWeight) -> RWeight:
        return RWeight(self.a1 + other.a1, self.a2 + other.a2, self.a3 + other.a3)

    def __sub__(self, other: RWeight) -> RWeight:
        return RWeight(self.a1 - other.a1, self.a2 - other.a2, self.a3 - other.a3)

    def __neg__(self) -> RWeight:
        return RWeight(-self.a1, -self.a2, -self.a3)

    def __rmul__(self, c) -> RWeight:
        return RWeight(c * self.a1, c * self.a2, c * self.a3)

    def __str__(self):
        return "(" + ",".join(str(c) for c in self.coords) + ")"


def fweight_to_rweight(w: FWeight) -> RWeight:
    m, n, k = w.coords
    return RWeight(Fraction(3 * m + 2 * n + k, 4),
                   Fraction(m + 2 * n + k, 2),
                   Fraction(m + 2 * n + 3 * k, 4))


def rweight_to_fweight(w: RWeight) -> FWeight:
    """Apply the Cartan matrix: the inverse of :func:`fweight_to_rweight`."""
    a1, a2, a3 = w.coords
    m = 2 * a1 - a2
    n = -a1 + 2 * a2 - a3
    k = -a2 + 2 * a3
    if any(c.denominator != 1 for c in (m, n, k)):
        raise NonIntegral(f"{w} is not an integral weight")
    return FWeight(int(m), int(n), int(k))


def root_to_fweight(x: int, y: int, z: int) -> FWeight:
    """The weight x*alpha1 + y*alpha2 + z*alpha3 in the fundamental basis."""
    return FWeight(2 * x - y, 2 * y - x - z, 2 * z - y)


def integral_root_coords(w: FWeight) -> Optional[Tuple[int, int, int]]:
    """Return (x, y, z) with w = x*alpha1 + y*alpha2 + z*alpha3, or None.

    The test is done on divisibility of the fundamental coordinates, so no
    rationals are built.
    """
    m, n, k = w.coords
    s1 = 3 * m + 2 * n + k
    s2 = m + 2 * n + k
    s3 = m + 2 * n + 3 * k
    if s1 % 4 or s2 % 2 or s3 % 4:
        return None
    return (s1 // 4, s2 // 2, s3 // 4)


RHO_F = FWeight(1, 1, 1)
RHO = fweight_to_rweight(RHO_F)
