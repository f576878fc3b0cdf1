"""Polynomials in q with exact integer coefficients."""

from __future__ import annotations

from typing import Dict, Iterable, Iterator, Mapping, Tuple

__all__ = ["QPoly"]


class QPoly:
    """An immutable polynomial ``sum c_i q^i`` with nonnegative exponents.

    Stored sparsely with no zero coefficients, so equality and hashing are
    coefficient-wise.

    >>> p = QPoly({2: 1, 3: 3, 4: 2, 5: 1})
    >>> str(p), p.eval_at_one()
    ('q^2 + 3q^3 + 2q^4 + q^5', 7)
    """
    __slots__ = ("_terms",)

    def __init__(self, coeffs: Mapping[int, int] | Iterable[Tuple[int, int]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        acc: Dict[int, int] = {}
        for e, c in items:
            if e < 0:
                raise ValueError(f"negative exponent {e}")
            acc[e] = acc.get(e, 0) + c
        self._terms = tuple(sorted((e, c) for e, c in acc.items() if c))

    @classmethod
    def from_dense(cls, coeffs: Iterable[int], offset: int = 0) -> QPoly:
        """Build from consecutive coefficients starting at ``q^offset``."""
        return cls((offset + i, c) for i, c in enumerate(coeffs))

    @classmethod
    def zero(cls) -> QPoly:
        return cls()

    @classmethod
    def one(cls) -> QPoly:
        return cls({0: 1})

    def terms(self) -> Tuple[Tuple[int, int], ...]:
        return self._terms

    def __iter__(self) -> Iterator[Tuple[int, int]]:
        return iter(self._terms)

    def coefficient(self, i: int) -> int:
        for e, c in self._terms:
            if e == i:
                return c
        return 0

    def as_dict(self) -> Dict[int, int]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> int:
        """Highest exponent; -1 for the zero polynomial."""
        return self._terms[-1][0] if self._terms else -1

    def low_degree(self) -> int:
        """Lowest exponent; -1 for the zero polynomial."""
        return self._terms[0][0] if self._terms else -1

    def eval_at_one(self) -> int:
        return sum(c for _, c in self._terms)

    def __call__(self, q):
        return sum(c * q ** e for e, c in self._terms)

    def __eq__(self, other):
        if isinstance(other, QPoly):
            return self._terms == other._terms
        if isinstance(other, int):
            return self._terms == QPoly({0: other})._terms
        return NotImplemented

    def __hash__(self):
        return hash(self._terms)

    def __add__(self, other: QPoly) -> QPoly:
        if not isinstance(other, QPoly):
            return NotImplemented
        return QPoly(self._terms + other._terms)

    def __neg__(self) -> QPoly:
        return QPoly((e, -c) for e, c in self._terms)

    def __sub__(self, other: QPoly) -> QPoly:
        if not isinstance(other, QPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return QPoly((e, other * c) for e, c in self._terms)
        if isinstance(other, QPoly):
            acc: Dict[int, int] = {}
            for e1, c1 in self._terms:
                for e2, c2 in other._terms:
                    acc[e1 + e2] = acc.get(e1 + e2, 0) + c1 * c2
            return QPoly(acc)
        return NotImplemented

    __rmul__ = __mul__

    def __bool__(self):
        return bool(self._terms)

    def __repr__(self):
        return f"QPoly({dict(self._terms)!r})"

    def __str__(self):
        """Ascending exponents, e.g. ``q^1 + 2q^2 - q^5``; ``0`` if zero."""
        if not self._terms:
            return "0"
        out = []
        for e, c in self._terms:
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                body = ("" if mag == 1 else str(mag)) + f"q^{e}"
            if not out:
                out.append(body if c > 0 else "-" + body)
            else:
                out.append((" + " if c > 0 else " - ") + body)
        return "".join(out)
