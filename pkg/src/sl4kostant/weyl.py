"""The Weyl group of sl4 (isomorphic to S4) and its action on weights.

The 24 elements are listed by their canonical reduced words, in the row order
used throughout the package (by length, then a fixed order within each
length).  A word ``s_{i1} s_{i2} ... s_{ir}`` denotes the composition
``s_{i1} o s_{i2} o ... o s_{ir}``: the rightmost reflection acts first.

Each shifted weight ``sigma(lambda + rho) - rho - mu`` has simple-root
coordinates that are one of four "P" values, one of six "Q" values and one
of four "R" values (see :func:`pqr_values`); :data:`PQR_ROWS` records which.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Sequence, Tuple

from .weights import RHO, FWeight, RWeight, fweight_to_rweight, rweight_to_fweight

__all__ = [
    "WeylElement", "WORDS", "PQR_ROWS", "all_elements", "element", "identity",
    "longest", "from_perm", "compose", "act_on_rweight", "act_on_fweight",
    "action_matrix", "sigma_shifted", "shifted_root_coords", "pqr_values", "pqr_triple",
    "POSITIVE_ROOTS", "ROOTS",
]

WORDS: Tuple[str, ...] = (
    "1",
    "s1", "s2", "s3",
    "s1s2", "s2s1", "s2s3", "s3s1", "s3s2",
    "s1s2s1", "s1s2s3", "s2s3s1", "s2s3s2", "s3s1s2", "s3s2s1",
    "s1s2s3s1", "s1s2s3s2", "s2s3s1s2", "s2s3s2s1", "s3s1s2s1",
    "s1s2s3s1s2", "s1s2s3s2s1", "s2s3s1s2s1",
    "s1s2s3s1s2s1",
)

PQR_ROWS: Dict[str, Tuple[str, str, str]] = {
    "1": ("P1", "Q1", "R1"),
    "s1": ("P4", "Q1", "R1"),
    "s2": ("P1", "Q6", "R1"),
    "s3": ("P1", "Q1", "R4"),
    "s1s2": ("P3", "Q6", "R1"),
    "s2s1": ("P4", "Q4", "R1"),
    "s2s3": ("P1", "Q5", "R4"),
    "s3s1": ("P4", "Q1", "R4"),
    "s3s2": ("P1", "Q6", "R3"),
    "s1s2s1": ("P3", "Q4", "R1"),
    "s1s2s3": ("P2", "Q5", "R4"),
    "s2s3s1": ("P4", "Q3", "R4"),
    "s2s3s2": ("P1", "Q5", "R3"),
    "s3s1s2": ("P3", "Q6", "R3"),
    "s3s2s1": ("P4", "Q4", "R2"),
    "s1s2s3s1": ("P2", "Q3", "R4"),
    "s1s2s3s2": ("P2", "Q5", "R3"),
    "s2s3s1s2": ("P3", "Q2", "R3"),
    "s2s3s2s1": ("P4", "Q3", "R2"),
    "s3s1s2s1": ("P3", "Q4", "R2"),
    "s1s2s3s1s2": ("P2", "Q2", "R3"),
    "s1s2s3s2s1": ("P2", "Q3", "R2"),
    "s2s3s1s2s1": ("P3", "Q2", "R2"),
    "s1s2s3s1s2s1": ("P2", "Q2", "R2"),
}

# positive roots in simple-root coordinates
POSITIVE_ROOTS: Tuple[Tuple[int, int, int], ...] = (
    (1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (0, 1, 1), (1, 1, 1),
)
ROOTS = POSITIVE_ROOTS + tuple(tuple(-c for c in r) for r in POSITIVE_ROOTS)


def _parse_word(word: str) -> Tuple[int, ...]:
    if word == "1":
        return ()
    parts = word.split("s")
    if parts[0] != "" or not all(p in ("1", "2", "3") for p in parts[1:]):
        raise ValueError(f"not a word in s1, s2, s3: {word!r}")
    return tuple(int(p) for p in parts[1:])


def _perm_of(letters: Sequence[int]) -> Tuple[int, ...]:
    # one-line notation on (1, 2, 3, 4); s_i swaps i and i+1
    perm = [1, 2, 3, 4]
    for i in reversed(letters):
        perm = [i + 1 if v == i else i if v == i + 1 else v for v in perm]
    # perm[j] is now the image of j+1 under the composed map, applied right to left
    return tuple(perm)


def _inversions(perm: Sequence[int]) -> int:
    return sum(1 for a in range(4) for b in range(a + 1, 4) if perm[a] > perm[b])


@dataclass(frozen=True)
class WeylElement:
    word: str
    letters: Tuple[int, ...]
    perm: Tuple[int, ...]
    index: int

    @property
    def length(self) -> int:
        return len(self.letters)

    @property
    def sign(self) -> int:
        return -1 if self.length % 2 else 1

    def __str__(self):
        return self.word

    def __repr__(self):
        return f"WeylElement({self.word!r})"


def _build():
    elements = []
    for index, word in enumerate(WORDS):
        letters = _parse_word(word)
        elements.append(WeylElement(word, letters, _perm_of(letters), index))
    perms = {e.perm for e in elements}
    if len(perms) != 24:
        raise RuntimeError("canonical words do not give 24 distinct permutations")
    for e in elements:
        if _inversions(e.perm) != e.length:
            raise RuntimeError(f"word {e.word} is not reduced")
    return tuple(elements)


_ELEMENTS = _build()
_BY_WORD = {e.word: e for e in _ELEMENTS}
_BY_PERM = {e.perm: e for e in _ELEMENTS}


def all_elements() -> Tuple[WeylElement, ...]:
    return _ELEMENTS


def element(word: str) -> WeylElement:
    """Look up an element by word; non-canonical words are reduced first."""
    try:
        return _BY_WORD[word]
    except KeyError:
        return _BY_PERM[_perm_of(_parse_word(word))]


def identity() -> WeylElement:
    return _ELEMENTS[0]


def longest() -> WeylElement:
    return _ELEMENTS[-1]


def from_perm(perm: Sequence[int]) -> WeylElement:
    return _BY_PERM[tuple(perm)]


def compose(a: WeylElement, b: WeylElement) -> WeylElement:
    """The product a*b (b acts first)."""
    return from_perm(tuple(a.perm[v - 1] for v in b.perm))


def _reflect(i: int, a, b, c):
    # s_i on a*alpha1 + b*alpha2 + c*alpha3
    if i == 1:
        return (b - a, b, c)
    if i == 2:
        return (a, a - b + c, c)
    return (a, b, b - c)


def _act(letters: Sequence[int], coords):
    a, b, c = coords
    for i in reversed(letters):
        a, b, c = _reflect(i, a, b, c)
    return (a, b, c)


def act_on_rweight(sigma: WeylElement, w: RWeight) -> RWeight:
    return RWeight(*_act(sigma.letters, w.coords))


def act_on_fweight(sigma: WeylElement, w: FWeight) -> FWeight:
    return rweight_to_fweight(act_on_rweight(sigma, fweight_to_rweight(w)))


@lru_cache(maxsize=None)
def action_matrix(sigma: WeylElement) -> Tuple[Tuple[int, int, int], ...]:
    """Integer matrix of sigma on simple-root coordinates (rows = output)."""
    cols = [_act(sigma.letters, e) for e in ((1, 0, 0), (0, 1, 0), (0, 0, 1))]
    return tuple(tuple(cols[j][i] for j in range(3)) for i in range(3))


def sigma_shifted(sigma: WeylElement, lam: FWeight, mu: FWeight) -> RWeight:
    """sigma(lam + rho) - rho - mu in simple-root coordinates."""
    shifted = act_on_rweight(sigma, fweight_to_rweight(lam) + RHO)
    return shifted - RHO - fweight_to_rweight(mu)


def shifted_root_coords(sigma: WeylElement, lam: FWeight, mu: FWeight):
    """Integer form of :func:`sigma_shifted`: a triple, or None if not integral."""
    lm, ln, lk = lam.coords
    mm, mn, mk = mu.coords
    # 4x root coordinates of lam + rho and mu + rho
    a = (3 * lm + 2 * ln + lk + 6, 2 * (lm + 2 * ln + lk) + 8, lm + 2 * ln + 3 * lk + 6)
    b = (3 * mm + 2 * mn + mk + 6, 2 * (mm + 2 * mn + mk) + 8, mm + 2 * mn + 3 * mk + 6)
    out = []
    for row, bi in zip(action_matrix(sigma), b):
        v = row[0] * a[0] + row[1] * a[1] + row[2] * a[2] - bi
        if v % 4:
            return None
        out.append(v // 4)
    return tuple(out)


def pqr_values(xyz: Tuple[int, int, int], mu: FWeight) -> Dict[str, int]:
    """The fourteen coordinate values for lam = mu + x*alpha1 + y*alpha2 + z*alpha3.

    ``mu = c1*w1 + c2*w2 + c3*w3``; the formulas hold for arbitrary integers.
    """
    x, y, z = xyz
    c1, c2, c3 = mu.coords
    return {
        "P1": x,
        "P2": -c1 - c2 - c3 - z - 3,
        "P3": -c1 - c2 - y + z - 2,
        "P4": -c1 - x + y - 1,
        "Q1": y,
        "Q2": -c1 - 2 * c2 - c3 - y - 4,
        "Q3": -c1 - c2 - c3 - x + y - z - 3,
        "Q4": -c1 - c2 - x + z - 2,
        "Q5": -c2 - c3 + x - z - 2,
        "Q6": -c2 + x - y + z - 1,
        "R1": z,
        "R2": -c1 - c2 - c3 - x - 3,
        "R3": -c2 - c3 + x - y - 2,
        "R4": -c3 + y - z - 1,
    }


def pqr_triple(sigma: WeylElement) -> Tuple[str, str, str]:
    return PQR_ROWS[sigma.word]
