"""Weyl alternation sets ``A(lam, mu) = {sigma : P(sigma(lam+rho) - (mu+rho)) > 0}``.

Single pairs are handled by :func:`altset`, which can go through partition
function positivity (``method="bruteforce"``) or through the sign pattern of
the fourteen P/Q/R values (``method="conditions"``).  Lattice windows are
scanned with numpy, one 24-bit membership mask per point.
"""

from __future__ import annotations

import itertools
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from importlib import resources
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from .errors import PreconditionViolated
from .qpartition import kostant_count, oracle_triple_sum
from .weights import FWeight, fweight_to_rweight, integral_root_coords, root_to_fweight
from .weyl import (
    PQR_ROWS, WORDS, WeylElement, action_matrix, all_elements, element, pqr_values,
    sigma_shifted,
)

__all__ = [
    "AltSet", "load_catalogue", "is_in_altset", "altset", "altset_bruteforce",
    "altset_conditions", "LatticeWindow", "Registry", "default_mu_set",
    "default_verification_window", "enumerate_distinct_altsets", "window_masks",
    "classify_mu_zero_octant", "classify_mu_zero", "MU_ZERO_SETS",
    "DiagramPoint", "diagram_export", "empty_region",
]

_INDEX = {w: i for i, w in enumerate(WORDS)}


@dataclass(frozen=True, order=True)
class AltSet:
    """A subset of W stored as a 24-bit mask; bit i is row i of the word table.

    Rows are sorted by length, so iterating bits in order gives the canonical
    element order.
    """
    mask: int

    def __post_init__(self):
        if not 0 <= self.mask < 1 << 24:
            raise ValueError(f"mask out of range: {self.mask}")

    @classmethod
    def of(cls, members: Iterable) -> AltSet:
        """Build from WeylElements or words (non-canonical words are reduced)."""
        mask = 0
        for m in members:
            e = m if isinstance(m, WeylElement) else element(str(m))
            mask |= 1 << e.index
        return cls(mask)

    @classmethod
    def parse(cls, text: str) -> AltSet:
        """Inverse of :meth:`serialize`."""
        text = text.strip()
        return cls.of(t.strip() for t in text.split(",")) if text else cls(0)

    @classmethod
    def empty(cls) -> AltSet:
        return cls(0)

    def elements(self) -> Tuple[WeylElement, ...]:
        return tuple(e for e in all_elements() if self.mask >> e.index & 1)

    def words(self) -> List[str]:
        return [e.word for e in self.elements()]

    def serialize(self) -> str:
        return ",".join(self.words())

    def __contains__(self, sigma) -> bool:
        e = sigma if isinstance(sigma, WeylElement) else element(str(sigma))
        return bool(self.mask >> e.index & 1)

    def __len__(self):
        return bin(self.mask).count("1")

    def __iter__(self) -> Iterator[WeylElement]:
        return iter(self.elements())

    def __str__(self):
        return "{" + ", ".join(self.words()) + "}"


def load_catalogue() -> List[AltSet]:
    """The 194 nonempty alternation sets, in catalogue order."""
    raw = resources.files("sl4kostant").joinpath("data/alternation_sets.json").read_text()
    return [AltSet.of(entry["elements"]) for entry in json.loads(raw)["sets"]]


# --- single pairs -------------------------------------------------------------

def is_in_altset(sigma: WeylElement, lam: FWeight, mu: FWeight) -> bool:
    target = sigma_shifted(sigma, lam, mu)
    if not target.is_integral():
        return False
    return all(c >= 0 for c in target.coords)


def altset_bruteforce(lam: FWeight, mu: FWeight, engine: str = "count") -> AltSet:
    """Members found by evaluating the partition function itself.

    ``engine="count"`` uses the closed count; ``"sum"`` builds the whole
    q-polynomial with the triple-sum oracle (slow, for cross-checks).
    """
    mask = 0
    for e in all_elements():
        target = sigma_shifted(e, lam, mu)
        if not target.is_integral():
            continue
        a, b, c = target.as_ints()
        if engine == "sum":
            positive = not oracle_triple_sum(a, b, c).is_zero()
        else:
            positive = kostant_count(a, b, c) > 0
        if positive:
            mask |= 1 << e.index
    return AltSet(mask)


def altset_conditions(lam: FWeight, mu: FWeight) -> AltSet:
    """Members whose P/Q/R triple is nonnegative; empty off the root lattice."""
    xyz = integral_root_coords(lam - mu)
    if xyz is None:
        return AltSet(0)
    vals = pqr_values(xyz, mu)
    mask = 0
    for w, (p, q, r) in PQR_ROWS.items():
        if vals[p] >= 0 and vals[q] >= 0 and vals[r] >= 0:
            mask |= 1 << _INDEX[w]
    return AltSet(mask)


def altset(lam: FWeight, mu: FWeight, method: str = "conditions") -> AltSet:
    if method == "conditions":
        return altset_conditions(lam, mu)
    if method == "bruteforce":
        return altset_bruteforce(lam, mu)
    raise ValueError(f"unknown method {method!r}")


# --- windows ----------------------------------------------------------------

Range = Tuple[int, int]


@dataclass(frozen=True)
class LatticeWindow:
    """Inclusive (lo, hi) ranges of root coordinates, one scan per mu.

    A range with lo > hi is empty and the window then has no points.  The mu
    weights are not required to be dominant so that shifts such as
    ``mu = n*alpha1`` can be studied.
    """
    x_range: Range
    y_range: Range
    z_range: Range
    mu_set: Tuple[FWeight, ...] = field(default=(FWeight(0, 0, 0),))

    def __post_init__(self):
        object.__setattr__(self, "mu_set", tuple(self.mu_set))
        for r in (self.x_range, self.y_range, self.z_range):
            if len(r) != 2:
                raise ValueError(f"range must be (lo, hi): {r!r}")

    @classmethod
    def cube(cls, lo: int, hi: int, mu_set: Sequence[FWeight] = (FWeight(0, 0, 0),)):
        return cls((lo, hi), (lo, hi), (lo, hi), tuple(mu_set))

    def with_mu(self, mu: FWeight) -> LatticeWindow:
        return LatticeWindow(self.x_range, self.y_range, self.z_range, (mu,))

    def is_empty(self) -> bool:
        return any(lo > hi for lo, hi in (self.x_range, self.y_range, self.z_range))

    def points_per_mu(self) -> int:
        n = 1
        for lo, hi in (self.x_range, self.y_range, self.z_range):
            n *= max(0, hi - lo + 1)
        return n

    def xyz(self) -> Iterator[Tuple[int, int, int]]:
        """Points in serial order: z, then y, then x ascending."""
        for z in range(self.z_range[0], self.z_range[1] + 1):
            for y in range(self.y_range[0], self.y_range[1] + 1):
                for x in range(self.x_range[0], self.x_range[1] + 1):
                    yield (x, y, z)


def default_mu_set(cmax: int = 4) -> Tuple[FWeight, ...]:
    """Dominant root-lattice mu with all fundamental coordinates at most cmax."""
    out = []
    for c in itertools.product(range(cmax + 1), repeat=3):
        mu = FWeight(*c)
        if integral_root_coords(mu) is not None:
            out.append(mu)
    return tuple(out)


def default_verification_window() -> LatticeWindow:
    return LatticeWindow.cube(-20, 20, default_mu_set(4))


def _grid(win: LatticeWindow):
    xs = np.arange(win.x_range[0], win.x_range[1] + 1, dtype=np.int64)
    ys = np.arange(win.y_range[0], win.y_range[1] + 1, dtype=np.int64)
    zs = np.arange(win.z_range[0], win.z_range[1] + 1, dtype=np.int64)
    Z, Y, X = np.meshgrid(zs, ys, xs, indexing="ij")
    return X.ravel(), Y.ravel(), Z.ravel()


def _masks_conditions(X, Y, Z, mu: FWeight):
    vals = pqr_values((X, Y, Z), mu)
    nonneg = {name: v >= 0 for name, v in vals.items()}
    mask = np.zeros(X.shape, dtype=np.int64)
    for w, (p, q, r) in PQR_ROWS.items():
        hit = nonneg[p] & nonneg[q] & nonneg[r]
        mask |= hit.astype(np.int64) << _INDEX[w]
    return mask


def _masks_action(X, Y, Z, mu: FWeight):
    # work with 4x root coordinates so every weight is an integer vector
    mu4 = np.array([int(4 * c) for c in fweight_to_rweight(mu).coords], dtype=np.int64)
    rho4 = np.array([6, 8, 6], dtype=np.int64)
    lam_rho = np.stack([4 * X, 4 * Y, 4 * Z]) + (mu4 + rho4)[:, None]
    mask = np.zeros(X.shape, dtype=np.int64)
    for e in all_elements():
        M = np.array(action_matrix(e), dtype=np.int64)
        t = M @ lam_rho - (rho4 + mu4)[:, None]
        hit = np.all((t % 4 == 0) & (t >= 0), axis=0)
        mask |= hit.astype(np.int64) << e.index
    return mask


_ROUTES = {"conditions": _masks_conditions, "action": _masks_action}


def window_masks(win: LatticeWindow, mu: FWeight, route: str = "conditions"):
    """(X, Y, Z, masks) arrays for one mu, in serial point order."""
    if route not in _ROUTES:
        raise ValueError(f"unknown route {route!r}")
    if win.is_empty():
        empty = np.zeros(0, dtype=np.int64)
        return empty, empty, empty, empty
    X, Y, Z = _grid(win)
    return X, Y, Z, _ROUTES[route](X, Y, Z, mu)


@dataclass
class Registry:
    """Distinct alternation sets in order of first occurrence, with counts."""
    sets: List[AltSet] = field(default_factory=list)
    counts: List[int] = field(default_factory=list)

    def __post_init__(self):
        self._ids: Dict[int, int] = {s.mask: i for i, s in enumerate(self.sets)}

    def add(self, s: AltSet, count: int = 1) -> int:
        i = self._ids.get(s.mask)
        if i is None:
            i = len(self.sets)
            self._ids[s.mask] = i
            self.sets.append(s)
            self.counts.append(0)
        self.counts[i] += count
        return i

    def id_of(self, s: AltSet) -> int:
        return self._ids[s.mask]

    def __len__(self):
        return len(self.sets)

    def __contains__(self, s: AltSet):
        return s.mask in self._ids

    def max_cardinality(self) -> int:
        return max((len(s) for s in self.sets), default=0)


def _first_occurrences(masks) -> List[Tuple[int, int]]:
    if len(masks) == 0:
        return []
    uniq, first, counts = np.unique(masks, return_index=True, return_counts=True)
    order = np.argsort(first, kind="stable")
    return [(int(uniq[i]), int(counts[i])) for i in order]


def _scan_one(args):
    win, mu, route = args
    return _first_occurrences(window_masks(win, mu, route)[3])


def enumerate_distinct_altsets(win: LatticeWindow, route: str = "conditions",
                               workers: Optional[int] = None) -> Registry:
    """Scan every mu of the window and deduplicate the sets found.

    The registry order is first occurrence under the serial order (mu in
    window order, then z, y, x), whatever the number of workers.
    """
    jobs = [(win.with_mu(mu), mu, route) for mu in win.mu_set]
    if workers is not None and workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_scan_one, jobs))
    else:
        parts = [_scan_one(job) for job in jobs]
    reg = Registry()
    for part in parts:
        for mask, count in part:
            reg.add(AltSet(mask), count)
    return reg


# --- the mu = 0 octant ---------------------------------------------------------

MU_ZERO_SETS: Dict[str, AltSet] = {
    label: AltSet.of(words) for label, words in (
        ("A1", ["1"]),
        ("A2", ["1", "s2"]),
        ("A3", ["1", "s2", "s3"]),
        ("A4", ["1", "s1", "s2"]),
        ("A5", ["1", "s2", "s3", "s2s3"]),
        ("A6", ["1", "s1", "s3", "s3s1"]),
        ("A7", ["1", "s1", "s2", "s2s1"]),
        ("A8", ["1", "s1", "s2", "s3", "s3s1"]),
        ("A9", ["1", "s1", "s2", "s3", "s2s3", "s3s1"]),
        ("A10", ["1", "s1", "s2", "s3", "s2s1", "s3s1"]),
        ("A11", ["1", "s2", "s3", "s2s3", "s3s2", "s2s3s2"]),
        ("A12", ["1", "s1", "s2", "s1s2", "s2s1", "s1s2s1"]),
    )
}
MU_ZERO_SETS["empty"] = AltSet(0)


def _octant_rules(x, y, z):
    a = x + z - y - 1
    return (
        ("A1", x == y == z == 0),
        ("A2", a >= 0 and -1 < x - y < 2 and -1 < z - y < 2),
        ("A3", a >= 0 and y - z - 1 >= 0 and x - z - 2 < 0 and -1 < x - y < 2),
        ("A4", y - x - 1 >= 0 and a >= 0 and z - x - 2 < 0 and -1 < z - y < 2),
        ("A5", x - z - 2 >= 0 and a >= 0 and y - z - 1 >= 0 and -1 < x - y < 2),
        ("A6", y - x - 1 >= 0 and y - z - 1 >= 0 and a < 0 and -2 < x - z < 2),
        ("A7", y - x - 1 >= 0 and z - x - 2 >= 0 and a >= 0 and -1 < z - y < 2),
        ("A8", a >= 0 and y - x - 1 >= 0 and y - z - 1 >= 0 and -2 < x - z < 2),
        ("A9", a >= 0 and y - x - 1 >= 0 and x - z - 2 >= 0 and y - z - 1 >= 0),
        ("A10", a >= 0 and y - x - 1 >= 0 and z - x - 2 >= 0 and y - z - 1 >= 0),
        ("A11", a >= 0 and x - z - 2 >= 0 and x - y - 2 >= 0 and y - z - 1 >= 0),
        ("A12", a >= 0 and z - x - 2 >= 0 and z - y - 2 >= 0 and y - x - 1 >= 0),
    )


def classify_mu_zero_octant(x: int, y: int, z: int) -> str:
    """Label of ``A(x*alpha1 + y*alpha2 + z*alpha3, 0)`` for dominant such weights.

    Uses closed inequality systems rather than the 24 membership tests.
    """
    if min(x, y, z, 2 * x - y, 2 * y - x - z, 2 * z - y) < 0:
        raise PreconditionViolated(f"({x},{y},{z}) is not a dominant point of the nonnegative root cone")
    hits = [label for label, ok in _octant_rules(x, y, z) if ok]
    if len(hits) > 1:
        raise RuntimeError(f"overlapping octant classes {hits} at ({x},{y},{z})")
    return hits[0] if hits else "empty"


def classify_mu_zero(lam: FWeight) -> str:
    """Label of ``A(lam, 0)`` for dominant lam; "empty" off the root lattice."""
    if not lam.is_dominant():
        raise PreconditionViolated(f"{lam} is not dominant")
    xyz = integral_root_coords(lam)
    if xyz is None:
        return "empty"
    return classify_mu_zero_octant(*xyz)


# --- diagrams -----------------------------------------------------------------

@dataclass(frozen=True)
class DiagramPoint:
    lam: FWeight
    xyz: Tuple[int, int, int]
    altset_id: int


def diagram_export(win: LatticeWindow, mu: FWeight,
                   route: str = "conditions") -> Tuple[List[DiagramPoint], Registry]:
    """Label every window point for this mu; ids index the returned registry."""
    X, Y, Z, masks = window_masks(win, mu, route)
    reg = Registry()
    points = []
    for x, y, z, mask in zip(X.tolist(), Y.tolist(), Z.tolist(), masks.tolist()):
        sid = reg.add(AltSet(mask))
        points.append(DiagramPoint(mu + root_to_fweight(x, y, z), (x, y, z), sid))
    return points, reg


def empty_region(win: LatticeWindow, mu: FWeight,
                 route: str = "conditions") -> List[Tuple[int, int, int]]:
    """Window points whose alternation set is empty, in serial order."""
    X, Y, Z, masks = window_masks(win, mu, route)
    hit = masks == 0
    return list(zip(X[hit].tolist(), Y[hit].tolist(), Z[hit].tolist()))
