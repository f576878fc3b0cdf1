"""Serialization of alternation diagrams and empty regions: JSON, CSV, SVG.

All writers are deterministic: points keep the serial (z, y, x) order and
colors are derived from set ids by hashing.
"""

from __future__ import annotations

import hashlib
import json
from typing import Dict, Iterable, List, Sequence, Tuple

from .alternation import DiagramPoint, Registry
from .weights import FWeight, root_to_fweight

__all__ = [
    "diagram_json", "diagram_csv", "diagram_svgs", "region_json", "region_csv",
    "region_svgs", "color_for",
]

CELL = 12


def _mu_obj(mu: FWeight) -> Dict[str, int]:
    return {"m": mu.m, "n": mu.n, "k": mu.k}


def diagram_json(mu: FWeight, points: Sequence[DiagramPoint], registry: Registry) -> str:
    obj = {
        "mu": _mu_obj(mu),
        "registry": [{"id": i, "elements": s.words()} for i, s in enumerate(registry.sets)],
        "points": [{"x": p.xyz[0], "y": p.xyz[1], "z": p.xyz[2], "set": p.altset_id}
                   for p in points],
    }
    return json.dumps(obj) + "\n"


def diagram_csv(points: Sequence[DiagramPoint]) -> str:
    rows = ["x,y,z,set_id"]
    rows.extend(f"{x},{y},{z},{p.altset_id}" for p in points for x, y, z in [p.xyz])
    return "\n".join(rows) + "\n"


def region_json(mu: FWeight, xyzs: Sequence[Tuple[int, int, int]]) -> str:
    obj = {"mu": _mu_obj(mu), "points": [{"x": x, "y": y, "z": z} for x, y, z in xyzs]}
    return json.dumps(obj) + "\n"


def region_csv(xyzs: Sequence[Tuple[int, int, int]]) -> str:
    rows = ["x,y,z"]
    rows.extend(f"{x},{y},{z}" for x, y, z in xyzs)
    return "\n".join(rows) + "\n"


def color_for(set_id: int) -> str:
    return "#" + hashlib.sha256(str(set_id).encode()).hexdigest()[:6]


def _svg(z0: int, mu: FWeight, cells: List[Tuple[int, int, str, str]]) -> str:
    # cells: (m, n, fill, title) with (m, n) the fundamental-weight coordinates
    if cells:
        ms = [c[0] for c in cells]
        ns = [c[1] for c in cells]
        m_lo, m_hi, n_lo, n_hi = min(ms), max(ms), min(ns), max(ns)
    else:
        m_lo = m_hi = n_lo = n_hi = 0
    width = (m_hi - m_lo + 3) * CELL
    height = (n_hi - n_lo + 3) * CELL
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f"<title>z = {z0}, mu = {mu}; horizontal w1, vertical w2</title>",
        f'<rect width="{width}" height="{height}" fill="#ffffff"/>',
    ]
    for m, n, fill, title in cells:
        cx = (m - m_lo + 1.5) * CELL
        cy = height - (n - n_lo + 1.5) * CELL
        out.append(f'<circle cx="{cx:g}" cy="{cy:g}" r="{CELL * 0.4:g}" fill="{fill}">'
                   f"<title>{title}</title></circle>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _slices(xyzs: Iterable[Tuple[int, int, int]]) -> Dict[int, list]:
    out: Dict[int, list] = {}
    for xyz in xyzs:
        out.setdefault(xyz[2], []).append(xyz)
    return out


def diagram_svgs(mu: FWeight, points: Sequence[DiagramPoint],
                 registry: Registry) -> Dict[int, str]:
    """One SVG document per z value, keyed by z in ascending order."""
    by_z: Dict[int, list] = {}
    for p in points:
        lam = p.lam
        label = f"({p.xyz[0]},{p.xyz[1]},{p.xyz[2]}) {registry.sets[p.altset_id]}"
        by_z.setdefault(p.xyz[2], []).append((lam.m, lam.n, color_for(p.altset_id), label))
    return {z: _svg(z, mu, cells) for z, cells in sorted(by_z.items())}


def region_svgs(mu: FWeight, xyzs: Sequence[Tuple[int, int, int]],
                z_values: Iterable[int]) -> Dict[int, str]:
    """Empty-region slices; every requested z gets a file, possibly blank."""
    found = _slices(xyzs)
    docs = {}
    for z in sorted(set(z_values)):
        cells = []
        for x, y, _ in found.get(z, []):
            lam = mu + root_to_fweight(x, y, z)
            cells.append((lam.m, lam.n, "#333333", f"({x},{y},{z})"))
        docs[z] = _svg(z, mu, cells)
    return docs
