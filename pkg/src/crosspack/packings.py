"""Packing-set data model, the record constructions, and exact verification.

A packing set at radius r is a finite point set whose pairwise L1 distances
are all >= 2r; its critical radius is half the minimum pairwise distance.
"""

from __future__ import annotations

import io
from dataclasses import dataclass

from gmpy2 import mpq

from .geometry import in_cross_polytope, l1_dist, Point, as_point
from .rational import Rat, format_rat, parse_rat

CONSTRUCTION_NAMES = ("vertices", "vertices_plus_centroids", "q10", "q12", "q13")

# Best known critical radius per (dim, point count), used for record flagging.
KNOWN_RADII: dict[tuple[int, int], Rat] = {}
for _n in range(2, 7):
    KNOWN_RADII[(_n, 2 * _n)] = mpq(1)
    KNOWN_RADII[(_n, 2 * _n + 2)] = 1 - mpq(1, _n)
KNOWN_RADII[(3, 10)] = mpq(2, 3)
KNOWN_RADII[(3, 12)] = mpq(3, 5)
KNOWN_RADII[(3, 13)] = mpq(6, 11)


@dataclass(frozen=True)
class PackingSet:
    dim: int
    points: tuple[Point, ...]
    label: str = ""

    def __post_init__(self):
        pts = tuple(as_point(p) for p in self.points)
        for p in pts:
            if len(p) != self.dim:
                raise ValueError("point dimension mismatch")
        if len(set(pts)) != len(pts):
            raise ValueError("points must be pairwise distinct")
        object.__setattr__(self, "points", pts)

    def __len__(self) -> int:
        return len(self.points)

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "label": self.label,
            "points": [[format_rat(c) for c in p] for p in self.points],
        }

    @staticmethod
    def from_json(obj: dict) -> "PackingSet":
        return PackingSet(
            obj["dim"],
            tuple(tuple(parse_rat(c) for c in p) for p in obj["points"]),
            obj.get("label", ""),
        )

    def to_csv(self) -> str:
        buf = io.StringIO()
        for p in self.points:
            buf.write(",".join(format_rat(c) for c in p) + "\n")
        return buf.getvalue()


@dataclass(frozen=True)
class VerifyReport:
    contained: bool
    min_pairwise: Rat
    violating_pairs: tuple[tuple[int, int], ...]
    outside_points: tuple[int, ...]

    def ok(self) -> bool:
        return self.contained and not self.violating_pairs

    def to_json(self) -> dict:
        return {
            "contained": self.contained,
            "min_pairwise": format_rat(self.min_pairwise),
            "violating_pairs": [list(p) for p in self.violating_pairs],
            "outside_points": list(self.outside_points),
        }


def _unit_vectors(n: int) -> list[Point]:
    pts = []
    for i in range(n):
        e = [mpq(0)] * n
        e[i] = mpq(1)
        pts.append(tuple(e))
        m = [mpq(0)] * n
        m[i] = mpq(-1)
        pts.append(tuple(m))
    return pts

_Q10_EXTRA = [(1, 1, 1), (-1, -1, 1), (-1, 1, -1), (1, -1, -1)]
_Q12_PLUS = [(2, 2, 1), (-2, 1, 2), (1, -2, 2)]
_Q13_EXTRA = [
    (-1, 5, 5), (5, -1, 5), (5, 5, -1),
    (-5, -2, 4), (-5, 4, -2), (4, -2, -5),
    (-3, -5, -3),
]


def construct(name: str, n: int = 3) -> PackingSet:
    """Build one of the named configurations.

    vertices: the 2n unit vectors; vertices_plus_centroids adds the two
    opposing facet centroids; q10/q12/q13 are the 3-dimensional record
    sets with denominators 3, 5 and 11.
    """
    if name not in CONSTRUCTION_NAMES:
        raise ValueError(f"unknown construction {name!r}")
    if n < 2:
        raise ValueError("dimension must be >= 2")
    if name in ("q10", "q12", "q13") and n != 3:
        raise ValueError(f"{name} requires n=3")
    pts = _unit_vectors(n)
    if name == "vertices_plus_centroids":
        q = tuple(mpq(1, n) for _ in range(n))
        pts += [q, tuple(-c for c in q)]
    elif name == "q10":
        pts += [tuple(mpq(c, 3) for c in v) for v in _Q10_EXTRA]
    elif name == "q12":
        pts += [tuple(mpq(c, 5) for c in v) for v in _Q12_PLUS]
        pts += [tuple(mpq(-c, 5) for c in v) for v in _Q12_PLUS]
    elif name == "q13":
        pts += [tuple(mpq(c, 11) for c in v) for v in _Q13_EXTRA]
    return PackingSet(n, tuple(pts), label=name)


def min_pairwise_distance(P: PackingSet) -> tuple[Rat, tuple[int, int]]:
    """Exact minimum over unordered pairs, with the attaining index pair.

    Ties break to the lexicographically smallest index pair.
    """
    if len(P) < 2:
        raise ValueError("need at least 2 points")
    best = None
    best_pair = None
    for i in range(len(P)):
        for j in range(i + 1, len(P)):
            d = l1_dist(P.points[i], P.points[j])
            if best is None or d < best:
                best = d
                best_pair = (i, j)
    return best, best_pair


class ContainmentError(ValueError):
    def __init__(self, outside: list[int]):
        super().__init__(f"points outside the unit cross-polytope: {outside}")
        self.outside = outside


def critical_radius(P: PackingSet) -> Rat:
    """Largest r for which P packs r * C_n^*: half the min pairwise distance."""
    outside = [i for i, p in enumerate(P.points) if not in_cross_polytope(p)]
    if outside:
        raise ContainmentError(outside)
    d, _ = min_pairwise_distance(P)
    return d / 2


def verify_packing(P: PackingSet, r: Rat) -> VerifyReport:
    """Check containment and the >= 2r separation at a given radius.

    Violations use strict <, matching the closed separation constraint.
    """
    r = mpq(r)
    if r <= 0:
        raise ValueError("radius must be positive")
    outside = tuple(
        i for i, p in enumerate(P.points) if not in_cross_polytope(p)
    )
    min_d = None
    violations = []
    for i in range(len(P)):
        for j in range(i + 1, len(P)):
            d = l1_dist(P.points[i], P.points[j])
            if min_d is None or d < min_d:
                min_d = d
            if d < 2 * r:
                violations.append((i, j))
    return VerifyReport(
        contained=not outside,
        min_pairwise=min_d,
        violating_pairs=tuple(violations),
        outside_points=outside,
    )
