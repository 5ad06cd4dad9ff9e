"""The eight octant leftover regions of the 3-dimensional cross-polytope.

For radii in [1/2, 2/3], the part of C_3^* farther than 2r from every
vertex splits into eight simplex-like regions, one per sign orthant, each
the convex hull of four points whose coordinates are affine in r.  Each
region is further covered by three subcells whose extra vertices involve
r/2 and the facet centroid.
"""

from __future__ import annotations

from itertools import product

from gmpy2 import mpq

from .geometry import HPolytope, Inequality
from .rational import AffR, Rat

OctantSign = tuple[int, int, int]

SIGNS: tuple[OctantSign, ...] = tuple(product((1, -1), repeat=3))

AffPoint = tuple[AffR, AffR, AffR]

# coordinate magnitudes used by the vertex formulas
_A = AffR(2, -1)          # 2r - 1
_B = AffR(-1, 1)          # 1 - r
_H = AffR(mpq(1, 2), 0)   # r / 2
_T = AffR(0, mpq(1, 3))   # 1/3, the facet-centroid coordinate


def _signed(sign: OctantSign, mags: tuple[AffR, AffR, AffR]) -> AffPoint:
    return tuple(m.scale(s) for s, m in zip(sign, mags))


def flip(sign: OctantSign, i: int) -> OctantSign:
    """Flip coordinate i (0-based) of a sign vector."""
    out = list(sign)
    out[i] = -out[i]
    return tuple(out)


def region_vertices(sign: OctantSign) -> tuple[AffPoint, ...]:
    """The four radius-parametric vertices of the leftover region."""
    return (
        _signed(sign, (_A, _A, _A)),
        _signed(sign, (_B, _B, _A)),
        _signed(sign, (_B, _A, _B)),
        _signed(sign, (_A, _B, _B)),
    )


def subcell_vertices(sign: OctantSign, i: int) -> tuple[AffPoint, ...]:
    """The five vertices of subcell i in {1,2,3}.

    Subcell i keeps the region vertex with 2r-1 in coordinate i (the one
    farthest from the vertex sign_i * e_i) and replaces the other two
    permutation vertices with r/2 points plus the centroid.
    """
    if i == 1:
        mags = [(_A, _A, _A), (_A, _B, _B), (_H, _B, _H), (_H, _H, _B), (_T, _T, _T)]
    elif i == 2:
        mags = [(_A, _A, _A), (_B, _A, _B), (_B, _H, _H), (_H, _H, _B), (_T, _T, _T)]
    elif i == 3:
        mags = [(_A, _A, _A), (_B, _B, _A), (_B, _H, _H), (_H, _B, _H), (_T, _T, _T)]
    else:
        raise ValueError("subcell index must be 1, 2 or 3")
    return tuple(_signed(sign, m) for m in mags)


def eval_points(points: tuple[AffPoint, ...], r: Rat) -> tuple[tuple[Rat, ...], ...]:
    return tuple(tuple(c(r) for c in p) for p in points)


def region_hrep(sign: OctantSign, r: Rat) -> HPolytope:
    """Facet description of the leftover region in the given orthant.

    Three vertex-exclusion inequalities plus the facet of C_3^*.  Supported
    for r in [1/2, 1]; above 2/3 the region is empty but the inequality
    system is still well-formed, which the emptiness checks rely on.
    """
    r = mpq(r)
    if not (mpq(1, 2) <= r <= 1):
        raise ValueError("region H-representation supported for r in [1/2, 1]")
    rows = []
    for i in range(3):
        normal = tuple(
            mpq(sign[j]) if j == i else mpq(-sign[j]) for j in range(3)
        )
        rows.append(Inequality(normal, -(2 * r - 1)))
    rows.append(Inequality(tuple(mpq(s) for s in sign), mpq(1)))
    return HPolytope(3, tuple(rows))
