"""Exact L1 geometry and small-dimension polytope computations.

Points are tuples of Rat.  Polytopes come in facet (H) and vertex (V) form;
conversion is exact and intended for desk scale (dimension <= 4, a few
dozen inequalities).  Strict inequality flags are carried on H-polytopes
but the geometric computations work on closures; strictness is re-applied
by the comparison layer.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterable, Sequence

from gmpy2 import mpq

from .rational import Rat, format_rat, parse_rat

Point = tuple[Rat, ...]


def as_point(coords: Iterable) -> Point:
    return tuple(mpq(c) for c in coords)


class DimensionMismatch(ValueError):
    pass


class EmptyPolytopeError(ValueError):
    pass


class UnboundedPolytopeError(ValueError):
    pass


def l1_norm(p: Sequence[Rat]) -> Rat:
    return sum((abs(mpq(c)) for c in p), mpq(0))


def l1_dist(p: Sequence[Rat], q: Sequence[Rat]) -> Rat:
    if len(p) != len(q):
        raise DimensionMismatch(f"dim {len(p)} vs {len(q)}")
    return sum((abs(mpq(a) - mpq(b)) for a, b in zip(p, q)), mpq(0))


def in_cross_polytope(p: Sequence[Rat], scale: Rat = mpq(1), closed: bool = True) -> bool:
    """Membership of p in scale * (unit L1 ball), closed or open."""
    n = l1_norm(p)
    return n <= scale if closed else n < scale


@dataclass(frozen=True)
class Inequality:
    """normal . x <= rhs  (or < rhs when strict)."""

    normal: Point
    rhs: Rat
    strict: bool = False

    def __post_init__(self):
        object.__setattr__(self, "normal", as_point(self.normal))
        object.__setattr__(self, "rhs", mpq(self.rhs))
        if all(c == 0 for c in self.normal):
            raise ValueError("zero normal in inequality")

    def satisfied_by(self, p: Sequence[Rat], on_closure: bool = False) -> bool:
        v = sum((a * mpq(x) for a, x in zip(self.normal, p)), mpq(0))
        if self.strict and not on_closure:
            return v < self.rhs
        return v <= self.rhs

    def to_json(self) -> dict:
        return {
            "normal": [format_rat(c) for c in self.normal],
            "rhs": format_rat(self.rhs),
            "strict": self.strict,
        }

    @staticmethod
    def from_json(obj: dict) -> "Inequality":
        return Inequality(
            tuple(parse_rat(c) for c in obj["normal"]),
            parse_rat(obj["rhs"]),
            bool(obj.get("strict", False)),
        )


@dataclass(frozen=True)
class HPolytope:
    dim: int
    inequalities: tuple[Inequality, ...]

    def __post_init__(self):
        ineqs = tuple(self.inequalities)
        for iq in ineqs:
            if len(iq.normal) != self.dim:
                raise DimensionMismatch("inequality dimension mismatch")
        object.__setattr__(self, "inequalities", ineqs)

    def contains_point(self, p: Sequence[Rat], on_closure: bool = False) -> bool:
        return all(iq.satisfied_by(p, on_closure=on_closure) for iq in self.inequalities)

    def to_json(self) -> dict:
        return {"dim": self.dim, "H": [iq.to_json() for iq in self.inequalities]}

    @staticmethod
    def from_json(obj: dict) -> "HPolytope":
        return HPolytope(obj["dim"], tuple(Inequality.from_json(iq) for iq in obj["H"]))


@dataclass(frozen=True)
class VPolytope:
    dim: int
    vertices: tuple[Point, ...]

    def __post_init__(self):
        verts = tuple(as_point(v) for v in self.vertices)
        if not verts:
            raise ValueError("VPolytope needs at least one vertex")
        for v in verts:
            if len(v) != self.dim:
                raise DimensionMismatch("vertex dimension mismatch")
        object.__setattr__(self, "vertices", verts)

    def vertex_set(self) -> frozenset[Point]:
        return frozenset(self.vertices)

    def to_json(self) -> dict:
        return {"dim": self.dim, "V": [[format_rat(c) for c in v] for v in self.vertices]}

    @staticmethod
    def from_json(obj: dict) -> "VPolytope":
        return VPolytope(obj["dim"], tuple(tuple(parse_rat(c) for c in v) for v in obj["V"]))


def cross_polytope_hrep(dim: int, scale: Rat = mpq(1)) -> HPolytope:
    """Facet description of scale * C_n^*: all sign patterns s, s.x <= scale."""
    rows = tuple(
        Inequality(tuple(mpq(s) for s in signs), mpq(scale))
        for signs in product((1, -1), repeat=dim)
    )
    return HPolytope(dim, rows)


def l1_ball_hrep(center: Sequence[Rat], radius: Rat, strict: bool = False) -> HPolytope:
    """||x - center||_1 <= radius as 2^n inequalities."""
    center = as_point(center)
    dim = len(center)
    rows = []
    for signs in product((1, -1), repeat=dim):
        normal = tuple(mpq(s) for s in signs)
        rhs = mpq(radius) + sum(a * c for a, c in zip(normal, center))
        rows.append(Inequality(normal, rhs, strict))
    return HPolytope(dim, tuple(rows))


# ---------------------------------------------------------------------------
# exact linear algebra helpers


def _solve_square(rows: list[Point], rhs: list[Rat]) -> Point | None:
    """Solve an n x n rational system; None when singular."""
    n = len(rows)
    M = [list(rows[i]) + [rhs[i]] for i in range(n)]
    for c in range(n):
        piv = next((i for i in range(c, n) if M[i][c] != 0), None)
        if piv is None:
            return None
        if piv != c:
            M[c], M[piv] = M[piv], M[c]
        inv = 1 / M[c][c]
        M[c] = [x * inv for x in M[c]]
        for i in range(n):
            if i != c and M[i][c] != 0:
                f = M[i][c]
                M[i] = [x - f * y for x, y in zip(M[i], M[c])]
    return tuple(M[i][n] for i in range(n))


def _nullspace(rows: list[Point], dim: int) -> list[Point]:
    """Basis of {d : row . d = 0 for all rows}."""
    M = [list(r) for r in rows]
    pivots = []
    rank = 0
    for c in range(dim):
        piv = next((i for i in range(rank, len(M)) if M[i][c] != 0), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        inv = 1 / M[rank][c]
        M[rank] = [x * inv for x in M[rank]]
        for i in range(len(M)):
            if i != rank and M[i][c] != 0:
                f = M[i][c]
                M[i] = [x - f * y for x, y in zip(M[i], M[rank])]
        pivots.append(c)
        rank += 1
    free = [c for c in range(dim) if c not in pivots]
    basis = []
    for fc in free:
        v = [mpq(0)] * dim
        v[fc] = mpq(1)
        for i, pc in enumerate(pivots):
            v[pc] = -M[i][fc]
        basis.append(tuple(v))
    return basis


def _matrix_rank(rows: list[Point], dim: int) -> int:
    return dim - len(_nullspace(rows, dim))


# ---------------------------------------------------------------------------
# feasibility / boundedness


def _normalize_row(coeffs: list[Rat], rhs: Rat) -> tuple[tuple[Rat, ...], Rat]:
    scale = max((abs(c) for c in coeffs), default=mpq(0))
    if scale == 0:
        return tuple(coeffs), rhs
    return tuple(c / scale for c in coeffs), rhs / scale

def is_empty(h: HPolytope) -> bool:
    """Exact feasibility decision via Fourier-Motzkin elimination.

    Works on the closure of h (strict flags ignored), which matches how all
    region polytopes in this package are used.
    """
    rows = [(list(iq.normal), iq.rhs) for iq in h.inequalities]
    dim = h.dim
    for var in range(dim - 1, -1, -1):
        pos, neg, rest = [], [], []
        for coeffs, rhs in rows:
            c = coeffs[var]
            if c > 0:
                pos.append(([x / c for x in coeffs], rhs / c))
            elif c < 0:
                neg.append(([x / -c for x in coeffs], rhs / -c))
            else:
                rest.append((coeffs, rhs))
        new_rows = rest
        for (pc, pr) in pos:
            for (nc, nr) in neg:
                coeffs = [a + b for a, b in zip(pc, nc)]
                coeffs[var] = mpq(0)
                new_rows.append((coeffs, pr + nr))
        seen = {}
        dedup = []
        for coeffs, rhs in new_rows:
            key_coeffs, key_rhs = _normalize_row(coeffs, rhs)
            prev = seen.get(key_coeffs)
            if prev is None or key_rhs < prev:
                seen[key_coeffs] = key_rhs
        for coeffs, rhs in seen.items():
            dedup.append((list(coeffs), rhs))
        rows = dedup
        for coeffs, rhs in rows:
            if all(c == 0 for c in coeffs) and rhs < 0:
                return True
    return any(rhs < 0 for _, rhs in rows)


def _recession_direction(h: HPolytope) -> Point | None:
    """A nonzero direction d with normal . d <= 0 for every inequality."""
    normals = [iq.normal for iq in h.inequalities]
    dim = h.dim
    # lineality space: A d = 0
    for d in _nullspace(normals, dim):
        return d
    # pointed case: extreme rays have dim-1 independent active constraints
    for subset in combinations(range(len(normals)), dim - 1):
        chosen = [normals[i] for i in subset]
        for d in _nullspace(chosen, dim):
            for cand in (d, tuple(-x for x in d)):
                if all(
                    sum(a * x for a, x in zip(n, cand)) <= 0 for n in normals
                ):
                    return cand
    return None


def dd_convert(h: HPolytope) -> VPolytope:
    """Exact vertex enumeration of a bounded, nonempty H-polytope.

    Every d-subset of inequalities with independent normals is solved as an
    equality system; feasible solutions are exactly the vertices.  Empty and
    unbounded inputs raise distinct errors.
    """
    if is_empty(h):
        raise EmptyPolytopeError("H-polytope is empty")
    if _recession_direction(h) is not None:
        raise UnboundedPolytopeError("H-polytope is unbounded")
    ineqs = h.inequalities
    normals = [iq.normal for iq in ineqs]
    rhss = [iq.rhs for iq in ineqs]
    verts: set[Point] = set()
    for subset in combinations(range(len(ineqs)), h.dim):
        sol = _solve_square([normals[i] for i in subset], [rhss[i] for i in subset])
        if sol is None or sol in verts:
            continue
        if all(
            sum(a * x for a, x in zip(normals[i], sol)) <= rhss[i]
            for i in range(len(ineqs))
        ):
            verts.add(sol)
    if not verts:
        raise EmptyPolytopeError("no feasible basic solution")
    return VPolytope(h.dim, tuple(sorted(verts)))


def vertices_to_hrep(v: VPolytope) -> HPolytope:
    """Facet enumeration of a full-dimensional V-polytope.

    Each d-subset of points spanning a hyperplane is tested as a candidate
    facet.  Lower-dimensional hulls are rejected; the paper-scale polytopes
    this is used on (simplices, cross-polytopes) are full-dimensional.
    """
    pts = list(v.vertices)
    dim = v.dim
    base0 = pts[0]
    all_diffs = [tuple(a - b for a, b in zip(p, base0)) for p in pts[1:]]
    if _matrix_rank(all_diffs, dim) != dim:
        raise ValueError("not full-dimensional")
    facets: dict[tuple, Inequality] = {}
    for subset in combinations(range(len(pts)), dim):
        base = pts[subset[0]]
        diffs = [tuple(a - b for a, b in zip(pts[i], base)) for i in subset[1:]]
        ns = _nullspace(diffs, dim)
        if len(ns) != 1:
            continue
        normal = ns[0]
        rhs = sum(a * x for a, x in zip(normal, base))
        above = below = False
        for p in pts:
            val = sum(a * x for a, x in zip(normal, p)) - rhs
            if val > 0:
                above = True
            elif val < 0:
                below = True
        if above and below:
            continue
        if above:
            normal = tuple(-x for x in normal)
            rhs = -rhs
        key, krhs = _normalize_row(list(normal), rhs)
        facets[(key, krhs)] = Inequality(key, krhs)
    return HPolytope(dim, tuple(facets.values()))


def max_l1_between(A: VPolytope, B: VPolytope) -> tuple[Rat, tuple[Point, Point]]:
    """Exact max L1 distance between two V-polytopes, with an argmax pair.

    The L1 distance is convex, so the maximum over the product of the two
    polytopes is attained at a vertex pair.
    """
    if A.dim != B.dim:
        raise DimensionMismatch(f"dim {A.dim} vs {B.dim}")
    best = None
    best_pair = None
    for a in A.vertices:
        for b in B.vertices:
            d = l1_dist(a, b)
            if best is None or d > best:
                best = d
                best_pair = (a, b)
    return best, best_pair


def contains(A: VPolytope, B: HPolytope, on_closure: bool = True) -> bool:
    """True iff conv(A) is a subset of B (checked on B's closure by default)."""
    if A.dim != B.dim:
        raise DimensionMismatch(f"dim {A.dim} vs {B.dim}")
    return all(B.contains_point(v, on_closure=on_closure) for v in A.vertices)
