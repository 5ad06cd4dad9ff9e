"""Machine-checked upper-bound certificates for cross-polytope packings.

The pipeline mirrors the structure of the bound proofs: a vertex-capture
argument caps the number of packing points near vertices at 2n, and for
dimension 3 the leftover of the body decomposes into eight octant regions
whose mutual blocking relations are certified pair-by-pair with distances
kept affine in r, so each verdict holds over a whole radius interval.  An
exhaustive occupancy enumeration then turns the blocking table into a cap
on the leftover regions, and the two caps add up to the bound.

Everything here is exact; certificates serialize to JSON and can be
replayed without re-running the vertex enumerations.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations, product

from gmpy2 import mpq

from .geometry import (
    HPolytope,
    VPolytope,
    cross_polytope_hrep,
    dd_convert,
    is_empty,
    l1_ball_hrep,
    l1_dist,
    l1_norm,
)
from .packings import PackingSet
from .rational import (
    AffR,
    Rat,
    RInterval,
    TWO_R,
    Verdict,
    affr_abs_interval,
    affr_cmp_interval,
    format_rat,
    parse_rat,
)
from .regions import (
    AffPoint,
    OctantSign,
    SIGNS,
    eval_points,
    flip,
    region_hrep,
    region_vertices,
    subcell_vertices,
)

BREAKPOINTS = (mpq(1, 2), mpq(6, 11), mpq(4, 7), mpq(3, 5), mpq(2, 3), mpq(1))

CERT_SCHEMA = "crosspack-bound-certificate/1"


class CertificationError(RuntimeError):
    """A sub-check failed while assembling a certificate."""


def affr_l1_dist(p: AffPoint, q: AffPoint, I: RInterval) -> AffR:
    """L1 distance between radius-parametric points, resolved over I.

    Raises MixedSignError when a coordinate difference changes sign inside
    the interval; the standard case intervals never need a split.
    """
    total = AffR.const(0)
    for a, b in zip(p, q):
        total = total + affr_abs_interval(a - b, I)
    return total


def _aff_point_json(p: AffPoint) -> list[dict]:
    return [c.to_json() for c in p]


def _aff_point_from_json(obj: list[dict]) -> AffPoint:
    return tuple(AffR.from_json(c) for c in obj)


# ---------------------------------------------------------------------------
# blocking between regions / subcells


@dataclass(frozen=True)
class BlockCase:
    """One vertex pair of a blocking check: its exact distance and verdict."""

    index: int
    x: AffPoint
    y: AffPoint
    distance: AffR
    verdict: Verdict

    def to_json(self) -> dict:
        return {
            "case": self.index,
            "x": _aff_point_json(self.x),
            "y": _aff_point_json(self.y),
            "distance": self.distance.to_json(),
            "verdict": self.verdict.value,
        }


@dataclass(frozen=True)
class BlockEntry:
    source: OctantSign
    subcell: int | None
    target: OctantSign
    cases: tuple[BlockCase, ...]
    blocked: bool

    def to_json(self) -> dict:
        return {
            "source": list(self.source),
            "subcell": self.subcell,
            "target": list(self.target),
            "blocked": self.blocked,
            "cases": [c.to_json() for c in self.cases],
        }


def blocking_check(
    source: OctantSign,
    subcell: int | None,
    target: OctantSign,
    I: RInterval,
) -> BlockEntry:
    """Certify that a point in the source (sub)region blocks the target.

    Every (source vertex, target vertex) pair must be at distance < 2r over
    all of I; convexity of the L1 distance then extends the bound to the
    full convex hulls.  Returns the per-pair evidence either way.
    """
    xs = subcell_vertices(source, subcell) if subcell else region_vertices(source)
    ys = region_vertices(target)
    cases = []
    blocked = True
    idx = 0
    for x in xs:
        for y in ys:
            idx += 1
            d = affr_l1_dist(x, y, I)
            v = affr_cmp_interval(d, TWO_R, I)
            if v is not Verdict.ALWAYS_LESS:
                blocked = False
            cases.append(BlockCase(idx, x, y, d, v))
    return BlockEntry(source, subcell, target, tuple(cases), blocked)


def region_diameter_check(I: RInterval) -> dict:
    """Max vertex-pair distance within each region, compared against 2r."""
    out = {"interval": str(I), "regions": [], "always_less": True}
    for sign in SIGNS:
        verts = region_vertices(sign)
        rows = []
        worst = None
        for i, j in combinations(range(len(verts)), 2):
            d = affr_l1_dist(verts[i], verts[j], I)
            v = affr_cmp_interval(d, TWO_R, I)
            rows.append({"pair": [i, j], "distance": d.to_json(), "verdict": v.value})
            if v is not Verdict.ALWAYS_LESS:
                out["always_less"] = False
            mid = I.midpoint()
            if worst is None or d(mid) > worst(mid):
                worst = d
        out["regions"].append(
            {"sign": list(sign), "max_distance": worst.to_json(), "pairs": rows}
        )
    return out


@dataclass
class BlockTable:
    """Proven blocking entries valid over one radius interval."""

    interval: RInterval
    entries: list[BlockEntry] = field(default_factory=list)

    def blocked_targets(self, source: OctantSign, label: int | None) -> set[OctantSign]:
        """Targets excluded by an occupant of `source` carrying `label`.

        Whole-region entries apply regardless of the occupant's subcell.
        """
        out = set()
        for e in self.entries:
            if not e.blocked or e.source != source:
                continue
            if e.subcell is None or e.subcell == label:
                out.add(e.target)
        return out

    def to_json(self) -> dict:
        return {
            "interval": str(self.interval),
            "entries": [e.to_json() for e in self.entries],
        }


def build_block_table(I: RInterval, mode: str) -> BlockTable:
    """Assemble the coordinate-flip blocking table for an interval.

    whole_region entries need the full source region to block; per_subcell
    entries block across the subcell's own coordinate only.  Entries that
    fail to certify are simply omitted (the table holds proven facts).
    """
    table = BlockTable(I)
    for sign in SIGNS:
        if mode == "whole_region":
            for i in range(3):
                e = blocking_check(sign, None, flip(sign, i), I)
                if e.blocked:
                    table.entries.append(e)
        elif mode == "per_subcell":
            for i in (1, 2, 3):
                e = blocking_check(sign, i, flip(sign, i - 1), I)
                if e.blocked:
                    table.entries.append(e)
        else:
            raise ValueError(f"unknown table mode {mode!r}")
    return table


def occupancy_bound(table: BlockTable, mode: str) -> tuple[int, list]:
    """Max number of simultaneously occupied regions consistent with a table.

    Exhaustive enumeration over all assignments: each of the 8 sign regions
    is empty or occupied (with a subcell label in per_subcell mode).  An
    assignment is consistent when no occupant blocks another occupied
    region.  Returns the maximum and one attaining assignment.
    """
    if mode == "diameter_only":
        return 8, [[list(s), "whole"] for s in SIGNS]
    if mode == "whole_region":
        labels: tuple = (None,)
    elif mode == "per_subcell":
        labels = (1, 2, 3)
    else:
        raise ValueError(f"unknown occupancy mode {mode!r}")
    best = 0
    best_assign: list = []
    states = [None] + [("occ", l) for l in labels]
    for combo in product(states, repeat=len(SIGNS)):
        occupied = {
            SIGNS[i]: combo[i][1] for i in range(len(SIGNS)) if combo[i] is not None
        }
        if len(occupied) <= best:
            continue
        ok = True
        for sign, label in occupied.items():
            if table.blocked_targets(sign, label) & occupied.keys():
                ok = False
                break
        if ok:
            best = len(occupied)
            best_assign = [
                [list(s), "whole" if l is None else l] for s, l in occupied.items()
            ]
    return best, best_assign


# ---------------------------------------------------------------------------
# vertex capture


def vertex_capture_check(n: int, r: Rat) -> tuple[bool, list[dict]]:
    """Check the capture containment at a fixed radius by vertex enumeration.

    For each vertex v of C_n^*, the intersection of the body with the
    closed ball of radius 2r around v must lie in the closed ball of
    radius r around (1-r)v.  All 2n vertices are checked even though one
    suffices by symmetry.
    """
    r = mpq(r)
    if not (0 < r <= 1):
        raise ValueError("radius must lie in (0, 1]")
    if n > 4:
        raise ValueError("vertex enumeration supported for n <= 4")
    body = cross_polytope_hrep(n)
    evidence = []
    all_ok = True
    for j in range(n):
        for s in (1, -1):
            v = tuple(mpq(s) if i == j else mpq(0) for i in range(n))
            inter = HPolytope(
                n, body.inequalities + l1_ball_hrep(v, 2 * r).inequalities
            )
            vrep = dd_convert(inter)
            center = tuple((1 - r) * c for c in v)
            target = l1_ball_hrep(center, r)
            ok = all(target.contains_point(p, on_closure=True) for p in vrep.vertices)
            all_ok = all_ok and ok
            evidence.append(
                {
                    "n": n,
                    "r": format_rat(r),
                    "vertex": [format_rat(c) for c in v],
                    "intersection_vertices": [
                        [format_rat(c) for c in p] for p in vrep.vertices
                    ],
                    "contained": ok,
                }
            )
    return all_ok, evidence


def capture_interval_certificate(n: int, I: RInterval) -> list[dict]:
    """Facet-by-facet algebraic capture proof, valid for every r in I.

    For each vertex v and each facet direction c of the target ball, the
    bound c.(x - (1-r)v) <= r follows from a single inequality satisfied
    by x: the body facet c.x <= 1 when c points with v, or the ball facet
    c.(x - v) <= 2r when it points against.  Both derived bounds equal r
    exactly, so the containment holds over any interval.
    """
    rows = []
    target = AffR(1, 0)  # the target ball radius r
    for j in range(n):
        for s in (1, -1):
            for c in product((1, -1), repeat=n):
                comp = s * c[j]  # c . v
                if comp == 1:
                    # c.x - (1-r) <= 1 - (1-r) = r
                    bound = AffR.const(1) - AffR(-1, 1)
                    source = "body_facet"
                else:
                    # c.x <= 2r - 1, so c.x + (1-r) <= r
                    bound = AffR(2, -1) + AffR(-1, 1)
                    source = "ball_facet"
                v = affr_cmp_interval(bound, target, I)
                if v not in (Verdict.ALWAYS_LEQ, Verdict.ALWAYS_LESS):
                    raise CertificationError("capture facet bound failed")
                rows.append(
                    {
                        "vertex_axis": j,
                        "vertex_sign": s,
                        "facet_pattern": list(c),
                        "source": source,
                        "bound": bound.to_json(),
                        "verdict": v.value,
                    }
                )
    return rows


def leftover_empty_certificate(n: int, I: RInterval) -> dict:
    """Farkas-style proof that no point of C_n^* avoids all vertex balls.

    Within one orthant, membership gives sum(x) <= 1 and each avoided ball
    gives 2*x_i - sum(x) <= 1 - 2r.  Adding the n ball rows with weight 1
    and the facet row with weight n-2 cancels every variable and leaves
    0 <= (2n-2) - 2nr, which is violated throughout I when I sits above
    1 - 1/n.  The same cancellation works in every orthant by sign flips,
    and all orthants are recorded explicitly.
    """
    combo = AffR(-2 * n, 2 * n - 2)  # (n)(1-2r) + (n-2)(1)
    v = affr_cmp_interval(combo, AffR.const(0), I)
    if v is not Verdict.ALWAYS_LESS:
        raise CertificationError(
            f"leftover emptiness not certified on {I} for n={n}"
        )
    orthants = []
    for sigma in product((1, -1), repeat=n):
        # verify the cancellation exactly in this orthant
        rows = []
        for i in range(n):
            rows.append([
                (mpq(2) if k == i else mpq(0)) - mpq(1) for k in range(n)
            ])
        facet = [mpq(1)] * n
        lhs = [mpq(0)] * n
        for row in rows:
            for k in range(n):
                lhs[k] += row[k] * sigma[k]
        for k in range(n):
            lhs[k] += (n - 2) * facet[k] * sigma[k]
        if any(c != 0 for c in lhs):
            raise CertificationError("Farkas combination does not cancel")
        orthants.append(list(sigma))
    return {
        "n": n,
        "ball_multiplier": "1",
        "facet_multiplier": str(n - 2),
        "combined_rhs": combo.to_json(),
        "verdict": v.value,
        "orthants": orthants,
    }


# ---------------------------------------------------------------------------
# decomposition and coverage


def decomposition_check(r: Rat) -> tuple[bool, list[dict]]:
    """Vertex enumeration of each region's facet system vs the formulas."""
    r = mpq(r)
    rows = []
    all_ok = True
    for sign in SIGNS:
        h = region_hrep(sign, r)
        formula = set(eval_points(region_vertices(sign), r))
        if r > mpq(2, 3):
            ok = is_empty(h)
            rows.append({"sign": list(sign), "r": format_rat(r), "empty": True, "match": ok})
            all_ok = all_ok and ok
            continue
        v = dd_convert(h)
        ok = v.vertex_set() == frozenset(formula)
        all_ok = all_ok and ok
        rows.append(
            {
                "sign": list(sign),
                "r": format_rat(r),
                "hrep_vertices": [[format_rat(c) for c in p] for p in sorted(v.vertices)],
                "formula_vertices": [
                    [format_rat(c) for c in p] for p in sorted(formula)
                ],
                "match": ok,
            }
        )
    return all_ok, rows


def _sample_body_points(samples: int, seed: int, dim: int = 3, denom: int = 1000):
    """Deterministic rational sample points of the closed unit L1 ball."""
    rng = random.Random(seed)
    out = []
    while len(out) < samples:
        a = [rng.randint(-denom, denom) for _ in range(dim)]
        if sum(abs(x) for x in a) <= denom:
            out.append(tuple(mpq(x, denom) for x in a))
    return out


def coverage_check(r: Rat, samples: int = 10000, seed: int = 0):
    """Spot-check that every sampled body point is near a vertex or in a region.

    Returns (True, None) when all samples are within open distance 2r of a
    vertex of C_3^* or inside some closed octant region; otherwise
    (False, witness_point).
    """
    r = mpq(r)
    verts = []
    for j in range(3):
        for s in (1, -1):
            verts.append(tuple(mpq(s) if i == j else mpq(0) for i in range(3)))
    hreps = {sign: region_hrep(sign, r) for sign in SIGNS}
    for p in _sample_body_points(samples, seed):
        if any(l1_dist(p, v) < 2 * r for v in verts):
            continue
        if any(h.contains_point(p, on_closure=True) for h in hreps.values()):
            continue
        return False, p
    return True, None


def subcell_union_check(r: Rat, samples_per_region: int = 5000, seed: int = 0):
    """Random points of each region must land in at least one subcell."""
    r = mpq(r)
    rng = random.Random(seed)
    from .geometry import vertices_to_hrep

    for sign in SIGNS:
        verts = eval_points(region_vertices(sign), r)
        cell_h = []
        for i in (1, 2, 3):
            cell = VPolytope(3, eval_points(subcell_vertices(sign, i), r))
            cell_h.append(vertices_to_hrep(cell))
        for _ in range(samples_per_region):
            w = [mpq(rng.randint(0, 1000)) for _ in verts]
            tot = sum(w) or mpq(1)
            p = tuple(
                sum(wi * v[k] for wi, v in zip(w, verts)) / tot for k in range(3)
            )
            if not any(h.contains_point(p, on_closure=True) for h in cell_h):
                return False, (sign, p)
    return True, None


# ---------------------------------------------------------------------------
# the composed bound certificate


@dataclass
class BoundCertificate:
    interval: RInterval
    n: int
    inner_cap: int
    outer_cap: int
    mode: str
    evidence: dict

    @property
    def total(self) -> int:
        return self.inner_cap + self.outer_cap

    def to_json(self) -> dict:
        return {
            "schema": CERT_SCHEMA,
            "interval": str(self.interval),
            "n": self.n,
            "inner_cap": self.inner_cap,
            "outer_cap": self.outer_cap,
            "total": self.total,
            "mode": self.mode,
            "evidence": self.evidence,
        }


def _interval_mode(I: RInterval, n: int) -> str:
    if I.is_subinterval_of(RInterval(1 - mpq(1, n), 1, lo_open=True)):
        return "vertex_only"
    if n != 3:
        raise CertificationError(
            f"no certified pipeline for n={n} on {I}"
        )
    if I.is_subinterval_of(RInterval(mpq(3, 5), mpq(2, 3), lo_open=True)):
        return "whole_region"
    if I.is_subinterval_of(RInterval(mpq(4, 7), mpq(3, 5), lo_open=True)):
        return "per_subcell"
    if I.is_subinterval_of(RInterval(mpq(1, 2), mpq(4, 7), lo_open=True)):
        return "diameter_only"
    raise CertificationError(
        f"interval {I} spans a case breakpoint; split at "
        + ", ".join(format_rat(b) for b in BREAKPOINTS)
    )


def gamma_upper_bound(
    I: RInterval, n: int = 3, coverage_samples: int = 1500
) -> BoundCertificate:
    """Compose a replayable certificate that gamma(C_n^*, r) <= total on I."""
    mode = _interval_mode(I, n)
    evidence: dict = {}
    evidence["capture_interval"] = capture_interval_certificate(n, I)
    sample_radii = sorted(set([I.lo, I.midpoint(), I.hi]))
    if n <= 3:
        cap_rows = []
        for r in sample_radii:
            ok, rows = vertex_capture_check(n, r)
            if not ok:
                raise CertificationError(f"vertex capture failed at r={r}")
            cap_rows.extend(rows)
        evidence["capture_samples"] = cap_rows

    if mode == "vertex_only":
        evidence["leftover_empty"] = leftover_empty_certificate(n, I)
        return BoundCertificate(I, n, 2 * n, 0, mode, evidence)

    dec_rows = []
    for r in sample_radii:
        ok, rows = decomposition_check(r)
        if not ok:
            raise CertificationError(f"region decomposition failed at r={r}")
        dec_rows.extend(rows)
    evidence["decomposition_samples"] = dec_rows

    cov = []
    for r in sample_radii:
        ok, witness = coverage_check(r, samples=coverage_samples, seed=0)
        if not ok:
            raise CertificationError(f"coverage failed at r={r}: {witness}")
        cov.append(
            {"r": format_rat(r), "samples": coverage_samples, "seed": 0, "ok": True}
        )
    evidence["coverage"] = cov

    if mode == "diameter_only":
        diam = region_diameter_check(I)
        if not diam["always_less"]:
            raise CertificationError(f"region diameter not < 2r on {I}")
        evidence["diameter"] = diam
        table = BlockTable(I)
    else:
        table = build_block_table(I, mode)
        expected = 24
        if len(table.entries) != expected:
            raise CertificationError(
                f"blocking table incomplete: {len(table.entries)}/{expected}"
            )
        evidence["block_table"] = table.to_json()
        # inside each region, points still need the diameter cap of one point
        diam = region_diameter_check(I)
        if not diam["always_less"]:
            raise CertificationError(f"region diameter not < 2r on {I}")
        evidence["diameter"] = diam

    bound, assignment = occupancy_bound(
        table, mode if mode != "diameter_only" else "diameter_only"
    )
    evidence["occupancy"] = {"mode": mode, "bound": bound, "assignment": assignment}
    return BoundCertificate(I, 3, 6, bound, mode, evidence)


# ---------------------------------------------------------------------------
# replay


def replay_certificate(obj: dict) -> tuple[bool, list[str]]:
    """Re-check a serialized certificate from its own evidence.

    Distances, verdicts and enumerations are recomputed from the stored
    data; the heavyweight vertex enumerations are validated against the
    stored vertex lists rather than re-derived.
    """
    failures: list[str] = []
    if obj.get("schema") != CERT_SCHEMA:
        return False, ["unknown certificate schema"]
    I = RInterval.parse(obj["interval"])
    n = obj["n"]
    ev = obj["evidence"]

    target = AffR(1, 0)
    for row in ev.get("capture_interval", []):
        bound = AffR.from_json(row["bound"])
        v = affr_cmp_interval(bound, target, I)
        if v.value != row["verdict"] or v not in (
            Verdict.ALWAYS_LEQ,
            Verdict.ALWAYS_LESS,
        ):
            failures.append(f"capture_interval row mismatch: {row}")

    for row in ev.get("capture_samples", []):
        r = parse_rat(row["r"])
        v = tuple(parse_rat(c) for c in row["vertex"])
        center = tuple((1 - r) * c for c in v)
        ball = l1_ball_hrep(center, r)
        for p in row["intersection_vertices"]:
            pt = tuple(parse_rat(c) for c in p)
            if l1_norm(pt) > 1 or l1_dist(pt, v) > 2 * r:
                failures.append(f"capture sample vertex outside source set: {p}")
            if not ball.contains_point(pt, on_closure=True):
                failures.append(f"capture containment fails at {p}")
        if not row["contained"]:
            failures.append("capture sample marked not contained")

    for row in ev.get("decomposition_samples", []):
        r = parse_rat(row["r"])
        sign = tuple(row["sign"])
        if row.get("empty"):
            if not is_empty(region_hrep(sign, r)):
                failures.append(f"region {sign} not empty at r={row['r']}")
            continue
        formula = set(eval_points(region_vertices(sign), r))
        stored = {tuple(parse_rat(c) for c in p) for p in row["hrep_vertices"]}
        h = region_hrep(sign, r)
        if stored != formula:
            failures.append(f"decomposition vertex mismatch for {sign} at {row['r']}")
        if not all(h.contains_point(p, on_closure=True) for p in stored):
            failures.append(f"stored region vertices violate H-rep for {sign}")

    for row in ev.get("coverage", []):
        ok, witness = coverage_check(
            parse_rat(row["r"]), samples=row["samples"], seed=row["seed"]
        )
        if not ok:
            failures.append(f"coverage replay failed at r={row['r']}: {witness}")

    table = None
    if "block_table" in ev:
        table = BlockTable(I)
        for e in ev["block_table"]["entries"]:
            cases = []
            blocked = True
            for c in e["cases"]:
                x = _aff_point_from_json(c["x"])
                y = _aff_point_from_json(c["y"])
                d = affr_l1_dist(x, y, I)
                if d != AffR.from_json(c["distance"]):
                    failures.append(f"block case distance mismatch: {c['case']}")
                v = affr_cmp_interval(d, TWO_R, I)
                if v.value != c["verdict"]:
                    failures.append(f"block case verdict mismatch: {c['case']}")
                if v is not Verdict.ALWAYS_LESS:
                    blocked = False
                cases.append(BlockCase(c["case"], x, y, d, v))
            if blocked != e["blocked"]:
                failures.append("block entry blocked flag mismatch")
            table.entries.append(
                BlockEntry(
                    tuple(e["source"]),
                    e["subcell"],
                    tuple(e["target"]),
                    tuple(cases),
                    blocked,
                )
            )

    if "diameter" in ev:
        for region in ev["diameter"]["regions"]:
            sign = tuple(region["sign"])
            verts = region_vertices(sign)
            for row in region["pairs"]:
                i, j = row["pair"]
                d = affr_l1_dist(verts[i], verts[j], I)
                if d != AffR.from_json(row["distance"]):
                    failures.append(f"diameter distance mismatch for {sign}")
                v = affr_cmp_interval(d, TWO_R, I)
                if v.value != row["verdict"]:
                    failures.append(f"diameter verdict mismatch for {sign}")

    if "occupancy" in ev:
        occ = ev["occupancy"]
        mode = occ["mode"]
        tab = table if table is not None else BlockTable(I)
        bound, _ = occupancy_bound(tab, mode)
        if bound != occ["bound"]:
            failures.append(f"occupancy bound mismatch: {bound} != {occ['bound']}")
        occupied = {tuple(s): (None if l == "whole" else l) for s, l in occ["assignment"]}
        for sign, label in occupied.items():
            if tab.blocked_targets(sign, label) & occupied.keys():
                failures.append("occupancy attaining assignment inconsistent")
        if len(occupied) != occ["bound"]:
            failures.append("occupancy assignment does not attain the bound")

    if "leftover_empty" in ev:
        row = ev["leftover_empty"]
        combo = AffR.from_json(row["combined_rhs"])
        if combo != AffR(-2 * n, 2 * n - 2):
            failures.append("leftover Farkas combination mismatch")
        if affr_cmp_interval(combo, AffR.const(0), I) is not Verdict.ALWAYS_LESS:
            failures.append("leftover emptiness verdict fails on replay")

    if obj["total"] != obj["inner_cap"] + obj["outer_cap"]:
        failures.append("total != inner_cap + outer_cap")
    return not failures, failures


# ---------------------------------------------------------------------------
# frontier analysis of a concrete configuration


def frontier_analysis(P: PackingSet, r: Rat) -> dict:
    """Classify each octant region as occupied, blocked, or open for P at r.

    A region is blocked when a single point of P is within strict distance
    2r of all four region vertices (convexity then covers the whole
    region).  For each blocked region the witness point and its vertex
    distances are reported.
    """
    r = mpq(r)
    if P.dim != 3:
        raise ValueError("frontier analysis is 3-dimensional")
    report = {"r": format_rat(r), "regions": []}
    for sign in SIGNS:
        h = region_hrep(sign, r)
        verts = eval_points(region_vertices(sign), r)
        occupants = [
            i for i, p in enumerate(P.points) if h.contains_point(p, on_closure=True)
        ]
        entry: dict = {"sign": list(sign)}
        if occupants:
            entry["status"] = "occupied"
            entry["occupants"] = occupants
        else:
            blocker = None
            for i, p in enumerate(P.points):
                dists = [l1_dist(v, p) for v in verts]
                if all(d < 2 * r for d in dists):
                    blocker = (i, dists)
                    break
            if blocker is not None:
                entry["status"] = "blocked"
                entry["blocker"] = blocker[0]
                entry["vertex_distances"] = [format_rat(d) for d in blocker[1]]
            else:
                entry["status"] = "open"
        report["regions"].append(entry)
    return report
