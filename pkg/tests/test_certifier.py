"""Interval certificates: blocking tables, capture, occupancy, replay."""

import copy
import json
import random

import pytest
from gmpy2 import mpq

from crosspack.certifier import (
    BlockTable,
    CertificationError,
    affr_l1_dist,
    blocking_check,
    build_block_table,
    capture_interval_certificate,
    coverage_check,
    decomposition_check,
    frontier_analysis,
    gamma_upper_bound,
    leftover_empty_certificate,
    occupancy_bound,
    region_diameter_check,
    replay_certificate,
    vertex_capture_check,
)
from crosspack.packings import construct
from crosspack.rational import AffR, RInterval, Verdict
from crosspack.regions import SIGNS, region_vertices

I_A = RInterval(mpq(3, 5), mpq(2, 3), lo_open=True)   # whole-region interval
I_B = RInterval(mpq(4, 7), mpq(3, 5), lo_open=True)   # per-subcell interval
I_C = RInterval(mpq(1, 2), mpq(4, 7), lo_open=True)   # diameter-only interval


def test_affr_l1_dist():
    p = region_vertices((1, 1, 1))[0]
    q = region_vertices((-1, -1, -1))[0]
    assert affr_l1_dist(p, q, I_A) == AffR(12, -6)


# The 20-case grid for subcell 1 of (1,1,1) against the flipped region
# (-1,1,1): distances indexed row-major, 5 subcell vertices x 4 region
# vertices.  These closed forms were independently verified by evaluating
# every vertex pair at two rational radii and fitting the affine form.
EXPECTED_20 = {
    1: AffR(4, -2),
    2: AffR(-2, 2),
    3: AffR(-2, 2),
    4: AffR(-2, 2),
    5: AffR(-2, 2),
    6: AffR(-2, 2),
    7: AffR(-2, 2),
    8: AffR(4, -2),
    9: AffR(-2, 2),
    10: AffR(-2, 2),
    11: AffR(-5, 4),
    12: AffR(1, 0),
    13: AffR(-2, 2),
    14: AffR(-5, 4),
    15: AffR(-2, 2),
    16: AffR(1, 0),
    17: AffR(-2, 2),
    18: AffR(-4, mpq(10, 3)),
    19: AffR(-4, mpq(10, 3)),
    20: AffR(0, mpq(2, 3)),
}


def test_twenty_case_grid():
    entry = blocking_check((1, 1, 1), 1, (-1, 1, 1), I_B)
    assert entry.blocked
    assert len(entry.cases) == 20
    for case in entry.cases:
        assert case.distance == EXPECTED_20[case.index], case.index
        assert case.verdict is Verdict.ALWAYS_LESS


def test_twenty_case_numeric_oracle():
    """Re-derive every case distance numerically at two radii."""
    entry = blocking_check((1, 1, 1), 1, (-1, 1, 1), I_B)
    for r in (mpq(117, 200), mpq(23, 40)):
        for case in entry.cases:
            x = tuple(c(r) for c in case.x)
            y = tuple(c(r) for c in case.y)
            num = sum(abs(a - b) for a, b in zip(x, y))
            assert case.distance(r) == num


def test_whole_region_blocking():
    entry = blocking_check((1, 1, 1), None, (-1, 1, 1), I_A)
    assert entry.blocked
    assert len(entry.cases) == 16
    forms = {c.distance for c in entry.cases}
    assert forms == {AffR(4, -2), AffR(-2, 2), AffR(-8, 6)}


def test_whole_region_blocking_fails_below():
    # 6-8r is not below 2r for r <= 3/5, so the same entry fails on I_B
    entry = blocking_check((1, 1, 1), None, (-1, 1, 1), I_B)
    assert not entry.blocked


def test_double_flip_not_blocked():
    entry = blocking_check((1, 1, 1), None, (-1, -1, 1), I_A)
    assert not entry.blocked


def test_region_diameter():
    for I in (I_A, I_B, I_C):
        out = region_diameter_check(I)
        assert out["always_less"]
        for region in out["regions"]:
            assert AffR.from_json(region["max_distance"]) == AffR(-6, 4)


def test_build_tables():
    assert len(build_block_table(I_A, "whole_region").entries) == 24
    assert len(build_block_table(I_B, "per_subcell").entries) == 24
    with pytest.raises(ValueError):
        build_block_table(I_A, "bogus")


def test_occupancy_bounds():
    assert occupancy_bound(build_block_table(I_A, "whole_region"), "whole_region")[0] == 4
    assert occupancy_bound(build_block_table(I_B, "per_subcell"), "per_subcell")[0] == 6
    assert occupancy_bound(BlockTable(I_C), "diameter_only")[0] == 8


def test_occupancy_attaining_assignment_consistent():
    table = build_block_table(I_A, "whole_region")
    bound, assignment = occupancy_bound(table, "whole_region")
    occupied = {tuple(s): (None if l == "whole" else l) for s, l in assignment}
    assert len(occupied) == bound
    for sign, label in occupied.items():
        assert not (table.blocked_targets(sign, label) & occupied.keys())


def test_occupancy_monotone():
    """Adding entries to a table never increases the bound."""
    full = build_block_table(I_A, "whole_region")
    for k in (0, 8, 16, 24):
        partial = BlockTable(I_A, full.entries[:k])
        b_partial = occupancy_bound(partial, "whole_region")[0]
        b_full = occupancy_bound(full, "whole_region")[0]
        assert b_partial >= b_full


def test_block_table_numeric_at_random_radii():
    """always_less verdicts re-checked numerically at 1,000 random radii."""
    rng = random.Random(99)
    for I, mode in ((I_A, "whole_region"), (I_B, "per_subcell")):
        table = build_block_table(I, mode)
        for _ in range(1000):
            den = rng.randint(100, 10000)
            lo, hi = I.lo * den, I.hi * den
            num = rng.randint(int(lo) + 1, int(hi))
            r = mpq(num, den)
            if r not in I:
                continue
            e = table.entries[rng.randrange(len(table.entries))]
            c = e.cases[rng.randrange(len(e.cases))]
            assert c.distance(r) < 2 * r


def test_vertex_capture_fixed_radii():
    for r in (mpq(6, 11), mpq(3, 5), mpq(2, 3), mpq(1)):
        ok, ev = vertex_capture_check(3, r)
        assert ok, r
        assert len(ev) == 6
    ok, _ = vertex_capture_check(2, mpq(1))
    assert ok
    with pytest.raises(ValueError):
        vertex_capture_check(5, mpq(1))
    with pytest.raises(ValueError):
        vertex_capture_check(3, mpq(2))


def test_capture_interval_certificate():
    rows = capture_interval_certificate(3, I_B)
    assert len(rows) == 6 * 8
    for row in rows:
        assert AffR.from_json(row["bound"]) == AffR(1, 0)
    rows5 = capture_interval_certificate(5, RInterval(mpq(4, 5), 1, lo_open=True))
    assert len(rows5) == 10 * 32


def test_leftover_empty_certificate():
    for n in (2, 3, 4, 5, 6):
        I = RInterval(1 - mpq(1, n), 1, lo_open=True)
        row = leftover_empty_certificate(n, I)
        assert row["verdict"] == "always_less"
        assert len(row["orthants"]) == 2**n
    with pytest.raises(CertificationError):
        leftover_empty_certificate(3, RInterval(mpq(1, 2), mpq(2, 3), lo_open=True))


def test_decomposition_check():
    ok, rows = decomposition_check(mpq(3, 5))
    assert ok and len(rows) == 8
    ok, rows = decomposition_check(mpq(3, 4))
    assert ok and all(r["empty"] for r in rows)


def test_coverage_check():
    ok, witness = coverage_check(mpq(3, 5), samples=500, seed=0)
    assert ok and witness is None
    ok, witness = coverage_check(mpq(1, 2) + mpq(1, 100), samples=500, seed=0)
    assert ok


def test_gamma_upper_bounds():
    assert gamma_upper_bound(I_A, 3, coverage_samples=200).total == 10
    assert gamma_upper_bound(I_B, 3, coverage_samples=200).total == 12
    assert gamma_upper_bound(I_C, 3, coverage_samples=200).total == 14
    for n in (2, 3, 4, 5):
        I = RInterval(1 - mpq(1, n), 1, lo_open=True)
        assert gamma_upper_bound(I, n).total == 2 * n


def test_gamma_requires_breakpoint_aligned_interval():
    with pytest.raises(CertificationError):
        gamma_upper_bound(RInterval(mpq(1, 2), mpq(2, 3), lo_open=True), 3)
    with pytest.raises(CertificationError):
        gamma_upper_bound(I_A, 4)


def test_gamma_subinterval():
    I = RInterval(mpq(7, 12), mpq(3, 5), lo_open=True)  # inside (4/7, 3/5]
    assert gamma_upper_bound(I, 3, coverage_samples=200).total == 12


def test_bound_never_below_construction():
    pairs = (
        (I_A, "q10", 10),
        (I_B, "q12", 12),
        (I_C, "q13", 14),
    )
    for I, name, bound in pairs:
        cert = gamma_upper_bound(I, 3, coverage_samples=200)
        P = construct(name)
        assert cert.total == bound
        assert len(P) <= cert.total


def test_certificate_replay_roundtrip():
    for I in (I_A, I_B, I_C):
        cert = gamma_upper_bound(I, 3, coverage_samples=200)
        obj = json.loads(json.dumps(cert.to_json()))
        ok, failures = replay_certificate(obj)
        assert ok, failures


def test_certificate_replay_detects_tampering():
    cert = gamma_upper_bound(I_A, 3, coverage_samples=200)
    obj = json.loads(json.dumps(cert.to_json()))

    bad = copy.deepcopy(obj)
    bad["total"] = 9
    ok, failures = replay_certificate(bad)
    assert not ok

    bad = copy.deepcopy(obj)
    case = bad["evidence"]["block_table"]["entries"][0]["cases"][0]
    case["distance"] = {"a": "0", "b": "0"}
    ok, failures = replay_certificate(bad)
    assert not ok

    bad = copy.deepcopy(obj)
    bad["evidence"]["occupancy"]["bound"] = 3
    ok, failures = replay_certificate(bad)
    assert not ok


def test_frontier_q13():
    report = frontier_analysis(construct("q13"), mpq(6, 11))
    by_sign = {tuple(e["sign"]): e for e in report["regions"]}
    open_region = by_sign[(1, 1, 1)]
    assert open_region["status"] == "blocked"
    assert construct("q13").points[open_region["blocker"]] == (
        mpq(-1, 11),
        mpq(5, 11),
        mpq(5, 11),
    )
    assert sorted(open_region["vertex_distances"]) == ["10/11", "10/11", "10/11", "2/11"]
    for sign in SIGNS:
        if sign != (1, 1, 1):
            assert by_sign[sign]["status"] == "occupied"


def test_frontier_q10():
    report = frontier_analysis(construct("q10"), mpq(2, 3))
    occupied = {
        tuple(e["sign"]) for e in report["regions"] if e["status"] == "occupied"
    }
    assert occupied == {s for s in SIGNS if s[0] * s[1] * s[2] == 1}
