"""Stochastic maximin-dispersion search inside the unit cross-polytope.

Floating point is used only inside the annealing loop; candidate
configurations are snapped to small-denominator rationals and every
reported radius is re-derived exactly by the packings module, so no float
ever reaches a certificate.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from gmpy2 import mpq

from .packings import KNOWN_RADII, PackingSet, critical_radius
from .rational import Rat, format_rat, parse_rat

# annealing constants, recorded in every result for reproducibility.
# The first quarter of the iteration budget (capped) relocates one endpoint
# of the minimum pair to the best of REINSERT_CANDIDATES random boundary
# positions; the remainder is a local polish whose step decays
# geometrically from STEP_INIT to STEP_FINAL.
STEP_INIT = 0.1
STEP_FINAL = 1e-3
TEMP_INIT = 0.02
TEMP_FINAL = 1e-5
REINSERT_CANDIDATES = 300
REINSERT_CAP = 600
REINSERT_ACCEPT_WORSE = 0.05


@dataclass(frozen=True)
class SearchConfig:
    dim: int
    k: int
    restarts: int = 32
    max_iters: int = 4000
    seed: int = 0
    denominator_bound: int = 12
    target_radius: Rat | None = None
    initial: PackingSet | None = None

    def __post_init__(self):
        if self.k < 2:
            raise ValueError("need at least 2 points")
        if self.denominator_bound < 1:
            raise ValueError("denominator bound must be >= 1")
        if self.initial is not None and (
            self.initial.dim != self.dim or len(self.initial) != self.k
        ):
            raise ValueError("initial set does not match dim/k")

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "k": self.k,
            "restarts": self.restarts,
            "max_iters": self.max_iters,
            "seed": self.seed,
            "denominator_bound": self.denominator_bound,
            "target_radius": None
            if self.target_radius is None
            else format_rat(self.target_radius),
            "initial": None if self.initial is None else self.initial.to_json(),
        }

    @staticmethod
    def from_json(obj: dict) -> "SearchConfig":
        return SearchConfig(
            dim=obj["dim"],
            k=obj["k"],
            restarts=obj.get("restarts", 32),
            max_iters=obj.get("max_iters", 4000),
            seed=obj.get("seed", 0),
            denominator_bound=obj.get("denominator_bound", 12),
            target_radius=None
            if obj.get("target_radius") is None
            else parse_rat(obj["target_radius"]),
            initial=None
            if obj.get("initial") is None
            else PackingSet.from_json(obj["initial"]),
        )


@dataclass
class SearchResult:
    config: SearchConfig
    best_float_points: list[list[float]]
    best_float_min_distance: float
    history: list[dict] = field(default_factory=list)
    snapped: PackingSet | None = None
    snapped_denominator: int | None = None
    certified_radius: Rat | None = None
    record: bool = False

    def to_json(self) -> dict:
        return {
            "config": self.config.to_json(),
            "annealing": {
                "step_init": STEP_INIT,
                "step_final": STEP_FINAL,
                "temp_init": TEMP_INIT,
                "temp_final": TEMP_FINAL,
                "reinsert_candidates": REINSERT_CANDIDATES,
                "reinsert_cap": REINSERT_CAP,
                "reinsert_accept_worse": REINSERT_ACCEPT_WORSE,
            },
            "best_float_points": self.best_float_points,
            "best_float_min_distance": self.best_float_min_distance,
            "history": self.history,
            "snapped": None if self.snapped is None else self.snapped.to_json(),
            "snapped_denominator": self.snapped_denominator,
            "certified_radius": None
            if self.certified_radius is None
            else format_rat(self.certified_radius),
            "record": self.record,
        }


def _project_l1(X: np.ndarray) -> np.ndarray:
    """Radial projection onto the unit L1 ball: x -> x / max(1, ||x||_1)."""
    norms = np.abs(X).sum(axis=1)
    return X / np.maximum(1.0, norms)[:, None]


def _pairwise_sorted(X: np.ndarray) -> np.ndarray:
    diffs = np.abs(X[:, None, :] - X[None, :, :]).sum(axis=2)
    iu = np.triu_indices(len(X), k=1)
    return np.sort(diffs[iu])


def _objective(X: np.ndarray) -> tuple:
    """Full sorted distance profile; lexicographic comparison maximizes the
    minimum first, then the second-smallest, and so on down the list."""
    return tuple(_pairwise_sorted(X))


def _min_pair(X: np.ndarray) -> tuple[int, int]:
    diffs = np.abs(X[:, None, :] - X[None, :, :]).sum(axis=2)
    np.fill_diagonal(diffs, np.inf)
    i, j = np.unravel_index(np.argmin(diffs), diffs.shape)
    return (int(i), int(j)) if i < j else (int(j), int(i))


def _uniform_l1(rng: np.random.Generator, k: int, dim: int) -> np.ndarray:
    """k points uniform in the unit L1 ball (exponential-ratio construction)."""
    e = rng.exponential(size=(k, dim + 1))
    mags = e[:, :dim] / e.sum(axis=1)[:, None]
    signs = rng.choice([-1.0, 1.0], size=(k, dim))
    return mags * signs


def _anneal_one(config: SearchConfig, restart: int) -> tuple[np.ndarray, tuple]:
    rng = np.random.default_rng([config.seed, restart])
    if config.initial is not None:
        X = np.array(
            [[float(c) for c in p] for p in config.initial.points], dtype=float
        )
    else:
        X = _uniform_l1(rng, config.k, config.dim)
    best = X.copy()
    best_obj = cur_obj = _objective(X)
    reinsert_iters = min(REINSERT_CAP, config.max_iters // 4)
    polish_iters = config.max_iters - reinsert_iters

    # phase 1: relocate one endpoint of the critical pair to the best of
    # many random boundary positions; escapes the plateaus a local step
    # cannot leave
    for _ in range(reinsert_iters):
        i, j = _min_pair(X)
        idx = i if rng.random() < 0.5 else j
        others = np.delete(X, idx, axis=0)
        cands = _uniform_l1(rng, REINSERT_CANDIDATES, config.dim)
        cands /= np.abs(cands).sum(axis=1, keepdims=True)
        dmin = np.abs(cands[:, None, :] - others[None, :, :]).sum(axis=2).min(axis=1)
        cand = X.copy()
        cand[idx] = cands[dmin.argmax()]
        new_obj = _objective(cand)
        if new_obj > cur_obj or rng.random() < REINSERT_ACCEPT_WORSE:
            X, cur_obj = cand, new_obj
            if cur_obj > best_obj:
                best, best_obj = X.copy(), cur_obj

    # phase 2: annealed local steps with decaying step size
    T = max(1, polish_iters)
    step_ratio = (STEP_FINAL / STEP_INIT) ** (1.0 / T)
    temp_ratio = (TEMP_FINAL / TEMP_INIT) ** (1.0 / T)
    step = STEP_INIT
    temp = TEMP_INIT
    for _ in range(polish_iters):
        i, j = _min_pair(X)
        idx = i if rng.random() < 0.5 else j
        cand = X.copy()
        direction = rng.normal(size=config.dim)
        norm = np.abs(direction).sum()
        direction = direction / norm if norm > 0 else direction
        cand[idx] += step * direction
        cand = _project_l1(cand)
        new_obj = _objective(cand)
        delta = new_obj[0] - cur_obj[0]
        if new_obj > cur_obj or rng.random() < np.exp(
            min(delta / max(temp, 1e-12), 0.0)
        ):
            X, cur_obj = cand, new_obj
            if cur_obj > best_obj:
                best, best_obj = X.copy(), cur_obj
        step *= step_ratio
        temp *= temp_ratio
    return best, best_obj


def local_search(config: SearchConfig) -> SearchResult:
    """Run all restarts and keep the best configuration.

    Each restart draws its random stream from (seed, restart index), so the
    outcome does not depend on execution order.  Every restart is snapped
    and certified exactly; the reduction ranks by certified radius first,
    then float objective, then restart index.
    """
    best = None
    best_key = None
    history = []
    for restart in range(max(1, config.restarts)):
        X, obj = _anneal_one(config, restart)
        try:
            snapped, d = snap_rational(X, config.denominator_bound)
            r = critical_radius(snapped)
        except ValueError:
            snapped, d, r = None, None, None
        history.append(
            {
                "restart": restart,
                "min_distance": obj[0],
                "certified_radius": None if r is None else format_rat(r),
            }
        )
        key = (mpq(-1) if r is None else r, obj, -restart)
        if best_key is None or key > best_key:
            best, best_key = (X, obj, snapped, d, r, restart), key
    X, obj, snapped, d, r, restart = best
    history.append({"best_restart": restart})
    return SearchResult(
        config=config,
        best_float_points=[list(map(float, row)) for row in X],
        best_float_min_distance=float(obj[0]),
        history=history,
        snapped=snapped,
        snapped_denominator=d,
        certified_radius=r,
    )


def _snap_one(points, d: int) -> PackingSet | None:
    """Round to the 1/d grid and clamp into the body; None on collapse."""
    snapped = []
    for p in points:
        q = tuple(mpq(round(float(c) * d), d) for c in p)
        norm = sum(abs(c) for c in q)
        if norm > 1:
            q = tuple(c / norm for c in q)
        snapped.append(q)
    if len(set(snapped)) != len(snapped):
        return None
    return PackingSet(len(snapped[0]), tuple(snapped), label=f"snap-d{d}")


def snap_rational(points, denominator_bound: int) -> tuple[PackingSet, int]:
    """Best rational rounding of a float configuration.

    Tries every denominator up to the bound and returns the candidate with
    the largest exact critical radius, together with the denominator used.
    Denominators where two points collapse are skipped.
    """
    best = None
    best_r = None
    best_d = None
    for d in range(1, denominator_bound + 1):
        cand = _snap_one(points, d)
        if cand is None:
            continue
        r = critical_radius(cand)
        if best_r is None or r > best_r:
            best, best_r, best_d = cand, r, d
    if best is None:
        raise ValueError("every candidate denominator collapsed two points")
    return best, best_d


def certify_result(result: SearchResult) -> SearchResult:
    """Fill the exact fields of a result and flag records.

    Snaps the float points when local_search could not, re-derives the
    certified radius exactly, and compares against the built-in table of
    best known radii for (dim, k).
    """
    if result.snapped is None:
        snapped, d = snap_rational(
            result.best_float_points, result.config.denominator_bound
        )
        result.snapped = snapped
        result.snapped_denominator = d
    result.certified_radius = critical_radius(result.snapped)
    known = KNOWN_RADII.get((result.config.dim, result.config.k))
    result.record = known is not None and result.certified_radius > known
    return result


def run_search(config: SearchConfig) -> SearchResult:
    return certify_result(local_search(config))
