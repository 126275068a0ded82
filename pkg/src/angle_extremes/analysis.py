"""Minimum-angle oracle, the constructive pi/n witness and the Monte-Carlo verifier.

The witness follows the classical argument: pick an extremal point ``p`` of
the convex hull with hull neighbours ``x_1`` and ``x_{n-1}``, order the other
points by their angle from ``x_1`` as seen from ``p`` and look at the gaps
``gamma_i`` between consecutive rays. Either one gap is at most ``pi/n``, or
the gaps add up to more than ``(n-2) pi / n`` and one of the two base angles
of the triangle ``(p, x_1, x_{n-1})`` must be at most ``pi/n``. In the
hyperbolic plane the angle sum of that triangle is below ``pi``, which turns
every bound strict.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

import numpy as np

from . import euclidean as _euc
from . import hyperbolic as _hyp
from .configuration import Configuration
from .errors import AllCollinear, DomainError, TheoremViolation

# Absolute slack on the Euclidean pi/n comparisons; the regular polygon sits
# exactly on the bound.
BOUND_SLACK = 1e-12
# Tolerance on witness-vs-oracle comparisons.
WITNESS_SLACK = 1e-12

SAMPLERS = {"euclidean": "uniform-square", "hyperbolic": "hyperbolic-uniform"}


def all_angles(config: Configuration) -> np.ndarray:
    """Every triple angle, ordered as :func:`angle_extremes.euclidean.triple_indices`."""
    if config.geometry == "hyperbolic":
        return _hyp.triple_angles(config.points)
    return _euc.triple_angles(config.points)


def fast_min_angle(geometry: str, points: np.ndarray) -> float:
    """Unvalidated minimum angle of a raw ``(n, d)`` array."""
    if geometry == "hyperbolic":
        return float(_hyp.triple_angles(points).min())
    return float(_euc.triple_angles(points).min())


def angle_of(config: Configuration, i: int, j: int, k: int) -> float:
    """Angle at point ``j`` of the triple ``(i, j, k)``."""
    pts = config.points
    if config.geometry == "hyperbolic":
        return _hyp.hyp_angle_at(pts[i], pts[j], pts[k])
    return _euc.angle_at(pts[i], pts[j], pts[k])


def _angles_at(config, vertex, arms, others) -> np.ndarray:
    """Vectorised ``angle(arms[t], vertex, others[t])``.

    Arms are put in index order and hyperbolic sides are read from the same
    distance matrix as :func:`all_angles`, so each value is bit-identical to
    the oracle's entry for that triple.
    """
    pts = config.points
    arms = np.asarray(arms, dtype=np.intp)
    others = np.asarray(others, dtype=np.intp)
    lo, hi = np.minimum(arms, others), np.maximum(arms, others)
    if config.geometry == "hyperbolic":
        D = _hyp.distance_matrix(pts)
        return _hyp.angle_from_sides(D[lo, hi], D[vertex, lo], D[vertex, hi])
    q = pts[vertex]
    return _euc._angles_from_vectors(pts[lo] - q, pts[hi] - q)


def _pair_dist(pts, A, B):
    u, v = pts[A], pts[B]
    w = np.sqrt((1.0 - np.sum(u * u, axis=-1)) * (1.0 - np.sum(v * v, axis=-1)))
    return 2.0 * np.arcsinh(np.linalg.norm(u - v, axis=-1) / w)


def _distances_from(config, vertex, others):
    pts = config.points
    if config.geometry == "hyperbolic":
        return _pair_dist(pts, np.full(len(others), vertex, dtype=np.intp), np.asarray(others))
    return np.linalg.norm(pts[np.asarray(others, dtype=np.intp)] - pts[vertex], axis=-1)


def convex_hull(config: Configuration) -> _euc.ConvexHull:
    if config.geometry == "hyperbolic":
        return _hyp.convex_hull(config)
    return _euc.convex_hull(config)


@dataclass(frozen=True)
class AngleReport:
    min_angle: float
    witness: tuple[int, int, int]  # angle at the middle index
    total_triples_scanned: int

    @property
    def min_angle_degrees(self) -> float:
        return math.degrees(self.min_angle)


def min_angle(config: Configuration) -> AngleReport:
    """Exhaustive minimum over all ``3 C(n, 3)`` angles.

    Ties resolve to the lexicographically smallest ``(i, j, k)``.
    """
    angles = all_angles(config)
    t = int(np.argmin(angles))
    I, J, K = _euc.triple_indices(config.n)
    return AngleReport(float(angles[t]), (int(I[t]), int(J[t]), int(K[t])), int(angles.size))


def angular_ordering(config: Configuration, p: int, x1: int, xlast: int) -> list[int]:
    """The points other than ``p`` ordered by their angle from ``x1`` at ``p``.

    ``x1`` always comes first and ``xlast`` last. Rays carrying several points
    list the nearer point first.
    """
    rest = [i for i in range(config.n) if i not in (p, x1, xlast)]
    if not rest:
        return [x1, xlast]
    ang = _angles_at(config, p, [x1] * len(rest), rest)
    dist = _distances_from(config, p, rest)
    order = np.lexsort((dist, ang))
    return [x1] + [rest[i] for i in order] + [xlast]


@dataclass
class WitnessCertificate:
    geometry: str
    n: int
    extremal_index: int
    ordering: list[int]
    gaps: list[float]
    apex_angle: float  # angle(x_1, p, x_{n-1})
    certified_triple: tuple[int, int, int]
    certified_angle: float
    branch: str  # "gap", "base-angle" or "collinear"
    bound: float = field(init=False)

    def __post_init__(self):
        self.bound = math.pi / self.n

    @property
    def telescoping_residual(self) -> float:
        if not self.gaps:
            return 0.0
        return abs(math.fsum(self.gaps) - self.apex_angle)

    @property
    def margin(self) -> float:
        return self.bound - self.certified_angle

    def to_dict(self) -> dict:
        d = asdict(self)
        d["certified_triple"] = list(self.certified_triple)
        d["margin"] = self.margin
        return d


def _collinear_certificate(config: Configuration) -> WitnessCertificate:
    pts = _hyp.to_klein(config.points) if config.geometry == "hyperbolic" else config.points
    direction = pts[np.argmax(np.linalg.norm(pts - pts[0], axis=1))] - pts[0]
    order = np.argsort(pts @ direction, kind="stable")
    a, b, c = (int(x) for x in order[:3])
    return WitnessCertificate(
        geometry=config.geometry,
        n=config.n,
        extremal_index=a,
        ordering=[int(x) for x in order if x != a],
        gaps=[],
        apex_angle=0.0,
        certified_triple=(b, a, c),
        certified_angle=angle_of(config, b, a, c),
        branch="collinear",
    )


def constructive_witness(config: Configuration) -> WitnessCertificate:
    """Extract a triple whose angle is at most ``pi/n`` (strictly below it in
    the hyperbolic plane) by running the extremal-point argument forward."""
    if not config.is_planar:
        raise DomainError("the witness construction needs a planar configuration")
    try:
        hull = convex_hull(config)
    except AllCollinear:
        return _collinear_certificate(config)

    n = config.n
    bound = math.pi / n
    p = min(hull.extremal_indices)
    x1, xlast = hull.neighbors(p)
    ordering = angular_ordering(config, p, x1, xlast)
    gaps = _angles_at(config, p, ordering[:-1], ordering[1:])
    apex = float(_angles_at(config, p, [x1], [xlast])[0])
    hyperbolic = config.geometry == "hyperbolic"

    i = int(np.argmin(gaps))
    smallest_gap = float(gaps[i])
    if smallest_gap < bound or (not hyperbolic and smallest_gap <= bound):
        triple = (ordering[i], p, ordering[i + 1])
        angle = smallest_gap
        branch = "gap"
    else:
        at_x1 = float(_angles_at(config, x1, [p], [xlast])[0])
        at_xlast = float(_angles_at(config, xlast, [x1], [p])[0])
        if at_x1 <= at_xlast:
            triple, angle = (p, x1, xlast), at_x1
        else:
            triple, angle = (x1, xlast, p), at_xlast
        branch = "base-angle"

    cert = WitnessCertificate(
        geometry=config.geometry,
        n=n,
        extremal_index=p,
        ordering=ordering,
        gaps=[float(g) for g in gaps],
        apex_angle=apex,
        certified_triple=triple,
        certified_angle=angle,
        branch=branch,
    )
    if (hyperbolic and not angle < bound) or (not hyperbolic and angle > bound + BOUND_SLACK):
        raise TheoremViolation(
            f"witness angle {angle!r} does not meet the pi/{n} bound", config
        )
    return cert


def _recentre_hyperbolic(points):
    return _hyp.mobius_translate(points, _hyp._circumcentre(points))


def regularity_score(config: Configuration) -> float:
    """Zero exactly for the vertices of a regular polygon.

    Root-sum-square of the coefficients of variation of (a) the distances to
    the centroid and (b) the consecutive central angles after sorting.
    Hyperbolic configurations are first moved so that their centre sits at
    the origin of the disk, where regular polygons are Euclidean-regular.
    """
    pts = config.points
    if not config.is_planar:
        raise DomainError("regularity is defined for planar configurations")
    if config.geometry == "hyperbolic":
        pts = _recentre_hyperbolic(pts)
    rel = pts - pts.mean(axis=0)
    radii = np.hypot(rel[:, 0], rel[:, 1])
    theta = np.sort(np.arctan2(rel[:, 1], rel[:, 0]))
    steps = np.diff(np.append(theta, theta[0] + 2.0 * np.pi))
    spread_r = radii.std() / radii.mean()
    spread_a = steps.std() / steps.mean()
    return float(math.hypot(spread_r, spread_a))


# --------------------------------------------------------------------------
# Monte-Carlo verification


def trial_rng(seed: int, trial: int) -> np.random.Generator:
    """Independent stream per (seed, trial), so any work split gives the same draws."""
    return np.random.default_rng([seed, trial])


def sample_configuration(geometry: str, n: int, rng: np.random.Generator,
                         sampler: str | None = None, radius: float = 1.0) -> Configuration:
    sampler = sampler or SAMPLERS[geometry]
    if sampler == "uniform-square":
        if geometry != "euclidean":
            raise DomainError("uniform-square sampling is Euclidean")
        return Configuration("euclidean", rng.random((n, 2)))
    if sampler == "hyperbolic-uniform":
        if geometry != "hyperbolic":
            raise DomainError("hyperbolic-uniform sampling is hyperbolic")
        return Configuration("hyperbolic", _hyp.sample_uniform_disk(rng, n, radius))
    raise DomainError(f"unknown sampler {sampler!r}")


@dataclass(frozen=True)
class TrialRecord:
    min_angle: float
    certified_angle: float
    branch: str
    violation: bool
    witness_ok: bool


def check_configuration(config: Configuration) -> TrialRecord:
    """Run oracle and witness on one configuration and compare both to pi/n."""
    bound = math.pi / config.n
    alpha = min_angle(config).min_angle
    try:
        cert = constructive_witness(config)
        cert_angle, branch, cert_ok = cert.certified_angle, cert.branch, True
    except TheoremViolation:
        cert_angle, branch, cert_ok = math.nan, "failed", False
    if config.geometry == "hyperbolic":
        violation = not alpha < bound
    else:
        violation = alpha > bound + BOUND_SLACK
    witness_ok = cert_ok and cert_angle >= alpha - WITNESS_SLACK
    return TrialRecord(alpha, cert_angle, branch, violation, witness_ok)


@dataclass
class VerificationSummary:
    geometry: str
    n: int
    trials: int
    sampler: str
    seed: int
    radius: float
    bound: float
    max_min_angle: float
    min_margin: float  # bound - max_min_angle
    violations: int
    witness_failures: int
    max_witness_excess: float  # largest certified - oracle
    mean_witness_excess: float
    witness_is_oracle_min: int  # samples where the certificate hits the exact minimum
    branch_counts: dict
    first_violation: int | None

    def to_dict(self) -> dict:
        return asdict(self)


def _run_chunk(args):
    geometry, n, sampler, seed, radius, start, stop = args
    out = []
    for t in range(start, stop):
        cfg = sample_configuration(geometry, n, trial_rng(seed, t), sampler, radius)
        r = check_configuration(cfg)
        out.append((r.min_angle, r.certified_angle, r.branch, r.violation, r.witness_ok))
    return out


def default_threads() -> int:
    env = os.environ.get("ANGLE_EXTREMES_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def _chunks(total, threads, per_chunk=None):
    per_chunk = per_chunk or max(1, math.ceil(total / (4 * threads)))
    return [(s, min(s + per_chunk, total)) for s in range(0, total, per_chunk)]


def verify_theorem(geometry: str, n: int, trials: int, sampler: str | None = None,
                   seed: int = 0, radius: float = 1.0, threads: int | None = 1,
                   raise_on_violation: bool = True) -> VerificationSummary:
    """Sample ``trials`` random configurations and check ``alpha_min <= pi/n``.

    Euclidean samples are uniform in the unit square; hyperbolic ones are
    uniform for hyperbolic area in the disk of hyperbolic radius ``radius``.
    The summary is identical for any ``threads`` value.
    """
    if trials < 1:
        raise DomainError("trials must be >= 1")
    if n < 3:
        raise DomainError("n must be >= 3")
    sampler = sampler or SAMPLERS[geometry]
    threads = threads or default_threads()
    jobs = [(geometry, n, sampler, seed, radius, a, b) for a, b in _chunks(trials, threads)]
    if threads > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(_run_chunk, jobs))
    else:
        parts = [_run_chunk(j) for j in jobs]
    rows = [r for part in parts for r in part]

    alpha = np.array([r[0] for r in rows])
    cert = np.array([r[1] for r in rows])
    viol = np.array([r[3] for r in rows])
    wok = np.array([r[4] for r in rows])
    excess = cert - alpha
    branches: dict[str, int] = {}
    for r in rows:
        branches[r[2]] = branches.get(r[2], 0) + 1
    bound = math.pi / n
    first = int(np.argmax(viol | ~wok)) if np.any(viol | ~wok) else None
    summary = VerificationSummary(
        geometry=geometry,
        n=n,
        trials=trials,
        sampler=sampler,
        seed=seed,
        radius=radius,
        bound=bound,
        max_min_angle=float(alpha.max()),
        min_margin=float(bound - alpha.max()),
        violations=int(viol.sum()),
        witness_failures=int((~wok).sum()),
        max_witness_excess=float(np.nanmax(excess)) if np.any(wok) else math.nan,
        mean_witness_excess=float(np.nanmean(excess)) if np.any(wok) else math.nan,
        witness_is_oracle_min=int(np.sum(np.abs(excess) <= WITNESS_SLACK)),
        branch_counts=dict(sorted(branches.items())),
        first_violation=first,
    )
    if raise_on_violation and first is not None:
        bad = sample_configuration(geometry, n, trial_rng(seed, first), sampler, radius)
        raise TheoremViolation(f"trial {first} violates the pi/{n} statement", bad)
    return summary


def angle_histogram(config: Configuration, bins: int, snap: float = 1e-12):
    """Counts of all triple angles in ``bins`` equal bins over ``[0, pi]``.

    Bins are closed on the left. An angle within ``snap`` below an edge
    belongs to the bin starting at that edge, so that angles such as pi/3
    land where they belong despite rounding. Returns ``(edges, counts)``.
    """
    if bins < 1:
        raise DomainError("bins must be >= 1")
    edges = np.linspace(0.0, math.pi, bins + 1)
    idx = np.searchsorted(edges, all_angles(config) + snap, side="right") - 1
    counts = np.bincount(np.clip(idx, 0, bins - 1), minlength=bins)
    return edges, counts
