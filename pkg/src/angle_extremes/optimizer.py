"""Numerical search for configurations with the largest minimum angle.

Each restart runs simulated annealing on the exact minimum angle, then
polishes with Nelder-Mead on a soft-min surrogate whose sharpness ``beta``
grows over a few rounds, and finishes with Nelder-Mead on the exact
(non-smooth) objective. Restarts are independent and may run in separate
processes; the merge is deterministic.
"""

from __future__ import annotations

import csv
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import minimize
from scipy.special import logsumexp

from . import hyperbolic as _hyp
from .analysis import all_angles, default_threads, fast_min_angle, regularity_score
from .configuration import BOUNDARY_TOL, Configuration
from .errors import DomainError, TheoremViolation
from .euclidean import triple_angles as _euc_angles

DEFAULT_BUDGET = 40000
DEFAULT_RESTARTS = 16
BETAS = (50.0, 200.0, 1000.0)
THEOREM_SLACK = 1e-12


def soft_min(angles, beta: float) -> float:
    """``-(1/beta) log sum exp(-beta * angles)``; a lower bound on ``min(angles)``
    that is within ``log(len(angles)) / beta`` of it."""
    a = np.asarray(angles, dtype=float)
    return float(-logsumexp(-beta * a) / beta)


def _normalise(x):
    # centroid 0, unit RMS radius: the objective is similarity-invariant
    x = x - x.mean(axis=0)
    rms = math.sqrt(float(np.mean(np.sum(x * x, axis=1))))
    return x / rms if rms > 0 else x


@dataclass
class Options:
    sigma_start: float = 0.3
    sigma_end: float = 1e-4
    temp_start: float = 0.02
    temp_end: float = 1e-6
    betas: tuple = BETAS
    polish: bool = True
    polish_evals: int = 4000  # per Nelder-Mead round
    init_radius: float = 1.0  # hyperbolic starting disk (hyperbolic radius)
    # Hyperbolic configurations are kept at least this large (hyperbolic
    # diameter); below it the pi/n gap falls under the float resolution.
    min_diameter: float = 1e-3


@dataclass
class OptimizerResult:
    geometry: str
    n: int
    best_config: Configuration
    best_min_angle: float
    target: float
    gap: float
    regularity: float
    trace: list  # (iteration, best_min_angle) at every improvement
    trace_diameter: list  # diameter of the best configuration at each trace row
    seed: int
    restart: int = 0
    restart_values: list = field(default_factory=list)

    def summary(self) -> dict:
        return {
            "geometry": self.geometry,
            "n": self.n,
            "best_min_angle": self.best_min_angle,
            "best_min_angle_degrees": math.degrees(self.best_min_angle),
            "target": self.target,
            "gap": self.gap,
            "regularity": self.regularity,
            "seed": self.seed,
            "winning_restart": self.restart,
            "restarts": len(self.restart_values),
            "points": self.best_config.points.tolist(),
        }

    def write_trace(self, path):
        with open(path, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["iteration", "best_min_angle", "gap"])
            for it, val in self.trace:
                w.writerow([it, repr(val), repr(self.target - val)])


class _Problem:
    def __init__(self, geometry, n, opts):
        self.geometry = geometry
        self.n = n
        self.opts = opts
        self.bound = math.pi / n
        self.limit = 1.0 - BOUNDARY_TOL

    def feasible(self, x):
        if self.geometry == "euclidean":
            return True
        if np.any(np.sum(x * x, axis=1) > self.limit ** 2):
            return False
        return _hyp.diameter(x) >= self.opts.min_diameter

    def exact(self, x):
        val = fast_min_angle(self.geometry, x)
        if val > self.bound + THEOREM_SLACK or (self.geometry == "hyperbolic" and val >= self.bound):
            raise TheoremViolation(f"iterate reached {val!r} > pi/{self.n}",
                                   Configuration(self.geometry, x))
        return val

    def angles(self, x):
        if self.geometry == "hyperbolic":
            return _hyp.triple_angles(x)
        return _euc_angles(x)

    def prepare(self, x):
        return _normalise(x) if self.geometry == "euclidean" else x

    def initial(self, rng):
        if self.geometry == "euclidean":
            return _normalise(rng.random((self.n, 2)))
        while True:
            x = _hyp.sample_uniform_disk(rng, self.n, self.opts.init_radius)
            if self.feasible(x):
                return x

    def diameter(self, x):
        if self.geometry == "hyperbolic":
            return _hyp.diameter(x)
        d = x[:, None, :] - x[None, :, :]
        return float(np.sqrt(np.max(np.sum(d * d, axis=-1))))


def _anneal(prob: _Problem, budget: int, rng: np.random.Generator):
    o = prob.opts
    x = prob.initial(rng)
    f = prob.exact(x)
    best_x, best_f = x.copy(), f
    trace = [(0, best_f)]
    diam = [prob.diameter(best_x)]
    span = max(budget - 1, 1)
    for it in range(1, budget + 1):
        frac = (it - 1) / span
        sigma = o.sigma_start * (o.sigma_end / o.sigma_start) ** frac
        temp = o.temp_start * (o.temp_end / o.temp_start) ** frac
        j = rng.integers(prob.n)
        step = rng.normal(0.0, sigma, 2)
        u = rng.random()
        y = x.copy()
        y[j] += step
        y = prob.prepare(y)
        if not prob.feasible(y):
            continue
        g = prob.exact(y)
        if g >= f or u < math.exp((g - f) / temp):
            x, f = y, g
            if f > best_f:
                best_x, best_f = x.copy(), f
                trace.append((it, best_f))
                diam.append(prob.diameter(best_x))
    return best_x, best_f, trace, diam


def _polish(prob: _Problem, x0, f0, start_iter):
    o = prob.opts
    evals = o.polish_evals
    shape = x0.shape
    best_x, best_f = x0, f0
    trace, diam = [], []
    it = start_iter

    def penalised(obj):
        def fun(v):
            x = v.reshape(shape)
            if not prob.feasible(x):
                return math.inf
            return -obj(x)
        return fun

    rounds = [lambda x, b=b: soft_min(prob.angles(x), b) for b in o.betas]
    rounds.append(prob.exact)
    x = best_x
    for obj in rounds:
        res = minimize(penalised(obj), x.ravel(), method="Nelder-Mead",
                       options={"maxfev": evals, "xatol": 1e-13, "fatol": 1e-15,
                                "adaptive": True})
        it += int(res.nfev)
        cand = prob.prepare(res.x.reshape(shape))
        if not prob.feasible(cand):
            continue
        x = cand
        val = prob.exact(cand)
        if val > best_f:
            best_x, best_f = cand, val
            trace.append((it, best_f))
            diam.append(prob.diameter(best_x))
    return best_x, best_f, trace, diam


def _run_restart(args):
    geometry, n, budget, seed, restart, opts = args
    prob = _Problem(geometry, n, opts)
    rng = np.random.default_rng([seed, restart])
    x, f, trace, diam = _anneal(prob, budget, rng)
    if opts.polish:
        x, f, t2, d2 = _polish(prob, x, f, budget)
        trace += t2
        diam += d2
    return x, f, trace, diam


def optimize(geometry: str, n: int, budget: int = DEFAULT_BUDGET, seed: int = 0,
             restarts: int = DEFAULT_RESTARTS, threads: int | None = 1,
             options: Options | None = None) -> OptimizerResult:
    """Search for an ``n``-point configuration maximising the minimum angle.

    The best restart is picked by exact minimum angle, ties going to the
    lower restart index, so the result does not depend on ``threads``.
    """
    if geometry not in ("euclidean", "hyperbolic"):
        raise DomainError(f"unknown geometry {geometry!r}")
    if n < 3:
        raise DomainError("n must be >= 3")
    if budget < 1 or restarts < 1:
        raise DomainError("budget and restarts must be >= 1")
    opts = options or Options()
    jobs = [(geometry, n, budget, seed, r, opts) for r in range(restarts)]
    threads = threads or default_threads()
    if threads > 1 and restarts > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            runs = list(pool.map(_run_restart, jobs))
    else:
        runs = [_run_restart(j) for j in jobs]

    values = [r[1] for r in runs]
    k = int(np.argmax(values))
    x, f, trace, diam = runs[k]
    config = Configuration(geometry, x)
    exact = float(all_angles(config).min())
    target = math.pi / n
    return OptimizerResult(
        geometry=geometry,
        n=n,
        best_config=config,
        best_min_angle=exact,
        target=target,
        gap=target - exact,
        regularity=regularity_score(config),
        trace=trace,
        trace_diameter=diam,
        seed=seed,
        restart=k,
        restart_values=values,
    )


def scale_sweep(n: int, epsilons) -> list[tuple[float, float, float]]:
    """``(epsilon, alpha_min, pi/n - alpha_min)`` for the regular n-gon inscribed
    in the disk of area ``epsilon``."""
    from .analysis import min_angle

    rows = []
    for eps in epsilons:
        if not eps > 0:
            raise DomainError("epsilon must be positive")
        a = min_angle(_hyp.inscribed_regular_ngon(n, eps)).min_angle
        rows.append((float(eps), a, math.pi / n - a))
    return rows
