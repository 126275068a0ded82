"""The hyperbolic plane in the Poincare disk model (curvature -1).

Points are stored as Poincare disk coordinates. Distances use the closed
form ``2 asinh(|u - v| / sqrt((1 - |u|^2)(1 - |v|^2)))``, which is the
``arccosh(1 + 2|u - v|^2 / ((1 - |u|^2)(1 - |v|^2)))`` formula rewritten to
keep full precision for nearby points. Angles come from the three side
lengths (hyperbolic law of cosines, half-angle form), never from tangent
vectors. Convex hulls are computed in Beltrami-Klein coordinates, where
geodesics are straight chords.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .configuration import BOUNDARY_TOL, SEPARATION_TOL, Configuration
from .errors import (
    BoundaryViolation,
    DegenerateTriangle,
    DegenerateVertex,
    DomainError,
    NotRegular,
)
from .euclidean import ConvexHull, hull_indices, triple_indices


def check_inside(points):
    pts = np.asarray(points, dtype=float)
    norms = np.linalg.norm(pts, axis=-1)
    if np.any(norms > 1.0 - BOUNDARY_TOL):
        raise BoundaryViolation(
            f"point with norm {norms.max():.17g} is not inside the disk "
            f"(limit 1 - {BOUNDARY_TOL:g})"
        )


def _conformal_factor(sq_norm):
    # 1 - |u|^2
    return 1.0 - sq_norm


def hyp_distance(u, v) -> float:
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    check_inside(np.stack([u, v]))
    x = np.linalg.norm(u - v) / math.sqrt(_conformal_factor(u @ u) * _conformal_factor(v @ v))
    return 2.0 * math.asinh(x)


def distance_matrix(points) -> np.ndarray:
    """Pairwise hyperbolic distances of an ``(..., n, 2)`` array (unchecked)."""
    pts = np.asarray(points, dtype=float)
    diff = pts[..., :, None, :] - pts[..., None, :, :]
    chord = np.sqrt(np.sum(diff * diff, axis=-1))
    w = np.sqrt(_conformal_factor(np.sum(pts * pts, axis=-1)))
    return 2.0 * np.arcsinh(chord / (w[..., :, None] * w[..., None, :]))


def angle_from_sides(opposite, side1, side2):
    """Angle between ``side1`` and ``side2`` of a hyperbolic triangle.

    Equivalent to ``cos A = (cosh b cosh c - cosh a) / (sinh b sinh c)``
    but evaluated through the half-angle identity
    ``tan^2(A/2) = sinh(s-b) sinh(s-c) / (sinh s sinh(s-a))``,
    which does not cancel catastrophically for small triangles.
    """
    a, b, c = (np.asarray(x, dtype=float) for x in (opposite, side1, side2))
    s = 0.5 * (a + b + c)
    num = np.sinh(np.maximum(s - b, 0.0)) * np.sinh(np.maximum(s - c, 0.0))
    den = np.sinh(s) * np.sinh(np.maximum(s - a, 0.0))
    return 2.0 * np.arctan2(np.sqrt(num), np.sqrt(den))


def angle_law_of_cosines(opposite, side1, side2):
    """Literal clamped law of cosines; loses precision on tiny triangles."""
    a, b, c = opposite, side1, side2
    cos = (np.cosh(b) * np.cosh(c) - np.cosh(a)) / (np.sinh(b) * np.sinh(c))
    return np.arccos(np.clip(cos, -1.0, 1.0))


def hyp_angle_at(p, q, r) -> float:
    """Interior angle at ``q`` of the geodesic triangle ``(p, q, r)``."""
    b = hyp_distance(q, p)
    c = hyp_distance(q, r)
    if b <= SEPARATION_TOL or c <= SEPARATION_TOL:
        raise DegenerateVertex("vertex coincides with an arm endpoint")
    return float(angle_from_sides(hyp_distance(p, r), b, c))


def triple_angles(points) -> np.ndarray:
    """Hyperbolic counterpart of :func:`angle_extremes.euclidean.triple_angles`."""
    pts = np.asarray(points, dtype=float)
    I, J, K = triple_indices(pts.shape[-2])
    D = distance_matrix(pts)
    return angle_from_sides(D[..., I, K], D[..., J, I], D[..., J, K])


@dataclass(frozen=True)
class TriangleAngles:
    theta_a: float
    theta_b: float
    theta_c: float
    area: float

    @property
    def angle_sum(self) -> float:
        return self.theta_a + self.theta_b + self.theta_c

    @property
    def defect(self) -> float:
        return math.pi - self.angle_sum


def triangle_area_from_sides(a, b, c):
    """Hyperbolic L'Huilier formula:
    ``tan(A/4)^2 = tanh(s/2) tanh((s-a)/2) tanh((s-b)/2) tanh((s-c)/2)``."""
    s = 0.5 * (a + b + c)
    t = (np.tanh(0.5 * s) * np.tanh(0.5 * np.maximum(s - a, 0.0))
         * np.tanh(0.5 * np.maximum(s - b, 0.0)) * np.tanh(0.5 * np.maximum(s - c, 0.0)))
    return 4.0 * np.arctan(np.sqrt(t))


def triangle_report(p, q, r, tol: float = 1e-12) -> TriangleAngles:
    """Angles at ``p``, ``q``, ``r`` and the area of the geodesic triangle.

    The area is computed from the side lengths alone, independently of the
    angles, so ``area == pi - angle sum`` is a genuine consistency check.
    """
    a = hyp_distance(q, r)
    b = hyp_distance(p, r)
    c = hyp_distance(p, q)
    if min(a, b, c) <= SEPARATION_TOL:
        raise DegenerateTriangle("two vertices coincide")
    A = float(angle_from_sides(a, b, c))
    B = float(angle_from_sides(b, a, c))
    C = float(angle_from_sides(c, a, b))
    if min(A, B, C) <= tol:
        raise DegenerateTriangle("vertices lie on one geodesic")
    return TriangleAngles(A, B, C, float(triangle_area_from_sides(a, b, c)))


@dataclass(frozen=True)
class DiskSpec:
    epsilon: float  # hyperbolic area
    radius: float  # hyperbolic radius

    @property
    def poincare_radius(self) -> float:
        return poincare_radius(self.radius)


def disk_area(radius):
    """Area ``2 pi (cosh r - 1)`` of a hyperbolic disk of radius ``r``."""
    return 4.0 * np.pi * np.sinh(0.5 * np.asarray(radius, dtype=float)) ** 2


def disk_for_area(epsilon: float) -> DiskSpec:
    """The disk of hyperbolic area ``epsilon``: radius ``arccosh((eps + 2 pi) / 2 pi)``."""
    if not epsilon > 0:
        raise DomainError("epsilon must be positive")
    # same value as arccosh(1 + eps / 2pi), without the cancellation near 1
    return DiskSpec(float(epsilon), 2.0 * math.asinh(math.sqrt(epsilon / (4.0 * math.pi))))


def poincare_radius(hyp_radius):
    """Euclidean radius in the disk model of a circle centred at the origin."""
    return np.tanh(0.5 * np.asarray(hyp_radius, dtype=float))


def to_klein(points) -> np.ndarray:
    pts = np.asarray(points, dtype=float)
    return 2.0 * pts / (1.0 + np.sum(pts * pts, axis=-1, keepdims=True))


def from_klein(points) -> np.ndarray:
    k = np.asarray(points, dtype=float)
    return k / (1.0 + np.sqrt(1.0 - np.sum(k * k, axis=-1, keepdims=True)))


def convex_hull(config: Configuration) -> ConvexHull:
    """Geodesic convex hull, via the Euclidean hull of the Klein coordinates."""
    if config.geometry != "hyperbolic":
        raise DomainError("expected a hyperbolic configuration")
    ext = hull_indices(to_klein(config.points))
    ext_set = set(ext)
    return ConvexHull(ext, [i for i in range(config.n) if i not in ext_set])


def _as_complex(points):
    pts = np.asarray(points, dtype=float)
    return pts[..., 0] + 1j * pts[..., 1]


def _as_real(z):
    return np.stack([z.real, z.imag], axis=-1)


def mobius_translate(points, a) -> np.ndarray:
    """Apply the disk automorphism ``z -> (z - a) / (1 - conj(a) z)``; sends ``a`` to 0."""
    z = _as_complex(points)
    a = complex(a[0], a[1])
    return _as_real((z - a) / (1.0 - np.conj(a) * z))


def rotate(points, phi: float) -> np.ndarray:
    return _as_real(_as_complex(points) * np.exp(1j * phi))


def sample_uniform_disk(rng: np.random.Generator, n: int, radius: float = 1.0) -> np.ndarray:
    """``n`` i.i.d. points, uniform for hyperbolic area, in the disk of hyperbolic
    radius ``radius`` centred at the origin.

    The radial law has density proportional to ``sinh(rho)``; it is inverted
    in the form ``sinh(rho/2) = sqrt(U) sinh(R/2)``.
    """
    u = rng.random(n)
    phi = rng.random(n) * (2.0 * np.pi)
    half = np.arcsinh(np.sqrt(u) * math.sinh(0.5 * radius))
    rad = np.tanh(half)
    return np.column_stack([rad * np.cos(phi), rad * np.sin(phi)])


def diameter(points) -> float:
    return float(np.max(distance_matrix(points)))


def inscribed_regular_ngon(n: int, epsilon: float, phase: float = 0.0) -> Configuration:
    """Regular ``n``-gon inscribed in the origin-centred disk of area ``epsilon``.

    A radius of the disk is rotated by multiples of ``2 pi / n`` about the
    centre; the endpoints are the vertices.
    """
    if n < 3:
        raise DomainError("a polygon needs n >= 3")
    disk = disk_for_area(epsilon)
    rad = float(poincare_radius(disk.radius))
    t = phase + 2.0 * np.pi * np.arange(n) / n
    return Configuration("hyperbolic", rad * np.column_stack([np.cos(t), np.sin(t)]))


@dataclass
class NGonValidation:
    n: int
    epsilon: float
    vertex: int
    theta_n: float
    gamma: list[float]
    alpha_k: list[float]
    beta_k: list[float]
    # angles measured directly in the triangles (x_k, p, x_{k+1}), to compare
    # against alpha_k / beta_k
    measured_alpha: list[float]
    measured_beta: list[float]
    central_apex: float
    central_base: tuple[float, float]
    min_angle: float
    bound: float = field(init=False)
    theta_window: tuple[float, float] = field(init=False)

    def __post_init__(self):
        self.bound = math.pi / self.n
        ideal = (self.n - 2) * math.pi / self.n
        self.theta_window = (ideal - self.epsilon, ideal)

    @property
    def gamma_sum_residual(self) -> float:
        return abs(math.fsum(self.gamma) - self.theta_n)

    @property
    def prefix_residual(self) -> float:
        r = [abs(x - y) for x, y in zip(self.alpha_k, self.measured_alpha)]
        r += [abs(x - y) for x, y in zip(self.beta_k, self.measured_beta)]
        return max(r, default=0.0)

    @property
    def theta_in_window(self) -> bool:
        lo, hi = self.theta_window
        return lo < self.theta_n < hi

    @property
    def gammas_above_bound(self) -> bool:
        return all(g > self.bound - self.epsilon for g in self.gamma)

    @property
    def min_angle_in_window(self) -> bool:
        return self.bound - self.epsilon < self.min_angle < self.bound

    @property
    def ok(self) -> bool:
        return self.theta_in_window and self.gammas_above_bound and self.min_angle_in_window

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "epsilon": self.epsilon,
            "vertex": self.vertex,
            "theta_n": self.theta_n,
            "theta_window": list(self.theta_window),
            "gamma": self.gamma,
            "alpha_k": self.alpha_k,
            "beta_k": self.beta_k,
            "central_apex": self.central_apex,
            "central_base": list(self.central_base),
            "min_angle": self.min_angle,
            "bound": self.bound,
            "gap": self.bound - self.min_angle,
            "gamma_sum_residual": self.gamma_sum_residual,
            "prefix_residual": self.prefix_residual,
            "theta_in_window": self.theta_in_window,
            "gammas_above_bound": self.gammas_above_bound,
            "min_angle_in_window": self.min_angle_in_window,
            "ok": self.ok,
        }


def validate_ngon(config: Configuration, epsilon: float, vertex: int = 0,
                  rtol: float = 1e-9) -> NGonValidation:
    """Measure the interior angle, gap angles and prefix sums of a regular n-gon.

    ``vertex`` plays the role of ``p``; the remaining vertices are ordered by
    their angle from the next vertex counterclockwise. The polygon may sit
    anywhere in the disk; its centre (needed for the central triangle) is
    recovered as the hyperbolic circumcentre.
    """
    from .analysis import angular_ordering, min_angle

    if config.geometry != "hyperbolic":
        raise DomainError("expected a hyperbolic configuration")
    n = config.n
    hull = convex_hull(config)
    if len(hull.extremal_indices) != n:
        raise NotRegular("not every point is a vertex of the convex hull")
    cyc = hull.extremal_indices
    pts = config.points
    edges = np.array([hyp_distance(pts[cyc[i]], pts[cyc[(i + 1) % n]]) for i in range(n)])
    if np.ptp(edges) > rtol * edges.mean():
        raise NotRegular(f"edge lengths vary by {np.ptp(edges):.3e}")
    diags = np.array([hyp_distance(pts[cyc[i]], pts[cyc[(i + 2) % n]]) for i in range(n)])
    if np.ptp(diags) > rtol * diags.mean():
        raise NotRegular("polygon is equilateral but not equiangular")

    x1, xlast = hull.neighbors(vertex)
    ordering = angular_ordering(config, vertex, x1, xlast)
    P = pts[vertex]
    ang = hyp_angle_at
    gamma = [ang(pts[a], P, pts[b]) for a, b in zip(ordering, ordering[1:])]
    theta_n = ang(pts[x1], P, pts[xlast])
    alpha_k, beta_k, meas_a, meas_b = [], [], [], []
    for k in range(len(gamma)):
        alpha_k.append(theta_n - math.fsum(gamma[:k]))
        beta_k.append(math.fsum(gamma[: k + 1]))
        xk, xk1 = pts[ordering[k]], pts[ordering[k + 1]]
        meas_a.append(ang(P, xk, xk1))
        meas_b.append(ang(xk, xk1, P))

    centre = _circumcentre(pts)
    apex = ang(P, centre, pts[x1])
    base = (ang(centre, P, pts[x1]), ang(P, pts[x1], centre))
    return NGonValidation(
        n=n,
        epsilon=float(epsilon),
        vertex=vertex,
        theta_n=theta_n,
        gamma=gamma,
        alpha_k=alpha_k,
        beta_k=beta_k,
        measured_alpha=meas_a,
        measured_beta=meas_b,
        central_apex=apex,
        central_base=base,
        min_angle=min_angle(config).min_angle,
    )


def _circumcentre(pts) -> np.ndarray:
    # Move the point-set centroid to the origin until it stops moving; the
    # fixed point of a regular polygon is its centre.
    z = np.asarray(pts, dtype=float)
    total = np.zeros(2)
    for _ in range(100):
        c = z.mean(axis=0)
        if np.linalg.norm(c) < 1e-15:
            break
        z = mobius_translate(z, c)
        total = _compose(total, c)
    return total


def _compose(total, c):
    # the new centre w satisfies T_total(w) = c, so w = T_total^{-1}(c)
    t = complex(*total)
    cc = complex(*c)
    w = (cc + t) / (1.0 + np.conj(t) * cc)
    return np.array([w.real, w.imag])
