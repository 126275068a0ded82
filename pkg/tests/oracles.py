"""Independent reference computations used to check the library.

Nothing here imports the package under test; every routine takes a
different path to the quantity it checks (law of cosines instead of atan2,
quadrature instead of closed forms, Mobius transforms or geodesic circles
instead of side lengths, linear programming instead of monotone chain).
"""

import cmath
import itertools
import math

import numpy as np
from scipy import integrate
from scipy.optimize import linprog


def euclid_angle_law_of_cosines(p, q, r):
    a = math.dist(p, r)
    b = math.dist(q, p)
    c = math.dist(q, r)
    cos = (b * b + c * c - a * a) / (2 * b * c)
    return math.acos(max(-1.0, min(1.0, cos)))


def brute_min_angle_euclid(points):
    pts = [tuple(map(float, p)) for p in points]
    best = math.inf
    for i, j, k in itertools.permutations(range(len(pts)), 3):
        if i < k:
            best = min(best, euclid_angle_law_of_cosines(pts[i], pts[j], pts[k]))
    return best


def _mobius_to_origin(z, a):
    return (z - a) / (1 - a.conjugate() * z)


def hyp_angle_mobius(p, q, r):
    """Angle at q: move q to the origin, where the disk model is conformal
    and geodesics through the origin are diameters."""
    qa = complex(*q)
    u = _mobius_to_origin(complex(*p), qa)
    v = _mobius_to_origin(complex(*r), qa)
    d = abs(cmath.phase(v / u))
    return d


def brute_min_angle_hyp(points):
    pts = [tuple(map(float, p)) for p in points]
    best = math.inf
    for i, j, k in itertools.permutations(range(len(pts)), 3):
        if i < k:
            best = min(best, hyp_angle_mobius(pts[i], pts[j], pts[k]))
    return best


def geodesic_tangent(q, p):
    """Unit tangent at q of the disk-model geodesic from q towards p.

    The geodesic is a circle orthogonal to the unit circle; its centre c
    satisfies c.q = (1 + |q|^2)/2 and c.p = (1 + |p|^2)/2. A diameter is
    used when q, p and the origin are collinear.
    """
    q = np.asarray(q, float)
    p = np.asarray(p, float)
    A = np.array([q, p])
    det = q[0] * p[1] - q[1] * p[0]
    if abs(det) < 1e-13:
        t = p - q
    else:
        c = np.linalg.solve(A, 0.5 * np.array([1 + q @ q, 1 + p @ p]))
        radial = q - c
        t = np.array([-radial[1], radial[0]])
        # orient along the arc towards p: p lies on the side the tangent points to
        # (the chord q->p makes an acute angle with the tangent)
        if t @ (p - q) < 0:
            t = -t
    return t / np.linalg.norm(t)


def hyp_angle_tangent(p, q, r):
    t1 = geodesic_tangent(q, p)
    t2 = geodesic_tangent(q, r)
    cross = t1[0] * t2[1] - t1[1] * t2[0]
    return math.atan2(abs(cross), float(t1 @ t2))


def hyp_radial_distance_quad(t):
    """Length of the segment [0, t] on the x-axis under ds = 2|dx| / (1 - |x|^2)."""
    val, _ = integrate.quad(lambda x: 2.0 / (1.0 - x * x), 0.0, t, epsabs=0.0, epsrel=1e-13)
    return val


def hyp_segment_length_quad(u, v):
    """Length of the straight Euclidean segment u->v under the disk metric.

    Only equals the hyperbolic distance when the segment is a geodesic
    (e.g. lies on a diameter).
    """
    u = np.asarray(u, float)
    v = np.asarray(v, float)
    d = v - u
    L = np.linalg.norm(d)

    def f(s):
        x = u + s * d
        return 2.0 * L / (1.0 - x @ x)

    val, _ = integrate.quad(f, 0.0, 1.0, epsabs=0.0, epsrel=1e-13)
    return val


def hyp_disk_area_quad(hyp_radius):
    """Area of the origin-centred disk of hyperbolic radius r, integrating the
    disk-model area element 4 / (1 - rho^2)^2 in polar coordinates."""
    R = math.tanh(hyp_radius / 2)
    val, _ = integrate.quad(lambda rho: 2 * math.pi * rho * 4.0 / (1 - rho * rho) ** 2,
                            0.0, R, epsabs=0.0, epsrel=1e-13)
    return val


def hyp_triangle_area_quad(p, q, r):
    """Gauss-Bonnet-free area: integrate the Klein-model area element
    (1 - |k|^2)^(-3/2) over the straight Klein triangle."""
    def klein(u):
        u = np.asarray(u, float)
        return 2 * u / (1 + u @ u)

    A, B, C = klein(p), klein(q), klein(r)
    e1, e2 = B - A, C - A
    jac = abs(e1[0] * e2[1] - e1[1] * e2[0])

    def f(t, s):
        k = A + s * e1 + t * e2
        return (1.0 - k @ k) ** -1.5

    val, _ = integrate.dblquad(f, 0.0, 1.0, 0.0, lambda s: 1.0 - s, epsabs=1e-12, epsrel=1e-11)
    return val * jac


def is_convex_combination(point, others):
    """LP feasibility: point = sum w_i others_i with w >= 0, sum w = 1."""
    others = np.asarray(others, float)
    m = len(others)
    A_eq = np.vstack([others.T, np.ones(m)])
    b_eq = np.append(np.asarray(point, float), 1.0)
    res = linprog(np.zeros(m), A_eq=A_eq, b_eq=b_eq, bounds=[(0, None)] * m, method="highs")
    return res.status == 0


def extremal_set_lp(points):
    pts = np.asarray(points, float)
    out = set()
    for i in range(len(pts)):
        if not is_convex_combination(pts[i], np.delete(pts, i, axis=0)):
            out.add(i)
    return out
