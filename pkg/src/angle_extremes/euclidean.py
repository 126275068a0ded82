"""Euclidean angles, planar convex hulls and regular point sets."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .configuration import SEPARATION_TOL, Configuration
from .errors import AllCollinear, DegenerateVertex, DomainError


@lru_cache(maxsize=None)
def triple_indices(n: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Index arrays ``(I, J, K)`` of every angle formed by ``n`` points.

    Each entry is an ordered triple with the vertex at ``J`` and ``I < K``,
    listed in lexicographic order, so there are ``3 * C(n, 3)`` of them.
    """
    rows = [(i, j, k) for i in range(n) for j in range(n) for k in range(i + 1, n)
            if j != i and j != k]
    arr = np.array(rows, dtype=np.intp).reshape(-1, 3)
    out = tuple(np.ascontiguousarray(arr[:, c]) for c in range(3))
    for a in out:
        a.setflags(write=False)
    return out


def _angles_from_vectors(v1, v2):
    if v1.shape[-1] == 2:
        cross = v1[..., 0] * v2[..., 1] - v1[..., 1] * v2[..., 0]
        dot = v1[..., 0] * v2[..., 0] + v1[..., 1] * v2[..., 1]
        return np.arctan2(np.abs(cross), dot)
    dot = np.sum(v1 * v2, axis=-1)
    norms = np.linalg.norm(v1, axis=-1) * np.linalg.norm(v2, axis=-1)
    with np.errstate(invalid="ignore", divide="ignore"):
        cos = np.where(norms > 0, dot / np.where(norms > 0, norms, 1.0), 1.0)
    return np.arccos(np.clip(cos, -1.0, 1.0))


def angle_at(p, q, r) -> float:
    """Angle at ``q`` of the triangle ``(p, q, r)``, in ``[0, pi]``."""
    p, q, r = (np.asarray(x, dtype=float) for x in (p, q, r))
    v1, v2 = p - q, r - q
    if np.linalg.norm(v1) <= SEPARATION_TOL or np.linalg.norm(v2) <= SEPARATION_TOL:
        raise DegenerateVertex("vertex coincides with an arm endpoint")
    return float(_angles_from_vectors(v1, v2))


def triple_angles(points: np.ndarray) -> np.ndarray:
    """All ``3 * C(n, 3)`` angles of an ``(..., n, d)`` point array.

    No validation: coincident points give angle 0. The ordering matches
    :func:`triple_indices`.
    """
    points = np.asarray(points, dtype=float)
    I, J, K = triple_indices(points.shape[-2])
    q = points[..., J, :]
    return _angles_from_vectors(points[..., I, :] - q, points[..., K, :] - q)


@dataclass(frozen=True)
class ConvexHull:
    extremal_indices: list[int]  # counterclockwise
    interior_indices: list[int]

    def neighbors(self, index: int) -> tuple[int, int]:
        """Next (counterclockwise) and previous hull vertices around ``index``."""
        h = self.extremal_indices
        pos = h.index(index)
        return h[(pos + 1) % len(h)], h[pos - 1]


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def hull_indices(points: np.ndarray) -> list[int]:
    """Strict convex hull of planar points by monotone chain.

    Returns vertex indices in counterclockwise order starting from the
    lexicographically smallest point. Points lying on a hull edge are not
    vertices.
    """
    pts = np.asarray(points, dtype=float)
    if pts.ndim != 2 or pts.shape[1] != 2:
        raise DomainError("convex hulls are only computed for planar points")
    order = sorted(range(len(pts)), key=lambda i: (pts[i, 0], pts[i, 1]))
    P = pts.tolist()

    def chain(idx):
        out = []
        for i in idx:
            while len(out) >= 2 and _cross(P[out[-2]], P[out[-1]], P[i]) <= 0.0:
                out.pop()
            out.append(i)
        return out

    lower = chain(order)
    upper = chain(reversed(order))
    hull = lower[:-1] + upper[:-1]
    if len(hull) < 3:
        raise AllCollinear("all points lie on one line")
    return hull


def convex_hull(config: Configuration) -> ConvexHull:
    if config.geometry != "euclidean" or not config.is_planar:
        raise DomainError("convex_hull expects a planar Euclidean configuration")
    ext = hull_indices(config.points)
    ext_set = set(ext)
    return ConvexHull(ext, [i for i in range(config.n) if i not in ext_set])


def regular_ngon(n: int, circumradius: float = 1.0, center=(0.0, 0.0),
                 phase: float = 0.0) -> Configuration:
    """Vertices of a regular ``n``-gon, counterclockwise from angle ``phase``."""
    if n < 3:
        raise DomainError("a polygon needs n >= 3")
    if not circumradius > 0:
        raise DomainError("circumradius must be positive")
    t = phase + 2.0 * np.pi * np.arange(n) / n
    pts = circumradius * np.column_stack([np.cos(t), np.sin(t)]) + np.asarray(center, float)
    return Configuration("euclidean", pts)


def regular_simplex(d: int) -> Configuration:
    """``d + 1`` pairwise equidistant points in R^d (edge length sqrt(2))."""
    if d < 2:
        raise DomainError("dimension must be >= 2")
    corners = np.eye(d + 1)
    corners -= corners.mean(axis=0)
    # rows of vt[:d] span the hyperplane orthogonal to (1, ..., 1)
    _, _, vt = np.linalg.svd(corners)
    return Configuration("euclidean", corners @ vt[:d].T)
