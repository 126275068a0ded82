"""Point configurations in the Euclidean space or the Poincare disk."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

import numpy as np

from .errors import BoundaryViolation, CoincidentPoints, DomainError

Geometry = Literal["euclidean", "hyperbolic"]
GEOMETRIES = ("euclidean", "hyperbolic")

# Points closer than this are treated as coincident.
SEPARATION_TOL = 1e-9
# Hyperbolic points must satisfy |u| <= 1 - BOUNDARY_TOL.
BOUNDARY_TOL = 1e-7


@dataclass(frozen=True, eq=False)
class Configuration:
    """An ordered set of ``n >= 3`` distinct points.

    ``points`` has shape ``(n, d)``. Euclidean configurations may live in any
    dimension ``d >= 2``; hyperbolic ones are stored as Poincare disk
    coordinates and are always planar.
    """

    geometry: Geometry
    points: np.ndarray

    def __post_init__(self):
        if self.geometry not in GEOMETRIES:
            raise DomainError(f"unknown geometry {self.geometry!r}")
        pts = np.array(self.points, dtype=float)
        if pts.ndim != 2 or pts.shape[1] < 2:
            raise DomainError(f"points must have shape (n, d>=2), got {pts.shape}")
        if self.geometry == "hyperbolic" and pts.shape[1] != 2:
            raise DomainError("hyperbolic configurations are planar")
        if pts.shape[0] < 3:
            raise DomainError(f"need at least 3 points, got {pts.shape[0]}")
        if not np.all(np.isfinite(pts)):
            raise DomainError("coordinates must be finite")
        pts.setflags(write=False)
        object.__setattr__(self, "points", pts)

        if self.geometry == "hyperbolic":
            from .hyperbolic import check_inside, distance_matrix

            check_inside(pts)
            dist = distance_matrix(pts)
        else:
            diff = pts[:, None, :] - pts[None, :, :]
            dist = np.sqrt(np.einsum("ijk,ijk->ij", diff, diff))
        np.fill_diagonal(dist, np.inf)
        i, j = np.unravel_index(np.argmin(dist), dist.shape)
        if dist[i, j] <= SEPARATION_TOL:
            raise CoincidentPoints(
                f"points {min(i, j)} and {max(i, j)} are closer than {SEPARATION_TOL:g}"
            )

    @property
    def n(self) -> int:
        return self.points.shape[0]

    @property
    def dim(self) -> int:
        return self.points.shape[1]

    @property
    def is_planar(self) -> bool:
        return self.dim == 2

    def __len__(self):
        return self.n

    def __repr__(self):
        return f"Configuration({self.geometry!r}, n={self.n}, dim={self.dim})"


def euclidean(points) -> Configuration:
    return Configuration("euclidean", np.asarray(points, dtype=float))


def hyperbolic(points) -> Configuration:
    return Configuration("hyperbolic", np.asarray(points, dtype=float))


__all__ = [
    "BOUNDARY_TOL",
    "BoundaryViolation",
    "Configuration",
    "GEOMETRIES",
    "Geometry",
    "SEPARATION_TOL",
    "euclidean",
    "hyperbolic",
]
