"""
Regular simplices
=================

In R^d the smallest angle of any configuration is at most pi/3, with
equality exactly when all points are equidistant, which is possible for at
most d + 1 points.
"""

import math

import numpy as np

from angle_extremes import min_angle, regular_simplex
from angle_extremes.euclidean import triple_angles

for d in range(2, 7):
    cfg = regular_simplex(d)
    print(f"d={d}: {cfg.n} points, alpha_min - pi/3 = {min_angle(cfg).min_angle - math.pi / 3:.1e}")

rng = np.random.default_rng(0)
for d in (2, 3):
    best = max(triple_angles(rng.random((d + 2, d))).min() for _ in range(2000))
    print(f"d={d}: best of 2000 random {d + 2}-point sets = {best:.4f} < pi/3 = {math.pi / 3:.4f}")
