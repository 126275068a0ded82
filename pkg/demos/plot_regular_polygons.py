"""
Regular polygons and the pi/n bound
===================================

Among all angles formed by triples of n points in the plane, one is at most
pi/n, and the regular n-gon is the configuration where the smallest angle
equals pi/n.
"""

import math

import numpy as np

from angle_extremes import constructive_witness, min_angle, regular_ngon, regularity_score
from angle_extremes.configuration import Configuration

# the smallest angle of a regular n-gon is exactly pi/n
for n in range(3, 11):
    rep = min_angle(regular_ngon(n))
    print(f"n={n:2d}  alpha_min={rep.min_angle:.12f}  pi/n={math.pi / n:.12f}  "
          f"witness={rep.witness}  ({rep.total_triples_scanned} angles)")

# nudging a single vertex always loses angle
n = 6
pts = regular_ngon(n).points.copy()
pts[2] += [0.01, 0.0]
bumped = Configuration("euclidean", pts)
print("\nperturbed hexagon:", min_angle(bumped).min_angle, "<", math.pi / n)
print("regularity score:", regularity_score(bumped), "(0 for a regular polygon)")

# the witness construction explains where the small angle comes from: at an
# extremal point p the other points fan out over the interior angle, which
# splits into n - 2 gaps; one of them is at most pi/n
cert = constructive_witness(regular_ngon(8))
print("\noctagon: p =", cert.extremal_index, "ordering =", cert.ordering)
print("gaps (all pi/8):", np.round(cert.gaps, 12))
print("certified triple", cert.certified_triple, "angle", cert.certified_angle,
      "branch", cert.branch)
