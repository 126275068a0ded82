"""
Small regular polygons in the hyperbolic plane
==============================================

In the Poincare disk no configuration reaches pi/n, but regular n-gons
inscribed in a disk of small area eps get within eps of it. As eps shrinks,
hyperbolic triangles look more and more Euclidean.
"""

import math

import numpy as np

from angle_extremes import disk_for_area, inscribed_regular_ngon, validate_ngon
from angle_extremes.optimizer import scale_sweep

for eps in (1.0, 0.1, 0.01):
    d = disk_for_area(eps)
    print(f"area {eps:<5}  hyperbolic radius {d.radius:.6f}  disk-model radius {d.poincare_radius:.6f}")

print("\nn = 12: gap to pi/12 for shrinking disks")
for eps, alpha, gap in scale_sweep(12, [1e-1, 1e-2, 1e-3, 1e-4]):
    print(f"  eps={eps:.0e}  alpha_min={alpha:.10f}  gap={gap:.3e}  (gap < eps: {gap < eps})")

v = validate_ngon(inscribed_regular_ngon(12, 0.1), 0.1)
lo, hi = v.theta_window
print(f"\ninterior angle {v.theta_n:.6f} in ({lo:.6f}, {hi:.6f})")
print("central triangle: apex", round(v.central_apex, 12), "= 2pi/12, base angles",
      np.round(v.central_base, 12), "= theta_n / 2")

# unlike the Euclidean case the gap angles at a vertex are not all equal
print("gap angles at a vertex:", np.round(v.gamma, 6))
print("spread:", np.ptp(v.gamma))
