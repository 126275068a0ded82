"""
Searching for maxi-min configurations
=====================================

Simulated annealing followed by Nelder-Mead on a soft minimum rediscovers
the regular polygon in the plane. In the hyperbolic plane the search keeps
shrinking the configuration, since smaller means closer to Euclidean.
"""

import math

from angle_extremes.optimizer import optimize

res = optimize("euclidean", 5, budget=20000, restarts=4, seed=0)
print(f"euclidean n=5: alpha_min={res.best_min_angle:.10f}  pi/5={math.pi / 5:.10f}  "
      f"gap={res.gap:.1e}  regularity={res.regularity:.1e}")

res = optimize("hyperbolic", 5, budget=20000, restarts=4, seed=0)
print(f"hyperbolic n=5: gap={res.gap:.2e}")
for (it, val), diam in list(zip(res.trace, res.trace_diameter))[::10]:
    print(f"  iteration {it:6d}  gap={math.pi / 5 - val:.3e}  diameter={diam:.3e}")
