"""
Locally optimal congruent packings for real p
=============================================

Allowing non-integer p gives truncated tetrahedra that do not tile space
but still carry a local density.  It peaks just above p = 6.
"""
import numpy as np

from hyperball.packing import congruent_density_3d, maximize_over_p

res = maximize_over_p(grid=2000)
print(f"p_opt = {res.argmax:.6f}   delta_opt = {res.value:.6f}")
print("rises before, falls after:", res.notes["increasing_before"], res.notes["decreasing_after"])

for p in np.r_[6.01, 6.05, 6.1, res.argmax, 6.2, 6.5, 7.0, 8.0]:
    print(f"p = {p:8.5f}  delta = {congruent_density_3d(p):.5f}")
