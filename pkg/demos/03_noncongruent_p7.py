"""
Blowing up one hyperball in the {7,3,3} tile
============================================

One hyperball grows to height h + x while the other three shrink to
h - x.  For p = 7 the growing ball reaches the opposite side face before
the neighbouring base planes, so x runs over [0, w - h].
"""
import numpy as np

from hyperball.packing import (
    HeightAssignment,
    build_3d,
    density_sweep,
    maximize_over_x,
    validate,
    x_max,
)

m = build_3d(7)
print(f"2h = {m.e:.5f}, w = {m.w:.5f}, x_max = w - h = {x_max(m):.5f}")

sweep = np.array(density_sweep(m, 41))
for x, d in sweep[::4]:
    print(f"x = {x:.4f}  delta = {d:.5f}  " + "#" * int(60 * d))

# The density is not monotone: it dips near x ~ 0.43 and climbs back to
# 0.74649 at the end, but never above the congruent value.
k = int(np.argmin(sweep[:, 1]))
print(f"\nminimum on the grid: delta({sweep[k, 0]:.4f}) = {sweep[k, 1]:.5f}")

best = maximize_over_x(m)
print("argmax:", best.argmax, "max density:", best.value, "local maxima on scan:", best.local_maxima)

# Past x_max the blown-up ball crosses its opposite face.
too_far = HeightAssignment.from_expansion(m, x_max(m) + 0.01)
for c in validate(m, too_far).failures():
    print("violated:", c.requirement, c.subject, f"margin {c.margin:.4f}")

# For larger p the interval ends at x = h and the density simply decreases.
for p in (8, 10, 20):
    mp = build_3d(p)
    s = np.array(density_sweep(mp, 201))
    print(p, "monotone decreasing:", bool(np.all(np.diff(s[:, 1]) < 0)), f"end value {s[-1, 1]:.5f}")
