"""
The Lobachevsky function and orthoscheme volumes
================================================

Every volume in this package reduces to the Lobachevsky function
L(x) = -int_0^x log|2 sin t| dt.  This script evaluates it, shows its
symmetries and uses it for the 3-dimensional orthoschemes [p,3,3].
"""
from math import pi

import numpy as np

from hyperball.specfun import lobachevsky, zeta3
from hyperball.volume import orthoscheme_volume_3d, orthoscheme_volume_5d

# L is odd and pi-periodic, with its maximum at pi/6
for x in (pi / 12, pi / 6, pi / 4, pi / 3, pi / 2):
    print(f"L({x:.6f}) = {lobachevsky(x): .12f}")

x = 0.37
print("odd:      ", lobachevsky(-x) + lobachevsky(x))
print("periodic: ", lobachevsky(x + pi) - lobachevsky(x))
print("L(2x) - 2L(x) - 2L(x + pi/2):", lobachevsky(2 * x) - 2 * lobachevsky(x) - 2 * lobachevsky(x + pi / 2))

# Arrays are accepted too.
xs = np.linspace(0, pi, 7)
print(np.round(lobachevsky(xs), 6))

# %%
# Orthoscheme volumes grow with p towards the ideal limit 0.15266...
for p in (7, 8, 9, 20, 50, 100, 10**6):
    print(f"p = {p:>7}: Vol = {orthoscheme_volume_3d(pi / p, pi / 3, pi / 3):.5f}")

# %%
# The 5-dimensional orthoscheme [5,3,3,3,3] comes from integrating the
# volumes of its [5,3,beta(t)] faces plus zeta(3)/3200.
print("zeta(3) =", zeta3())
print("Vol_5([5,3,3,3,3]) =", orthoscheme_volume_5d())
