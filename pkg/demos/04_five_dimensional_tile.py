"""
The truncated 5-simplex of the {5,3,3,3,3} tiling
=================================================

Builds the tile from its six outer vertices, checks the two routes to the
base-plane distance, and evaluates the congruent and non-congruent
densities.
"""
from math import pi

from hyperball.coxeter import CoxeterGraph, gauss_bonnet_volume_4d, truncation_height
from hyperball.packing import build_5d, density, density_sweep, maximize_over_x
from hyperball.volume import truncation_facet_volume_5d

m = build_5d()
print(f"y = {m.y:.5f}   h = {m.h:.5f}   2h = {m.e:.5f}   w = {m.w:.5f}")
print("h from the Coxeter matrix:", truncation_height(CoxeterGraph.linear([5, 3, 3, 3, 3])))

# Each truncation facet is a regular hyperbolic 4-simplex with dihedral
# angle 2pi/5, made of 120 [5,3,3,3] orthoschemes.
share = gauss_bonnet_volume_4d(CoxeterGraph.linear([5, 3, 3, 3]))
print("orthoscheme [5,3,3,3]:", share, "= pi^2/10800:", pi**2 / 10800)
print("facet:", truncation_facet_volume_5d(), "= pi^2/90:", pi**2 / 90)
print("orthoscheme [5,3,3,3,3]:", m.orthoscheme_volume, " tile:", m.cell_volume)

print("\ncongruent density:", density(m, 0).delta)
print("one ball at 2h:   ", density(m, m.h).delta)
for x, d in density_sweep(m, 9):
    print(f"  x = {x:.4f}  delta = {d:.5f}")
print("maximum at x =", maximize_over_x(m).argmax)
