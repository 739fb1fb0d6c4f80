"""
Congruent hyperball packings of the {p,3,3} tilings
===================================================

For each integer p >= 7 the truncated regular tetrahedron carries four
congruent hyperballs touching at the edge midpoints.  The table lists
their data per orthoscheme (24 per tile).
"""
from hyperball.packing import build_3d, density, table1_row

print(f"{'p':>5} {'h(p)':>9} {'Vol(O)':>9} {'Vol(lens)':>10} {'delta':>9}")
for p in (7, 8, 9, 10, 12, 15, 20, 50, 100):
    p, h, vol, lens, delta = table1_row(p)
    print(f"{p:>5} {h:9.5f} {vol:9.5f} {lens:10.5f} {delta:9.5f}")

# The same density from the whole tile: four lenses over full truncation
# faces divided by 24 orthoschemes.
model = build_3d(7)
res = density(model, 0.0)
print("\nfull-cell density at p = 7:", res.delta)
print("cell volume:", model.cell_volume, "  face area:", model.face_measure)
print("constraints satisfied:", res.report.ok)
