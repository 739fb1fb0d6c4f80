"""
Coxeter graphs, finite parabolics and Euler characteristics
===========================================================
"""
from itertools import combinations

from hyperball.coxeter import (
    CoxeterGraph,
    finite_order,
    orbifold_euler_characteristic,
    parse_symbol,
    signature,
)

for text in ("3", "3,3", "4,3", "5,3", "3,4,3", "5,3,3", "5,3,3,3", "7,3,3"):
    g = parse_symbol(text)
    print(f"[{text}]  order {finite_order(g)}  signature {signature(g)}")

# The alternating sum over all 32 generator subsets of [5,3,3,3]
g = CoxeterGraph.linear([5, 3, 3, 3])
for k in range(5):
    orders = sorted(finite_order(g, s) for s in combinations(range(5), k))
    print(k, orders)
print("chi =", orbifold_euler_characteristic(g))
