"""Coxeter graphs, Gram matrices and orbifold invariants.

A Coxeter graph has one node per generating reflection and a label
k_uv >= 2 on each pair; label 2 (orthogonal mirrors) is the default and is
not stored.  ``math.inf`` marks parallel mirrors.  Linear graphs are built
from Schlafli symbols, e.g. ``CoxeterGraph.linear([7, 3, 3])``.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import asinh, factorial, inf, isinf, pi, sqrt

import numpy as np

from .lorentz import invert_small

__all__ = [
    "CoxeterGraph",
    "parse_symbol",
    "gram_matrix",
    "inverse_gram",
    "signature",
    "truncation_height",
    "finite_order",
    "orbifold_euler_characteristic",
    "gauss_bonnet_volume_4d",
]

_EXCEPTIONAL_Y = {(1, 2, 2): 51840, (1, 2, 3): 2903040, (1, 2, 4): 696729600}


@dataclass(frozen=True)
class CoxeterGraph:
    rank: int
    edges: dict = field(default_factory=dict)  # {(u, v): label} with u < v

    def __post_init__(self):
        if self.rank < 0:
            raise ValueError("rank must be nonnegative")
        clean = {}
        for (u, v), k in dict(self.edges).items():
            if u == v or not (0 <= u < self.rank and 0 <= v < self.rank):
                raise ValueError(f"bad edge ({u}, {v})")
            if not k >= 2:
                raise ValueError(f"Coxeter label must be >= 2, got {k}")
            if k != 2:
                clean[(min(u, v), max(u, v))] = k
        object.__setattr__(self, "edges", clean)

    @classmethod
    def linear(cls, symbol):
        """Linear graph o--k1--o--k2-- ... --o from a Schlafli symbol."""
        symbol = list(symbol)
        return cls(len(symbol) + 1, {(i, i + 1): k for i, k in enumerate(symbol)})

    def __hash__(self):
        return hash((self.rank, tuple(sorted(self.edges.items()))))

    def label(self, u, v):
        if u == v:
            return 1
        return self.edges.get((min(u, v), max(u, v)), 2)

    def neighbours(self, u, nodes=None):
        nodes = range(self.rank) if nodes is None else nodes
        return [v for v in nodes if v != u and self.label(u, v) != 2]

    def components(self, nodes=None):
        """Connected components of the subgraph induced on ``nodes``."""
        remaining = set(range(self.rank) if nodes is None else nodes)
        comps = []
        while remaining:
            stack = [remaining.pop()]
            comp = set(stack)
            while stack:
                u = stack.pop()
                for v in self.neighbours(u, remaining):
                    remaining.discard(v)
                    comp.add(v)
                    stack.append(v)
            comps.append(sorted(comp))
        return comps

    def is_integral(self):
        return all(isinf(k) or float(k).is_integer() for k in self.edges.values())


def parse_symbol(text):
    """Parse ``"p,q,r[,s,t]"`` (optionally bracketed) into a linear graph.

    Integer entries stay ints; a decimal first entry such as ``6.135`` is
    allowed for real-parameter families.
    """
    body = text.strip().strip("[]{}()")
    if not body:
        raise ValueError("empty Schlafli symbol")
    labels = []
    for tok in body.split(","):
        tok = tok.strip()
        if tok.lower() in ("inf", "infinity", "oo"):
            labels.append(inf)
            continue
        try:
            labels.append(int(tok))
        except ValueError:
            labels.append(float(tok))
    return CoxeterGraph.linear(labels)


def gram_matrix(g):
    """Coxeter-Schlafli matrix: 1 on the diagonal, -cos(pi/k_ij) elsewhere."""
    if not isinstance(g, CoxeterGraph):
        g = CoxeterGraph.linear(g)
    c = np.eye(g.rank)
    for (u, v), k in g.edges.items():
        c[u, v] = c[v, u] = -1.0 if isinf(k) else -np.cos(pi / k)
    return c


def inverse_gram(g):
    return invert_small(gram_matrix(g))


def signature(g, tol=1e-12):
    """(negative, zero, positive) eigenvalue counts of the Gram matrix."""
    ev = np.linalg.eigvalsh(gram_matrix(g))
    return int(np.sum(ev < -tol)), int(np.sum(abs(ev) <= tol)), int(np.sum(ev > tol))


def truncation_height(g):
    """Distance from the last proper vertex to the polar of the outer one.

    For a linear orthoscheme graph whose final principal vertex is outer,
    with a, b the last two indices of the inverse Gram matrix h,

        cosh h = sqrt((h_aa h_bb - h_ab^2) / (h_aa h_bb)).

    The equivalent form sinh h = |h_ab| / sqrt(-h_aa h_bb) is evaluated to
    keep precision when h is small.  In the truncated regular simplex this
    is half the distance between adjacent truncating hyperplanes.
    """
    if not isinstance(g, CoxeterGraph):
        g = CoxeterGraph.linear(g)
    if g.rank < 2:
        raise ValueError("need at least two mirrors")
    hm = inverse_gram(g)
    a, b = g.rank - 2, g.rank - 1
    prod = hm[a, a] * hm[b, b]
    if prod >= 0:
        raise ValueError(
            "final principal vertex is not outer (cosh argument < 1): "
            "no truncation for this graph"
        )
    return asinh(abs(hm[a, b]) / sqrt(-prod))


def _check_integral(g):
    if not g.is_integral():
        raise ValueError("group-theoretic operations need integer Coxeter labels")


def _component_order(g, comp):
    n = len(comp)
    if n == 1:
        return 2
    labels = {(u, v): g.label(u, v) for u, v in combinations(comp, 2) if g.label(u, v) != 2}
    if any(isinf(k) for k in labels.values()):
        return inf
    labels = {e: int(k) for e, k in labels.items()}
    if n == 2:
        (k,) = labels.values()
        return 2 * k
    deg = {u: len(g.neighbours(u, comp)) for u in comp}
    if len(labels) != n - 1:  # contains a cycle
        return inf
    if max(deg.values()) <= 2:
        # walk the path from one end
        start = next(u for u in comp if deg[u] == 1)
        order, prev = [start], None
        while len(order) < n:
            nxt = [v for v in g.neighbours(order[-1], comp) if v != prev]
            prev = order[-1]
            order.append(nxt[0])
        seq = [g.label(order[i], order[i + 1]) for i in range(n - 1)]
        if seq[0] != 3 and seq[-1] == 3:
            seq = seq[::-1]
        seq = tuple(int(k) for k in seq)
        if all(k == 3 for k in seq):
            return factorial(n + 1)
        if seq[-1] == 4 and all(k == 3 for k in seq[:-1]):
            return 2**n * factorial(n)
        if seq == (3, 4, 3):
            return 1152
        if seq == (3, 5):
            return 120
        if seq == (3, 3, 5):
            return 14400
        return inf
    # Y-shaped diagrams: D_n and E_6,7,8
    centres = [u for u in comp if deg[u] == 3]
    if len(centres) != 1 or max(deg.values()) > 3 or any(k != 3 for k in labels.values()):
        return inf
    centre = centres[0]
    arms = []
    for first in g.neighbours(centre, comp):
        length, prev, cur = 1, centre, first
        while True:
            nxt = [v for v in g.neighbours(cur, comp) if v != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        arms.append(length)
    arms = tuple(sorted(arms))
    if arms[:2] == (1, 1):
        return 2 ** (n - 1) * factorial(n)
    return _EXCEPTIONAL_Y.get(arms, inf)


def finite_order(g, nodes=None):
    """Order of the (parabolic) Coxeter group on ``nodes``; ``math.inf`` if infinite.

    Components are matched against the finite types A_n, B_n, D_n, E_6-8,
    F_4, H_3, H_4 and I_2(m); anything else is treated as infinite.
    """
    if not isinstance(g, CoxeterGraph):
        g = CoxeterGraph.linear(g)
    _check_integral(g)
    total = 1
    for comp in g.components(nodes):
        o = _component_order(g, comp)
        if isinf(o):
            return inf
        total *= o
    return total


def orbifold_euler_characteristic(g):
    """sum over generator subsets T with W_T finite of (-1)^|T| / |W_T|.

    Exact (``Fraction``).  Every proper parabolic subgroup must be finite;
    the full group may be infinite (it then contributes nothing).
    """
    if not isinstance(g, CoxeterGraph):
        g = CoxeterGraph.linear(g)
    _check_integral(g)
    chi = Fraction(0)
    for size in range(g.rank + 1):
        for subset in combinations(range(g.rank), size):
            order = finite_order(g, subset)
            if isinf(order):
                if size < g.rank:
                    raise ValueError(
                        f"parabolic subgroup on {subset} is infinite; "
                        "not a compact simplex group"
                    )
                continue
            chi += Fraction((-1) ** size, order)
    return chi


def gauss_bonnet_volume_4d(g):
    """Covolume of a compact hyperbolic Coxeter 4-simplex group.

    Gauss-Bonnet in dimension four: vol = (4 pi^2 / 3) * chi.
    """
    if not isinstance(g, CoxeterGraph):
        g = CoxeterGraph.linear(g)
    if g.rank != 5:
        raise ValueError("a 4-simplex group has rank 5")
    chi = orbifold_euler_characteristic(g)
    if chi <= 0:
        raise ValueError(f"Euler characteristic {chi} is not positive")
    return 4.0 * pi**2 / 3.0 * float(chi)
