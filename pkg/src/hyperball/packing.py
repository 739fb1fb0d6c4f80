"""Hyperball packings in truncated regular simplex tilings.

Two tile families are modelled:

* the regular truncated tetrahedron of the {p,3,3} tiling of H^3
  (non-right dihedral angles 2*pi/p, p > 6; integer p >= 7 tiles space),
* the regular truncated 5-simplex of the {5,3,3,3,3} tiling of H^5.

Each tile comes from a Euclidean regular simplex centred at the origin of
the Cayley-Klein ball with outer vertices B_i; it is cut by the polar
hyperplanes beta_i of its vertices, and the hyperballs sit on those
truncating hyperplanes.  The packing family analysed here blows up one
hyperball to height h + x while the others shrink to h - x, keeping them
tangent; x = 0 is the congruent packing.
"""
from dataclasses import dataclass, field
from math import cos, isclose, pi, sqrt, asinh

import numpy as np

from .coxeter import CoxeterGraph, truncation_height
from .lorentz import (
    Hyperplane,
    PointClass,
    bilinear,
    classify,
    dist_point_to_hyperplane,
    dist_ultraparallel_hyperplanes,
)
from .volume import (
    ORTHOSCHEMES_PER_CELL,
    ORTHOSCHEMES_PER_FACE,
    lens_bracket,
    orthoscheme_volume_3d,
    orthoscheme_volume_5d,
    truncation_face_area_3d,
    truncation_facet_volume_5d,
)

__all__ = [
    "ModelConsistencyError",
    "TruncatedSimplexModel",
    "HeightAssignment",
    "Check",
    "ConstraintReport",
    "DensityResult",
    "OptimumResult",
    "build_3d",
    "build_5d",
    "x_max",
    "density",
    "density_sweep",
    "validate",
    "congruent_density_3d",
    "table1_row",
    "golden_section_max",
    "maximize_over_x",
    "maximize_over_p",
]

ROUTE_TOL = 1e-9
CONSTRAINT_TOL = 1e-12


class ModelConsistencyError(RuntimeError):
    """Two independent computations of the same tile quantity disagree."""


@dataclass(frozen=True)
class TruncatedSimplexModel:
    dimension: int
    p: float
    y: float
    h: float
    w: float
    e: float
    face_measure: float
    orthoscheme_volume: float
    poles: np.ndarray = field(repr=False)
    face_centres: np.ndarray = field(repr=False)

    @property
    def n_balls(self):
        return self.dimension + 1

    @property
    def n_orthoschemes(self):
        return ORTHOSCHEMES_PER_CELL[self.dimension]

    @property
    def cell_volume(self):
        return self.n_orthoschemes * self.orthoscheme_volume

    @property
    def base_planes(self):
        return [Hyperplane(b) for b in self.poles]

    @property
    def realizable(self):
        """Whether the tile generates a tiling of all of H^n (else local only)."""
        if self.dimension == 5:
            return True
        return float(self.p).is_integer() and self.p >= 7

    @property
    def x_max(self):
        return x_max(self)


def _poles_3d(y):
    r2, r3 = sqrt(2.0), sqrt(3.0)
    return np.array([
        [1.0, 2 * r2 * y / 3, 0.0, -y / 3],
        [1.0, -r2 * y / 3, r2 * y / r3, -y / 3],
        [1.0, -r2 * y / 3, -r2 * y / r3, -y / 3],
        [1.0, 0.0, 0.0, y],
    ])


def _poles_5d(y):
    r = sqrt
    return np.array([
        [1.0, y / r(15), y / r(10), y / r(6), y / r(3), y],
        [1.0, y / r(15), y / r(10), y / r(6), y / r(3), -y],
        [1.0, y / r(15), y / r(10), -r(3) * y / r(2), 0.0, 0.0],
        [1.0, y / r(15), -2 * r(2) * y / r(5), 0.0, 0.0, 0.0],
        [1.0, y / r(15), y / r(10), y / r(6), -2 * y / r(3), 0.0],
        [1.0, -r(5) * y / r(3), 0.0, 0.0, 0.0, 0.0],
    ])


def _face_centres(poles):
    """Centre T_i of the side face opposite B_i.

    The hyperplane through the remaining vertices is intersected with the
    line from the origin opposite to B_i (the symmetry axis of the face).
    """
    centres = []
    for i in range(len(poles)):
        others = np.delete(poles, i, axis=0)
        # Euclidean normal (n0, n) of the hyperplane n0*x0 + n.x = 0 through the others
        normal = np.linalg.svd(others)[2][-1]
        axis = -poles[i, 1:]
        lam = -normal[0] / np.dot(normal[1:], axis)
        centres.append(np.concatenate(([1.0], lam * axis)))
    return np.array(centres)


def _coordinate_routes(poles, face_centres):
    planes = [Hyperplane(b) for b in poles]
    n = len(planes)
    dists = [dist_ultraparallel_hyperplanes(planes[i], planes[j])
             for i in range(n) for j in range(i + 1, n)]
    ws = [dist_point_to_hyperplane(face_centres[i], planes[i]) for i in range(n)]
    return dists, ws


def _check(name, a, b, tol=ROUTE_TOL):
    if not isclose(a, b, rel_tol=tol, abs_tol=tol):
        raise ModelConsistencyError(f"{name}: {a!r} vs {b!r}")


def _y_3d(p):
    c = cos(2 * pi / p)
    return sqrt(3.0) * sqrt((3 * c - 1) / (c + 1))


def _y_5d():
    # cos(2 pi / 5) = (y^2 + 3) / (15 - y^2)
    c = cos(2 * pi / 5)
    return sqrt((15 * c - 3) / (1 + c))


def build_3d(p):
    """Metric data of the regular truncated tetrahedron with dihedral angle 2*pi/p."""
    p = float(p) if not float(p).is_integer() else int(p)
    if not p > 6:
        raise ValueError(f"p must exceed 6 (got {p}); p <= 6 gives no hyperbolic truncated tetrahedron")
    y = _y_3d(p)
    poles = _poles_3d(y)
    centres = _face_centres(poles)

    h = truncation_height(CoxeterGraph.linear([p, 3, 3]))
    dists, ws = _coordinate_routes(poles, centres)
    for d in dists:
        _check("base-plane distance vs 2h", d, 2 * h)
    w_closed = asinh((y * y + 3) / sqrt((y * y - 1) * (9 - y * y)))
    for w in ws:
        _check("face-centre distance vs closed form", w, w_closed)

    return TruncatedSimplexModel(
        dimension=3,
        p=p,
        y=y,
        h=h,
        w=ws[0],
        e=2 * h,
        face_measure=truncation_face_area_3d(p),
        orthoscheme_volume=orthoscheme_volume_3d(pi / p, pi / 3, pi / 3),
        poles=poles,
        face_centres=centres,
    )


def build_5d(tol=1e-11):
    """Metric data of the regular truncated 5-simplex of the {5,3,3,3,3} tiling."""
    y = _y_5d()
    poles = _poles_5d(y)
    centres = _face_centres(poles)

    h = truncation_height(CoxeterGraph.linear([5, 3, 3, 3, 3]))
    dists, ws = _coordinate_routes(poles, centres)
    for d in dists:
        _check("base-plane distance vs 2h", d, 2 * h)
    w_closed = asinh(sqrt(5.0) * (y * y + 3) / sqrt((5 * y * y - 3) * (15 - y * y)))
    for w in ws:
        _check("face-centre distance vs closed form", w, w_closed)

    return TruncatedSimplexModel(
        dimension=5,
        p=5,
        y=y,
        h=h,
        w=ws[0],
        e=2 * h,
        face_measure=truncation_facet_volume_5d(),
        orthoscheme_volume=orthoscheme_volume_5d(tol),
        poles=poles,
        face_centres=centres,
    )


def x_max(model):
    """End of the expansion interval.

    The growing hyperball stops when it reaches the opposite side face
    (height w) or the neighbouring base planes (height 2h), whichever comes
    first; the shrinking ones reach height 0 together with the second case.
    """
    return min(model.h, model.w - model.h)


@dataclass(frozen=True)
class HeightAssignment:
    heights: tuple
    x: float = 0.0

    @classmethod
    def from_expansion(cls, model, x):
        h = model.h
        return cls((h + x,) + (h - x,) * (model.n_balls - 1), float(x))

    @classmethod
    def congruent(cls, model):
        return cls.from_expansion(model, 0.0)


@dataclass(frozen=True)
class Check:
    requirement: str
    subject: str
    passed: bool
    margin: float


@dataclass
class ConstraintReport:
    checks: list
    realizable: bool = True

    @property
    def ok(self):
        return all(c.passed for c in self.checks)

    def failures(self):
        return [c for c in self.checks if not c.passed]

    def to_dict(self):
        return {
            "ok": self.ok,
            "realizable": self.realizable,
            "checks": [
                {"requirement": c.requirement, "subject": c.subject,
                 "passed": c.passed, "margin": c.margin}
                for c in self.checks
            ],
        }


def validate(model, heights, tol=CONSTRAINT_TOL):
    """Check the packing requirements for hyperballs of the given heights.

    Violations are reported, never raised.
    """
    hs = heights.heights if isinstance(heights, HeightAssignment) else tuple(heights)
    n = model.n_balls
    if len(hs) != n:
        raise ValueError(f"expected {n} heights, got {len(hs)}")
    checks = []

    # requirement 1: beta_i is the polar hyperplane of an outer vertex B_i
    for i, b in enumerate(model.poles):
        q = bilinear(b, b) / float(np.dot(b, b))
        checks.append(Check("base_plane", f"beta_{i + 1}", classify(b) is PointClass.OUTER, q))
    for i, hi in enumerate(hs):
        checks.append(Check("height_nonnegative", f"H_{i + 1}", hi >= -tol, hi))

    # requirements 2-3: interiors disjoint, i.e. e_ij >= h_i + h_j
    planes = model.base_planes
    for i in range(n):
        for j in range(i + 1, n):
            e_ij = dist_ultraparallel_hyperplanes(planes[i], planes[j])
            margin = e_ij - (hs[i] + hs[j])
            checks.append(Check("disjoint", f"H_{i + 1},H_{j + 1}", margin >= -tol, margin))

    # requirement 4: no hyperball crosses its opposite side face
    for i, hi in enumerate(hs):
        margin = model.w - hi
        checks.append(Check("opposite_face", f"H_{i + 1}", margin >= -tol, margin))

    return ConstraintReport(checks, realizable=model.realizable)


@dataclass
class DensityResult:
    x: float
    heights: tuple
    lens_volumes: tuple
    numerator: float
    cell_volume: float
    delta: float
    report: ConstraintReport = None


def _check_x(model, x):
    xm = x_max(model)
    if x < -1e-12 or x > xm + 1e-12:
        raise ValueError(f"x = {x} outside the expansion interval [0, {xm:.12g}]")
    return min(max(float(x), 0.0), xm)


def density(model, x=0.0, with_report=True):
    """Local density of the expanded packing in one tile.

    The first hyperball has height h + x, the others h - x; each sits over
    a full truncation face and the cell volume counts all orthoschemes.
    """
    x = _check_x(model, x)
    ha = HeightAssignment.from_expansion(model, x)
    lens = tuple(model.face_measure * lens_bracket(model.dimension, hi) for hi in ha.heights)
    num = sum(lens)
    delta = num / model.cell_volume
    report = validate(model, ha) if with_report else None
    return DensityResult(x, ha.heights, lens, num, model.cell_volume, delta, report)


def density_sweep(model, points):
    """Uniform grid on [0, x_max] with the density at each node."""
    if points < 2:
        raise ValueError("need at least two sweep points")
    xs = np.linspace(0.0, x_max(model), int(points))
    return [(float(x), density(model, x, with_report=False).delta) for x in xs]


def congruent_density_3d(p):
    """Congruent density as a function of real p > 6, per orthoscheme.

    Uses only the Coxeter-matrix height and the angle-defect face share, so
    it is cheap enough for dense scans; ``density(build_3d(p))`` is the
    full-cell counterpart.
    """
    if not p > 6:
        raise ValueError("p must exceed 6")
    h = truncation_height(CoxeterGraph.linear([p, 3, 3]))
    lens = truncation_face_area_3d(p, per_orthoscheme=True) * lens_bracket(3, h)
    return lens / orthoscheme_volume_3d(pi / p, pi / 3, pi / 3)


def table1_row(p):
    """(p, h, Vol(orthoscheme), Vol(hyperball piece per orthoscheme), density)."""
    model = build_3d(p)
    share = model.face_measure / ORTHOSCHEMES_PER_FACE[3]
    lens = share * lens_bracket(3, model.h)
    return p, model.h, model.orthoscheme_volume, lens, lens / model.orthoscheme_volume


@dataclass
class OptimumResult:
    argmax: float
    value: float
    tolerance: float
    iterations: int
    scan_points: int
    local_maxima: int
    notes: dict = field(default_factory=dict)

    def to_dict(self):
        out = {
            "argmax": self.argmax,
            "value": self.value,
            "tolerance": self.tolerance,
            "iterations": self.iterations,
            "scan_points": self.scan_points,
            "local_maxima": self.local_maxima,
        }
        out.update(self.notes)
        return out


_INVPHI = (sqrt(5.0) - 1) / 2


def golden_section_max(f, a, b, xtol=1e-9, max_iter=200):
    """Golden-section search for the maximum of a unimodal f on [a, b].

    Returns (x, f(x), iterations).
    """
    c = b - _INVPHI * (b - a)
    d = a + _INVPHI * (b - a)
    fc, fd = f(c), f(d)
    it = 0
    while abs(b - a) > xtol and it < max_iter:
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - _INVPHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INVPHI * (b - a)
            fd = f(d)
        it += 1
    x = 0.5 * (a + b)
    return x, f(x), it


def _count_local_maxima(vals):
    d = np.diff(vals)
    sign = np.sign(d[d != 0])
    interior = int(np.sum((sign[:-1] > 0) & (sign[1:] < 0)))
    return interior + int(sign.size > 0 and sign[0] < 0) + int(sign.size > 0 and sign[-1] > 0)


def maximize_over_x(model, scan_points=1000, xtol=1e-9):
    """Maximise the density over the expansion parameter x in [0, x_max].

    A uniform scan locates the best grid cell (and counts local maxima, as a
    guard against a non-unimodal density); golden-section search refines it.
    """
    xm = x_max(model)
    f = lambda x: density(model, x, with_report=False).delta
    xs = np.linspace(0.0, xm, scan_points + 1)
    vals = np.array([f(x) for x in xs])
    k = int(np.argmax(vals))
    lo, hi = xs[max(k - 1, 0)], xs[min(k + 1, scan_points)]
    x_star, d_star, it = golden_section_max(f, lo, hi, xtol)
    # the golden iterate never lands exactly on a bracket end
    for cand in (lo, hi):
        if f(cand) >= d_star:
            x_star, d_star = float(cand), f(cand)
    return OptimumResult(float(x_star), float(d_star), xtol, it, scan_points + 1,
                         _count_local_maxima(vals), {"x_max": xm})


def maximize_over_p(lo=6.001, hi=200.0, grid=10_000, xtol=1e-9):
    """Maximise the congruent 3D density over real p in (6, inf).

    Also samples the density on ``grid`` points of [lo, hi] and records
    whether it rises strictly before the optimum and falls strictly after.
    """
    ps = np.linspace(lo, hi, grid)
    vals = np.array([congruent_density_3d(p) for p in ps])
    k = int(np.argmax(vals))
    a, b = ps[max(k - 1, 0)], ps[min(k + 1, grid - 1)]
    p_star, d_star, it = golden_section_max(congruent_density_3d, a, b, xtol)

    diffs = np.diff(vals)
    before = ps[1:] <= p_star
    after = ps[:-1] >= p_star
    notes = {
        "increasing_before": bool(np.all(diffs[before] > 0)),
        "decreasing_after": bool(np.all(diffs[after] < 0)),
        "local_only": True,
    }
    return OptimumResult(float(p_star), float(d_star), xtol, it, grid,
                         _count_local_maxima(vals), notes)
