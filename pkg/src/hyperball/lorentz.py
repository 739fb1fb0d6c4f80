"""Projective (Beltrami-Cayley-Klein) model of hyperbolic n-space.

Points and hyperplanes are given by homogeneous coordinates
``(x0, x1, ..., xn)`` with the bilinear form

    <x, y> = -x0*y0 + x1*y1 + ... + xn*yn.

A vector with negative square is a proper (interior) point, a null vector is
on the ideal boundary and a vector with positive square is an outer point.
The polar hyperplane of an outer point meets the model; a hyperplane is
stored through its pole.  Curvature is fixed at -1.
"""
from dataclasses import dataclass
from enum import Enum
from math import acosh, asinh, sqrt

import numpy as np

__all__ = [
    "PointClass",
    "Hyperplane",
    "NotUltraparallelError",
    "SingularMatrixError",
    "bilinear",
    "classify",
    "dist_points",
    "dist_point_to_hyperplane",
    "dist_ultraparallel_hyperplanes",
    "foot_on_polar",
    "invert_small",
]

BOUNDARY_TOL = 1e-10


class PointClass(Enum):
    INTERIOR = "interior"
    BOUNDARY = "boundary"
    OUTER = "outer"


class NotUltraparallelError(ValueError):
    """Two hyperplanes intersect or are parallel.

    ``cos_angle`` holds |<a,b>| / sqrt(<a,a><b,b>), the cosine of their
    angle (1 for parallel or identical hyperplanes).
    """

    def __init__(self, cos_angle):
        self.cos_angle = cos_angle
        super().__init__(f"hyperplanes are not ultraparallel (cos angle = {cos_angle:.12g})")


class SingularMatrixError(ValueError):
    pass


def _vec(x):
    v = np.asarray(x, dtype=float)
    if v.ndim != 1 or v.size < 2:
        raise ValueError("expected a 1-d homogeneous coordinate vector")
    return v


def bilinear(x, y):
    """Signature (1, n) form <x, y>."""
    x = _vec(x)
    y = _vec(y)
    if x.shape != y.shape:
        raise ValueError(f"dimension mismatch: {x.size} vs {y.size}")
    return float(-x[0] * y[0] + np.dot(x[1:], y[1:]))


@dataclass(frozen=True)
class Hyperplane:
    """Hyperplane given by its pole under the polarity."""

    pole: np.ndarray

    def __post_init__(self):
        pole = _vec(self.pole)
        if bilinear(pole, pole) <= 0:
            raise ValueError("hyperplane pole must be an outer point (<b,b> > 0)")
        object.__setattr__(self, "pole", pole)

    @property
    def dim(self):
        return self.pole.size - 1

    def contains(self, x, tol=1e-12):
        x = _vec(x)
        scale = np.linalg.norm(x) * np.linalg.norm(self.pole)
        return abs(bilinear(x, self.pole)) <= tol * scale


def classify(x, tol=BOUNDARY_TOL):
    """Classify a point as interior, boundary or outer.

    ``|<x,x>| <= tol * |x|^2`` (Euclidean norm) counts as boundary.
    """
    x = _vec(x)
    n2 = float(np.dot(x, x))
    if n2 == 0.0:
        raise ValueError("the zero vector is not a projective point")
    q = bilinear(x, x)
    if abs(q) <= tol * n2:
        return PointClass.BOUNDARY
    return PointClass.INTERIOR if q < 0 else PointClass.OUTER


def _require_interior(t, name="point"):
    if classify(t) is not PointClass.INTERIOR:
        raise ValueError(f"{name} must be an interior point")


def dist_points(a, b):
    """Hyperbolic distance between two interior points."""
    _require_interior(a, "a")
    _require_interior(b, "b")
    c = abs(bilinear(a, b)) / sqrt(bilinear(a, a) * bilinear(b, b))
    return acosh(max(c, 1.0))


def dist_point_to_hyperplane(t, plane):
    """Distance from an interior point to a hyperplane.

    sinh d = |<b,t>| / sqrt(-<b,b><t,t>) with b the pole of the plane.
    """
    _require_interior(t)
    if not isinstance(plane, Hyperplane):
        plane = Hyperplane(plane)
    b = plane.pole
    if b.shape != np.shape(t):
        raise ValueError("dimension mismatch")
    s = abs(bilinear(b, t)) / sqrt(-bilinear(b, b) * bilinear(t, t))
    return asinh(s)


def dist_ultraparallel_hyperplanes(a, b):
    """Length of the common perpendicular of two ultraparallel hyperplanes.

    cosh e = |<a,b>| / sqrt(<a,a><b,b>) for the poles a, b.  Raises
    NotUltraparallelError when the planes meet (or touch at infinity).
    """
    if not isinstance(a, Hyperplane):
        a = Hyperplane(a)
    if not isinstance(b, Hyperplane):
        b = Hyperplane(b)
    pa, pb = a.pole, b.pole
    c = abs(bilinear(pa, pb)) / sqrt(bilinear(pa, pa) * bilinear(pb, pb))
    # identical or tangent-at-infinity planes land on c == 1 up to rounding
    if c <= 1.0 + 1e-12:
        raise NotUltraparallelError(min(c, 1.0))
    return acosh(c)


def foot_on_polar(p, b_pole):
    """Foot of the perpendicular from p to the polar hyperplane of b_pole.

    Returns q = p<b,b> - b<p,b>, which satisfies <q, b> = 0.
    """
    p = _vec(p)
    b = _vec(b_pole)
    bb = bilinear(b, b)
    if bb <= 0:
        raise ValueError("b_pole must be an outer point")
    q = p * bb - b * bilinear(p, b)
    if not np.any(q):
        raise ValueError("degenerate input: p is a multiple of b_pole")
    return q


def invert_small(matrix, cond_limit=1e12):
    """Invert a small square matrix by Gauss-Jordan elimination.

    Partial pivoting; raises SingularMatrixError when a pivot falls below
    ``max|a_ij| / cond_limit``.
    """
    a = np.array(matrix, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("expected a square matrix")
    n = a.shape[0]
    scale = np.max(np.abs(a)) if a.size else 0.0
    if scale == 0.0:
        raise SingularMatrixError("zero matrix")
    aug = np.hstack([a, np.eye(n)])
    for col in range(n):
        piv = col + int(np.argmax(np.abs(aug[col:, col])))
        if abs(aug[piv, col]) <= scale / cond_limit:
            raise SingularMatrixError(f"matrix is singular to working precision (column {col})")
        if piv != col:
            aug[[col, piv]] = aug[[piv, col]]
        aug[col] /= aug[col, col]
        for row in range(n):
            if row != col and aug[row, col] != 0.0:
                aug[row] -= aug[row, col] * aug[col]
    return aug[:, n:]
