r"""Volumes of orthoschemes, hyperball pieces and truncation faces.

3-dimensional complete orthoschemes use Kellerhals' Lobachevsky-function
formula in the essential angles.  The 5-dimensional orthoscheme
[5,3,3,3,3] is obtained from Schlafli's differential formula as

.. math::

    \mathrm{Vol}_5 = \frac14 \int_{\pi/3}^{2\pi/5}
        \mathrm{Vol}_3([5, 3, \beta(t)])\,dt + \frac{\zeta(3)}{3200},
    \qquad \beta(t) = \arctan\sqrt{2 - \cot^2 t}.

A hyperball piece of height h over a base polytope A in its base
hyperplane has volume ``Vol(A) * int_0^h cosh^{n-1}(s) ds``; the closed
forms below are those integrals.
"""
from functools import lru_cache
from math import pi, sinh

import numpy as np

from .coxeter import CoxeterGraph, gauss_bonnet_volume_4d
from .quadrature import adaptive_gauss_legendre
from .specfun import lobachevsky, zeta3

__all__ = [
    "ORTHOSCHEMES_PER_CELL",
    "ORTHOSCHEMES_PER_FACE",
    "OrthoschemeSpec",
    "LensSpec",
    "orthoscheme_volume_3d",
    "orthoscheme_volume_5d",
    "vol3_535",
    "beta_5d",
    "hyperball_lens_volume_3d",
    "hyperball_lens_volume_5d",
    "lens_bracket",
    "truncation_face_area_3d",
    "truncation_facet_volume_5d",
]

# symmetry group orders of the regular simplex (A_3, A_5) and of its
# truncation faces (A_2, A_4)
ORTHOSCHEMES_PER_CELL = {3: 24, 5: 720}
ORTHOSCHEMES_PER_FACE = {3: 6, 5: 120}


class OrthoschemeSpec:
    """Essential angles of a complete orthoscheme of degree 0 or 1."""

    def __init__(self, angles, truncation=1):
        self.angles = tuple(float(a) for a in angles)
        self.dimension = len(self.angles)
        self.truncation = truncation
        if self.dimension not in (3, 5):
            raise ValueError("only 3- and 5-dimensional orthoschemes are supported")
        if truncation not in (0, 1):
            raise ValueError("truncation degree must be 0 or 1")
        if not all(0 < a <= pi / 2 for a in self.angles):
            raise ValueError("essential angles must lie in (0, pi/2]")

    @classmethod
    def from_symbol(cls, symbol, truncation=1):
        return cls([pi / k for k in symbol], truncation)

    def volume(self, tol=1e-11):
        if self.dimension == 3:
            return orthoscheme_volume_3d(*self.angles)
        expected = (pi / 5, pi / 3, pi / 3, pi / 3, pi / 3)
        if not np.allclose(self.angles, expected, rtol=0, atol=1e-14):
            raise NotImplementedError("only the [5,3,3,3,3] family is implemented in dimension 5")
        return orthoscheme_volume_5d(tol)

    def __repr__(self):
        return f"OrthoschemeSpec(angles={self.angles}, truncation={self.truncation})"


class LensSpec:
    """Hyperball piece: a base measure in the base hyperplane and a height."""

    def __init__(self, dimension, base, height):
        if dimension not in (3, 5):
            raise ValueError("dimension must be 3 or 5")
        if base <= 0 or height < 0:
            raise ValueError("need base > 0 and height >= 0")
        self.dimension, self.base, self.height = dimension, float(base), float(height)

    def volume(self):
        if self.dimension == 3:
            return hyperball_lens_volume_3d(self.base, self.height)
        return hyperball_lens_volume_5d(self.base, self.height)


def _theta(a01, a12, a23):
    rad = np.cos(a12) ** 2 - np.sin(a01) ** 2 * np.sin(a23) ** 2
    if np.any(rad < 0):
        raise ValueError(
            "theta is not real: the vertex configuration is spherical or Euclidean"
        )
    return np.arctan2(np.sqrt(rad), np.cos(a01) * np.cos(a23))


def orthoscheme_volume_3d(a01, a12, a23):
    """Volume of a 3-dimensional complete orthoscheme from its essential angles.

    Not valid for Lambert cube configurations.
    """
    th = _theta(a01, a12, a23)
    L = lobachevsky
    v = 0.25 * (
        L(a01 + th) - L(a01 - th)
        + L(pi / 2 + a12 - th) + L(pi / 2 - a12 - th)
        + L(a23 + th) - L(a23 - th)
        + 2.0 * L(pi / 2 - th)
    )
    return float(v) if np.ndim(v) == 0 else v


def beta_5d(t):
    """Third essential angle of the [5,3,beta] face as a function of t."""
    t = np.asarray(t, dtype=float)
    return np.arctan(np.sqrt(2.0 - 1.0 / np.tan(t) ** 2))


def vol3_535(t):
    """Vol_3([5, 3, beta(t)]) written out for this face family (array input)."""
    b = beta_5d(t)
    c5, s5 = np.cos(pi / 5), np.sin(pi / 5)
    th = np.arctan(np.sqrt(1.0 - 4.0 * s5**2 * np.sin(b) ** 2) / (2.0 * c5 * np.cos(b)))
    L = lobachevsky
    return 0.25 * (
        L(pi / 5 + th) - L(pi / 5 - th)
        - L(pi / 6 + th) + L(pi / 6 - th)
        + L(b + th) - L(b - th)
        + 2.0 * L(pi / 2 - th)
    )


@lru_cache(maxsize=8)
def orthoscheme_volume_5d(tol=1e-11):
    """Volume of the complete orthoscheme [5,3,3,3,3] (outer final vertex)."""
    integral, _ = adaptive_gauss_legendre(vol3_535, pi / 3, 2 * pi / 5, tol=tol)
    return 0.25 * integral + zeta3() / 3200.0


def _check_lens(base, h):
    if base < 0 or h < 0:
        raise ValueError(f"lens volume needs nonnegative base and height, got {base}, {h}")


def lens_bracket(dimension, h):
    """The height-dependent factor: lens volume per unit base measure."""
    if dimension == 3:
        return 0.25 * (sinh(2 * h) + 2 * h)
    if dimension == 5:
        return (0.5 * sinh(4 * h) + 4 * sinh(2 * h) + 6 * h) / 16.0
    raise ValueError("dimension must be 3 or 5")


def hyperball_lens_volume_3d(base_area, h):
    _check_lens(base_area, h)
    return base_area * lens_bracket(3, h)


def hyperball_lens_volume_5d(base_vol4, h):
    _check_lens(base_vol4, h)
    return base_vol4 * lens_bracket(5, h)


def truncation_face_area_3d(p, per_orthoscheme=False):
    """Area of a truncation triangle of the regular truncated tetrahedron.

    The triangle is regular with angles 2*pi/p (the truncating plane is
    orthogonal to the edges it cuts), so its area is the angle defect
    pi - 6*pi/p.  Six orthoschemes share one triangle.
    """
    if p <= 6:
        raise ValueError(f"p must exceed 6 for a hyperbolic truncation face, got {p}")
    area = pi * (1.0 - 6.0 / p)
    return area / ORTHOSCHEMES_PER_FACE[3] if per_orthoscheme else area


def truncation_facet_volume_5d(per_orthoscheme=False):
    """4-volume of a truncation facet of the 5-dimensional tile.

    The facet is a regular hyperbolic 4-simplex with dihedral angle 2*pi/5,
    tiled by 120 copies of the [5,3,3,3] orthoscheme (Gauss-Bonnet covolume).
    """
    share = gauss_bonnet_volume_4d(CoxeterGraph.linear([5, 3, 3, 3]))
    return share if per_orthoscheme else ORTHOSCHEMES_PER_FACE[5] * share
