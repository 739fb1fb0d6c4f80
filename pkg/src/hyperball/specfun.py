r"""Special functions for hyperbolic volumes.

The Lobachevsky function

.. math::

    \mathcal{L}(x) = -\int_0^x \log|2\sin t|\,dt = \tfrac12 \mathrm{Cl}_2(2x)

is odd and :math:`\pi`-periodic.  It is evaluated by reducing the argument to
:math:`[0, \pi/2]` and summing the small-argument expansion of the Clausen
function

.. math::

    \mathrm{Cl}_2(\theta) = \theta - \theta\log\theta
        + \theta \sum_{n\ge1} \frac{\zeta(2n)}{n(2n+1)}
          \left(\frac{\theta}{2\pi}\right)^{2n},

which avoids the logarithmic singularity of the defining integral.  On the
reduced range the ratio :math:`(\theta/2\pi)^2` never exceeds 1/4, so a fixed
number of terms reaches double precision.
"""
from fractions import Fraction
from math import comb, factorial, fmod, isfinite, log, pi

import numpy as np

__all__ = ["lobachevsky", "clausen2", "zeta3"]

_N_TERMS = 32


def _bernoulli_even(nmax):
    """Exact B_0, B_2, ..., B_{2*nmax} (Akiyama-Tanigawa)."""
    m_max = 2 * nmax
    a = [Fraction(0)] * (m_max + 1)
    out = []
    for m in range(m_max + 1):
        a[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            a[j - 1] = j * (a[j - 1] - a[j])
        if m % 2 == 0:
            out.append(a[0])
    return out


def _zeta_even(nmax):
    """zeta(2n) for n = 1..nmax from the Bernoulli numbers."""
    bern = _bernoulli_even(nmax)
    vals = []
    for n in range(1, nmax + 1):
        b = abs(bern[n])
        # zeta(2n) = |B_2n| (2 pi)^{2n} / (2 (2n)!)
        vals.append(float(b / (2 * factorial(2 * n))) * (2 * pi) ** (2 * n))
    return vals


# Horner coefficients in u = (theta / 2 pi)^2, highest order first.
_CL2_COEF_LIST = [z / (n * (2 * n + 1)) for n, z in enumerate(_zeta_even(_N_TERMS), start=1)][::-1]
_CL2_COEF = np.array(_CL2_COEF_LIST)


def _clausen2_reduced(theta):
    """Cl_2 on 0 <= theta <= pi (array input)."""
    u = (theta / (2 * pi)) ** 2
    s = np.zeros_like(theta)
    for c in _CL2_COEF:
        s = s * u + c
    s = s * u
    with np.errstate(divide="ignore", invalid="ignore"):
        out = theta * (1.0 - np.log(theta) + s)
    return np.where(theta == 0.0, 0.0, out)


def _lobachevsky_scalar(x):
    if not isfinite(x):
        raise ValueError("lobachevsky requires finite arguments")
    r = fmod(x, pi)
    if r < 0:
        r += pi
    sign = 1.0
    if r > pi / 2:
        r, sign = pi - r, -1.0
    if r == 0.0:
        return 0.0
    theta = 2.0 * r
    u = (theta / (2 * pi)) ** 2
    s = 0.0
    for c in _CL2_COEF_LIST:
        s = s * u + c
    return sign * 0.5 * theta * (1.0 - log(theta) + s * u)


def lobachevsky(x):
    """Lobachevsky function L(x) = -int_0^x log|2 sin t| dt.

    Accepts a float or an array; returns the same shape.  Absolute error is
    below 1e-15 over the reduced range, so the result is good to ~1e-14 for
    any argument of moderate size (range reduction costs a few ulps of x).
    """
    if isinstance(x, (float, int)):
        return _lobachevsky_scalar(float(x))
    arr = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(arr)):
        raise ValueError("lobachevsky requires finite arguments")
    r = np.mod(arr, pi)
    # L(r) for r in (pi/2, pi) equals -L(pi - r)
    upper = r > pi / 2
    r = np.where(upper, pi - r, r)
    val = 0.5 * _clausen2_reduced(2.0 * r)
    val = np.where(upper, -val, val)
    if np.ndim(val) == 0:
        return float(val)
    return val


def clausen2(theta):
    """Clausen function Cl_2(theta) = sum_n sin(n theta) / n^2."""
    return 2.0 * lobachevsky(np.asarray(theta, dtype=float) / 2.0)


def zeta3():
    """Apery's constant zeta(3).

    Uses the central-binomial series
    zeta(3) = 5/2 * sum_{n>=1} (-1)^(n+1) / (n^3 C(2n, n)),
    whose terms shrink by about a factor 4 each; 40 terms are ample.
    """
    total = Fraction(0)
    for n in range(1, 41):
        total += Fraction((-1) ** (n + 1), n**3 * comb(2 * n, n))
    return float(Fraction(5, 2) * total)
