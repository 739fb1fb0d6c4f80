"""Adaptive Gauss-Legendre quadrature for smooth integrands on a finite interval."""
from functools import lru_cache

import numpy as np

__all__ = ["QuadratureError", "gauss_legendre", "adaptive_gauss_legendre"]


class QuadratureError(RuntimeError):
    def __init__(self, message, value, error):
        super().__init__(f"{message} (value {value:.15g}, error estimate {error:.3g})")
        self.value = value
        self.error = error


@lru_cache(maxsize=None)
def _nodes(order):
    x, w = np.polynomial.legendre.leggauss(order)
    return x, w


def gauss_legendre(func, a, b, order=20):
    """Fixed-order rule; ``func`` must accept an array of nodes."""
    x, w = _nodes(order)
    mid, half = 0.5 * (a + b), 0.5 * (b - a)
    return float(half * np.dot(w, func(mid + half * x)))


def adaptive_gauss_legendre(func, a, b, tol=1e-11, order=15, max_depth=40):
    """Integrate ``func`` over [a, b] by interval bisection.

    Each panel is accepted once the rule on the panel and the sum over its
    two halves agree to within the panel's share of ``tol``.  Returns
    ``(value, error_estimate)``.  Raises QuadratureError when a panel keeps
    failing at ``max_depth``.
    """
    a, b = float(a), float(b)
    if a == b:
        return 0.0, 0.0
    length = abs(b - a)
    total = 0.0
    err = 0.0
    stack = [(a, b, gauss_legendre(func, a, b, order), 0)]
    while stack:
        lo, hi, whole, depth = stack.pop()
        mid = 0.5 * (lo + hi)
        left = gauss_legendre(func, lo, mid, order)
        right = gauss_legendre(func, mid, hi, order)
        diff = abs(left + right - whole)
        if diff <= tol * abs(hi - lo) / length:
            total += left + right
            err += diff
        elif depth >= max_depth:
            raise QuadratureError("adaptive quadrature did not converge", total + left + right, err + diff)
        else:
            stack.append((mid, hi, right, depth + 1))
            stack.append((lo, mid, left, depth + 1))
    return total, err
