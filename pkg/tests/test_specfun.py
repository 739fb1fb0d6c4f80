from math import pi

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hyperball.specfun import clausen2, lobachevsky, zeta3

# -int_0^{pi/6} log(2 sin t) dt, mpmath.quad at 30 digits
L_PI_6 = 0.5074708032048268125

reals = st.floats(min_value=-10, max_value=10, allow_nan=False)


def lob_by_quadrature(x):
    """Independent route: tanh-sinh quadrature of the defining integral (0 < x < pi)."""
    with mpmath.workdps(25):
        return float(-mpmath.quad(lambda t: mpmath.log(2 * mpmath.sin(t)), [0, x]))


def test_trivial_values():
    assert lobachevsky(0.0) == 0.0
    assert abs(lobachevsky(pi / 2)) < 1e-15
    assert abs(lobachevsky(pi)) < 1e-15


def test_pi_over_6():
    assert lobachevsky(pi / 6) == pytest.approx(L_PI_6, abs=1e-14)


def test_array_input_matches_scalar():
    xs = np.linspace(-7, 7, 301)
    arr = lobachevsky(xs)
    assert arr.shape == xs.shape
    assert np.max(np.abs(arr - [lobachevsky(float(x)) for x in xs])) < 1e-15


def test_rejects_nonfinite():
    with pytest.raises(ValueError):
        lobachevsky(float("nan"))
    with pytest.raises(ValueError):
        lobachevsky(np.array([0.0, np.inf]))


def test_quadrature_oracle():
    rng = np.random.default_rng(20261018)
    for x in rng.uniform(0, pi, 100):
        assert abs(lobachevsky(float(x)) - lob_by_quadrature(float(x))) <= 1e-10


@given(reals)
def test_odd(x):
    assert abs(lobachevsky(-x) + lobachevsky(x)) <= 1e-12


@given(reals)
def test_periodic(x):
    assert abs(lobachevsky(x + pi) - lobachevsky(x)) <= 1e-12


@given(reals)
def test_duplication(x):
    assert abs(lobachevsky(2 * x) - 2 * lobachevsky(x) - 2 * lobachevsky(x + pi / 2)) <= 1e-11


def test_maximum_at_pi_over_6():
    xs = np.linspace(1e-6, pi - 1e-6, 20001)
    assert np.all(lobachevsky(xs) <= lobachevsky(pi / 6) + 1e-16)


def test_clausen_relation():
    # Cl_2(pi/2) is Catalan's constant
    assert clausen2(pi / 2) == pytest.approx(0.915965594177219015, abs=1e-14)


def test_zeta3():
    z = zeta3()
    assert z == pytest.approx(1.2020569031595942854, abs=1e-15)
    assert 1.202 < z < 1.2021
    assert z / 3200 == pytest.approx(3.7564278223737e-4, abs=1e-16)


def test_zeta3_partial_sum_bracket():
    # S_N + 1/(2(N+1)^2) < zeta(3) < S_N + 1/(2N^2)
    n = 20000
    s = sum(1.0 / k**3 for k in range(n, 0, -1))
    assert s + 0.5 / (n + 1) ** 2 - 1e-15 < zeta3() < s + 0.5 / n**2 + 1e-15
