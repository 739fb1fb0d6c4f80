from math import cosh, pi, sinh

import numpy as np
import pytest
from scipy.integrate import quad

from hyperball.quadrature import QuadratureError, adaptive_gauss_legendre, gauss_legendre
from hyperball.specfun import zeta3
from hyperball.volume import (
    LensSpec,
    OrthoschemeSpec,
    beta_5d,
    hyperball_lens_volume_3d,
    hyperball_lens_volume_5d,
    orthoscheme_volume_3d,
    orthoscheme_volume_5d,
    truncation_face_area_3d,
    truncation_facet_volume_5d,
    vol3_535,
)

# int_0^1 cosh^2 and int_0^1 cosh^4, mpmath.quad at 30 digits
SLICE_3D_UNIT = 1.40671510196175469
SLICE_5D_UNIT = 2.13452501437199696


@pytest.mark.parametrize("p,vol", [(7, 0.08856), (8, 0.10721), (9, 0.11825), (20, 0.14636),
                                   (50, 0.15167), (100, 0.15241), (10**6, 0.15266)])
def test_orthoscheme_volume_3d_table(p, vol):
    assert orthoscheme_volume_3d(pi / p, pi / 3, pi / 3) == pytest.approx(vol, abs=5e-6)


def test_orthoscheme_volume_3d_increasing_in_p():
    ps = np.linspace(6.0005, 1000, 5000)
    vols = orthoscheme_volume_3d(pi / ps, pi / 3, pi / 3)
    assert np.all(np.diff(vols) > 0)
    assert np.all(vols > 0)


def test_spherical_configuration_rejected():
    with pytest.raises(ValueError):
        orthoscheme_volume_3d(pi / 5, pi / 3, pi / 3)


def test_known_compact_orthoscheme():
    # [5,3,5] tetrahedron, tabulated volume 0.0933255395...
    assert orthoscheme_volume_3d(pi / 5, pi / 3, pi / 5) == pytest.approx(0.09332553952, abs=1e-10)


def test_face_family_matches_general_formula():
    for t in np.linspace(pi / 3, 2 * pi / 5, 9):
        b = float(beta_5d(t))
        assert 0 < b < pi / 2
        assert vol3_535(t) == pytest.approx(orthoscheme_volume_3d(pi / 5, pi / 3, b), abs=1e-15)


def test_integrand_endpoint():
    t = 2 * pi / 5
    b = float(beta_5d(t))
    assert b == pytest.approx(np.arctan(np.sqrt(2 - 1 / np.tan(t) ** 2)))
    v = float(vol3_535(t))
    assert np.isfinite(v) and v > 0


def test_orthoscheme_volume_5d_consistency():
    v = orthoscheme_volume_5d()
    lens0 = hyperball_lens_volume_5d(pi**2 / 10800, 0.38360)
    assert v == pytest.approx(lens0 / 0.50514, rel=1e-3)
    assert v == pytest.approx(7.68e-4, abs=1e-5)


def test_orthoscheme_volume_5d_against_scipy():
    """QUADPACK on the same integrand as an independent quadrature route."""
    integral, _ = quad(lambda t: float(vol3_535(t)), pi / 3, 2 * pi / 5, epsabs=1e-14, epsrel=1e-14)
    assert orthoscheme_volume_5d() == pytest.approx(0.25 * integral + zeta3() / 3200, abs=1e-13)


def test_orthoscheme_volume_5d_stability():
    a, b = pi / 3, 2 * pi / 5
    g20 = gauss_legendre(vol3_535, a, b, 20)
    g40 = gauss_legendre(vol3_535, a, b, 40)
    assert abs(g20 - g40) <= 1e-10
    assert abs(orthoscheme_volume_5d(1e-11) - orthoscheme_volume_5d(5e-12)) <= 1e-10
    assert zeta3() / 3200 == pytest.approx(3.7564e-4, abs=1e-8)


def test_adaptive_quadrature_reports_failure():
    with pytest.raises(QuadratureError) as exc:
        adaptive_gauss_legendre(lambda x: np.sign(x - 0.3), 0.0, 1.0, tol=1e-14, max_depth=5)
    assert exc.value.error > 0


def test_adaptive_quadrature_simple():
    val, err = adaptive_gauss_legendre(np.exp, 0.0, 2.0)
    assert val == pytest.approx(np.exp(2) - 1, abs=1e-13)
    assert err < 1e-11


def test_lens_examples():
    assert hyperball_lens_volume_3d(3.7, 0.0) == 0.0
    assert hyperball_lens_volume_5d(3.7, 0.0) == 0.0
    assert hyperball_lens_volume_3d(pi / 42, 0.78871) == pytest.approx(0.07284, abs=5e-6)
    assert hyperball_lens_volume_3d(1, 1) == pytest.approx(0.25 * (sinh(2) + 2), abs=1e-15)
    assert hyperball_lens_volume_3d(1, 1) == pytest.approx(SLICE_3D_UNIT, abs=1e-10)
    assert hyperball_lens_volume_5d(1, 1) == pytest.approx(SLICE_5D_UNIT, abs=1e-10)


def test_lens_5d_facet_share():
    expected = pi**2 / 10800 * quad(lambda s: cosh(s) ** 4, 0, 0.38360, epsabs=1e-15)[0]
    assert hyperball_lens_volume_5d(pi**2 / 10800, 0.38360) == pytest.approx(expected, abs=1e-15)
    assert expected == pytest.approx(3.876e-4, abs=1e-7)


def test_lens_negative_inputs():
    with pytest.raises(ValueError):
        hyperball_lens_volume_3d(-1.0, 0.5)
    with pytest.raises(ValueError):
        hyperball_lens_volume_5d(1.0, -0.5)


@pytest.mark.parametrize("n,lens", [(3, hyperball_lens_volume_3d), (5, hyperball_lens_volume_5d)])
def test_lens_slicing_oracle(n, lens):
    rng = np.random.default_rng(n)
    for area, h in zip(rng.uniform(0.01, 5, 50), rng.uniform(0, 2.5, 50)):
        sliced = area * quad(lambda s: cosh(s) ** (n - 1), 0, h, epsabs=1e-13, epsrel=1e-13)[0]
        assert abs(lens(area, h) - sliced) <= 1e-9


@pytest.mark.parametrize("lens", [hyperball_lens_volume_3d, hyperball_lens_volume_5d])
def test_lens_monotone_and_linear(lens):
    hs = np.linspace(0, 3, 500)
    vals = np.array([lens(1.3, h) for h in hs])
    assert np.all(np.diff(vals) > 0)
    assert lens(2.6, 0.7) == pytest.approx(2 * lens(1.3, 0.7), rel=1e-15)


def test_truncation_face_area():
    assert truncation_face_area_3d(6 + 1e-12) == pytest.approx(0, abs=1e-12)
    assert truncation_face_area_3d(7, per_orthoscheme=True) == pytest.approx(pi / 42, rel=1e-15)
    assert truncation_face_area_3d(7, per_orthoscheme=True) == pytest.approx(0.074800, abs=1e-6)
    assert truncation_face_area_3d(7) == pytest.approx(pi / 7, rel=1e-15)
    assert truncation_face_area_3d(7) == pytest.approx(6 * truncation_face_area_3d(7, True), rel=1e-15)
    with pytest.raises(ValueError):
        truncation_face_area_3d(6)


def test_truncation_facet_volume():
    share = truncation_facet_volume_5d(per_orthoscheme=True)
    full = truncation_facet_volume_5d()
    assert share == pytest.approx(pi**2 / 10800, rel=1e-15)
    assert full == pytest.approx(pi**2 / 90, rel=1e-15)
    assert full == pytest.approx(0.109662, abs=1e-6)
    assert full / share == pytest.approx(120, rel=1e-15)


def test_spec_objects():
    spec = OrthoschemeSpec.from_symbol([7, 3, 3])
    assert spec.volume() == orthoscheme_volume_3d(pi / 7, pi / 3, pi / 3)
    assert OrthoschemeSpec.from_symbol([5, 3, 3, 3, 3]).volume() == orthoscheme_volume_5d()
    with pytest.raises(NotImplementedError):
        OrthoschemeSpec.from_symbol([5, 3, 3, 3, 4]).volume()
    with pytest.raises(ValueError):
        OrthoschemeSpec([0.1, 2.0, 0.3])
    assert LensSpec(5, 1.0, 1.0).volume() == hyperball_lens_volume_5d(1.0, 1.0)
    with pytest.raises(ValueError):
        LensSpec(3, 0.0, 1.0)
