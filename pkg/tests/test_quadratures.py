import math

import mpmath as mp
import numpy as np
import pytest

from ramanujan_meijer.errors import ParameterDomain, TruncationError
from ramanujan_meijer.quadratures import (fourier_cosine_transform, laplace_sqrt_cos, ramanujan_ic,
                                          ramanujan_rc, upsilon)

mp.mp.dps = 30
PI = mp.pi

# closed forms evaluated at 30 digits, independently of the library tables
EXACT = {
    (0, 0): mp.mpf(1) / 12,
    (0, 1): (2 - mp.sqrt(2)) / 8,
    (0, 2): mp.mpf(1) / 16,
    (0, 4): (3 - mp.sqrt(2)) / 32,
    (0, 6): (13 - 4 * mp.sqrt(3)) / 144,
    (0, 0.5): 1 / (4 * PI),
    (0, 0.4): (8 - 3 * mp.sqrt(5)) / 16,
    (1, 0.5): (13 - 4 * PI) / (8 * PI ** 2),
    (1, 2): (mp.mpf(1) / 2 - 3 / PI + 5 / PI ** 2) / 64,
    (2, 2): (1 - 5 / PI + 5 / PI ** 2) / 256,
}


@pytest.mark.parametrize("mn", sorted(EXACT))
def test_rc_closed_forms(mn):
    m, n = mn
    res = ramanujan_rc(m, n)
    assert res.value == pytest.approx(float(EXACT[mn]), rel=1e-9)
    assert res.abs_error_estimate >= 0


def test_rc_decimals_of_corrected_values():
    # decimals quoted for these in the reference material are off; the closed forms rule
    assert ramanujan_rc(2, 2).value == pytest.approx(-3.3181059651275e-4, rel=1e-10)
    assert ramanujan_rc(1, 2).value == pytest.approx(8.074415571924509e-4, rel=1e-10)
    assert ramanujan_rc(0, 0.4).value == pytest.approx(0.08073725421878941, rel=1e-10)
    assert ramanujan_rc(0, 6).value == pytest.approx(0.04216525534530897, rel=1e-10)


def test_rc_against_mpmath_integral():
    m, n = 1, 1.3
    f = lambda t: 2 * t ** (2 * m + 1) * mp.cos(PI * n * t * t) / mp.expm1(2 * PI * t)
    ref = mp.quad(f, mp.linspace(0, 20, 200))
    assert ramanujan_rc(m, n).value == pytest.approx(float(ref), rel=1e-12)


def test_rc_domain():
    with pytest.raises(ParameterDomain):
        ramanujan_rc(-1, 1)
    with pytest.raises(ParameterDomain):
        ramanujan_rc(0, -1)


def test_t_max_doubling_is_invisible():
    for m, n in [(0, 1), (1, 0.5), (2, 2)]:
        assert abs(ramanujan_rc(m, n, t_max=20).value - ramanujan_rc(m, n, t_max=40).value) < 1e-14


def test_cell_count_grows_with_chirp_zeros():
    # zeros of cos(pi n t^2) below T number about n T^2, so cells scale linearly in n
    c = [ramanujan_rc(0, n).cells for n in (4, 8, 16)]
    assert c[0] < c[1] < c[2]
    assert 1.6 < (c[2] - c[1]) / (c[1] - c[0]) < 2.4


def test_upsilon_values():
    assert upsilon(1).value == pytest.approx(math.sqrt(2) / 8, rel=1e-12)
    with pytest.raises(ParameterDomain):
        upsilon(0)


def test_upsilon_large_n():
    # the sine integral decays only like 1/(2 pi sqrt(2n)), from the x^-1/2 edge at 0
    ratios = [(upsilon(n).value - 1 / (2 * math.pi * n)) * 2 * math.pi * math.sqrt(2 * n)
              for n in (25, 100, 400)]
    assert ratios[0] < ratios[1] < ratios[2] < 1
    assert ratios[2] > 0.9
    n = 100
    w = math.sqrt(2 / n) / n
    assert upsilon(n).value == pytest.approx(w * ramanujan_rc(0, 1 / n).value + ramanujan_rc(0, n).value,
                                             rel=1e-12)


def test_upsilon_domain():
    with pytest.raises(ParameterDomain):
        upsilon(0)


@pytest.mark.parametrize("n", [1, 2, 4])
def test_reciprocity(n):
    w = math.sqrt(2 / n) / n
    rc = lambda x: ramanujan_rc(0, x).value
    up = lambda x: upsilon(x).value
    assert abs(rc(n) - (w * up(1 / n) - up(n))) <= 1e-8
    assert abs(up(n) - (w * rc(1 / n) + rc(n))) <= 1e-8


def test_laplace_small_y_limit():
    v, s = 1.0, 2 * math.pi
    assert laplace_sqrt_cos(v, s, 1e-6).value == pytest.approx(2 * math.gamma(2 * v) / s ** (2 * v), rel=1e-6)
    assert laplace_sqrt_cos(v, s, 1e-6).value == pytest.approx(1 / (2 * math.pi ** 2), rel=1e-6)


def test_laplace_large_s():
    assert laplace_sqrt_cos(1.0, 1e6, 1.0).value == pytest.approx(2e-12, rel=1e-9)


def test_laplace_against_mpmath():
    v, s, y = 0.3, 2.0, 1.0
    f = lambda t: 2 * t ** (2 * v - 1) * mp.exp(-s * t) * mp.cos(y * t * t)
    ref = mp.quad(f, [0, 0.5, 1, 2, 4, 8, 16, 40])
    assert laplace_sqrt_cos(v, s, y).value == pytest.approx(float(ref), rel=1e-12)


def test_laplace_domain():
    with pytest.raises(ParameterDomain):
        laplace_sqrt_cos(0, 1, 1)


def test_fourier_cosine_examples():
    assert fourier_cosine_transform(lambda x: np.exp(-x), 1.0, decay_rate=1.0,
                                    x_power=0.0).value == pytest.approx(0.5, rel=1e-12)
    assert fourier_cosine_transform(lambda x: 0 * x, 1.0).value == 0


def test_fourier_cosine_bad_decay_hint():
    with pytest.raises(TruncationError):
        fourier_cosine_transform(lambda x: np.exp(-0.001 * np.sqrt(x)), 1.0, decay_rate=1.0)


def test_ramanujan_ic_reduces_to_rc():
    assert ramanujan_ic(1.0, 2 * math.pi, 1.0, math.pi).value == pytest.approx(
        ramanujan_rc(0, 1).value, rel=1e-13)


def test_ramanujan_ic_against_mpmath():
    v, b, lam, y = 2.3, 3.1, 1.7, 0.9
    f = lambda t: 2 * t ** (2 * v - 1) * mp.expm1(b * t) ** -lam * mp.cos(y * t * t)
    ref = mp.quad(f, mp.linspace(0, 40, 120))
    assert ramanujan_ic(v, b, lam, y).value == pytest.approx(float(ref), rel=1e-11)


def test_ramanujan_ic_divergent_origin():
    with pytest.raises(ParameterDomain):
        ramanujan_ic(0.5, 1.0, 1.0, 1.0)
