import math

import mpmath as mp
import numpy as np
import pytest
from scipy import special

from ramanujan_meijer.errors import DivergentInput, FitUnstable, ParameterDomain, UnboundedTheta
from ramanujan_meijer.hyper import FoxWrightSpec, PFqSpec
from ramanujan_meijer.quadratures import fourier_cosine_transform, laplace_sqrt_cos
from ramanujan_meijer.series import (GSeriesVariant, RamanujanParams, ThetaSequence, i_c,
                                     ic_star_series, laplace_g_term, nabla_c, rc_series,
                                     tail_accelerate, kernel_form, xi_c)

PI = math.pi
VARIANTS = list(GSeriesVariant)
RC_1_HALF = (13 - 4 * PI) / (8 * PI ** 2)


def cosine_transform(weight, v, b, lam, c, y):
    """Oracle: int x^(v-1) e^(-b lam sqrt x) weight(e^(-c sqrt x)) cos(xy) dx by quadrature."""
    f = lambda x: x ** (v - 1) * np.exp(-b * lam * np.sqrt(x)) * weight(np.exp(-c * np.sqrt(x)))
    return fourier_cosine_transform(f, y, decay_rate=b * lam, x_power=v - 1).value


def power_series(coef, w, terms=60):
    return sum(coef(k) * w ** k for k in range(terms))


# --- parameters and sequences -------------------------------------------------

def test_params_validation():
    RamanujanParams(1, 2, 1, 1, 1)
    p = RamanujanParams(1, -2, 1, -0.5, 1)
    assert np.all(p.rates(np.arange(100)) > 0)
    for bad in [(0, 1, 1, 1, 1), (1, 1, 0, 1, 1), (1, 1, 1, 1, 0), (1, -1, 1, 1, 1), (1, 1, 1, -1, 1)]:
        with pytest.raises(ParameterDomain):
            RamanujanParams(*bad)


def test_theta_bound_spot_check():
    params = RamanujanParams(1, 2, 1, 1, 1)
    theta = ThetaSequence(lambda k: float(k), bound=10.0)
    with pytest.raises(UnboundedTheta):
        ic_star_series(theta, params, GSeriesVariant.V1, max_terms=100)


def test_fox_wright_theta_outside_disc():
    params = RamanujanParams(1, 2, 1, 1, 1)
    with pytest.raises(DivergentInput):
        xi_c(FoxWrightSpec([(1, 2)], [(1, 1)]), params, GSeriesVariant.V1)


def test_pochhammer_weights():
    w = ThetaSequence.pochhammer(1.7).weights(np.arange(6))
    ref = [float(mp.rf(1.7, k) / mp.factorial(k)) for k in range(6)]
    assert np.allclose(w.real, ref, rtol=1e-14)


# --- term-level identity --------------------------------------------------------

@pytest.mark.parametrize("variant", VARIANTS)
@pytest.mark.parametrize("v,y", [(1.0, PI / 2), (0.6, 3.0), (2.7, 0.4)])
def test_term_identity(variant, v, y):
    s = np.array([0.9, 2 * PI, 20.0])
    g = laplace_g_term(variant, v, y, s)
    ref = [laplace_sqrt_cos(v, si, y).value for si in s]
    assert np.allclose(g, ref, rtol=1e-9, atol=0)


def test_kernel_form_shapes():
    f1 = kernel_form(1, 1.5, 2.0)
    assert (f1.spec.m, f1.spec.n, f1.spec.p, f1.spec.q) == (1, 4, 4, 2)
    f5 = kernel_form(5, 1.5, 2.0)
    assert (f5.spec.m, f5.spec.n, f5.spec.p, f5.spec.q) == (2, 8, 8, 4)
    assert f5.degree == 8


# --- I_C* ------------------------------------------------------------------------

def test_kronecker_reduces_to_laplace():
    params = RamanujanParams(1.3, 2.0, 1.0, 1.5, 0.8)
    res = ic_star_series(ThetaSequence.kronecker(), params, GSeriesVariant.V2)
    assert res.converged
    assert res.value.real == pytest.approx(laplace_sqrt_cos(1.3, 3.0, 0.8).value, rel=1e-8)


@pytest.mark.parametrize("m", [0, 1])
def test_binomial_theta_gives_rc(m):
    params = RamanujanParams(m + 1.0, 2 * PI, 2 * PI, 1.0, PI / 2)
    res = ic_star_series(ThetaSequence.pochhammer(1.0), params, GSeriesVariant.V1)
    exact = RC_1_HALF if m == 1 else 1 / (4 * PI)
    assert res.value.real == pytest.approx(exact, rel=1e-6)


def test_variants_agree():
    params = RamanujanParams(1.5, 2.0, 1.0, 1.0, 1.0)
    vals = [ic_star_series(ThetaSequence.constant(1.0), params, v).value.real for v in VARIANTS]
    assert max(vals) - min(vals) <= 1e-7 * abs(vals[0])
    # Theta = 1 sums e^{-c sqrt x k}/k! = exp(e^{-c sqrt x})
    assert vals[0] == pytest.approx(cosine_transform(np.exp, 1.5, 2.0, 1.0, 1.0, 1.0), rel=1e-8)


# --- Xi_C and nabla_C -------------------------------------------------------------

def test_xi_exponential():
    params = RamanujanParams(1.5, 2.0, 1.0, 1.0, 1.0)
    res = xi_c(FoxWrightSpec([(1, 1)], [(1, 1)]), params, GSeriesVariant.V3)
    assert res.value.real == pytest.approx(cosine_transform(np.exp, 1.5, 2.0, 1.0, 1.0, 1.0), rel=1e-6)


def test_xi_wright_function():
    beta, B = 1.5, 0.7
    params = RamanujanParams(1.2, 1.5, 0.8, 1.0, 2.0)
    res = xi_c(FoxWrightSpec([], [(beta, B)]), params, GSeriesVariant.V1)
    phi = lambda w: power_series(lambda k: special.rgamma(beta + B * k) / math.factorial(k), w)
    assert res.value.real == pytest.approx(cosine_transform(phi, 1.2, 1.5, 1.0, 0.8, 2.0), rel=1e-6)


def test_xi_mittag_leffler():
    beta, B = 0.8, 1.4
    params = RamanujanParams(0.9, 2.0, 1.2, 1.0, 0.7)
    res = xi_c(FoxWrightSpec([(1, 1)], [(beta, B)]), params, GSeriesVariant.V4)
    ml = lambda w: power_series(lambda k: special.rgamma(beta + B * k), w)
    assert res.value.real == pytest.approx(cosine_transform(ml, 0.9, 2.0, 1.0, 1.2, 0.7), rel=1e-6)


def test_xi_wright_bessel_case():
    # J^mu_nu(-w) = Phi(mu, nu + 1; -w) needs the negative argument folded into Theta
    mu, nu = 1.0, 0.5
    params = RamanujanParams(1.4, 1.0, 1.0, 1.0, 1.0)
    spec = FoxWrightSpec([], [(nu + 1, mu)])
    theta = ThetaSequence(lambda k: (-1) ** k * complex(spec.coefficients(np.array([k]))[0]) * math.factorial(k),
                          weight=lambda k: (-1.0) ** k * spec.coefficients(np.asarray(k, float)))
    res = ic_star_series(theta, params, GSeriesVariant.V1)
    jb = lambda w: power_series(lambda k: (-1) ** k * special.rgamma(nu + 1 + mu * k) / math.factorial(k), w)
    assert res.value.real == pytest.approx(cosine_transform(jb, 1.4, 1.0, 1.0, 1.0, 1.0), rel=1e-6)


def test_nabla_binomial_is_i_c():
    v, b, lam, y = 1.7, 2.5, 1.5, 1.1
    params = RamanujanParams(v, b, b, lam, y)
    a = nabla_c(PFqSpec([lam], []), params, GSeriesVariant.V2).value.real
    assert a == pytest.approx(i_c(v, b, lam, y, GSeriesVariant.V2).value.real, rel=1e-14)


def test_nabla_0f0():
    params = RamanujanParams(1.2, 1.5, 0.9, 1.0, 0.6)
    res = nabla_c(PFqSpec([], []), params, GSeriesVariant.V5)
    assert res.value.real == pytest.approx(cosine_transform(np.exp, 1.2, 1.5, 1.0, 0.9, 0.6), rel=1e-6)


def test_nabla_zero_numerator():
    params = RamanujanParams(1.2, 1.5, 0.9, 1.0, 0.6)
    res = nabla_c(PFqSpec([0.0], [2.0]), params, GSeriesVariant.V1)
    assert res.value.real == pytest.approx(laplace_sqrt_cos(1.2, 1.5, 0.6).value, rel=1e-10)


def test_nabla_2f1_against_quadrature():
    a1, a2, b1 = 0.5, 0.8, 2.5
    params = RamanujanParams(1.4, 1.0, 1.0, 1.0, 1.5)
    res = nabla_c(PFqSpec([a1, a2], [b1]), params, GSeriesVariant.V1)
    f21 = lambda w: special.hyp2f1(a1, a2, b1, w)
    assert res.value.real == pytest.approx(cosine_transform(f21, 1.4, 1.0, 1.0, 1.0, 1.5), rel=1e-6)


# --- I_C and R_C -------------------------------------------------------------------

def test_i_c_examples():
    assert i_c(2, 2 * PI, 1, PI / 2).value.real == pytest.approx(RC_1_HALF, rel=1e-6)
    assert i_c(2, 2 * PI, 1, 2 * PI).value.real == pytest.approx(
        (0.5 - 3 / PI + 5 / PI ** 2) / 64, rel=1e-6)


def test_i_c_random_point():
    v, b, lam, y = 2.3, 3.1, 1.7, 0.9
    f = lambda x: x ** (v - 1) * np.expm1(b * np.sqrt(x)) ** -lam
    ref = fourier_cosine_transform(f, y, decay_rate=b * lam, x_power=v - 1 - lam / 2).value
    assert i_c(v, b, lam, y).value.real == pytest.approx(ref, rel=1e-5)


def test_i_c_domain():
    with pytest.raises(ParameterDomain):
        i_c(1, -1, 1, 1)


@pytest.mark.parametrize("variant", VARIANTS)
def test_rc_series_examples(variant):
    assert rc_series(0, 2, variant).value.real == pytest.approx(1 / 16, rel=1e-6)
    assert rc_series(2, 2, variant).value.real == pytest.approx((1 - 5 / PI + 5 / PI ** 2) / 256, rel=1e-6)
    assert rc_series(0, 0.5, variant).value.real == pytest.approx(1 / (4 * PI), rel=1e-6)


def test_rc_series_n_zero():
    for variant in (GSeriesVariant.V1, GSeriesVariant.V5):
        assert rc_series(0, 0, variant).value.real == pytest.approx(1 / 12, rel=1e-9)
    with pytest.raises(ParameterDomain):
        rc_series(0, 0, GSeriesVariant.V3)


@pytest.mark.parametrize("v", [1.0, 1.6, 2.5])
def test_fitted_exponent(v):
    res = i_c(v, 2 * PI, 1.0, 1.0)
    assert abs(res.diagnostics["fitted_exponent"] - 2 * v) < 0.2


# --- tail acceleration ---------------------------------------------------------------

def test_tail_basel():
    K = 1000
    k = np.arange(K // 2, K + 1)
    tail = tail_accelerate((k + 1.0) ** -2, K // 2, [2, 3, 4, 5])
    assert tail.value == pytest.approx(float(mp.psi(1, K + 2)), rel=1e-3)
    assert tail.value == pytest.approx(1 / 1001, rel=1e-3)


def test_tail_fourth_power():
    K = 500
    k = np.arange(100, K + 1)
    tail = tail_accelerate((k + 1.0) ** -4, 100, [4, 5, 6, 7])
    assert tail.value == pytest.approx(float(mp.psi(3, K + 2) / 6), rel=1e-6)


def test_tail_zero():
    tail = tail_accelerate(np.zeros(20), 10, [2, 3, 4, 5])
    assert tail.value == 0 and tail.error == 0


def test_tail_unstable():
    rng = np.random.default_rng(0)
    with pytest.raises(FitUnstable):
        tail_accelerate(rng.normal(size=50), 50, [2, 3, 4, 5])


def test_tail_needs_eight_terms():
    with pytest.raises(ParameterDomain):
        tail_accelerate(np.ones(5), 10, [2, 3])
