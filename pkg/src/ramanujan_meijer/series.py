"""Series-of-Meijer-G representations of the generalized Ramanujan integrals.

All integrals here reduce to sums over k of weights Theta(k)/k! times the
Laplace-cosine kernel

    L(s) = int_0^inf x^(v-1) exp(-s sqrt(x)) cos(x y) dx,   s = lambda b + c k,

and each of the five variants expresses L(s) as a prefactor times a Meijer G
value at an argument proportional to s^-4 (s^-8 for V5).  When the weights
decay faster than any power the k-sum is simply truncated.  When they decay
algebraically (Theta(k) = (lambda)_k, the binomial case) the terms behave like
(k+1)^-(2v+1-lambda) and the remainder after K terms is fitted and summed with
Hurwitz zeta tails.
"""

import enum
import math
from dataclasses import dataclass

import numpy as np
from scipy import special

from .errors import DivergentInput, FitUnstable, ParameterDomain, UnboundedTheta
from .hyper import ConvergenceKind, SeriesSum, fox_wright_classify
from .meijerg import DEFAULT_STEP, MeijerGSpec, eval_contour, plan_contour
from .summation import compensated_sum

__all__ = [
    "GSeriesVariant",
    "ThetaSequence",
    "RamanujanParams",
    "TailEstimate",
    "kernel_form",
    "rc_form",
    "laplace_g_term",
    "ic_star_series",
    "xi_c",
    "nabla_c",
    "i_c",
    "rc_series",
    "g_power_series",
    "tail_accelerate",
    "DEFAULT_TERMS",
]

DEFAULT_TERMS = 2000
_BLOCK = 16


class GSeriesVariant(enum.Enum):
    V1 = 1
    V2 = 2
    V3 = 3
    V4 = 4
    V5 = 5

    @classmethod
    def coerce(cls, value):
        if isinstance(value, cls):
            return value
        if isinstance(value, str):
            return cls[value.upper()]
        return cls(value)


@dataclass(frozen=True)
class GForm:
    """One G-representation: prefactor * s^-power * G(scale / s^degree)."""

    spec: MeijerGSpec
    prefactor: float
    power: float
    scale: float
    degree: int

    def terms(self, s, tol=1e-12, step=DEFAULT_STEP):
        s = np.asarray(s, dtype=float)
        z = self.scale / s ** self.degree
        g = eval_contour(self.spec, z, tol=tol, step=step)
        return self.prefactor * s ** (-self.power) * g.real


_B_LISTS = {
    1: ((0.0,), (0.5,)),
    2: ((-0.25,), (0.25,)),
    3: ((0.5,), (1.0,)),
    4: ((-0.5,), (0.0,)),
    5: ((0.0, 0.5), (0.25, 0.75)),
}


def kernel_form(variant, v, y):
    """G-representation of L(s) for the given variant, general v and y."""
    variant = GSeriesVariant.coerce(variant).value
    if not (v > 0 and y > 0):
        raise ParameterDomain("need v > 0 and y > 0")
    pi = math.pi
    if variant == 5:
        a = [(8 - 2 * v - j) / 8 for j in range(8)]
        first, rest = _B_LISTS[5]
        spec = MeijerGSpec.from_lists(a_first=a, b_first=first, b_rest=rest)
        return GForm(spec, 2 ** (6 * v - 3.5) / pi ** 3, 2 * v, 4.0 ** 8 * y ** 4, 8)
    top, pref, power = {
        1: (4, 2 ** (4 * v - 1.5) / pi, 2 * v),
        2: (3, math.sqrt(y) * 2 ** (4 * v) / pi, 2 * v + 1),
        3: (6, 2 ** (4 * v - 4.5) / (pi * y), 2 * v - 2),
        4: (2, y * 2 ** (4 * v + 1.5) / pi, 2 * v + 2),
    }[variant]
    a = [(top - 2 * v - j) / 4 for j in range(4)]
    first, rest = _B_LISTS[variant]
    spec = MeijerGSpec.from_lists(a_first=a, b_first=first, b_rest=rest)
    return GForm(spec, pref, power, 64.0 * y * y, 4)


def rc_form(m, n, variant):
    """G-representation of the R_C(m, n) summand, from its own prefactor table.

    These are written out independently of :func:`kernel_form` (rather than
    derived from it with v = m+1, b = 2 pi, lambda = 1, y = n pi), so that a
    discrepancy between the two shows up in verification.
    """
    variant = GSeriesVariant.coerce(variant).value
    pi = math.pi
    if variant == 5:
        a = [(6 - 2 * m - j) / 8 for j in range(8)]
        first, rest = _B_LISTS[5]
        spec = MeijerGSpec.from_lists(a_first=a, b_first=first, b_rest=rest)
        return GForm(spec, 2 ** (6 * m + 2.5) / pi ** 3, 2 * m + 2,
                     4.0 ** 8 * n ** 4 * pi ** 4, 8)
    a, pref, power = {
        1: ([(2 - 2 * m) / 4, (1 - 2 * m) / 4, -2 * m / 4, (-1 - 2 * m) / 4],
            2 ** (4 * m + 2.5) / pi, 2 * m + 2),
        2: ([(1 - 2 * m) / 4, (-1 - 2 * m) / 4, -2 * m / 4, (-2 - 2 * m) / 4],
            2 ** (4 * m + 4) * math.sqrt(n) / math.sqrt(pi), 2 * m + 3),
        3: ([(4 - 2 * m) / 4, (3 - 2 * m) / 4, (2 - 2 * m) / 4, (1 - 2 * m) / 4],
            2 ** (4 * m - 0.5) / (n * pi ** 2) if n else math.inf, 2 * m),
        4: ([-2 * m / 4, (-1 - 2 * m) / 4, (-2 - 2 * m) / 4, (-3 - 2 * m) / 4],
            n * 2 ** (4 * m + 5.5), 2 * m + 4),
    }[variant]
    first, rest = _B_LISTS[variant]
    spec = MeijerGSpec.from_lists(a_first=a, b_first=first, b_rest=rest)
    return GForm(spec, pref, power, 64.0 * n * n * pi * pi, 4)


def laplace_g_term(variant, v, y, s, tol=1e-12, step=DEFAULT_STEP):
    """L(s) through the G-representation of ``variant``; ``s`` may be an array."""
    return kernel_form(variant, v, y).terms(s, tol=tol, step=step)


@dataclass
class ThetaSequence:
    """The bounded sequence Theta(k) weighting the k-sum.

    ``weight`` (optional, vectorized) returns Theta(k)/k! directly, which is
    how the library-provided sequences avoid overflowing Theta(k) or k!.
    ``algebraic_order`` is set when Theta(k)/k! ~ k^order decays only
    algebraically, which switches the k-sum to tail acceleration.
    """

    generator: object
    bound: float = math.inf
    weight: object = None
    algebraic_order: float = None

    def weights(self, k):
        k = np.asarray(k)
        if self.weight is not None:
            return np.asarray(self.weight(k), dtype=complex)
        theta = np.array([complex(self.generator(int(j))) for j in k.ravel()]).reshape(k.shape)
        return theta * np.exp(-special.gammaln(k + 1.0))

    def spot_check(self, k_max):
        if math.isinf(self.bound):
            return
        for k in range(0, k_max + 1, max(1, k_max // 50)):
            if abs(self.generator(k)) > self.bound:
                raise UnboundedTheta(f"|Theta({k})| = {abs(self.generator(k))} exceeds bound {self.bound}")

    @classmethod
    def constant(cls, c=1.0):
        return cls(lambda k: c, bound=abs(c))

    @classmethod
    def kronecker(cls, k0=0):
        return cls(lambda k: 1.0 if k == k0 else 0.0, bound=1.0)

    @classmethod
    def pfq(cls, numerators, denominators=()):
        """Theta(k) = prod (alpha_i)_k / prod (beta_j)_k."""
        num = [complex(x) for x in numerators]
        den = [complex(x) for x in denominators]
        r, s = len(num), len(den)
        if r > s + 1:
            raise DivergentInput("embedded pFq needs r <= s + 1")

        def generator(k):
            out = 1.0 + 0j
            for j in range(k):
                for x in num:
                    out *= x + j
                for x in den:
                    out /= x + j
            return out

        def weight(k):
            k = np.asarray(k)
            kmax = int(k.max()) if k.size else 0
            j = np.arange(kmax, dtype=float)
            ratio = np.ones(kmax, dtype=complex) / (j + 1)
            for x in num:
                ratio = ratio * (x + j)
            for x in den:
                ratio = ratio / (x + j)
            w = np.concatenate([[1.0 + 0j], np.cumprod(ratio)])
            return w[k]

        order = None
        if r == s + 1:
            order = (sum(num) - sum(den)).real - 1
        return cls(generator, weight=weight, algebraic_order=order)

    @classmethod
    def pochhammer(cls, lam):
        return cls.pfq([lam])

    @classmethod
    def fox_wright(cls, spec):
        """Theta(k) = prod Gamma(alpha_i + k A_i) / prod Gamma(beta_j + k B_j)."""
        cls_ = fox_wright_classify(spec)
        order = None
        if cls_.series_class.kind is ConvergenceKind.Divergent:
            raise DivergentInput("Fox-Wright coefficients grow too fast for the k-sum")
        if cls_.series_class.kind is ConvergenceKind.UnitDisk:
            radius = cls_.delta
            if radius < 1 - 1e-12:
                raise DivergentInput(f"Fox-Wright radius {radius} < 1: k-sum diverges")
            if radius <= 1 + 1e-12:
                order = -cls_.mu.real - 0.5

        def generator(k):
            return complex(spec.coefficients(np.array([float(k)]))[0]) * math.factorial(k)

        return cls(generator, weight=lambda k: spec.coefficients(np.asarray(k, dtype=float)),
                   algebraic_order=order)


@dataclass(frozen=True)
class RamanujanParams:
    """Real parameters (v, b, c, lambda, y) of the generalized integral."""

    v: float
    b: float
    c: float
    lam: float
    y: float

    def __post_init__(self):
        if not (self.v > 0 and self.c > 0 and self.y > 0):
            raise ParameterDomain("need v > 0, c > 0, y > 0")
        if not ((self.lam > 0 and self.b > 0) or (self.lam < 0 and self.b < 0)):
            raise ParameterDomain("need lambda, b both positive or both negative")
        # with c > 0 and lambda*b > 0 every rate lambda*b + c*k is positive

    def rates(self, k):
        return self.lam * self.b + self.c * np.asarray(k, dtype=float)


@dataclass(frozen=True)
class TailEstimate:
    value: float
    error: float
    fitted_exponent: float
    coefficients: tuple = ()
    residual: float = 0.0


def tail_accelerate(partial_terms, k_start, decay_exponents):
    """Estimate sum_{k > K} t_k from trailing terms t_{k_start}..t_K.

    The terms are least-squares fitted to sum_j A_j (k+1)^-s_j and the tail is
    summed exactly with Hurwitz zeta functions.  ``error`` is twice the fit
    residual propagated through the leading tail.  Raises
    :class:`FitUnstable` when the residual exceeds 10% of the leading term.
    """
    t = np.asarray(partial_terms, dtype=float)
    if t.size < 8:
        raise ParameterDomain("tail fit needs at least 8 trailing terms")
    exps = np.asarray(decay_exponents, dtype=float)
    if exps.min() <= 1:
        raise ParameterDomain("tail decay exponents must exceed 1 for the sum to converge")
    K = k_start + t.size - 1
    scale = np.abs(t).max()
    if scale == 0.0:
        return TailEstimate(0.0, 0.0, float("nan"))
    k = np.arange(k_start, K + 1, dtype=float)
    ratio = (K + 1.0) / (k + 1.0)
    design = ratio[:, None] ** exps[None, :]
    rowscale = 1.0 / design[:, 0]
    target = t / scale * rowscale
    coef, *_ = np.linalg.lstsq(design * rowscale[:, None], target, rcond=None)
    resid = (design @ coef - t / scale) * rowscale
    rms = float(np.sqrt(np.mean(resid ** 2)))
    # rows are normalized by the leading power, so the target's rms is the leading term's size
    lead = float(np.sqrt(np.mean(target ** 2)))
    if rms > 0.1 * lead:
        raise FitUnstable(f"tail fit residual {rms:.3g} vs leading term {lead:.3g}")
    # (K+1)^s * zeta(s, K+2), computed without overflow
    tails = np.array([math.exp(s * math.log(K + 1.0)) * special.zeta(s, K + 2.0) for s in exps])
    value = scale * float(coef @ tails)
    error = 2.0 * rms * scale * tails[0]
    nz = t != 0
    if nz.sum() >= 2:
        slope = np.polyfit(np.log(k[nz] + 1.0), np.log(np.abs(t[nz])), 1)[0]
    else:
        slope = float("nan")
    return TailEstimate(float(value), float(error), float(-slope),
                        tuple(float(c) for c in scale * coef), rms)


def _tail_window(K):
    start = max(K // 2, K - 999)
    return start


def _accelerated(terms, s0, tol, diagnostics):
    K = terms.size - 1
    start = _tail_window(K)
    tail = tail_accelerate(terms[start:], start, [s0 + j for j in range(4)])
    head = compensated_sum(terms).real
    value = head + tail.value
    diagnostics.update(fitted_exponent=float(tail.fitted_exponent), predicted_exponent=float(s0),
                       tail_residual=float(tail.residual))
    converged = tail.error <= tol * abs(value)
    return SeriesSum(complex(value), terms.size, float(tail.error), bool(converged),
                     tail_value=tail.value, diagnostics=diagnostics)


def ic_star_series(theta, params, variant, tol=1e-10, max_terms=DEFAULT_TERMS,
                   contour_tol=1e-12, step=DEFAULT_STEP):
    """sum_k Theta(k)/k! L(lambda b + c k) through G-representation ``variant``."""
    form = kernel_form(variant, params.v, params.y)
    diagnostics = {"variant": GSeriesVariant.coerce(variant).name}
    if theta.algebraic_order is not None:
        s0 = 2 * params.v - theta.algebraic_order
        if s0 <= 1:
            raise DivergentInput(f"k-sum terms decay like k^-{s0}: not summable")
        k = np.arange(max_terms + 1)
        w = theta.weights(k).real
        # one contour plan for all k keeps the block deterministic
        s = params.rates(k)
        terms = w * form.terms(s, tol=contour_tol, step=step)
        return _accelerated(terms, s0, tol, diagnostics)
    theta.spot_check(max_terms)
    acc = []
    total = 0.0
    small = 0
    for start in range(0, max_terms + 1, _BLOCK):
        k = np.arange(start, min(start + _BLOCK, max_terms + 1))
        w = theta.weights(k)
        live = w != 0
        terms = np.zeros(k.size, dtype=complex)
        if live.any():
            terms[live] = w[live] * form.terms(params.rates(k[live]), tol=contour_tol, step=step)
        for t in terms:
            acc.append(t)
            total = compensated_sum(acc)
            if abs(t) <= tol * abs(total):
                small += 1
            else:
                small = 0
            if small >= 3:
                return SeriesSum(total, len(acc), abs(t), True, diagnostics=diagnostics)
    total = compensated_sum(acc)
    return SeriesSum(total, len(acc), abs(acc[-1]), False, diagnostics=diagnostics)


def xi_c(spec, params, variant, tol=1e-10, **kw):
    """Cosine transform of x^(v-1) e^(-b lambda sqrt x) pPsi_q[e^(-c sqrt x)]."""
    return ic_star_series(ThetaSequence.fox_wright(spec), params, variant, tol, **kw)


def nabla_c(pfq, params, variant, tol=1e-10, **kw):
    """Cosine transform of x^(v-1) e^(-b lambda sqrt x) rFs(e^(-c sqrt x)); ``pfq`` is a PFqSpec."""
    theta = ThetaSequence.pfq(pfq.numerators, pfq.denominators)
    return ic_star_series(theta, params, variant, tol, **kw)


def i_c(v, b, lam, y, variant=GSeriesVariant.V1, tol=1e-10, **kw):
    """int_0^inf x^(v-1) (exp(b sqrt x) - 1)^-lambda cos(x y) dx as a G-series."""
    if not (v > 0 and y > 0 and lam > 0 and b > 0):
        raise ParameterDomain("need v, y, lambda, b > 0")
    params = RamanujanParams(v, b, b, lam, y)
    return ic_star_series(ThetaSequence.pochhammer(lam), params, variant, tol, **kw)


def g_power_series(spec, scale, power, max_terms=DEFAULT_TERMS, prefactor=1.0,
                   contour_tol=1e-12, step=DEFAULT_STEP, tol=1e-10, degree=4):
    """sum_k prefactor (2 pi (1+k))^-power G(scale / (2 pi (1+k))^degree), tail-accelerated.

    Terms decay like (k+1)^-(power + degree*b0) where b0 = 0 is the leading
    right-family pole; specs whose G has a finite non-zero limit at 0 are the
    supported case.
    """
    k = np.arange(max_terms + 1)
    s = 2 * math.pi * (1.0 + k)
    z = scale / s ** degree
    lead = min(x.real for x in spec.b[: spec.m])
    plan = plan_contour(spec, z, step=step) if scale > 0 else None
    g = eval_contour(spec, z, tol=contour_tol, step=step, plan=plan).real
    terms = prefactor * s ** (-float(power)) * g
    return _accelerated(terms, power + degree * lead, tol, {})


def rc_series(m, n, variant=GSeriesVariant.V1, tol=1e-10, max_terms=DEFAULT_TERMS,
              contour_tol=1e-12, step=DEFAULT_STEP):
    """R_C(m, n) as a G-series, using the R_C-specific forms."""
    if m < 0 or int(m) != m:
        raise ParameterDomain("m must be a non-negative integer")
    if n < 0:
        raise ParameterDomain("n must be non-negative")
    variant = GSeriesVariant.coerce(variant)
    if n == 0 and variant not in (GSeriesVariant.V1, GSeriesVariant.V5):
        raise ParameterDomain(f"n = 0 is only defined for V1 and V5, not {variant.name}")
    form = rc_form(int(m), float(n), variant)
    res = g_power_series(form.spec, form.scale, form.power, max_terms=max_terms,
                         prefactor=form.prefactor, contour_tol=contour_tol, step=step,
                         tol=tol, degree=form.degree)
    res.diagnostics["variant"] = variant.name
    return res
