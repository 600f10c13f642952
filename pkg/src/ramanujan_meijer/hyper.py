"""Generalized hypergeometric and Fox-Wright series.

Both engines sum their defining power series term by term with compensated
accumulation.  The stopping rule asks for three consecutive terms that are
small relative to the running sum, which tolerates isolated zero terms coming
from denominator gamma poles, and additionally for a geometric tail estimate
below the tolerance.
"""

import cmath
import enum
import math
from dataclasses import dataclass, field

import numpy as np
from scipy import special

from .errors import DivergentInput, NoConvergence, NumeratorPole, ParameterDomain
from .gammaplex import is_gamma_pole
from .summation import CompensatedSum

MAX_TERMS = 100_000

__all__ = [
    "ConvergenceKind",
    "ConvergenceClass",
    "SeriesSum",
    "PFqSpec",
    "FoxWrightSpec",
    "FoxWrightClassification",
    "pfq_classify",
    "pfq_eval",
    "fox_wright_classify",
    "fox_wright_eval",
    "wright_phi",
    "wright_bessel",
    "mittag_leffler",
]


class ConvergenceKind(enum.Enum):
    AllZ = "AllZ"
    UnitDisk = "UnitDisk"
    UnitCircleAbsolute = "UnitCircleAbsolute"
    UnitCircleConditional = "UnitCircleConditional"
    Divergent = "Divergent"
    SectorRestricted = "SectorRestricted"


@dataclass(frozen=True)
class ConvergenceClass:
    kind: ConvergenceKind
    detail: complex = 0j
    # free-form flags, e.g. "boundary-omega-zero" for the Re(omega) = 0 circle case
    notes: tuple = ()

    @property
    def convergent(self):
        return self.kind is not ConvergenceKind.Divergent


@dataclass
class SeriesSum:
    """Value of a summed series together with its truncation diagnostics."""

    value: complex
    terms_used: int
    tail_estimate: float
    converged: bool
    last_ratio: float = float("nan")
    # signed analytic tail already folded into ``value`` (accelerated sums only)
    tail_value: float = 0.0
    diagnostics: dict = field(default_factory=dict)


def _as_complex_tuple(values):
    return tuple(complex(v) for v in values)


@dataclass(frozen=True)
class PFqSpec:
    numerators: tuple = ()
    denominators: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "numerators", _as_complex_tuple(self.numerators))
        object.__setattr__(self, "denominators", _as_complex_tuple(self.denominators))
        for beta in self.denominators:
            if is_gamma_pole(beta):
                raise ParameterDomain(f"denominator parameter {beta} is a non-positive integer")

    @property
    def p(self):
        return len(self.numerators)

    @property
    def q(self):
        return len(self.denominators)

    @property
    def omega(self):
        return sum(self.denominators, 0j) - sum(self.numerators, 0j)

    @property
    def terminates(self):
        return any(is_gamma_pole(a) for a in self.numerators)


def pfq_classify(spec, z):
    z = complex(z)
    p, q = spec.p, spec.q
    if z == 0 or spec.terminates or p <= q:
        return ConvergenceClass(ConvergenceKind.AllZ)
    if p > q + 1:
        return ConvergenceClass(ConvergenceKind.Divergent)
    omega = spec.omega
    r = abs(z)
    if r < 1 and not math.isclose(r, 1.0, rel_tol=0, abs_tol=1e-15):
        return ConvergenceClass(ConvergenceKind.UnitDisk, omega)
    if r > 1 + 1e-15:
        return ConvergenceClass(ConvergenceKind.Divergent, omega)
    # |z| = 1
    if omega.real > 0:
        return ConvergenceClass(ConvergenceKind.UnitCircleAbsolute, omega)
    if omega.real <= -1:
        return ConvergenceClass(ConvergenceKind.Divergent, omega)
    if z == 1:
        return ConvergenceClass(ConvergenceKind.Divergent, omega)
    notes = ("boundary-omega-zero",) if omega.real == 0 else ()
    return ConvergenceClass(ConvergenceKind.UnitCircleConditional, omega, notes)


class _Stopper:
    """Shared stopping logic for the power-series engines."""

    def __init__(self, tol):
        self.tol = tol
        self.acc = CompensatedSum()
        self.small_run = 0
        self.prev_mag = None
        self.ratio = float("nan")
        self.n = 0

    def push(self, term):
        self.acc.add(term)
        self.n += 1
        mag = abs(term)
        if self.prev_mag:
            self.ratio = mag / self.prev_mag
        elif mag == 0.0:
            self.ratio = 0.0
        if mag != 0.0 or self.prev_mag is None:
            self.prev_mag = mag
        total = abs(self.acc.value)
        if mag <= self.tol * total or mag == 0.0:
            self.small_run += 1
        else:
            self.small_run = 0
        self.last_mag = mag

    def tail(self):
        r = self.ratio
        if self.last_mag == 0.0:
            return 0.0
        if not r < 1.0:
            return math.inf
        return max(self.last_mag / (1.0 - r), 0.0)

    def done(self):
        if self.small_run < 3:
            return False
        return self.tail() <= self.tol * max(abs(self.acc.value), np.finfo(float).tiny)

    def result(self, converged):
        return SeriesSum(self.acc.value, self.n, self.tail(), converged,
                         last_ratio=self.ratio)


def pfq_eval(spec, z, tol=1e-15, max_terms=MAX_TERMS):
    """Sum the pFq series at ``z``.

    ``tol`` is relative to the magnitude of the sum.  Raises
    :class:`DivergentInput` when :func:`pfq_classify` says the series diverges.
    """
    z = complex(z)
    cls = pfq_classify(spec, z)
    if not cls.convergent:
        raise DivergentInput(f"{spec.p}F{spec.q} diverges at z={z} ({cls.kind.value})")
    st = _Stopper(tol)
    term = 1.0 + 0j
    st.push(term)
    if z == 0:
        return st.result(True)
    a, b = spec.numerators, spec.denominators
    for n in range(max_terms):
        if st.done():
            return st.result(True)
        num = 1.0 + 0j
        for alpha in a:
            num *= alpha + n
        den = float(n + 1)
        for beta in b:
            den *= beta + n
        term = term * num / den * z
        st.push(term)
    raise NoConvergence(f"{spec.p}F{spec.q} did not converge within {max_terms} terms")


def _pairs(values):
    out = []
    for alpha, a in values:
        a = float(a)
        if a == 0:
            raise ParameterDomain("Fox-Wright scale coefficients must be non-zero")
        out.append((complex(alpha), a))
    return tuple(out)


@dataclass(frozen=True)
class FoxWrightSpec:
    upper: tuple = ()
    lower: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "upper", _pairs(self.upper))
        object.__setattr__(self, "lower", _pairs(self.lower))

    @property
    def p(self):
        return len(self.upper)

    @property
    def q(self):
        return len(self.lower)

    @property
    def is_real(self):
        return all(a.imag == 0 for a, _ in self.upper + self.lower)

    def log_coefficients(self, k):
        """log|c_k| and sign for c_k = prod Gamma(alpha+kA) / prod Gamma(beta+kB) / k!.

        Real parameters only; complex specs go through :meth:`coefficients`.
        Returns ``(logmag, sign)`` arrays; sign is 0 where a denominator pole
        zeroes the term.
        """
        k = np.asarray(k, dtype=float)
        logmag = -special.gammaln(k + 1)
        sign = np.ones_like(k)
        for alpha, a in self.upper:
            x = alpha.real + k * a
            if np.any(is_gamma_pole(x)):
                bad = k[is_gamma_pole(x)][0]
                raise NumeratorPole(f"Gamma({alpha}+{a}k) has a pole at k={int(bad)}")
            logmag = logmag + special.gammaln(x)
            sign = sign * special.gammasgn(x)
        for beta, b in self.lower:
            x = beta.real + k * b
            pole = is_gamma_pole(x)
            xs = np.where(pole, 0.5, x)
            logmag = logmag - special.gammaln(xs)
            sign = sign * np.where(pole, 0.0, special.gammasgn(xs))
        return logmag, sign

    def coefficients(self, k):
        """Complex c_k (see :meth:`log_coefficients`), computed in the log domain."""
        k = np.asarray(k, dtype=float)
        if self.is_real:
            logmag, sign = self.log_coefficients(k)
            return sign * np.exp(logmag) + 0j
        return np.exp(_complex_log_coefficients(self, k))


@dataclass(frozen=True)
class FoxWrightClassification:
    """Convergence data of a Fox-Wright function.

    ``contour_class`` applies the sector conditions for the Mellin-Barnes
    representation (sigma* and mu*).  ``series_class`` is what governs the
    power series itself: entire when Delta* > -1, a disc of radius delta* when
    Delta* = -1, divergent otherwise.
    """

    Delta: float
    delta: float
    mu: complex
    sigma: float
    contour_class: ConvergenceClass
    series_class: ConvergenceClass

    @property
    def kind(self):
        return self.contour_class.kind


def fox_wright_classify(spec):
    A = [a for _, a in spec.upper]
    B = [b for _, b in spec.lower]
    Delta = math.fsum(B) - math.fsum(A)
    delta = math.prod(abs(a) ** (-a) for a in A) * math.prod(abs(b) ** b for b in B)
    mu = (sum((beta for beta, _ in spec.lower), 0j) - sum((alpha for alpha, _ in spec.upper), 0j)
          + (spec.p - spec.q) / 2)
    sigma = 1.0 - Delta
    eps = 1e-12
    if sigma > eps:
        contour = ConvergenceClass(ConvergenceKind.SectorRestricted, 0.5 * math.pi * sigma)
    elif abs(sigma) <= eps and mu.real > 0.5:
        # only the ray arg(-z) = 0 survives
        contour = ConvergenceClass(ConvergenceKind.SectorRestricted, 0.0, ("ray",))
    else:
        contour = ConvergenceClass(ConvergenceKind.Divergent, sigma)
    if Delta > -1 + eps:
        series = ConvergenceClass(ConvergenceKind.AllZ, Delta)
    elif abs(Delta + 1) <= eps:
        series = ConvergenceClass(ConvergenceKind.UnitDisk, delta, ("radius",))
    else:
        series = ConvergenceClass(ConvergenceKind.Divergent, Delta)
    return FoxWrightClassification(Delta, delta, mu, sigma, contour, series)


_BLOCK = 64


def fox_wright_eval(spec, z, tol=1e-15, max_terms=MAX_TERMS):
    """Sum the Fox-Wright series pPsi_q at ``z``.

    Coefficients are generated in blocks in the log domain (with explicit sign
    tracking for real parameters), so gamma products do not overflow for large
    indices.
    """
    z = complex(z)
    cls = fox_wright_classify(spec)
    sc = cls.series_class
    if sc.kind is ConvergenceKind.Divergent and z != 0:
        raise DivergentInput(f"Fox-Wright series diverges (Delta*={cls.Delta})")
    if sc.kind is ConvergenceKind.UnitDisk and abs(z) >= sc.detail.real:
        raise DivergentInput(f"|z|={abs(z)} outside the radius of convergence {sc.detail.real}")
    st = _Stopper(tol)
    if z == 0:
        st.push(complex(spec.coefficients(np.array([0.0]))[0]))
        return st.result(True)
    real_path = spec.is_real and z.imag == 0
    logz = math.log(abs(z))
    zsign = 1.0 if z.real > 0 else -1.0
    for start in range(0, max_terms, _BLOCK):
        k = np.arange(start, start + _BLOCK, dtype=float)
        if real_path:
            logmag, sign = spec.log_coefficients(k)
            terms = sign * zsign ** k * np.exp(logmag + k * logz) + 0j
        else:
            logz_c = cmath.log(z)
            terms = np.exp(_complex_log_coefficients(spec, k) + k * logz_c)
        for t in terms:
            if st.done():
                return st.result(True)
            st.push(t)
    raise NoConvergence(f"Fox-Wright series did not converge within {max_terms} terms")


def _complex_log_coefficients(spec, k):
    logc = -special.gammaln(k + 1) + 0j
    for alpha, a in spec.upper:
        x = alpha + k * a
        if np.any(is_gamma_pole(x)):
            raise NumeratorPole(f"Gamma({alpha}+{a}k) has a pole")
        logc = logc + special.loggamma(x)
    for beta, b in spec.lower:
        x = beta + k * b
        pole = is_gamma_pole(x)
        logc = logc - np.where(pole, np.inf, special.loggamma(np.where(pole, 0.5, x)))
    return logc


def wright_phi(alpha, beta, z, tol=1e-15):
    """Wright function Phi(alpha, beta; z) = sum z^k / (k! Gamma(beta + alpha k))."""
    if not alpha > 0:
        raise ParameterDomain("Wright function needs alpha > 0")
    spec = FoxWrightSpec((), ((beta, alpha),))
    return fox_wright_eval(spec, z, tol).value


def wright_bessel(mu, nu, x, tol=1e-15):
    """Wright generalized Bessel function J_nu^mu(-x) = Phi(mu, nu + 1; -x)."""
    return wright_phi(mu, complex(nu) + 1, -complex(x), tol)


def mittag_leffler(alpha, beta, z, tol=1e-15):
    """Two-parameter Mittag-Leffler function E_{alpha,beta}(z)."""
    if not alpha > 0:
        raise ParameterDomain("Mittag-Leffler function needs alpha > 0")
    spec = FoxWrightSpec(((1.0, 1.0),), ((beta, alpha),))
    return fox_wright_eval(spec, z, tol).value
