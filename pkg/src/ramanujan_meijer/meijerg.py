"""Meijer G-function by numerical Mellin-Barnes quadrature.

The defining integral

    G(z) = 1/(2 pi i) * int_L  prod_{j<=m} Gamma(b_j - s) prod_{j<=n} Gamma(1 - a_j + s)
                             / (prod_{j>m} Gamma(1 - b_j + s) prod_{j>n} Gamma(a_j - s)) z^s ds

is evaluated on a line Re(s) = gamma that separates the two pole families.
When kappa = m + n - (p+q)/2 > 0 the integrand decays like exp(-pi kappa |t|)
on the vertical line and the trapezoid rule converges geometrically.  When
kappa <= 0 but q > p (the cosine representations) the vertical-line integral
does not converge at all; the line is then bent to the right,

    s(t) = gamma + i t + beta (sqrt(t^2 + 1) - 1),

which stays clear of both pole families and turns the integrand's decay
super-exponential.  The path is smooth, so the trapezoid rule keeps its
geometric convergence.
"""

import math
from dataclasses import dataclass

import numpy as np
from scipy import special

from .errors import (NoDecay, NoSeparatingLine, NotConverged, ParameterDomain,
                     PoleCollision, ZeroArgument)
from .gammaplex import is_gamma_pole, log_gamma

__all__ = [
    "MeijerGSpec",
    "ContourPlan",
    "sector_check",
    "plan_contour",
    "eval_contour",
    "eval_at_zero",
    "cosine_rep",
    "cosine_spec",
    "DEFAULT_STEP",
]

DEFAULT_STEP = 0.05
COLLISION_TOL = 1e-9
BEND_SLOPE = 0.25
BEND_WIDTH = 1.0
# integrand cut-off relative to its peak (about 1e-18)
_CUTOFF_LOG = math.log(1e-18)
# below this fraction of sum |integrand| the result is treated as cancellation noise
_NOISE_FLOOR = 1e-3
_ROUNDOFF = 32 * np.finfo(float).eps
_SCAN_LIMIT = 400.0
_CHUNK = 4_000_000


@dataclass(frozen=True)
class MeijerGSpec:
    """Orders and parameters of G^{m,n}_{p,q}(z | a; b)."""

    m: int
    n: int
    p: int
    q: int
    a: tuple
    b: tuple

    def __post_init__(self):
        a = tuple(complex(x) for x in self.a)
        b = tuple(complex(x) for x in self.b)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        if len(a) != self.p or len(b) != self.q:
            raise ParameterDomain("parameter list lengths must equal p and q")
        if not 1 <= self.m <= self.q or not 0 <= self.n <= self.p:
            raise ParameterDomain(f"need 1 <= m <= q and 0 <= n <= p, got m={self.m}, n={self.n}")
        for aj in a[: self.n]:
            for bi in b[: self.m]:
                d = aj - bi - 1
                k = round(d.real)
                if k >= 0 and abs(d - k) < COLLISION_TOL:
                    raise PoleCollision(f"poles of Gamma(1-{aj}+s) and Gamma({bi}-s) coincide")

    @classmethod
    def from_lists(cls, a_first=(), a_rest=(), b_first=(), b_rest=()):
        """Build from the four groups written as G(z | a_first; a_rest / b_first; b_rest)."""
        a = tuple(a_first) + tuple(a_rest)
        b = tuple(b_first) + tuple(b_rest)
        return cls(len(b_first), len(a_first), len(a), len(b), a, b)

    @property
    def kappa(self):
        return self.m + self.n - 0.5 * (self.p + self.q)

    @property
    def is_real(self):
        return all(x.imag == 0 for x in self.a + self.b)

    def inverted(self):
        """Spec of G^{n,m}_{q,p}(1/z | 1-b; 1-a), equal to this G at z."""
        return MeijerGSpec(self.n, self.m, self.q, self.p,
                           tuple(1 - x for x in self.b), tuple(1 - x for x in self.a))

    def separating_interval(self):
        left = max((x.real - 1 for x in self.a[: self.n]), default=-math.inf)
        right = min(x.real for x in self.b[: self.m])
        return left, right

    def log_kernel(self, s):
        """log of the gamma ratio in the integrand (without z^s)."""
        s = np.asarray(s, dtype=complex)
        out = np.zeros(s.shape, dtype=complex)
        for bj in self.b[: self.m]:
            out += special.loggamma(bj - s)
        for aj in self.a[: self.n]:
            out += special.loggamma(1 - aj + s)
        for bj in self.b[self.m:]:
            out -= _log_gamma_or_inf(1 - bj + s)
        for aj in self.a[self.n:]:
            out -= _log_gamma_or_inf(aj - s)
        return out


def _log_gamma_or_inf(x):
    pole = is_gamma_pole(x)
    if not pole.any():
        return special.loggamma(x)
    return np.where(pole, np.inf, special.loggamma(np.where(pole, 0.5, x)))


def sector_check(spec, z):
    """True iff kappa > 0 and |arg z| < pi kappa."""
    z = complex(z)
    if z == 0:
        raise ZeroArgument("sector check undefined at z = 0")
    kappa = spec.kappa
    return kappa > 0 and abs(math.atan2(z.imag, z.real)) < math.pi * kappa


@dataclass(frozen=True)
class ContourPlan:
    gamma: float
    t_max: float
    step: float
    # 0 for a straight vertical line, otherwise the slope of the rightward bend
    bend: float = 0.0
    # distance from gamma to the nearest pole family
    half_width: float = 0.0

    def path(self, t):
        t = np.asarray(t, dtype=float)
        if self.bend == 0.0:
            return self.gamma + 1j * t, np.full(t.shape, 1j)
        root = np.sqrt(t * t + BEND_WIDTH ** 2)
        s = self.gamma + 1j * t + self.bend * (root - BEND_WIDTH)
        ds = 1j + self.bend * t / root
        return s, ds


def plan_contour(spec, z, step=DEFAULT_STEP, t_max=None):
    """Choose the integration line for ``spec`` at positive ``z`` (scalar or array)."""
    left, right = spec.separating_interval()
    if not left < right:
        raise NoSeparatingLine(f"no vertical line separates the pole families ({left} >= {right})")
    if math.isinf(left):
        gamma = right - 0.5
    else:
        gamma = 0.5 * (left + right)
    half = min(gamma - left, right - gamma)
    if spec.kappa > 0:
        bend = 0.0
    elif spec.q > spec.p:
        bend = BEND_SLOPE
        half = min(half, 0.9 * BEND_WIDTH)
    else:
        raise NoDecay(f"integrand does not decay on any admissible path (kappa={spec.kappa})")
    step = min(step, half / 4)
    plan = ContourPlan(gamma, 0.0, step, bend, half)
    if t_max is None:
        t_max = _find_t_max(spec, plan, z)
    return ContourPlan(gamma, float(t_max), step, bend, half)


def _find_t_max(spec, plan, z):
    z = np.atleast_1d(np.asarray(z, dtype=float))
    logz = np.log(np.array([z.min(), z.max()]))
    t = np.arange(0.0, _SCAN_LIMIT + 0.125, 0.25)
    t = np.concatenate([-t[:0:-1], t])
    s, ds = plan.path(t)
    base = spec.log_kernel(s).real + np.log(np.abs(ds))
    t_need = 1.0
    for lz in logz:
        logf = base + s.real * lz
        logf = np.where(np.isnan(logf), -np.inf, logf)
        peak = logf.max()
        above = np.abs(t[logf > peak + _CUTOFF_LOG])
        if above.max() >= _SCAN_LIMIT:
            raise NoDecay("integrand still significant at the scan limit")
        t_need = max(t_need, above.max() + 0.5)
    return t_need


def _trapezoid_sum(spec, plan, t, logz):
    """sum_j g(t_j) and sum_j |g(t_j)| for rows of log z; t holds t >= 0 only.

    Nodes are paired (+t, -t) and summed in a fixed order, so the result does
    not depend on chunking.
    """
    s_pos, ds_pos = plan.path(t)
    s_neg, ds_neg = plan.path(-t)
    kp = spec.log_kernel(s_pos)
    kn = spec.log_kernel(s_neg)
    w = np.where(t == 0, 0.5, 1.0)
    total = np.empty(logz.shape, dtype=complex)
    mag = np.empty(logz.shape, dtype=float)
    rows = max(1, _CHUNK // max(1, t.size))
    for i in range(0, logz.size, rows):
        lz = logz[i:i + rows, None]
        gp = np.exp(kp + s_pos * lz) * ds_pos
        gn = np.exp(kn + s_neg * lz) * ds_neg
        pair = (gp + gn) * w
        total[i:i + rows] = pair.sum(axis=1)
        mag[i:i + rows] = ((np.abs(gp) + np.abs(gn)) * w).sum(axis=1)
    return total / (2j * np.pi), mag / (2 * np.pi)


def eval_contour(spec, z, tol=1e-12, step=DEFAULT_STEP, t_max=None, max_halvings=3,
                 plan=None):
    """Evaluate G(z) for positive real ``z`` (scalar or 1-D array).

    The trapezoid step is halved until successive values agree to ``tol``
    relative to max(|G|, 1e-3 * sum|integrand|); the second term keeps the test
    meaningful when the result is a near-total cancellation (e.g. cos(pi/2)).
    Changes below 32 eps * sum|integrand| are treated as roundoff.
    Raises :class:`NotConverged` if ``max_halvings`` halvings are not enough.
    """
    scalar = np.ndim(z) == 0
    z = np.atleast_1d(np.asarray(z, dtype=float))
    if np.any(z < 0) or not np.all(np.isfinite(z)):
        raise ParameterDomain("eval_contour needs finite z >= 0")
    out = np.empty(z.shape, dtype=complex)
    zero = z == 0
    if zero.any():
        out[zero] = eval_at_zero(spec)
    zpos = z[~zero]
    if zpos.size:
        if plan is None:
            plan = plan_contour(spec, zpos, step=step, t_max=t_max)
        out[~zero] = _eval_positive(spec, plan, zpos, tol, max_halvings)
    return complex(out[0]) if scalar else out


def _eval_positive(spec, plan, z, tol, max_halvings):
    logz = np.log(z)
    h = plan.step
    n = int(math.ceil(plan.t_max / h))
    total, mag = _trapezoid_sum(spec, plan, h * np.arange(n + 1), logz)
    value, l1 = h * total, h * mag
    pending = np.arange(z.size)
    for _ in range(max_halvings):
        # new nodes sit at odd multiples of h/2
        t_new = h * (np.arange(n) + 0.5)
        tot_new, mag_new = _trapezoid_sum(spec, plan, t_new, logz[pending])
        old = value[pending]
        new = 0.5 * old + 0.5 * h * tot_new
        l1_new = 0.5 * l1[pending] + 0.5 * h * mag_new
        value[pending] = new
        l1[pending] = l1_new
        scale = np.maximum(np.abs(new), _NOISE_FLOOR * l1_new)
        # floating-point noise in the oscillating integrand is ~eps * L1 mass;
        # no step refinement can push the change below that
        ok = np.abs(new - old) <= np.maximum(tol * scale, _ROUNDOFF * l1_new)
        pending = pending[~ok]
        h *= 0.5
        n *= 2
        if pending.size == 0:
            break
    else:
        if pending.size:
            raise NotConverged(
                f"contour quadrature not converged after {max_halvings} halvings "
                f"at z={z[pending[0]]:.6g}")
    if spec.is_real:
        scale = np.maximum(np.abs(value), _NOISE_FLOOR * l1)
        bad = np.abs(value.imag) > max(tol, 1e-13) * scale * 10
        if bad.any():
            raise NotConverged(f"spurious imaginary part {value[bad][0].imag:.3g} for a real spec")
    return value


def eval_at_zero(spec):
    """Limit of G(z) as z -> 0+ from the leading right-family residue.

    Finite and non-zero only when the smallest right-family pole sits at 0; zero
    when every such pole has positive real part.
    """
    bs = spec.b[: spec.m]
    lead = min(bs, key=lambda x: x.real)
    if lead.real > 0:
        return 0j
    if lead != 0:
        raise ParameterDomain("G(z) has no finite non-zero limit at z = 0 for this spec")
    others = [x for x in bs if x != lead]
    if len(others) != len(bs) - 1:
        raise ParameterDomain("repeated leading pole: logarithmic behaviour at z = 0")
    logv = 0j
    for bj in others:
        logv += log_gamma(bj - lead)
    for aj in spec.a[: spec.n]:
        logv += log_gamma(1 - aj + lead)
    for bj in spec.b[spec.m:]:
        if is_gamma_pole(1 - bj + lead):
            return 0j
        logv -= log_gamma(1 - bj + lead)
    for aj in spec.a[spec.n:]:
        if is_gamma_pole(aj - lead):
            return 0j
        logv -= log_gamma(aj - lead)
    return complex(np.exp(logv))


_SQRT_PI = math.sqrt(math.pi)

_COSINE_B = {
    1: ((0.0,), (0.5,)),
    2: ((-0.25,), (0.25,)),
    3: ((0.5,), (1.0,)),
    4: ((-0.5,), (0.0,)),
    5: ((0.0, 0.5), (0.25, 0.75)),
}


def cosine_spec(variant):
    """G-function spec used by cosine representation ``variant`` (1..5)."""
    if variant not in _COSINE_B:
        raise ParameterDomain("cosine representation variant must be 1..5")
    first, rest = _COSINE_B[variant]
    return MeijerGSpec.from_lists(b_first=first, b_rest=rest)


def cosine_rep(variant, z, tol=1e-12, step=DEFAULT_STEP):
    """cos(z) through one of its five G-function representations, z > 0."""
    spec = cosine_spec(variant)
    z = np.asarray(z, dtype=float)
    if np.any(z <= 0):
        raise ParameterDomain("cosine representation needs z > 0")
    if variant == 5:
        arg, pref = z ** 4 / 256, math.sqrt(2 * math.pi) * np.ones_like(z)
    else:
        arg = z * z / 4
        pref = {
            1: _SQRT_PI * np.ones_like(z),
            2: np.sqrt(math.pi * z / 2),
            3: 2 * _SQRT_PI / z,
            4: _SQRT_PI * z / 2,
        }[variant]
    g = eval_contour(spec, arg, tol=tol, step=step)
    out = pref * g
    return complex(out) if np.ndim(out) == 0 else out
