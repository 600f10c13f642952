"""Verification suites: closed forms, series representations and G-series identities.

Every check becomes a :class:`VerificationRecord`; failures never abort a run.
Records are computed concurrently and reported sorted by id, so the report
depends only on the configuration (apart from ``runtime_ms``).
"""

import csv
import enum
import io
import json
import math
import re
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .meijerg import DEFAULT_STEP, MeijerGSpec
from .quadratures import RC_T_MAX, laplace_sqrt_cos, ramanujan_ic, ramanujan_rc, upsilon
from .series import (DEFAULT_TERMS, GSeriesVariant, RamanujanParams, ThetaSequence,
                     g_power_series, i_c, ic_star_series, laplace_g_term, rc_form, rc_series)

__all__ = [
    "Status",
    "VerificationRecord",
    "SuiteConfig",
    "CLOSED_FORMS",
    "G_IDENTITIES",
    "run_closed_form_suite",
    "run_theorem_suite",
    "run_g_identity_suite",
    "run_suite",
    "list_checks",
    "exit_code",
    "emit_report",
    "parse_json_report",
    "CSV_HEADER",
]

PI = math.pi
SQRT2 = math.sqrt(2.0)

TOL_QUADRATURE = 1e-9
TOL_TERM = 1e-8
TOL_SERIES = 1e-6
TOL_GRID = 1e-5
TOL_IDENTITY = 1e-5
TOL_VARIANTS = 1e-7

CSV_HEADER = ["id", "lhs", "rhs", "abs_residual", "rel_residual", "tol", "status", "runtime_ms"]


class Status(str, enum.Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    SKIP = "SKIP"


@dataclass
class VerificationRecord:
    id: str
    lhs: float
    rhs: float
    abs_residual: float
    rel_residual: float
    tol: float
    status: Status
    runtime_ms: int = 0
    detail: dict = field(default_factory=dict)

    @classmethod
    def compare(cls, id, lhs, rhs, tol, runtime_ms=0, detail=None):
        """PASS iff the relative residual is within tol (absolute when rhs = 0)."""
        lhs, rhs = float(lhs), float(rhs)
        err = abs(lhs - rhs)
        rel = err / abs(rhs) if rhs != 0 else err
        ok = math.isfinite(rel) and rel <= tol
        return cls(id, lhs, rhs, err, rel, tol, Status.PASS if ok else Status.FAIL,
                   int(runtime_ms), dict(detail or {}))

    def as_dict(self):
        return {
            "id": self.id,
            "lhs": _finite_or_none(self.lhs),
            "rhs": _finite_or_none(self.rhs),
            "abs_residual": _finite_or_none(self.abs_residual),
            "rel_residual": _finite_or_none(self.rel_residual),
            "tol": self.tol,
            "status": self.status.value,
            "runtime_ms": self.runtime_ms,
            "detail": self.detail,
        }

    @classmethod
    def from_dict(cls, d):
        return cls(d["id"], _none_to_nan(d["lhs"]), _none_to_nan(d["rhs"]),
                   _none_to_nan(d["abs_residual"]), _none_to_nan(d["rel_residual"]),
                   d["tol"], Status(d["status"]), d["runtime_ms"], d.get("detail", {}) or {})


def _finite_or_none(x):
    return x if isinstance(x, (int, float)) and math.isfinite(x) else None


def _none_to_nan(x):
    return float("nan") if x is None else x


@dataclass(frozen=True)
class SuiteConfig:
    suite: str = "all"
    tol: float = None          # None: per-check defaults
    max_terms: int = DEFAULT_TERMS
    contour_step: float = DEFAULT_STEP
    t_max: float = RC_T_MAX
    output_format: str = "json"
    workers: int = 4

    def __post_init__(self):
        if self.suite not in SUITES:
            raise ValueError(f"unknown suite {self.suite!r}")
        if self.tol is not None and not self.tol > 0:
            raise ValueError("tol must be positive")
        if self.max_terms < 100:
            raise ValueError("max_terms must be at least 100")
        if not self.contour_step > 0 or not self.t_max > 0:
            raise ValueError("contour_step and t_max must be positive")
        if self.output_format not in ("json", "csv", "markdown"):
            raise ValueError(f"unknown format {self.output_format!r}")
        if self.workers < 1:
            raise ValueError("workers must be at least 1")

    def tol_for(self, default):
        return default if self.tol is None else self.tol


# R_C(m, n) closed forms, keyed by (m, n)
CLOSED_FORMS = {
    (0, Fraction(0)): 1 / 12,
    (0, Fraction(1)): (2 - SQRT2) / 8,
    (0, Fraction(2)): 1 / 16,
    (0, Fraction(4)): (3 - SQRT2) / 32,
    (0, Fraction(6)): (13 - 4 * math.sqrt(3)) / 144,
    (0, Fraction(1, 2)): 1 / (4 * PI),
    (0, Fraction(2, 5)): (8 - 3 * math.sqrt(5)) / 16,
    (1, Fraction(1, 2)): (13 - 4 * PI) / (8 * PI ** 2),
    (1, Fraction(2)): (0.5 - 3 / PI + 5 / PI ** 2) / 64,
    (2, Fraction(2)): (1 - 5 / PI + 5 / PI ** 2) / 256,
}


@dataclass(frozen=True)
class GIdentity:
    """A claimed identity sum_k (2 pi (1+k))^-power G(scale / (2 pi (1+k))^4) = rhs."""

    index: int
    m: int
    n: Fraction                # the R_C(m, n) the right-hand side belongs to
    a: tuple
    b_first: tuple
    scale: float               # argument numerator as claimed
    power: int
    rhs: float

    @property
    def spec(self):
        b_rest = (0.5,) if len(self.a) == 4 else ()
        return MeijerGSpec.from_lists(a_first=list(self.a), b_first=list(self.b_first),
                                      b_rest=list(b_rest))


_A_M0 = (0.25, 0.0, -0.25)
_A_M1 = (0.0, -0.25, -0.5, -0.75)
_A_M2 = (-0.5, -0.75, -1.0, -1.25)

G_IDENTITIES = (
    GIdentity(1, 1, Fraction(1, 2), _A_M1, (0.0,), 16 * PI ** 2, 4,
              SQRT2 * (13 - 4 * PI) / (1024 * PI)),
    GIdentity(2, 1, Fraction(2), _A_M1, (0.0,), 64 * PI ** 2, 4,
              PI * SQRT2 / 8192 * (0.5 - 3 / PI + 5 / PI ** 2)),
    GIdentity(3, 2, Fraction(2), _A_M2, (0.0,), 256 * PI ** 2, 6,
              PI * SQRT2 / (256 * 2 ** 11) * (1 - 5 / PI + 5 / PI ** 2)),
    GIdentity(4, 0, Fraction(1), _A_M0, (0.0,), 64 * PI ** 2, 2, PI * (2 * SQRT2 - 2) / 64),
    GIdentity(5, 0, Fraction(2), _A_M0, (0.0,), 256 * PI ** 2, 2, PI * SQRT2 / 128),
    GIdentity(6, 0, Fraction(4), _A_M0, (0.0,), 1024 * PI ** 2, 2, PI * (3 * SQRT2 - 2) / 256),
    GIdentity(7, 0, Fraction(6), _A_M0, (0.0,), 2304 * PI ** 2, 2,
              PI * (13 * SQRT2 - 4 * math.sqrt(6)) / 1152),
    GIdentity(8, 0, Fraction(1, 2), _A_M0, (0.0,), 16 * PI ** 2, 2, SQRT2 / 32),
    GIdentity(9, 0, Fraction(2, 5), _A_M0, (0.0,), 256 * PI ** 2 / 25, 2,
              PI * (8 * SQRT2 - 3 * math.sqrt(10)) / 128),
)


def _rc_id(prefix, m, n):
    return f"{prefix}-{m}-{n}"


def _timed(fn):
    t0 = time.perf_counter()
    out = fn()
    return out, int(round(1000 * (time.perf_counter() - t0)))


def _guard(id, tol, job):
    """Run ``job`` -> record; exceptions become FAIL records carrying the message."""
    def run():
        t0 = time.perf_counter()
        try:
            return job()
        except Exception as exc:  # failures are reported, never raised
            ms = int(round(1000 * (time.perf_counter() - t0)))
            nan = float("nan")
            return VerificationRecord(id, nan, nan, nan, nan, tol, Status.FAIL, ms,
                                      {"error": f"{type(exc).__name__}: {exc}"})
    return run


def _closed_form_jobs(cfg):
    tol = cfg.tol_for(TOL_QUADRATURE)
    jobs = []
    for (m, n), exact in CLOSED_FORMS.items():
        rid = _rc_id("RC", m, n)

        def job(m=m, n=n, exact=exact, rid=rid):
            res, ms = _timed(lambda: ramanujan_rc(m, float(n), t_max=cfg.t_max))
            return VerificationRecord.compare(rid, res.value, exact, tol, ms,
                                              {"quadrature_error_estimate": res.abs_error_estimate})
        jobs.append((rid, tol, job))
    for n in (1, 2, 4):
        w = math.sqrt(2.0 / n) / n

        def ups(n=n, w=w):
            def compute():
                lhs = upsilon(n, t_max=cfg.t_max).value
                rhs = w * ramanujan_rc(0, 1.0 / n, t_max=cfg.t_max).value
                return lhs, rhs + ramanujan_rc(0, n, t_max=cfg.t_max).value
            (lhs, rhs), ms = _timed(compute)
            return VerificationRecord.compare(f"UPSILON-RECIP-{n}", lhs, rhs, tol, ms)

        def rc(n=n, w=w):
            def compute():
                lhs = ramanujan_rc(0, n, t_max=cfg.t_max).value
                rhs = w * upsilon(1.0 / n, t_max=cfg.t_max).value - upsilon(n, t_max=cfg.t_max).value
                return lhs, rhs
            (lhs, rhs), ms = _timed(compute)
            return VerificationRecord.compare(f"RC-RECIP-{n}", lhs, rhs, tol, ms)
        jobs.append((f"UPSILON-RECIP-{n}", tol, ups))
        jobs.append((f"RC-RECIP-{n}", tol, rc))
    return jobs


# (v, b, lambda, y) at which the term-level identity and the R_C reduction are checked
TERM_POINT = (1.0, 2 * PI, 1.0, PI / 2)
TERM_K_MAX = 50
VARIANT_POINT = (1.5, 2.0, 1.0, 1.0, 1.0)
IC_GRID = [(v, b, lam, y)
           for v in (0.7, 1.0, 2.5)
           for b in (1.0, 2 * PI)
           for lam in (1.0, 1.5)
           for y in (0.5, PI / 2, 3.0)
           if 2 * v > lam]


def _label(x):
    return f"{x:.6g}"


def _theorem_jobs(cfg):
    jobs = []
    step = cfg.contour_step
    v, b, lam, y = TERM_POINT
    tol_term = cfg.tol_for(TOL_TERM)
    for var in GSeriesVariant:
        for k in range(TERM_K_MAX + 1):
            rid = f"TERM-{var.name}-K{k:02d}"

            def job(var=var, k=k, rid=rid):
                s = lam * b + b * k

                def compute():
                    return (float(laplace_g_term(var, v, y, s, step=step)),
                            laplace_sqrt_cos(v, s, y).value)
                (lhs, rhs), ms = _timed(compute)
                return VerificationRecord.compare(rid, lhs, rhs, tol_term, ms, {"s": s})
            jobs.append((rid, tol_term, job))

    tol_var = cfg.tol_for(TOL_VARIANTS)

    def variants():
        params = RamanujanParams(*VARIANT_POINT)
        theta = ThetaSequence.constant(1.0)

        def compute():
            return {var.name: ic_star_series(theta, params, var, max_terms=cfg.max_terms,
                                             step=step).value.real for var in GSeriesVariant}
        vals, ms = _timed(compute)
        hi, lo = max(vals.values()), min(vals.values())
        return VerificationRecord.compare("VARIANTS", hi, lo, tol_var, ms, {"values": vals})
    jobs.append(("VARIANTS", tol_var, variants))

    # v = m + 1 links the binomial-weighted series to R_C(m, n) at y = n pi
    tol_series = cfg.tol_for(TOL_SERIES)
    for m in (0, 1):
        exact = CLOSED_FORMS[(m, Fraction(1, 2))]
        for var in GSeriesVariant:
            rid = f"ICSERIES-{var.name}-M{m}"

            def job(m=m, exact=exact, var=var, rid=rid):
                res, ms = _timed(lambda: i_c(m + 1.0, b, lam, y, var, max_terms=cfg.max_terms,
                                             step=step))
                return VerificationRecord.compare(
                    rid, res.value.real, exact, tol_series, ms,
                    {"tail_error": res.tail_estimate,
                     "fitted_exponent": res.diagnostics["fitted_exponent"]})
            jobs.append((rid, tol_series, job))

    tol_grid = cfg.tol_for(TOL_GRID)
    for gv, gb, gl, gy in IC_GRID:
        rid = f"ICGRID-{_label(gv)}-{_label(gb)}-{_label(gl)}-{_label(gy)}"

        def job(gv=gv, gb=gb, gl=gl, gy=gy, rid=rid):
            def compute():
                series = i_c(gv, gb, gl, gy, GSeriesVariant.V1, max_terms=cfg.max_terms, step=step)
                return series.value.real, ramanujan_ic(gv, gb, gl, gy).value
            (lhs, rhs), ms = _timed(compute)
            return VerificationRecord.compare(rid, lhs, rhs, tol_grid, ms)
        jobs.append((rid, tol_grid, job))

    for (m, n), exact in CLOSED_FORMS.items():
        for var in GSeriesVariant:
            if n == 0 and var in (GSeriesVariant.V2, GSeriesVariant.V3, GSeriesVariant.V4):
                continue
            rid = _rc_id("RCSERIES", m, _label(float(n)))
            if var is not GSeriesVariant.V1:
                rid += f"-{var.name}"

            def job(m=m, n=n, exact=exact, var=var, rid=rid):
                res, ms = _timed(lambda: rc_series(m, float(n), var, max_terms=cfg.max_terms,
                                                   step=step))
                return VerificationRecord.compare(rid, res.value.real, exact, tol_series, ms,
                                                  {"tail_error": res.tail_estimate})
            jobs.append((rid, tol_series, job))
    return jobs


def _identity_jobs(cfg):
    jobs = []
    tol = cfg.tol_for(TOL_IDENTITY)
    tol_series = cfg.tol_for(TOL_SERIES)
    for ident in G_IDENTITIES:
        rid = f"G-IDENTITY-{ident.index}"

        def job(ident=ident, rid=rid):
            def compute():
                lhs = g_power_series(ident.spec, ident.scale, ident.power,
                                     max_terms=cfg.max_terms, step=cfg.contour_step)
                m, n = ident.m, float(ident.n)
                exact = CLOSED_FORMS[(ident.m, ident.n)]
                pref = rc_form(m, n, GSeriesVariant.V1).prefactor
                series = rc_series(m, n, GSeriesVariant.V1, max_terms=cfg.max_terms,
                                   step=cfg.contour_step).value.real
                loc_series = VerificationRecord.compare("series_vs_closed_form", series, exact,
                                                        tol_series)
                loc_rhs = VerificationRecord.compare("rhs_vs_closed_form", ident.rhs,
                                                     exact / pref, tol)
                detail = {
                    "m": ident.m,
                    "n": str(ident.n),
                    "n_from_argument": _label(math.sqrt(ident.scale / (64 * PI * PI))),
                    "tail_error": lhs.tail_estimate,
                    "localization": {
                        "series_vs_closed_form": _loc_dict(loc_series),
                        "rhs_vs_closed_form": _loc_dict(loc_rhs),
                    },
                }
                return lhs.value.real, detail
            (lhs, detail), ms = _timed(compute)
            return VerificationRecord.compare(rid, lhs, ident.rhs, tol, ms, detail)
        jobs.append((rid, tol, job))
    return jobs


def _loc_dict(rec):
    return {"lhs": rec.lhs, "rhs": rec.rhs, "rel_residual": rec.rel_residual,
            "tol": rec.tol, "status": rec.status.value}


SUITES = {
    "closed-forms": (_closed_form_jobs,),
    "theorems": (_theorem_jobs,),
    "g-identities": (_identity_jobs,),
    "all": (_closed_form_jobs, _theorem_jobs, _identity_jobs),
}


def _natural_key(rid):
    return [int(p) if p.isdigit() else p for p in re.split(r"(\d+)", rid)]


def _run(cfg, builders):
    jobs = [j for build in builders for j in build(cfg)]
    runners = [_guard(rid, tol, job) for rid, tol, job in jobs]
    if cfg.workers == 1:
        records = [r() for r in runners]
    else:
        with ThreadPoolExecutor(max_workers=cfg.workers) as pool:
            records = list(pool.map(lambda r: r(), runners))
    return sorted(records, key=lambda r: _natural_key(r.id))


def run_closed_form_suite(config=None):
    return _run(config or SuiteConfig(suite="closed-forms"), SUITES["closed-forms"])


def run_theorem_suite(config=None):
    return _run(config or SuiteConfig(suite="theorems"), SUITES["theorems"])


def run_g_identity_suite(config=None):
    return _run(config or SuiteConfig(suite="g-identities"), SUITES["g-identities"])


def run_suite(config):
    return _run(config, SUITES[config.suite])


def list_checks(suite, config=None):
    """Record ids a suite would produce, without running anything."""
    cfg = config or SuiteConfig(suite=suite)
    return sorted((rid for build in SUITES[suite] for rid, _, _ in build(cfg)), key=_natural_key)


def _fmt(x):
    return "" if x is None else repr(x)


def emit_report(records, fmt="json"):
    """Serialize records; returns bytes."""
    rows = [r.as_dict() for r in records]
    if fmt == "json":
        text = json.dumps(rows, indent=2, sort_keys=False, allow_nan=False) + "\n"
    elif fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for row in rows:
            writer.writerow([row["id"]] + [_fmt(row[k]) for k in CSV_HEADER[1:6]]
                            + [row["status"], row["runtime_ms"]])
        text = buf.getvalue()
    elif fmt == "markdown":
        table = [CSV_HEADER] + [
            [row["id"]] + [("%.10g" % row[k]) if row[k] is not None else "nan"
                           for k in CSV_HEADER[1:6]] + [row["status"], str(row["runtime_ms"])]
            for row in rows]
        widths = [max(len(r[i]) for r in table) for i in range(len(CSV_HEADER))]
        lines = ["| " + " | ".join(c.ljust(w) for c, w in zip(r, widths)) + " |" for r in table]
        lines.insert(1, "|" + "|".join("-" * (w + 2) for w in widths) + "|")
        text = "\n".join(lines) + "\n"
    else:
        raise ValueError(f"unknown format {fmt!r}")
    return text.encode()


def parse_json_report(data):
    return [VerificationRecord.from_dict(d) for d in json.loads(data)]


def exit_code(records):
    return 1 if any(r.status is Status.FAIL for r in records) else 0
