"""``verify`` command line entry point."""

import argparse
import sys
import time

from .verify import SUITES, SuiteConfig, emit_report, exit_code, run_suite

# config-file key -> (SuiteConfig field, converter)
_KEYS = {
    "suite": ("suite", str),
    "tol": ("tol", float),
    "max_terms": ("max_terms", int),
    "contour_step": ("contour_step", float),
    "t_max": ("t_max", float),
    "format": ("output_format", str),
    "workers": ("workers", int),
}


def read_config(path):
    """Flat ``key = value`` file; keys mirror the flags (dashes or underscores)."""
    out = {}
    with open(path) as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected key = value")
            key, value = (part.strip() for part in line.split("=", 1))
            key = key.lstrip("-").replace("-", "_")
            if key not in _KEYS:
                raise ValueError(f"{path}:{lineno}: unknown key {key!r}")
            field, conv = _KEYS[key]
            out[field] = conv(value)
    return out


def build_parser():
    p = argparse.ArgumentParser(prog="verify", description="Run the numerical verification suites.")
    p.add_argument("--suite", choices=sorted(SUITES))
    p.add_argument("--tol", type=float, help="override every per-check tolerance")
    p.add_argument("--max-terms", type=int, dest="max_terms", help="series truncation index K")
    p.add_argument("--contour-step", type=float, dest="contour_step", help="initial trapezoid step")
    p.add_argument("--t-max", type=float, dest="t_max", help="quadrature cut-off in sqrt(x)")
    p.add_argument("--format", choices=["json", "csv", "markdown"], dest="output_format")
    p.add_argument("--workers", type=int)
    p.add_argument("--config", help="key = value file; command-line flags take precedence")
    return p


def config_from_args(argv=None):
    args = build_parser().parse_args(argv)
    settings = read_config(args.config) if args.config else {}
    for key in ("suite", "tol", "max_terms", "contour_step", "t_max", "output_format", "workers"):
        value = getattr(args, key)
        if value is not None:
            settings[key] = value
    return SuiteConfig(**settings)


def main(argv=None):
    try:
        cfg = config_from_args(argv)
    except (ValueError, OSError) as exc:
        print(f"verify: {exc}", file=sys.stderr)
        return 2
    t0 = time.perf_counter()
    records = run_suite(cfg)
    sys.stdout.buffer.write(emit_report(records, cfg.output_format))
    sys.stdout.flush()
    failed = [r.id for r in records if r.status.value == "FAIL"]
    print(f"verify: {len(records)} checks, {len(failed)} failed, "
          f"{time.perf_counter() - t0:.1f} s", file=sys.stderr)
    for rid in failed:
        print(f"verify: FAIL {rid}", file=sys.stderr)
    return exit_code(records)


if __name__ == "__main__":
    sys.exit(main())
