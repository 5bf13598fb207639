"""Command-line front end.

Subcommands::

    simulate  --config CFG [--seed S] [--threads N] [--out samples.csv]
    test      --config CFG [--samples samples.csv] [--seed S] [--threads N] [--out report.json]
    xcheck    --config CFG [--seed S] [--threads N] [--out report.json]
    tabulate  --alpha A --y Y1,Y2,... [--out table.csv]
    selftest  [--threads N]

Exit codes: 0 pass, 1 statistical rejection, 2 configuration/guard/data
error, 3 I/O error, 4 capacity error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field, replace
from typing import Sequence

import numpy as np

from . import limitlaw
from .ensemble import EnsembleSpec, validate_spec
from .errors import (CapacityError, DataError, DomainError, GinibreError, GuardError,
                     LengthError, ParseError, ShapeError, SizeError, ValidationError)
from .limitlaw import Regime, RegimeKind
from .matrix_sampler import FULL_SOLVER_CAP, sample_batch_direct
from .repr_sampler import log_radii, sample_batch_repr
from .specfun import LimitLaw, phi_alpha_cdf
from .stats import ks_one_sample, ks_two_sample

EXIT_OK, EXIT_REJECT, EXIT_CONFIG, EXIT_IO, EXIT_CAPACITY = 0, 1, 2, 3, 4

ESTIMATORS = ("representation", "direct-full", "direct-power")
REGIMES = ("auto", "alpha-zero", "alpha-finite", "alpha-infinite")
STATISTICS = ("theorem1", "theorem2a", "theorem2b")
CSV_HEADER = "replicate,log_radius"
# replicate-index lane of the direct sampler in xcheck
DIRECT_LANE = 1 << 32


@dataclass(frozen=True)
class RunConfig:
    dims: tuple[int, ...]
    replicates: int = 5000
    root_seed: int = 0
    estimator: str = "representation"
    regime: str = "auto"
    alpha: float | None = None
    statistic: str = "theorem1"
    ks_level: float = 0.01
    output_path: str | None = None
    spec: EnsembleSpec = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "spec", validate_spec(self.dims))


_KEYS = {"dims", "replicates", "seed", "estimator", "regime", "alpha",
         "statistic", "ks_level", "output_path"}


def parse_config(text: str) -> RunConfig:
    """Parse a JSON run configuration; unknown keys are errors."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    if not isinstance(doc, dict):
        raise ParseError("config must be a JSON object")
    unknown = sorted(set(doc) - _KEYS)
    if unknown:
        raise ParseError(f"unknown field(s): {', '.join(unknown)}")
    if "dims" not in doc:
        raise ParseError("field 'dims' is required")

    def get(key, kind, default):
        if key not in doc or doc[key] is None:
            return default
        value = doc[key]
        if kind is int and (isinstance(value, bool) or not isinstance(value, int)):
            raise ParseError(f"field '{key}' must be an integer")
        if kind is float and (isinstance(value, bool) or not isinstance(value, (int, float))):
            raise ParseError(f"field '{key}' must be a number")
        if kind is str and not isinstance(value, str):
            raise ParseError(f"field '{key}' must be a string")
        return kind(value)

    dims = doc["dims"]
    if not isinstance(dims, list) or not all(
            isinstance(d, int) and not isinstance(d, bool) for d in dims):
        raise ParseError("field 'dims' must be a list of integers")
    kwargs = dict(
        replicates=get("replicates", int, 5000),
        root_seed=get("seed", int, 0),
        estimator=get("estimator", str, "representation"),
        regime=get("regime", str, "auto"),
        alpha=get("alpha", float, None),
        statistic=get("statistic", str, "theorem1"),
        ks_level=get("ks_level", float, 0.01),
        output_path=get("output_path", str, None),
    )
    for key, allowed in (("estimator", ESTIMATORS), ("regime", REGIMES),
                         ("statistic", STATISTICS)):
        if kwargs[key] not in allowed:
            raise ParseError(f"field '{key}' must be one of {', '.join(allowed)}")
    if kwargs["replicates"] < 1:
        raise ValidationError("replicates must be >= 1")
    if not 0.0 < kwargs["ks_level"] < 1.0:
        raise ValidationError("ks_level must lie in (0, 1)")
    if not 0 <= kwargs["root_seed"] < 1 << 64:
        raise ValidationError("seed must be an unsigned 64-bit integer")
    if kwargs["alpha"] is not None and kwargs["regime"] not in ("auto", "alpha-finite"):
        raise ValidationError("alpha can only be given with regime auto or alpha-finite")
    try:
        return RunConfig(dims=tuple(dims), **kwargs)
    except (ShapeError, LengthError) as exc:
        raise ValidationError(str(exc)) from exc


def resolve_regime(config: RunConfig) -> Regime:
    spec = config.spec
    if config.regime == "alpha-zero":
        declared = Regime.zero()
    elif config.regime == "alpha-infinite":
        declared = Regime.infinite()
    elif config.regime == "alpha-finite" or config.alpha is not None:
        declared = Regime.finite(config.alpha if config.alpha is not None else spec.delta_n)
    else:
        declared = None
    return limitlaw.regime_of(spec, declared)


def simulate_samples(config: RunConfig, threads: int = 1, shape_shift: int = 0):
    spec = config.spec
    if config.estimator == "representation":
        return sample_batch_repr(spec, config.replicates, config.root_seed,
                                 threads=threads, shape_shift=shape_shift)
    method = "full" if config.estimator == "direct-full" else "power"
    return sample_batch_direct(spec, config.replicates, config.root_seed,
                               method=method, threads=threads)


def standardized(config: RunConfig, values: np.ndarray) -> tuple[np.ndarray, LimitLaw]:
    """Map raw log radii to the chosen statistic and its limit law."""
    spec = config.spec
    if config.statistic == "theorem1":
        regime = resolve_regime(config)
        norms = limitlaw.normalizers_theorem1(spec, regime)
        return limitlaw.standardize_theorem1(values, norms), regime.limit_law()
    if config.statistic == "theorem2a":
        if not spec.delta_n < 1:
            raise GuardError(f"theorem2a requires delta_n < 1, got {spec.delta_n:g}")
        consts = limitlaw.gumbel_constants_theorem2a(spec)
        return limitlaw.standardize_theorem2a(values, consts), LimitLaw.gumbel()
    regime = resolve_regime(config)
    if regime.kind is not RegimeKind.ALPHA_FINITE:
        raise GuardError(f"theorem2b requires a finite alpha regime, got {regime.kind.value}")
    law = limitlaw.radial_law_theorem2b(regime.alpha)
    return limitlaw.radial_statistic(values, spec), law


def format_samples_csv(samples) -> str:
    lines = [CSV_HEADER]
    lines += [f"{s.replicate_index},{s.log_radius:.17g}" for s in samples]
    return "\n".join(lines) + "\n"


def parse_samples_csv(text: str) -> np.ndarray:
    lines = text.splitlines()
    if not lines or lines[0].strip() != CSV_HEADER:
        raise DataError(f"samples file must start with header '{CSV_HEADER}'")
    values = []
    for lineno, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        parts = line.split(",")
        try:
            if len(parts) != 2:
                raise ValueError
            int(parts[0])
            values.append(float(parts[1]))
        except ValueError:
            raise DataError(f"line {lineno}: malformed row {line!r}") from None
    values = np.array(values, dtype=float)
    if np.isnan(values).any():
        raise DataError("samples file contains NaN log radii")
    return values


def format_report(config: RunConfig, law_name: str, statistic_name: str, report) -> str:
    doc = {
        "law": law_name,
        "statistic_name": statistic_name,
        "ks_statistic": report.statistic,
        "p_value": report.p_value,
        "n_samples": report.n1,
        "seed": config.root_seed,
        "dims": list(config.dims),
    }
    return json.dumps(doc, indent=2) + "\n"


def cmd_simulate(config: RunConfig, threads: int = 1) -> str:
    return format_samples_csv(simulate_samples(config, threads))


def cmd_test(config: RunConfig, samples_text: str | None = None, threads: int = 1):
    """Return ``(report_json, passed)``."""
    if samples_text is None:
        values = log_radii(simulate_samples(config, threads))
    else:
        values = parse_samples_csv(samples_text)
    stat, law = standardized(config, values)
    report = ks_one_sample(stat, law.cdf, law_description=law.describe())
    return format_report(config, law.describe(), config.statistic, report), \
        report.p_value >= config.ks_level


def cmd_xcheck(config: RunConfig, threads: int = 1, shape_shift: int = 0):
    """Two-sample KS of the Gamma representation against direct eigenvalues."""
    spec = config.spec
    if spec.n > FULL_SOLVER_CAP:
        raise SizeError(f"xcheck needs n <= {FULL_SOLVER_CAP}, got n = {spec.n}")
    n = config.replicates
    rep = sample_batch_repr(spec, n, config.root_seed, threads=threads,
                            shape_shift=shape_shift)
    direct = sample_batch_direct(spec, n, config.root_seed, method="full",
                                 threads=threads, index_offset=DIRECT_LANE)
    name = "two-sample: representation vs direct-full"
    report = ks_two_sample(log_radii(rep), log_radii(direct), law_description=name)
    return format_report(config, name, "xcheck", report), report.p_value >= config.ks_level


def cmd_tabulate(alpha: float, y_grid: Sequence[float]) -> str:
    if not alpha >= 1e-6:
        raise DomainError(f"alpha = {alpha} below 1e-6")
    lines = ["y,phi_alpha"]
    for y in y_grid:
        lines.append(f"{y:g},{phi_alpha_cdf(float(y), alpha):.6f}")
    return "\n".join(lines) + "\n"


def _read(path: str) -> str:
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _emit(text: str, path: str | None):
    if path is None:
        sys.stdout.write(text)
        sys.stdout.flush()
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _parse_grid(text: str) -> list[float]:
    text = text.strip()
    if not text:
        return []
    try:
        return [float(tok) for tok in text.split(",")]
    except ValueError:
        raise ParseError(f"bad y grid {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ginibre-radius",
        description="Spectral radii of products of rectangular complex Ginibre matrices.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, config=True):
        if config:
            p.add_argument("--config", required=True, help="JSON run configuration")
            p.add_argument("--seed", type=int, help="override the config seed")
        p.add_argument("--threads", type=int, default=1, help="worker threads (speed only)")
        p.add_argument("--out", help="output file (default: stdout)")

    common(sub.add_parser("simulate", help="write log-radius samples as CSV"))
    p = sub.add_parser("test", help="KS test of the standardized statistic")
    common(p)
    p.add_argument("--samples", help="CSV from `simulate`; simulate afresh if omitted")
    p = sub.add_parser("xcheck", help="representation vs direct two-sample KS")
    common(p)
    p.add_argument("--shape-shift", type=int, default=0, help=argparse.SUPPRESS)
    p = sub.add_parser("tabulate", help="tabulate Phi_alpha on a grid")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--y", default="", help="comma-separated grid of y values")
    p.add_argument("--out")
    p = sub.add_parser("selftest", help="run the built-in invariant checks")
    p.add_argument("--threads", type=int, default=1)
    return parser


def _load_config(args) -> RunConfig:
    config = parse_config(_read(args.config))
    if args.seed is not None:
        if not 0 <= args.seed < 1 << 64:
            raise ValidationError("seed must be an unsigned 64-bit integer")
        config = replace(config, root_seed=args.seed)
    return config


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    threads = max(1, getattr(args, "threads", 1))
    try:
        if args.command == "selftest":
            from .selftest import run_selftest
            return EXIT_OK if run_selftest(threads=threads) else EXIT_REJECT
        if args.command == "tabulate":
            _emit(cmd_tabulate(args.alpha, _parse_grid(args.y)), args.out)
            return EXIT_OK
        config = _load_config(args)
        if args.command == "simulate":
            _emit(cmd_simulate(config, threads), args.out or config.output_path)
            return EXIT_OK
        if args.command == "test":
            samples = _read(args.samples) if args.samples else None
            text, passed = cmd_test(config, samples, threads)
        else:
            text, passed = cmd_xcheck(config, threads, args.shape_shift)
        _emit(text, args.out)
        return EXIT_OK if passed else EXIT_REJECT
    except (CapacityError, OverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except (GinibreError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
