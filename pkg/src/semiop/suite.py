"""Randomized suite runner over the check catalog.

Each (check, trial) pair gets its own counter-derived RNG stream, so a
parallel run and a serial run of the same configuration produce
bit-identical records; aggregation happens in the parent in a fixed order.
frames alternate between full rank and a random deficient rank under the
default mixed profile.
"""

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

import numpy as np

from .checks import CATALOG, TrialCtx
from .errors import ConfigError
from .radius import RadiusConfig

WORKERS_ENV = "SEMIOP_WORKERS"

RANK_PROFILES = ("full", "deficient", "mixed")

# Suite-grade radius settings: wider enclosures than the standalone
# defaults, absorbed by each check's width-aware tolerance.
SUITE_RADIUS = RadiusConfig(rel_width=1e-6, grid=256, rounds=2,
                            refine_factor=16, samples=2000, gelfand_depth=40)

# Histogram bucket edges for relative slack (slack / max(1, |lhs|, |rhs|)).
TIGHTNESS_EDGES = (0.0, 1e-12, 1e-9, 1e-6, 1e-3, 1e-1)
TIGHTNESS_LABELS = ("<0", "[0,1e-12)", "[1e-12,1e-9)", "[1e-9,1e-6)",
                    "[1e-6,1e-3)", "[1e-3,1e-1)", ">=1e-1")


@dataclass
class SuiteConfig:
    dims: tuple = (2, 3, 4, 6)
    trials: int = 500
    rank_profile: str = "mixed"
    seed: int = 20260811
    tol_scale: float = 1.0
    tol_overrides: dict = field(default_factory=dict)
    radius: RadiusConfig = SUITE_RADIUS
    samples: int = 2000
    perturb_rhs: float = 0.0
    checks: tuple = ()  # empty means the whole catalog
    workers: int = 0  # 0 means: env var, else cpu count capped at 4

    def validate(self):
        if not self.dims or any(d < 1 for d in self.dims):
            raise ConfigError("dims must be a nonempty list of counts >= 1")
        if self.trials < 0:
            raise ConfigError("trials must be >= 0")
        if self.rank_profile not in RANK_PROFILES:
            raise ConfigError(f"rank_profile must be one of {RANK_PROFILES}")
        if self.tol_scale <= 0:
            raise ConfigError("tol_scale must be positive")
        if self.samples < 1:
            raise ConfigError("samples must be >= 1")
        if self.workers < 0:
            raise ConfigError("workers must be >= 0")
        unknown = [c for c in self.checks if c not in CATALOG]
        if unknown:
            raise ConfigError(f"unknown checks: {unknown}")
        self.radius.validate()
        return self

    def to_dict(self):
        d = asdict(self)
        d["dims"] = list(self.dims)
        d["checks"] = list(self.checks)
        return d


def config_from_dict(data):
    if not isinstance(data, dict):
        raise ConfigError("suite config must be a JSON object")
    known = {f for f in SuiteConfig.__dataclass_fields__}
    unknown = set(data) - known
    if unknown:
        raise ConfigError(f"unknown config keys: {sorted(unknown)}")
    kwargs = dict(data)
    if "dims" in kwargs:
        kwargs["dims"] = tuple(int(d) for d in kwargs["dims"])
    if "checks" in kwargs:
        kwargs["checks"] = tuple(kwargs["checks"])
    if "radius" in kwargs and isinstance(kwargs["radius"], dict):
        try:
            kwargs["radius"] = RadiusConfig(**kwargs["radius"])
        except TypeError as exc:
            raise ConfigError(f"bad radius config: {exc}") from None
    try:
        cfg = SuiteConfig(**kwargs)
    except TypeError as exc:
        raise ConfigError(str(exc)) from None
    return cfg.validate()


@dataclass
class SuiteReport:
    config: dict
    checks: list  # one aggregate dict per result name
    total_trials: int
    total_failures: int
    wall_time_s: float

    def to_dict(self):
        return {
            "summary": {
                "total_trials": self.total_trials,
                "total_failures": self.total_failures,
                "result_names": len(self.checks),
                "wall_time_s": self.wall_time_s,
            },
            "config": self.config,
            "checks": self.checks,
        }


def _trial_shape(config, trial):
    """Deterministic (dim, deficient?) assignment for a trial index."""
    dim = config.dims[trial % len(config.dims)]
    if config.rank_profile == "full":
        deficient = False
    elif config.rank_profile == "deficient":
        deficient = dim > 1
    else:
        deficient = (trial % 2 == 1) and dim > 1
    return dim, deficient


def run_trial(config, check_name, trial):
    """Run one (check, trial) cell; deterministic and order-independent."""
    check_index = list(CATALOG).index(check_name)
    seq = np.random.SeedSequence(entropy=config.seed,
                                 spawn_key=(check_index, trial))
    rng = np.random.default_rng(seq)
    dim, deficient = _trial_shape(config, trial)
    rank = int(rng.integers(1, dim)) if deficient else dim
    ctx = TrialCtx(
        rng=rng, dim=dim, rank=rank, rcfg=config.radius,
        samples=config.samples, tol_scale=config.tol_scale,
        tol_overrides=config.tol_overrides, perturb=config.perturb_rhs,
        inputs={"check": check_name, "trial": trial, "dim": dim,
                "rank": rank, "seed": config.seed},
    )
    return [r.to_dict() for r in CATALOG[check_name](ctx)]


def _run_chunk(config_dict, check_name, start, stop):
    config = config_from_dict(config_dict)
    out = []
    for trial in range(start, stop):
        out.extend(run_trial(config, check_name, trial))
    return out


def _resolve_workers(config):
    if config.workers:
        return config.workers
    env = os.environ.get(WORKERS_ENV)
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise ConfigError(f"{WORKERS_ENV} must be an integer") from None
    return max(1, min(4, os.cpu_count() or 1))


def _aggregate(records):
    """Reduce per-trial records (already in deterministic order) into one
    aggregate per result name."""
    order = []
    groups = {}
    for rec in records:
        name = rec["name"]
        if name not in groups:
            order.append(name)
            groups[name] = []
        groups[name].append(rec)
    aggregates = []
    for name in order:
        recs = groups[name]
        slacks = [r["slack"] for r in recs]
        rel = [r["slack"] / max(1.0, abs(r["lhs"]), abs(r["rhs"]))
               for r in recs]
        hist = {label: 0 for label in TIGHTNESS_LABELS}
        for x in rel:
            if x < TIGHTNESS_EDGES[0]:
                hist[TIGHTNESS_LABELS[0]] += 1
                continue
            for edge, label in zip(TIGHTNESS_EDGES[1:], TIGHTNESS_LABELS[1:]):
                if x < edge:
                    hist[label] += 1
                    break
            else:
                hist[TIGHTNESS_LABELS[-1]] += 1
        failures = [r for r in recs if not r["passed"]]
        worst = min(recs, key=lambda r: r["slack"])
        aggregates.append({
            "name": name,
            "trials": len(recs),
            "failures": len(failures),
            "vacuous": sum(1 for r in recs if r["vacuous"]),
            "min_slack": min(slacks),
            "max_slack": max(slacks),
            "mean_tightness": sum(rel) / len(rel),
            "tightness_histogram": hist,
            "worst": worst,
            "failures_sample": failures[:5],
        })
    return aggregates


def run_suite(config=None):
    """Execute the catalog under a SuiteConfig and aggregate the records.

    Identical reports (up to wall time) for serial and parallel runs of the
    same seed: trial streams are counter-derived and reduction order is
    fixed.
    """
    config = (config or SuiteConfig()).validate()
    t0 = time.perf_counter()
    names = list(config.checks) if config.checks else list(CATALOG)
    records = []
    if config.trials > 0:
        workers = _resolve_workers(config)
        chunk = max(1, -(-config.trials // max(1, workers * 4)))
        spans = [(name, lo, min(lo + chunk, config.trials))
                 for name in names
                 for lo in range(0, config.trials, chunk)]
        if workers == 1:
            parts = [_run_chunk(config.to_dict(), *span) for span in spans]
        else:
            cfg_dict = config.to_dict()
            with ProcessPoolExecutor(max_workers=workers) as pool:
                futures = [pool.submit(_run_chunk, cfg_dict, *span)
                           for span in spans]
                parts = [f.result() for f in futures]
        for part in parts:
            records.extend(part)
    aggregates = _aggregate(records)
    total_failures = sum(a["failures"] for a in aggregates)
    wall = time.perf_counter() - t0
    return SuiteReport(
        config=config.to_dict(),
        checks=aggregates,
        total_trials=sum(a["trials"] for a in aggregates),
        total_failures=total_failures,
        wall_time_s=wall,
    )
