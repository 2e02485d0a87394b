"""Seeded experiments: configuration, per-sample statistics, and run records."""

from __future__ import annotations

import csv
import dataclasses
import hashlib
import io
import json
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from pathlib import Path
from typing import Any

import numpy as np

from . import asymptotics, density, equidist
from .angles import CONSTANTS, Angle, Interval, frac_diff_numerators
from .cycles import CycleType, EwensParams, as_fraction, cycle_type_of
from .errors import BoundError, ConfigError
from .hook import hook_irrep_grids
from .sampling import RNG_ALGORITHM, feller_cycle_lengths, sample_poisson_counts, sample_rng
from .spectra import (
    K_BOUND,
    count_in_interval,
    expected_count,
    induced_subset_cycle_type,
    induced_tuple_cycle_type,
    representation_count,
    y_statistic,
)

SUBCOMMANDS = ("sample", "moments", "density", "crossmoments", "discrepancy", "spectrum")
MODES = ("cycle-statistic", "tuple", "set", "irrep", "poissonized")
REP_MODES = ("tuple", "set", "irrep")
FORMATS = ("csv", "json")
MAX_MOMENT = 8
EXACT_CENTERING_MAX_N = 300
EXACT_CENTERING_MAX_TERMS = 200_000
SCHEMA_PATH = Path(__file__).with_name("schema") / "run_record.schema.json"

# constants that are rationally dependent on each other
_DEPENDENT = {frozenset({"sqrt5", "golden"})}


@dataclass(frozen=True)
class ExperimentConfig:
    subcommand: str = "sample"
    n: int = 1000
    k: int = 2
    theta: str = "1"
    alpha: str = "sqrt2"
    beta: str = "sqrt3"
    alpha2: str = "sqrt5"
    beta2: str = "sqrt7"
    samples: int = 1000
    seed: int = 0
    mode: str = "cycle-statistic"
    format: str = "json"
    out: str | None = None
    bins: int = 50
    workers: int = 1
    max_moment: int = MAX_MOMENT
    centering: str = "auto"
    per_sample: bool | None = None
    cycle_type: str | None = None
    perm: str | None = None
    timing: bool = False

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "ExperimentConfig":
        names = {f.name for f in dataclasses.fields(cls)}
        unknown = set(data) - names
        if unknown:
            raise ConfigError(f"unknown config keys: {', '.join(sorted(unknown))}")
        return cls(**data)

    def to_dict(self) -> dict[str, Any]:
        return dataclasses.asdict(self)

    @property
    def theta_value(self) -> Fraction:
        try:
            return as_fraction(self.theta)
        except (ValueError, ZeroDivisionError) as exc:
            raise ConfigError(f"cannot parse theta {self.theta!r}; use an integer or 'p/q'") from exc

    @property
    def interval(self) -> Interval:
        return Interval.parse(self.alpha, self.beta)

    @property
    def interval2(self) -> Interval:
        return Interval.parse(self.alpha2, self.beta2)

    @property
    def include_per_sample(self) -> bool:
        return self.subcommand == "sample" if self.per_sample is None else self.per_sample

    def validate(self) -> "ExperimentConfig":
        if self.subcommand not in SUBCOMMANDS:
            raise ConfigError(f"unknown subcommand {self.subcommand!r}; choose from {', '.join(SUBCOMMANDS)}")
        if self.mode not in MODES:
            raise ConfigError(f"unknown mode {self.mode!r}; choose from {', '.join(MODES)}")
        if self.format not in FORMATS:
            raise ConfigError(f"unknown format {self.format!r}; choose csv or json")
        for name in ("n", "k", "bins", "workers", "max_moment"):
            if not isinstance(getattr(self, name), int) or getattr(self, name) < 1:
                raise ConfigError(f"--{name.replace('_', '-')} must be a positive integer, got {getattr(self, name)!r}")
        if not isinstance(self.samples, int) or self.samples < 0:
            raise ConfigError(f"--samples must be a non-negative integer, got {self.samples!r}")
        if not isinstance(self.seed, int) or self.seed < 0 or self.seed >= 2**64:
            raise ConfigError("--seed must be an integer in [0, 2^64)")
        if self.max_moment > MAX_MOMENT:
            raise ConfigError(f"--max-moment is limited to {MAX_MOMENT}")
        if self.theta_value <= 0:
            raise ConfigError(f"theta must be positive, got {self.theta}")
        self.interval  # parses and checks alpha < beta
        if self.k > K_BOUND and self.mode in REP_MODES:
            raise BoundError(f"k={self.k} exceeds the spectrum bound {K_BOUND}")
        if self.mode in REP_MODES and self.subcommand != "spectrum" and self.k > self.n - (1 if self.mode == "irrep" else 0):
            raise ConfigError(f"k={self.k} is too large for n={self.n} in mode {self.mode}")
        if self.mode == "poissonized" and self.subcommand not in ("sample", "moments"):
            raise ConfigError("poissonized mode is available for the sample and moments subcommands")
        if self.mode in REP_MODES and self.subcommand not in ("sample", "moments", "spectrum"):
            raise ConfigError(f"mode {self.mode} is available for sample, moments and spectrum")
        if self.subcommand in ("density", "crossmoments"):
            if self.k != 2 or self.theta_value != 1:
                raise ConfigError(f"{self.subcommand} compares with the closed-form k=2, theta=1 limit; got k={self.k}, theta={self.theta}")
        if self.subcommand == "crossmoments":
            self.interval2
            ends = [self.alpha, self.beta, self.alpha2, self.beta2]
            if len({Angle.parse(e).value for e in ends}) < 4:
                raise ConfigError("the four endpoints must be distinct")
            names = {e for e in ends if e in CONSTANTS}
            for pair in _DEPENDENT:
                if pair <= names:
                    raise ConfigError(f"endpoints {' and '.join(sorted(pair))} are rationally dependent")
        if self.subcommand == "spectrum":
            if (self.cycle_type is None) == (self.perm is None):
                raise ConfigError("spectrum needs exactly one of --cycle-type or --perm")
            if self.k > self.spectrum_cycle_type().n:
                raise ConfigError(f"k={self.k} exceeds the permutation size")
        if self.centering not in ("auto", "exact", "sample-mean"):
            try:
                as_fraction(self.centering)
            except (ValueError, ZeroDivisionError) as exc:
                raise ConfigError(f"--centering must be auto, exact, sample-mean or a rational, got {self.centering!r}") from exc
        return self

    def spectrum_cycle_type(self) -> CycleType:
        """The permutation or cycle type of the spectrum subcommand; it fixes n."""
        try:
            if self.perm is not None:
                ct = cycle_type_of([int(x) for x in self.perm.replace(" ", "").split(",") if x])
            else:
                ct = CycleType.from_lengths([int(x) for x in self.cycle_type.replace(" ", "").split(",") if x])
        except ValueError as exc:
            raise ConfigError(f"cannot read the permutation or cycle type: {exc}") from exc
        return ct


@dataclass
class RunRecord:
    subcommand: str
    config: dict[str, Any]
    rng_algorithm: str
    version_hash: str
    samples: int
    moments: list[dict[str, Any]] = field(default_factory=list)
    histogram: dict[str, Any] | None = None
    targets: dict[str, Any] = field(default_factory=dict)
    tables: dict[str, Any] = field(default_factory=dict)
    centering: dict[str, Any] | None = None
    per_sample: list[dict[str, Any]] | None = None
    wall_clock_seconds: float | None = None
    schema_version: int = 1

    def to_dict(self) -> dict[str, Any]:
        return dataclasses.asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True, ensure_ascii=False) + "\n"

    def csv_table(self) -> tuple[list[str], list[list[Any]]]:
        """The main table of the record with a fixed column order per subcommand."""
        if self.per_sample is not None and self.per_sample:
            header = list(self.per_sample[0].keys())
            return header, [[row[h] for h in header] for row in self.per_sample]
        if self.subcommand in ("sample", "moments"):
            header = list(MOMENT_COLUMNS)
            return header, [[row.get(h) for h in header] for row in self.moments]
        if self.subcommand == "density":
            header = ["t", "density", "cdf"]
            return header, self.tables.get("density", [])
        if self.subcommand == "discrepancy":
            header = ["n", "star_discrepancy", "harmonic_running_max"]
            return header, [[r["n"], r["star_discrepancy"], r["harmonic_running_max"]] for r in self.tables["by_n"]]
        if self.subcommand == "spectrum":
            header = ["representation", "length", "count"]
            rows = []
            for rep in ("tuple", "subset", "irrep_grids"):
                for L, c in self.tables.get(rep, {}).get("cycle_lengths", []):
                    rows.append([rep, L, c])
            return header, rows
        header = ["key", "value"]
        return header, [[k, v] for k, v in sorted(self.targets.items())]

    def to_csv(self) -> str:
        header, rows = self.csv_table()
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
        return buf.getvalue()


MOMENT_COLUMNS = (
    "order", "empirical", "standard_error", "finite_n_target", "limit_target", "z_finite_n", "z_limit",
)


@lru_cache(maxsize=1)
def version_hash() -> str:
    """sha256 over the package sources, so records name the exact code that made them."""
    root = Path(__file__).parent
    h = hashlib.sha256()
    for path in sorted(root.rglob("*")):
        if path.suffix in (".py", ".json") and "__pycache__" not in path.parts:
            h.update(path.relative_to(root).as_posix().encode())
            h.update(path.read_bytes())
    return h.hexdigest()


def load_schema() -> dict:
    return json.loads(SCHEMA_PATH.read_text(encoding="utf-8"))


def validate_record(record: RunRecord | dict) -> None:
    import jsonschema

    data = record.to_dict() if isinstance(record, RunRecord) else record
    jsonschema.validate(json.loads(json.dumps(data)), load_schema())


# ---------------------------------------------------------------- per-sample work

class _Context:
    """Precomputed integer data shared by all samples of a run."""

    def __init__(self, cfg: ExperimentConfig):
        self.cfg = cfg
        self.n, self.k = cfg.n, cfg.k
        self.theta = cfg.theta_value
        self.params = EwensParams(cfg.n, self.theta)
        self.interval = cfg.interval
        self.U, self.D = frac_diff_numerators(self.interval, cfg.n)
        self.denom = self.D * cfg.n ** (cfg.k - 1)
        if cfg.subcommand == "crossmoments":
            self.interval2 = cfg.interval2
            self.U2, self.D2 = frac_diff_numerators(self.interval2, cfg.n)
            self.denom2 = self.D2 * cfg.n ** (cfg.k - 1)

    def numerator(self, parts, U) -> int:
        k1 = self.k - 1
        return sum(j ** k1 * c * U[j] for j, c in parts)

    def row(self, index: int) -> tuple:
        cfg = self.cfg
        rng = sample_rng(cfg.seed, index)
        if cfg.mode == "poissonized":
            counts = sample_poisson_counts(self.n, float(self.theta), rng)
            nz = np.flatnonzero(counts)
            parts = [(int(j) + 1, int(counts[j])) for j in nz]
            return (self.numerator(parts, self.U),)
        lengths = feller_cycle_lengths(self.n, float(self.theta), rng)
        ls, cs = np.unique(lengths, return_counts=True)
        parts = tuple(zip(ls.tolist(), cs.tolist()))
        s = self.numerator(parts, self.U)
        if cfg.subcommand == "crossmoments":
            return (s, self.numerator(parts, self.U2))
        if cfg.mode in REP_MODES:
            ct = CycleType(self.n, parts)
            return (s, representation_count(ct, self.k, self.interval, cfg.mode))
        return (s,)


_CONTEXTS: dict[str, _Context] = {}


def _chunk(cfg_dict: dict, start: int, stop: int) -> list[tuple]:
    key = json.dumps(cfg_dict, sort_keys=True)
    ctx = _CONTEXTS.get(key)
    if ctx is None:
        _CONTEXTS.clear()
        ctx = _CONTEXTS[key] = _Context(ExperimentConfig.from_dict(cfg_dict))
    return [ctx.row(i) for i in range(start, stop)]


def compute_rows(cfg: ExperimentConfig) -> list[tuple]:
    """Per-sample raw values, ordered by sample index whatever the worker count."""
    N = cfg.samples
    if N == 0:
        return []
    cfg_dict = cfg.to_dict()
    if cfg.workers == 1:
        return _chunk(cfg_dict, 0, N)
    size = max(1, math.ceil(N / (cfg.workers * 4)))
    bounds = [(s, min(s + size, N)) for s in range(0, N, size)]
    with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
        parts = pool.map(_chunk, [cfg_dict] * len(bounds), [b[0] for b in bounds], [b[1] for b in bounds])
        out: list[tuple] = []
        for p in parts:
            out.extend(p)
    return out


# ---------------------------------------------------------------- aggregation

def _float_moment(values: np.ndarray, m: int) -> tuple[float, float]:
    """Mean of values^m with compensated summation, and its standard error."""
    N = len(values)
    x = values ** m
    mean = math.fsum(x) / N
    if N < 2:
        return mean, None
    var = math.fsum((x - mean) ** 2) / (N - 1)
    return mean, math.sqrt(var / N)


def _exact_moment(nums: list[int], denom: int, m: int) -> tuple[Fraction, float]:
    """Exact mean of (S/denom)^m over samples, and the standard error."""
    N = len(nums)
    s1 = sum(x ** m for x in nums)
    mean = Fraction(s1, N * denom ** m)
    if N < 2:
        return mean, None
    s2 = sum(x ** (2 * m) for x in nums)
    var = (Fraction(s2, denom ** (2 * m)) - N * mean * mean) / (N - 1)
    return mean, math.sqrt(max(float(var), 0.0) / N)


def _histogram(values: np.ndarray, bins: int) -> dict[str, Any]:
    clipped = int(np.sum((values < -1) | (values > 1)))
    counts, edges = np.histogram(np.clip(values, -1.0, 1.0), bins=bins, range=(-1.0, 1.0))
    return {"edges": [float(e) for e in edges], "counts": [int(c) for c in counts], "clipped": clipped}


def _z(value: float, target: float | None, se: float) -> float | None:
    if target is None or not se:
        return None
    return (value - target) / se


def _finite_targets(cfg: ExperimentConfig, orders: range) -> dict[int, Fraction]:
    out = {}
    interval = cfg.interval
    for m in orders:
        try:
            if cfg.mode == "poissonized":
                out[m] = asymptotics.poissonized_finite_moment(cfg.n, cfg.k, cfg.theta_value, interval, m)
            elif cfg.mode == "cycle-statistic":
                out[m] = asymptotics.finite_n_moment(cfg.n, cfg.k, cfg.theta_value, interval, m)
        except BoundError:
            continue
    return out


def _limit_targets(cfg: ExperimentConfig, max_m: int) -> dict[int, Fraction]:
    if cfg.k < 2:
        return {}
    if cfg.mode == "poissonized":
        moments = asymptotics.poissonized_moments(cfg.k, cfg.theta_value, max_m)
        return dict(enumerate(moments))
    table = asymptotics.limiting_moments(cfg.k, cfg.theta_value, max_m)
    return dict(enumerate(table.moments))


def _resolve_centering(cfg: ExperimentConfig, xs: np.ndarray, ys_num: list[int], ctx_denom: int) -> dict[str, Any]:
    """Centering value for X in the representation modes.

    Exact expectation by Watterson summation when affordable. Otherwise the
    sample mean of X - n^(k-1) Y_{n,k} / scale plus the exact n^(k-1) E[Y_{n,k}] / scale:
    an unbiased estimate of E[X] with Y_{n,k} as control variate.
    """
    scale = 1 if cfg.mode == "tuple" else math.factorial(cfg.k)
    policy = cfg.centering
    if policy not in ("auto", "exact", "sample-mean"):
        return {"policy": "explicit", "value": str(as_fraction(policy)), "value_float": float(as_fraction(policy))}
    if policy in ("auto", "exact") and (cfg.n <= EXACT_CENTERING_MAX_N or policy == "exact"):
        try:
            e = expected_count(cfg.n, cfg.k, cfg.theta_value, cfg.interval, cfg.mode, EXACT_CENTERING_MAX_TERMS)
            return {"policy": "exact", "value": str(e), "value_float": float(e)}
        except BoundError:
            if policy == "exact":
                raise
    if len(xs) == 0:
        return {"policy": "sample-mean", "value": None, "value_float": None}
    nk = cfg.n ** (cfg.k - 1)
    ey = asymptotics.finite_n_moment(cfg.n, cfg.k, cfg.theta_value, cfg.interval, 1, max_n=10**7)
    exact_sum = Fraction(int(np.sum(xs.astype(object))) * scale * ctx_denom - nk * sum(ys_num), ctx_denom * scale)
    c = exact_sum / len(xs) + nk * ey / scale
    return {"policy": "sample-mean", "control_variate": "y_statistic", "value": str(c), "value_float": float(c)}


def _moment_rows(cfg, values, exact=None, finite=None, limit=None) -> list[dict[str, Any]]:
    rows = []
    for m in range(1, cfg.max_moment + 1):
        if exact is not None:
            mean_exact, se = _exact_moment(exact[0], exact[1], m)
            emp = float(mean_exact)
        else:
            emp, se = _float_moment(values, m)
        ft = float(finite[m]) if finite and m in finite else None
        lt = float(limit[m]) if limit and m in limit else None
        rows.append({
            "order": m,
            "empirical": emp,
            "standard_error": se,
            "finite_n_target": ft,
            "limit_target": lt,
            "z_finite_n": _z(emp, ft, se),
            "z_limit": _z(emp, lt, se),
        })
    return rows


def _for_command(cfg: ExperimentConfig, name: str) -> ExperimentConfig:
    if cfg.subcommand != name:
        cfg = dataclasses.replace(cfg, subcommand=name)
    return cfg.validate()


def _base_record(cfg: ExperimentConfig) -> RunRecord:
    return RunRecord(
        subcommand=cfg.subcommand,
        config=cfg.to_dict(),
        rng_algorithm=RNG_ALGORITHM,
        version_hash=version_hash(),
        samples=cfg.samples,
    )


def _statistic_samples(cfg: ExperimentConfig):
    ctx = _Context(cfg)
    rows = compute_rows(cfg)
    nums = [r[0] for r in rows]
    ys = np.array([s / ctx.denom for s in nums], dtype=np.float64)
    return ctx, rows, nums, ys


def cmd_sample(cfg: ExperimentConfig) -> RunRecord:
    cfg = _for_command(cfg, "sample")
    rec = _base_record(cfg)
    ctx, rows, nums, ys = _statistic_samples(cfg)
    if cfg.mode in REP_MODES:
        xs = np.array([r[1] for r in rows], dtype=np.int64)
        cent = _resolve_centering(cfg, xs, nums, ctx.denom)
        rec.centering = cent
        scale = 1 if cfg.mode == "tuple" else math.factorial(cfg.k)
        nk = cfg.n ** (cfg.k - 1)
        c = cent["value_float"]
        ymode = scale * (xs - c) / nk if len(xs) else np.zeros(0)
        delta = ymode - ys
        if len(ys):
            mean_abs, se_abs = _float_moment(np.abs(delta), 1)
            rec.targets["mean_abs_delta"] = mean_abs
            rec.targets["mean_abs_delta_se"] = se_abs
            rec.targets["max_abs_delta"] = float(np.max(np.abs(delta)))
        values = ymode
        if cfg.include_per_sample:
            rec.per_sample = [
                {"index": i, "y": float(y), "x": int(x), "y_mode": float(v), "delta": float(d)}
                for i, (y, x, v, d) in enumerate(zip(ys, xs, ymode, delta))
            ]
    else:
        values = ys
        if cfg.include_per_sample:
            rec.per_sample = [{"index": i, "y": float(y)} for i, y in enumerate(ys)]
    if len(values):
        rec.targets["max_abs_value"] = float(np.max(np.abs(values)))
        rec.histogram = _histogram(values, cfg.bins)
        rec.moments = _moment_rows(cfg, values, exact=(nums, ctx.denom) if cfg.mode in ("cycle-statistic", "poissonized") else None)
    else:
        rec.histogram = _histogram(np.zeros(0), cfg.bins)
    return rec


def cmd_moments(cfg: ExperimentConfig) -> RunRecord:
    cfg = _for_command(cfg, "moments")
    rec = cmd_sample(dataclasses.replace(cfg, per_sample=cfg.per_sample if cfg.per_sample is not None else False))
    rec.subcommand = "moments"
    rec.config = cfg.to_dict()
    finite = _finite_targets(cfg, range(1, cfg.max_moment + 1))
    limit = _limit_targets(cfg, cfg.max_moment)
    for row in rec.moments:
        m = row["order"]
        row["finite_n_target"] = float(finite[m]) if m in finite else None
        row["limit_target"] = float(limit[m]) if m in limit else None
        row["z_finite_n"] = _z(row["empirical"], row["finite_n_target"], row["standard_error"])
        row["z_limit"] = _z(row["empirical"], row["limit_target"], row["standard_error"])
    rec.targets["finite_n_exact"] = {str(m): str(v) for m, v in finite.items()}
    rec.targets["limit_exact"] = {str(m): str(limit[m]) for m in range(1, cfg.max_moment + 1) if m in limit}
    return rec


def cmd_density(cfg: ExperimentConfig) -> RunRecord:
    cfg = _for_command(cfg, "density")
    rec = _base_record(cfg)
    grid_points = cfg.bins + 1
    rec.tables["density"] = [list(row) for row in density.density_table(grid_points)]
    rec.targets["density_at_zero"] = density.density_p(0.0)
    rec.targets["cdf_at_one"] = float(density.cdf_interp(1.0))
    rec.targets["total_mass"] = density.density_moment(0)
    if cfg.samples:
        ctx, rows, nums, ys = _statistic_samples(cfg)
        rec.targets["ks_distance"] = density.ks_distance(ys)
        rec.histogram = _histogram(ys, cfg.bins)
        rec.moments = _moment_rows(cfg, ys, exact=(nums, ctx.denom), limit=_limit_targets(cfg, cfg.max_moment))
    return rec


def cmd_crossmoments(cfg: ExperimentConfig) -> RunRecord:
    cfg = _for_command(cfg, "crossmoments")
    rec = _base_record(cfg)
    prod_target, joint_target = asymptotics.cross_moment_targets()
    rec.targets["product_of_seconds_target"] = float(prod_target)
    rec.targets["joint_fourth_target"] = float(joint_target)
    N = cfg.samples
    if N < 2:
        return rec
    ctx = _Context(cfg)
    rows = compute_rows(cfg)
    y1 = np.array([r[0] / ctx.denom for r in rows])
    y2 = np.array([r[1] / ctx.denom2 for r in rows])
    a, b = y1 ** 2, y2 ** 2
    ma, mb = math.fsum(a) / N, math.fsum(b) / N
    ab = a * b
    mab = math.fsum(ab) / N
    da, db = a - ma, b - mb
    var_a = math.fsum(da ** 2) / (N - 1)
    var_b = math.fsum(db ** 2) / (N - 1)
    cov_ab = math.fsum(da * db) / (N - 1)
    prod = ma * mb
    prod_se = math.sqrt(max(mb ** 2 * var_a + ma ** 2 * var_b + 2 * ma * mb * cov_ab, 0.0) / N)
    joint_se = math.sqrt(math.fsum((ab - mab) ** 2) / (N - 1) / N)
    influence = da * db - cov_ab
    cov_se = math.sqrt(math.fsum(influence ** 2) / (N - 1) / N)
    rec.targets.update({
        "second_moment_1": ma,
        "second_moment_2": mb,
        "product_of_seconds": prod,
        "product_of_seconds_se": prod_se,
        "product_of_seconds_z": (prod - float(prod_target)) / prod_se if prod_se else None,
        "joint_fourth": mab,
        "joint_fourth_se": joint_se,
        "joint_fourth_z": (mab - float(joint_target)) / joint_se if joint_se else None,
        "covariance_of_squares": cov_ab,
        "covariance_of_squares_se": cov_se,
        "covariance_of_squares_z": cov_ab / cov_se if cov_se else None,
        "correlation_of_squares": cov_ab / math.sqrt(var_a * var_b) if var_a and var_b else None,
    })
    if cfg.include_per_sample:
        rec.per_sample = [{"index": i, "y1": float(u), "y2": float(v)} for i, (u, v) in enumerate(zip(y1, y2))]
    rec.histogram = _histogram(y1, cfg.bins)
    return rec


def cmd_discrepancy(cfg: ExperimentConfig) -> RunRecord:
    cfg = _for_command(cfg, "discrepancy")
    rec = _base_record(cfg)
    alpha, beta = cfg.interval.alpha, cfg.interval.beta
    ns = [10 ** e for e in range(2, 7) if 10 ** e <= cfg.n]
    if not ns or ns[-1] != cfg.n:
        ns.append(cfg.n)
    harmonic = equidist.bounded_harmonic_sum(alpha, beta, cfg.n)
    by_n = []
    for n in ns:
        pts = equidist.FracSequence(alpha, n).floats()
        by_n.append({
            "n": n,
            "star_discrepancy": equidist.discrepancy_1d(pts),
            "harmonic_running_max": float(harmonic.running_max[n - 1]),
        })
    rec.tables["by_n"] = by_n
    n2 = min(cfg.n, 10**5)
    pts2 = np.stack([equidist.FracSequence(alpha, n2).floats(), equidist.FracSequence(beta, n2).floats()], axis=1)
    d2 = equidist.discrepancy_2d(pts2, 256)
    rec.tables["discrepancy_2d"] = {"n": n2, "lower": d2.lower, "upper": d2.upper, "resolution": d2.resolution}
    means = equidist.power_mean_table(alpha, beta, cfg.n, [2, 3, 4], [2, 3])
    rows = []
    for key, value in means.items():
        if key[0] == "empirical":
            target = equidist.empirical_power_limit(key[1])
            rows.append({"kind": "empirical", "m": key[1], "k": None, "value": value, "limit": float(target)})
        else:
            target = equidist.weighted_power_limit(key[1], key[2])
            rows.append({"kind": "weighted", "m": key[1], "k": key[2], "value": value, "limit": float(target)})
    rec.tables["power_means"] = rows
    rec.targets["harmonic_final"] = harmonic.final
    rec.targets["harmonic_running_max"] = harmonic.max
    return rec


def cmd_spectrum(cfg: ExperimentConfig) -> RunRecord:
    cfg = _for_command(cfg, "spectrum")
    ct = cfg.spectrum_cycle_type()
    cfg = dataclasses.replace(cfg, n=ct.n)
    rec = _base_record(cfg)
    rec.samples = 0
    interval = cfg.interval
    k = cfg.k
    want = REP_MODES if cfg.mode not in REP_MODES else (cfg.mode,)
    rec.tables["cycle_type"] = [[j, c] for j, c in ct.parts]
    rec.targets["y_statistic"] = str(y_statistic(ct, k, interval))
    if "tuple" in want:
        induced = induced_tuple_cycle_type(ct, k)
        rec.tables["tuple"] = {"total": induced.total, "cycle_lengths": [[L, c] for L, c in induced.parts],
                               "interval_count": count_in_interval(induced, interval)}
    if "set" in want:
        induced = induced_subset_cycle_type(ct, k)
        rec.tables["subset"] = {"total": induced.total, "cycle_lengths": [[L, c] for L, c in induced.parts],
                                "interval_count": count_in_interval(induced, interval)}
    if "irrep" in want and k <= ct.n - 1:
        grids = hook_irrep_grids(ct, k)
        rec.tables["irrep_grids"] = {"total": math.comb(ct.n - 1, k),
                                     "cycle_lengths": [[M, c] for M, c in sorted(grids.items())],
                                     "interval_count": sum(c * interval.cycle_count(M) for M, c in grids.items())}
    return rec


COMMANDS = {
    "sample": cmd_sample,
    "moments": cmd_moments,
    "density": cmd_density,
    "crossmoments": cmd_crossmoments,
    "discrepancy": cmd_discrepancy,
    "spectrum": cmd_spectrum,
}


def run(cfg: ExperimentConfig) -> RunRecord:
    start = time.perf_counter()
    rec = COMMANDS[cfg.subcommand](cfg)
    if cfg.timing:
        rec.wall_clock_seconds = time.perf_counter() - start
    return rec
