"""Validity study: composite scores from arbitrary measure sets vs sample size.

Five synthetic "measures" drawn from wildly different distributions are pushed
through the full standardise-and-combine pipeline at increasing sample sizes.
Tracked per size: the Monte-Carlo KS p-value of the composite, the composite's
KS statistic, and the KS statistic of plain standard-normal samples (the
shrinking null reference the composite curve levels off against).
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from typing import Callable, Sequence

import numpy as np

from .composite import combine_set
from .gof import DEFAULT_REPLICATES, ks_p_value, ks_statistic
from .measures import MeasureVector
from .standardize import standardize

_Z95 = 1.96


@dataclass(frozen=True)
class ArbMeasureSpec:
    """Parameters of the five-distribution synthetic measure set.

    ``exponential_mu`` is read as the distribution mean by default; set
    ``exponential_mu_is_mean=False`` for the rate reading.  The log-normal
    parameters are those of the underlying normal.
    """

    uniform_low: float = 0.0
    uniform_high: float = 1.0
    normal_mean: float = 1e5
    normal_sigma: float = 1e3
    lognormal_mu: float = 2.0
    lognormal_sigma: float = 2.0
    exponential_mu: float = 1e-3
    exponential_mu_is_mean: bool = True
    pareto_xmin: float = 100.0
    pareto_alpha: float = 3.0

    def __post_init__(self) -> None:
        if not self.uniform_high > self.uniform_low:
            raise ValueError("uniform upper bound must exceed the lower bound")
        if self.normal_sigma <= 0 or self.lognormal_sigma <= 0:
            raise ValueError("sigma parameters must be positive")
        if self.exponential_mu <= 0:
            raise ValueError("exponential parameter must be positive")
        if self.pareto_xmin <= 0 or self.pareto_alpha <= 0:
            raise ValueError("Pareto parameters must be positive")


@dataclass(frozen=True)
class SizeResult:
    """Aggregates for one sample size (means with 95% confidence bands)."""

    size: int
    p_mean: float
    p_lo: float
    p_hi: float
    comp_ks_mean: float
    comp_ks_lo: float
    comp_ks_hi: float
    null_ks_mean: float
    null_ks_lo: float
    null_ks_hi: float


@dataclass(frozen=True)
class StudyResult:
    rows: tuple[SizeResult, ...]
    p_realizations: int
    stat_realizations: int
    replicates: int
    seed: int

    def __post_init__(self) -> None:
        sizes = [r.size for r in self.rows]
        if any(b <= a for a, b in zip(sizes, sizes[1:])):
            raise ValueError("sizes must be strictly increasing")
        for r in self.rows:
            if not (r.p_lo <= r.p_mean <= r.p_hi
                    and r.comp_ks_lo <= r.comp_ks_mean <= r.comp_ks_hi
                    and r.null_ks_lo <= r.null_ks_mean <= r.null_ks_hi):
                raise ValueError("confidence bands must contain their means")

    def row(self, size: int) -> SizeResult:
        for r in self.rows:
            if r.size == size:
                return r
        raise KeyError(f"size {size} not present in the study")


def sample_arb(spec: ArbMeasureSpec, n: int,
               seed: int | np.random.SeedSequence) -> list[MeasureVector]:
    """Draw the five synthetic measures, one independent stream each."""
    if n < 10:
        raise ValueError("need at least 10 samples per measure")
    root = seed if isinstance(seed, np.random.SeedSequence) else np.random.SeedSequence(seed)
    rngs = [np.random.default_rng(child) for child in root.spawn(5)]
    exp_scale = spec.exponential_mu if spec.exponential_mu_is_mean else 1.0 / spec.exponential_mu
    values = [
        rngs[0].uniform(spec.uniform_low, spec.uniform_high, n),
        rngs[1].normal(spec.normal_mean, spec.normal_sigma, n),
        rngs[2].lognormal(spec.lognormal_mu, spec.lognormal_sigma, n),
        rngs[3].exponential(exp_scale, n),
        (rngs[4].pareto(spec.pareto_alpha, n) + 1.0) * spec.pareto_xmin,
    ]
    names = ("uniform", "normal", "log-normal", "exponential", "pareto")
    return [MeasureVector(name, v, bigger_is_better=True)
            for name, v in zip(names, values)]


def sample_standard_normal_set(n: int,
                               seed: int | np.random.SeedSequence) -> list[MeasureVector]:
    """Control sampler: five i.i.d. standard-normal 'measures' (exact-null run)."""
    if n < 10:
        raise ValueError("need at least 10 samples per measure")
    root = seed if isinstance(seed, np.random.SeedSequence) else np.random.SeedSequence(seed)
    rngs = [np.random.default_rng(child) for child in root.spawn(5)]
    return [MeasureVector(f"normal-{k}", rng.standard_normal(n), bigger_is_better=True)
            for k, rng in enumerate(rngs)]


def composite_scores(measures: Sequence[MeasureVector],
                     loglik_center: str = "transformed") -> np.ndarray:
    """Standardise each measure and combine the set flat."""
    return combine_set([standardize(m, loglik_center) for m in measures]).values


def gof_vs_n_study(sizes: Sequence[int] = (100, 1_000, 10_000),
                   p_realizations: int = 10,
                   stat_realizations: int = 100,
                   replicates: int = DEFAULT_REPLICATES,
                   seed: int = 0,
                   spec: ArbMeasureSpec | None = None,
                   sampler: Callable[[int, np.random.SeedSequence],
                                     list[MeasureVector]] | None = None,
                   loglik_center: str = "transformed") -> StudyResult:
    """Run the composite-score goodness-of-fit study over sample sizes.

    Per size: ``stat_realizations`` independent composite samples feed the
    KS-statistic curve (and as many fresh standard-normal samples feed the
    null curve); the Monte-Carlo p-value, which dominates the cost, is
    evaluated on the first ``p_realizations`` composites.  Everything is
    seeded through spawn keys of (size, realization), so results are
    bit-identical for a given seed and independent of evaluation order.
    """
    if spec is None:
        spec = ArbMeasureSpec()
    if sampler is None:
        sampler = lambda n, ss: sample_arb(spec, n, ss)  # noqa: E731
    sizes = [int(n) for n in sizes]

    rows = []
    for n in sizes:
        comp_stats = np.empty(stat_realizations)
        null_stats = np.empty(stat_realizations)
        p_values = np.empty(p_realizations)
        for r in range(max(stat_realizations, p_realizations)):
            scores = composite_scores(
                sampler(n, np.random.SeedSequence(entropy=seed, spawn_key=(n, r, 0))),
                loglik_center,
            )
            if r < stat_realizations:
                comp_stats[r] = ks_statistic(scores)
                null_draw = np.random.default_rng(
                    np.random.SeedSequence(entropy=seed, spawn_key=(n, r, 2))
                ).standard_normal(n)
                null_stats[r] = ks_statistic(null_draw)
            if r < p_realizations:
                report = ks_p_value(
                    scores, replicates,
                    np.random.SeedSequence(entropy=seed, spawn_key=(n, r, 1)),
                )
                p_values[r] = report.p_value
        rows.append(SizeResult(
            size=n,
            **_band("p", p_values),
            **_band("comp_ks", comp_stats),
            **_band("null_ks", null_stats),
        ))
    return StudyResult(tuple(rows), p_realizations, stat_realizations, replicates, seed)


def max_error_estimate(study: StudyResult, n: int) -> float:
    """Upper 95% band of the composite KS statistic at size n.

    Interpreted as the maximal error when reading a tail probability for a
    composite score off the standard-normal CDF.
    """
    return study.row(n).comp_ks_hi


def _band(prefix: str, values: np.ndarray) -> dict[str, float]:
    mean = float(values.mean())
    half = float(_Z95 * values.std(ddof=1) / np.sqrt(values.size))
    return {f"{prefix}_mean": mean, f"{prefix}_lo": mean - half,
            f"{prefix}_hi": mean + half}


_CSV_COLUMNS = ("size", "p_mean", "p_lo", "p_hi", "comp_ks_mean", "comp_ks_lo",
                "comp_ks_hi", "null_ks_mean", "null_ks_lo", "null_ks_hi")


def study_to_csv(study: StudyResult) -> str:
    lines = [",".join(_CSV_COLUMNS)]
    for row in study.rows:
        rec = asdict(row)
        lines.append(",".join(repr(rec[c]) if c != "size" else str(rec[c])
                              for c in _CSV_COLUMNS))
    return "\n".join(lines) + "\n"


def study_to_json(study: StudyResult) -> str:
    doc = {
        "p_realizations": study.p_realizations,
        "stat_realizations": study.stat_realizations,
        "replicates": study.replicates,
        "seed": study.seed,
        "rows": [asdict(row) for row in study.rows],
    }
    return json.dumps(doc, indent=2) + "\n"


def study_from_json(text: str) -> StudyResult:
    doc = json.loads(text)
    rows = tuple(SizeResult(**row) for row in doc["rows"])
    return StudyResult(rows, doc["p_realizations"], doc["stat_realizations"],
                       doc["replicates"], doc["seed"])
