"""Edge-list ingestion, the end-to-end analysis pipeline and report persistence.

Input format: UTF-8 CSV with header ``source,target,weight``, one directed
edge per line.  Threshold factors come from a ``year,factor`` CSV.  Reports
serialize to JSON deterministically (a fixed key order and plain float reprs),
so identical seeds give byte-identical files.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import __version__
from .composite import (
    BUILTIN_SCHEME_IDS,
    GenerationScore,
    GenerationScores,
    InheritanceScheme,
    builtin_scheme,
    load_scheme,
    run_scheme,
)
from .gof import GoFReport, anderson_darling, ks_p_value
from .graph import GraphSummary, build_graph, largest_scc, threshold_graph
from .measures import MeasureVector, eigenvector_centrality, standard_measure_set, summarize
from .standardize import standardize

MEASURE_SETS = ("sf", "alt")
# documented default edge threshold for trade-style (currency-denominated)
# inputs, in the weight unit of the final observation year
DEFAULT_TRADE_THRESHOLD = 1e7


class EdgeListError(ValueError):
    """Malformed edge-list or factor file; messages carry the line number."""


def parse_edge_list(path: str) -> list[tuple[str, str, float]]:
    """Read labelled edges from a ``source,target,weight`` CSV."""
    with open(path, encoding="utf-8") as fh:
        lines = fh.read().splitlines()
    if not lines or [c.strip() for c in lines[0].split(",")] != ["source", "target", "weight"]:
        raise EdgeListError(f"{path}: line 1: expected header 'source,target,weight'")
    edges: list[tuple[str, str, float]] = []
    seen: set[tuple[str, str]] = set()
    for lineno, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        parts = [c.strip() for c in line.split(",")]
        if len(parts) != 3:
            raise EdgeListError(f"{path}: line {lineno}: expected 3 columns, got {len(parts)}")
        src, dst, raw_w = parts
        if not src or not dst:
            raise EdgeListError(f"{path}: line {lineno}: empty node label")
        if src == dst:
            raise EdgeListError(f"{path}: line {lineno}: self-loop on {src!r}")
        try:
            w = float(raw_w)
        except ValueError:
            raise EdgeListError(f"{path}: line {lineno}: non-numeric weight {raw_w!r}") from None
        if not np.isfinite(w) or w <= 0.0:
            raise EdgeListError(f"{path}: line {lineno}: non-positive weight {raw_w!r}")
        if (src, dst) in seen:
            raise EdgeListError(f"{path}: line {lineno}: duplicate edge {src!r}->{dst!r}")
        seen.add((src, dst))
        edges.append((src, dst, w))
    return edges


def load_factors(path: str) -> dict[int, float]:
    """Read per-year threshold multipliers from a ``year,factor`` CSV."""
    with open(path, encoding="utf-8") as fh:
        lines = fh.read().splitlines()
    if not lines or [c.strip() for c in lines[0].split(",")] != ["year", "factor"]:
        raise EdgeListError(f"{path}: line 1: expected header 'year,factor'")
    factors: dict[int, float] = {}
    for lineno, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        parts = [c.strip() for c in line.split(",")]
        if len(parts) != 2:
            raise EdgeListError(f"{path}: line {lineno}: expected 2 columns")
        try:
            year = int(parts[0])
            factor = float(parts[1])
        except ValueError:
            raise EdgeListError(f"{path}: line {lineno}: bad year/factor pair") from None
        if factor <= 0.0:
            raise EdgeListError(f"{path}: line {lineno}: factor must be positive")
        factors[year] = factor
    return factors


def adjust_threshold(base: float, factor: float) -> float:
    """Scale a base edge threshold by a per-year growth factor."""
    if base <= 0.0 or factor <= 0.0:
        raise ValueError("threshold and factor must be positive")
    return base * factor


def factor_for_year(factors: dict[int, float], year: int) -> float:
    if year not in factors:
        raise EdgeListError(f"no factor recorded for year {year}")
    return factors[year]


@dataclass(frozen=True)
class AnalysisReport:
    """Everything one pipeline run produced, in node-label order."""

    source: str
    year: int | None
    threshold: float
    measure_set: str
    scheme_id: str
    seed: int
    replicates: int
    version: str
    labels: tuple[str, ...]
    summary: GraphSummary
    raw_measures: tuple[MeasureVector, ...]
    replaced_measure: str | None
    generations: GenerationScores
    gof: tuple[GoFReport, ...]


def resolve_scheme(scheme: str | InheritanceScheme) -> InheritanceScheme:
    if isinstance(scheme, InheritanceScheme):
        return scheme
    if scheme in BUILTIN_SCHEME_IDS:
        return builtin_scheme(scheme)
    return load_scheme(scheme)


def analyze(edges_path: str,
            e_th: float,
            scheme: str | InheritanceScheme = "drt",
            measure_set: str = "sf",
            seed: int = 0,
            replicates: int = 10_000,
            year: int | None = None,
            g1_override: Sequence[MeasureVector] | None = None) -> AnalysisReport:
    """Full pipeline: threshold, LSCC, measures, standardise, scheme, GoF.

    ``measure_set="alt"`` replaces the G1 measure with the lowest Monte-Carlo
    KS p-value by eigenvector centrality (leaf renamed to "EC" in the scheme).
    ``g1_override`` is a testing hook that injects raw G1 vectors in place of
    the graph-derived measure set; the rest of the pipeline is unchanged.
    """
    if measure_set not in MEASURE_SETS:
        raise ValueError(f"measure_set must be one of {MEASURE_SETS}")
    scheme_obj = resolve_scheme(scheme)

    edges = parse_edge_list(edges_path)
    full = build_graph(edges)
    lsctg = largest_scc(threshold_graph(full, e_th))
    summary = summarize(lsctg, full=full)

    if g1_override is not None:
        raw = list(g1_override)
        for m in raw:
            if m.values.shape != (lsctg.n,):
                raise ValueError(f"override measure {m.name!r} length != node count")
    else:
        raw = standard_measure_set(lsctg)

    replaced: str | None = None
    if measure_set == "alt":
        candidates = [standardize(m) for m in raw]
        p_values = []
        for k, sm in enumerate(candidates):
            rep = ks_p_value(sm.values, replicates,
                             np.random.SeedSequence(entropy=seed, spawn_key=(1, k)))
            p_values.append(rep.p_value)
        worst = int(np.argmin(p_values))
        replaced = raw[worst].name
        raw[worst] = eigenvector_centrality(lsctg)
        scheme_obj = scheme_obj.rename_leaf(replaced, "EC")

    g1 = [standardize(m) for m in raw]
    generations = run_scheme(scheme_obj, g1)

    gof: list[GoFReport] = []
    ordered = _report_order(generations)
    for k, node in enumerate(ordered):
        gof.append(_named(ks_p_value(
            node.values, replicates,
            np.random.SeedSequence(entropy=seed, spawn_key=(2, k)),
        ), node.name, seed))
    gof.append(_named(anderson_darling(generations.root().values),
                      generations.root().name, None))

    return AnalysisReport(
        source=edges_path,
        year=year,
        threshold=float(e_th),
        measure_set=measure_set,
        scheme_id=scheme_obj.scheme_id,
        seed=seed,
        replicates=replicates,
        version=__version__,
        labels=lsctg.labels,
        summary=summary,
        raw_measures=tuple(raw),
        replaced_measure=replaced,
        generations=generations,
        gof=tuple(gof),
    )


def _report_order(generations: GenerationScores) -> list[GenerationScore]:
    """Root generation first, preorder within a generation (NGFP column order)."""
    ordered: list[GenerationScore] = []
    for gen in generations.generations():
        ordered.extend(generations.by_generation(gen))
    return ordered


def _named(report: GoFReport, measure: str, seed: int | None) -> GoFReport:
    return GoFReport(
        test_name=f"{report.test_name}:{measure}",
        statistic=report.statistic,
        p_value=report.p_value,
        replicates=report.replicates,
        seed=seed,
        decision=report.decision,
    )


def report_to_dict(report: AnalysisReport) -> dict:
    return {
        "meta": {
            "source": report.source,
            "year": report.year,
            "threshold": report.threshold,
            "measure_set": report.measure_set,
            "scheme": report.scheme_id,
            "seed": report.seed,
            "replicates": report.replicates,
            "version": report.version,
        },
        "summary": {
            "n": report.summary.n,
            "n_edges": report.summary.n_edges,
            "diameter": report.summary.diameter,
            "mean_aspl": report.summary.mean_aspl,
            "mean_maxflow": report.summary.mean_maxflow,
            "mean_degree": report.summary.mean_degree,
            "mean_strength": report.summary.mean_strength,
            "asymmetry": report.summary.asymmetry,
            "edge_density": report.summary.edge_density,
            "mean_clustering": report.summary.mean_clustering,
            "algebraic_connectivity": report.summary.algebraic_connectivity,
            "assortativity": report.summary.assortativity,
            "coverage": report.summary.coverage,
        },
        "nodes": list(report.labels),
        "raw_measures": [
            {"name": m.name, "bigger_is_better": m.bigger_is_better,
             "values": m.values.tolist()}
            for m in report.raw_measures
        ],
        "replaced_measure": report.replaced_measure,
        "generations": [
            {"name": g.name, "generation": g.generation,
             "values": g.values.tolist(),
             "display_heights": g.display_heights.tolist()}
            for g in _report_order(report.generations)
        ],
        "gof": [
            {"test": r.test_name, "statistic": r.statistic, "p_value": r.p_value,
             "replicates": r.replicates, "seed": r.seed, "decision": r.decision}
            for r in report.gof
        ],
    }


def report_to_json(report: AnalysisReport) -> str:
    return json.dumps(report_to_dict(report), indent=2) + "\n"


def report_from_json(text: str) -> AnalysisReport:
    """Rebuild a report from its JSON form (round-trips byte-identically)."""
    doc = json.loads(text)
    meta = doc["meta"]
    summary = GraphSummary(**doc["summary"])
    raw = tuple(MeasureVector(m["name"], np.asarray(m["values"]), m["bigger_is_better"])
                for m in doc["raw_measures"])
    nodes = tuple(
        GenerationScore(g["name"], g["generation"],
                        np.asarray(g["values"]), np.asarray(g["display_heights"]))
        for g in doc["generations"]
    )
    generations = GenerationScores(meta["scheme"], nodes)
    gof = tuple(
        GoFReport(r["test"], r["statistic"], r["p_value"],
                  r["replicates"], r["seed"], r["decision"])
        for r in doc["gof"]
    )
    return AnalysisReport(
        source=meta["source"],
        year=meta["year"],
        threshold=meta["threshold"],
        measure_set=meta["measure_set"],
        scheme_id=meta["scheme"],
        seed=meta["seed"],
        replicates=meta["replicates"],
        version=meta["version"],
        labels=tuple(doc["nodes"]),
        summary=summary,
        raw_measures=raw,
        replaced_measure=doc["replaced_measure"],
        generations=generations,
        gof=gof,
    )
