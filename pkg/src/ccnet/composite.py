"""Composite scores and inheritance schemes.

Two standardized measures combine as (a + b) / sigma_s(a + b); a set combines
flat as sum / sigma_s(sum).  An inheritance scheme is a strictly binary tree
over the first-generation measure names whose internal nodes are abstract
higher-generation measures; different schemes agree at the root up to small
statistical fluctuations driven by the sibling sigma_s estimates.

Display heights divide each node's values by the product of the sigma_s
normalizers on its path to the root, which makes sibling heights sum exactly
to the parent's height per graph node.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .standardize import StandardizedMeasure


class SchemeError(ValueError):
    """Malformed inheritance scheme or scheme/measure mismatch."""


class DegenerateCombinationError(ValueError):
    """Combination has zero variance (e.g. a measure combined with its negation)."""


@dataclass(frozen=True)
class SchemeNode:
    name: str
    children: tuple["SchemeNode", ...] = ()

    @property
    def is_leaf(self) -> bool:
        return not self.children


@dataclass(frozen=True)
class InheritanceScheme:
    """Strictly binary combination tree; leaves name first-generation measures."""

    root: SchemeNode
    scheme_id: str = "custom"

    def __post_init__(self) -> None:
        names: list[str] = []
        internal: list[str] = []

        def walk(node: SchemeNode) -> None:
            if node.is_leaf:
                names.append(node.name)
                return
            if len(node.children) != 2:
                raise SchemeError(f"internal node {node.name!r} must have exactly 2 children")
            internal.append(node.name)
            for child in node.children:
                walk(child)

        walk(self.root)
        if len(set(names)) != len(names):
            raise SchemeError("every leaf must be used exactly once")
        if len(set(internal + names)) != len(internal) + len(names):
            raise SchemeError("scheme node names must be unique")

    def leaves(self) -> tuple[str, ...]:
        out: list[str] = []

        def walk(node: SchemeNode) -> None:
            if node.is_leaf:
                out.append(node.name)
            for child in node.children:
                walk(child)

        walk(self.root)
        return tuple(out)

    def rename_leaf(self, old: str, new: str) -> "InheritanceScheme":
        """Same tree with one leaf renamed (used by the alternative measure set)."""
        if old not in self.leaves():
            raise SchemeError(f"no leaf named {old!r}")

        def walk(node: SchemeNode) -> SchemeNode:
            if node.is_leaf:
                return SchemeNode(new) if node.name == old else node
            return SchemeNode(node.name, tuple(walk(c) for c in node.children))

        return InheritanceScheme(walk(self.root), scheme_id=self.scheme_id)


@dataclass(frozen=True)
class GenerationScore:
    """One tree node's standardized values plus its display heights."""

    name: str
    generation: int
    values: np.ndarray
    display_heights: np.ndarray


@dataclass(frozen=True)
class GenerationScores:
    """All per-node scores of one scheme run, in preorder (root first)."""

    scheme_id: str
    nodes: tuple[GenerationScore, ...]

    def root(self) -> GenerationScore:
        return self.nodes[0]

    def __getitem__(self, name: str) -> GenerationScore:
        for node in self.nodes:
            if node.name == name:
                return node
        raise KeyError(name)

    def generations(self) -> list[int]:
        return sorted({node.generation for node in self.nodes}, reverse=True)

    def by_generation(self, generation: int) -> list[GenerationScore]:
        return [node for node in self.nodes if node.generation == generation]


def combine(a: StandardizedMeasure, b: StandardizedMeasure,
            name: str | None = None) -> StandardizedMeasure:
    """Combine two standardized measures: (a + b) / sigma_s(a + b)."""
    if a.values.shape != b.values.shape:
        raise ValueError("measures must have equal length")
    s = a.values + b.values
    sd = float(s.std(ddof=1))
    if sd == 0.0:
        raise DegenerateCombinationError(f"combining {a.name!r} and {b.name!r} is degenerate")
    return StandardizedMeasure(name or f"{a.name}+{b.name}", s / sd)


def combine_set(measures: Sequence[StandardizedMeasure],
                name: str = "COMPOSITE") -> StandardizedMeasure:
    """Flat composite of a measure set: sum / sigma_s(sum), no intermediate steps."""
    if len(measures) < 2:
        raise ValueError("need at least 2 measures to combine")
    lengths = {m.values.shape for m in measures}
    if len(lengths) != 1:
        raise ValueError("measures must have equal length")
    s = np.sum([m.values for m in measures], axis=0)
    sd = float(s.std(ddof=1))
    if sd == 0.0:
        raise DegenerateCombinationError("measure set sums to a constant")
    return StandardizedMeasure(name, s / sd)


def run_scheme(scheme: InheritanceScheme,
               g1: Sequence[StandardizedMeasure]) -> GenerationScores:
    """Apply a scheme bottom-up and attach display heights.

    The scheme's leaves must match the supplied measure names exactly.  The
    height of a node is its standardized values divided by the product of the
    sigma_s normalizers on the path to the root, so sibling heights sum to the
    parent's height and the root's height equals its own values.
    """
    by_name = {m.name: m for m in g1}
    leaf_names = scheme.leaves()
    missing = [n for n in leaf_names if n not in by_name]
    extra = [n for n in by_name if n not in leaf_names]
    if missing or extra:
        raise SchemeError(f"scheme/measure mismatch: missing {missing}, unused {extra}")

    values: dict[str, np.ndarray] = {}
    sigmas: dict[str, float] = {}
    generation: dict[str, int] = {}

    def up(node: SchemeNode) -> np.ndarray:
        if node.is_leaf:
            values[node.name] = by_name[node.name].values
            generation[node.name] = 1
            return values[node.name]
        left, right = node.children
        s = up(left) + up(right)
        sd = float(s.std(ddof=1))
        if sd == 0.0:
            raise DegenerateCombinationError(f"combination at {node.name!r} is degenerate")
        sigmas[node.name] = sd
        values[node.name] = s / sd
        generation[node.name] = 1 + max(generation[left.name], generation[right.name])
        return values[node.name]

    up(scheme.root)

    nodes: list[GenerationScore] = []

    def down(node: SchemeNode, divisor: float) -> None:
        nodes.append(GenerationScore(
            name=node.name,
            generation=generation[node.name],
            values=values[node.name],
            display_heights=values[node.name] / divisor,
        ))
        if not node.is_leaf:
            for child in node.children:
                down(child, divisor * sigmas[node.name])

    down(scheme.root, 1.0)
    return GenerationScores(scheme.scheme_id, tuple(nodes))


def scheme_invariance(g1: Sequence[StandardizedMeasure],
                      schemes: Sequence[InheritanceScheme]) -> float:
    """Maximum root-score discrepancy over all scheme pairs and graph nodes."""
    if len(schemes) < 2:
        raise ValueError("need at least 2 schemes")
    leaf_sets = {tuple(sorted(s.leaves())) for s in schemes}
    if len(leaf_sets) != 1:
        raise SchemeError("schemes must share one leaf set")
    roots = [run_scheme(s, g1).root().values for s in schemes]
    worst = 0.0
    for i in range(len(roots)):
        for j in range(i + 1, len(roots)):
            worst = max(worst, float(np.max(np.abs(roots[i] - roots[j]))))
    return worst


def parse_scheme(obj: dict, scheme_id: str = "custom") -> InheritanceScheme:
    """Build a scheme from nested ``{"name": ..., "children": [...]}`` dicts."""

    def walk(node: dict) -> SchemeNode:
        if not isinstance(node, dict) or "name" not in node:
            raise SchemeError("scheme nodes must be objects with a 'name'")
        children = node.get("children", [])
        return SchemeNode(str(node["name"]), tuple(walk(c) for c in children))

    return InheritanceScheme(walk(obj), scheme_id=scheme_id)


def load_scheme(path: str) -> InheritanceScheme:
    with open(path, encoding="utf-8") as fh:
        return parse_scheme(json.load(fh), scheme_id=path)


def scheme_to_dict(scheme: InheritanceScheme) -> dict:
    def walk(node: SchemeNode) -> dict:
        if node.is_leaf:
            return {"name": node.name}
        return {"name": node.name, "children": [walk(c) for c in node.children]}

    return walk(scheme.root)


def _leaf(name: str) -> SchemeNode:
    return SchemeNode(name)


_BUILTIN_TREES = {
    # Split axes from the root down; G2 always merges the last axis.
    "drt": SchemeNode("COMPOSITE", (
        SchemeNode("IN", (
            SchemeNode("IN-LO", (_leaf("IN-LO-QL"), _leaf("IN-LO-QN"))),
            SchemeNode("IN-SH", (_leaf("IN-SH-QL"), _leaf("IN-SH-QN"))),
        )),
        SchemeNode("OUT", (
            SchemeNode("OUT-LO", (_leaf("OUT-LO-QL"), _leaf("OUT-LO-QN"))),
            SchemeNode("OUT-SH", (_leaf("OUT-SH-QL"), _leaf("OUT-SH-QN"))),
        )),
    )),
    "rtd": SchemeNode("COMPOSITE", (
        SchemeNode("LO", (
            SchemeNode("LO-QL", (_leaf("IN-LO-QL"), _leaf("OUT-LO-QL"))),
            SchemeNode("LO-QN", (_leaf("IN-LO-QN"), _leaf("OUT-LO-QN"))),
        )),
        SchemeNode("SH", (
            SchemeNode("SH-QL", (_leaf("IN-SH-QL"), _leaf("OUT-SH-QL"))),
            SchemeNode("SH-QN", (_leaf("IN-SH-QN"), _leaf("OUT-SH-QN"))),
        )),
    )),
    "tdr": SchemeNode("COMPOSITE", (
        SchemeNode("QL", (
            SchemeNode("QL-IN", (_leaf("IN-LO-QL"), _leaf("IN-SH-QL"))),
            SchemeNode("QL-OUT", (_leaf("OUT-LO-QL"), _leaf("OUT-SH-QL"))),
        )),
        SchemeNode("QN", (
            SchemeNode("QN-IN", (_leaf("IN-LO-QN"), _leaf("IN-SH-QN"))),
            SchemeNode("QN-OUT", (_leaf("OUT-LO-QN"), _leaf("OUT-SH-QN"))),
        )),
    )),
}

BUILTIN_SCHEME_IDS = tuple(_BUILTIN_TREES)


def builtin_scheme(scheme_id: str) -> InheritanceScheme:
    """Shipped schemes over the standard measure set: 'drt', 'rtd', 'tdr'."""
    try:
        return InheritanceScheme(_BUILTIN_TREES[scheme_id], scheme_id=scheme_id)
    except KeyError:
        raise SchemeError(f"unknown builtin scheme {scheme_id!r}") from None
