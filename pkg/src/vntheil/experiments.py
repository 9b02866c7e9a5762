"""The 10-graph ordering experiment, vertex-removal perturbations, and a
seeded random connected-graph sampler for property campaigns."""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable

from . import indices as ix
from .errors import DomainError, InfeasibleEdgeCount
from .graph import CATALOG_IDS, Graph, build_graph, catalog_graph, is_connected, remove_vertex

TIE_TOL = 1e-9

METRICS: dict[str, Callable[[Graph], float]] = {
    "cd": ix.freeman_degree_centralization,
    "cb": ix.freeman_betweenness_centralization,
    "td1": lambda g: ix.degree_theil(g, 1.0),
    "tq": ix.von_neumann_theil,
}

METRIC_LABELS = {"cd": "C_D", "cb": "C_B", "td1": "T_d1", "tq": "T_Q"}

# Most to least centralized, as published for each metric.
PUBLISHED_ORDERS: dict[str, tuple[str, ...]] = {
    "cd": ("star", "wheel", "balanced_tree", "lollipop", "barbell",
           "bipartite_3_4", "two_story_house", "path", "circle", "complete"),
    "cb": ("star", "barbell", "balanced_tree", "wheel", "lollipop",
           "path", "two_story_house", "bipartite_3_4", "circle", "complete"),
    "td1": ("star", "balanced_tree", "wheel", "path", "lollipop",
            "barbell", "two_story_house", "bipartite_3_4", "circle", "complete"),
    "tq": ("star", "balanced_tree", "path", "lollipop", "barbell",
           "circle", "two_story_house", "wheel", "bipartite_3_4", "complete"),
}


@dataclass
class OrderingResult:
    metric: str
    ranked: list[tuple[str, float]]
    published_order: tuple[str, ...]
    matches: bool
    violations: list[tuple[str, str, float, float]] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "metric": self.metric,
            "ranked": [{"graph": name, "value": v} for name, v in self.ranked],
            "published_order": list(self.published_order),
            "matches": self.matches,
            "violations": [
                {"above": a, "below": b, "above_value": va, "below_value": vb}
                for a, b, va, vb in self.violations
            ],
        }


def order_violations(values: dict[str, float], order, tol: float = TIE_TOL):
    """Adjacent pairs of ``order`` whose values increase by more than ``tol``."""
    return [
        (a, b, values[a], values[b])
        for a, b in zip(order, order[1:])
        if values[b] > values[a] + tol
    ]


def catalog_values(metric: str) -> dict[str, float]:
    fn = METRICS[metric]
    return {name: fn(catalog_graph(name)) for name in CATALOG_IDS}


def reproduce_ordering(metric: str) -> OrderingResult:
    if metric not in METRICS:
        raise ValueError(f"unknown metric {metric!r}; choose from {', '.join(METRICS)}")
    values = catalog_values(metric)
    published = PUBLISHED_ORDERS[metric]
    rank = {name: i for i, name in enumerate(published)}
    ranked = sorted(values.items(), key=lambda kv: (-kv[1], rank[kv[0]]))
    bad = order_violations(values, published)
    return OrderingResult(metric, ranked, published, not bad, bad)


# --- perturbation -------------------------------------------------------------------

@dataclass
class PerturbationRecord:
    base: str
    removed_vertex: int
    connected_after: bool
    before: dict[str, float | None]
    after: dict[str, float | None]

    @property
    def deltas(self) -> dict[str, float | None]:
        return {
            k: None if self.before[k] is None or self.after[k] is None else self.after[k] - self.before[k]
            for k in self.before
        }

    def to_dict(self) -> dict:
        return {
            "base": self.base,
            "removed_vertex": self.removed_vertex,
            "connected_after": self.connected_after,
            "before": self.before,
            "after": self.after,
            "deltas": self.deltas,
        }


def metric_values(g: Graph) -> dict[str, float | None]:
    """All four ordering metrics; None where the graph is outside a metric's domain."""
    out = {}
    for key, fn in METRICS.items():
        try:
            out[METRIC_LABELS[key]] = fn(g)
        except DomainError:
            out[METRIC_LABELS[key]] = None
    return out


def perturbation_study(g: Graph, base: str = "graph") -> list[PerturbationRecord]:
    if g.n < 3:
        raise ValueError("perturbation study needs n >= 3")
    before = metric_values(g)
    records = []
    for v in range(g.n):
        h = remove_vertex(g, v)
        records.append(PerturbationRecord(base, v, is_connected(h), before, metric_values(h)))
    return records


# --- random graphs --------------------------------------------------------------------

def random_graph(n: int, m: int, seed: int) -> Graph:
    """Connected simple graph with exactly ``m`` edges.

    A random recursive spanning tree is laid down first, then the remaining
    edges are drawn uniformly from the unused pairs. Not uniform over
    connected graphs.
    """
    if n < 1 or not n - 1 <= m <= n * (n - 1) // 2:
        raise InfeasibleEdgeCount(f"no connected simple graph with n={n}, m={m}")
    rng = random.Random(seed)
    order = list(range(n))
    rng.shuffle(order)
    edges = set()
    for idx in range(1, n):
        u, w = order[idx], order[rng.randrange(idx)]
        edges.add((min(u, w), max(u, w)))
    rest = [e for e in combinations(range(n), 2) if e not in edges]
    edges.update(rng.sample(rest, m - (n - 1)))
    return build_graph(n, sorted(edges))


def random_connected_graph(rng: random.Random, n_min: int = 3, n_max: int = 12) -> Graph:
    n = rng.randint(n_min, n_max)
    m = rng.randint(n - 1, n * (n - 1) // 2)
    return random_graph(n, m, rng.getrandbits(32))
