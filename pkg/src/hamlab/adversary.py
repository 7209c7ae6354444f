"""Degree-budgeted edge-deletion adversaries.

Each attack removes edges from a graph subject to a per-vertex deletion
budget: vertex v may lose at most k_v incident edges.  Attacks are greedy
and deterministic (ascending edge order, or a seeded shuffle for the random
strategy); when deleting an edge would overdraw either endpoint the edge is
skipped.  Every constructor asserts budget compliance on its own output,
so a returned DeletionGraph is always admissible.
"""

import math
from dataclasses import dataclass

from .graphs import Graph, build_graph, subtract
from .rng import SplitMix64

__all__ = [
    "BudgetVector",
    "DeletionGraph",
    "uniform_budget",
    "bipartition_attack",
    "random_attack",
    "isolation_attack",
    "apply_attack",
    "check_budget",
]


@dataclass(frozen=True)
class BudgetVector:
    """Per-vertex caps on how many incident edges may be deleted."""

    caps: tuple

    def __post_init__(self):
        if any(k < 0 for k in self.caps):
            raise ValueError("budget entries must be non-negative")

    def __len__(self):
        return len(self.caps)

    def __getitem__(self, v):
        return self.caps[v]


@dataclass(frozen=True)
class DeletionGraph:
    """The removed edge set H, remembered together with the ambient n."""

    h: Graph
    source_n: int


def uniform_budget(n, p, alpha):
    """The standard resilience budget: floor(alpha * n * p) per vertex."""
    if alpha < 0:
        raise ValueError("alpha must be non-negative, got %r" % (alpha,))
    k = math.floor(alpha * n * p)
    return BudgetVector((k,) * n)


def check_budget(h, k):
    """True iff every vertex loses at most its budgeted number of edges."""
    if h.h.n != len(k):
        raise ValueError("budget length %d does not match n=%d"
                         % (len(k), h.h.n))
    degs = h.h.degrees()
    return all(int(degs[v]) <= k[v] for v in range(h.h.n))


def _greedy_delete(candidate_edges, budget):
    remaining = list(budget.caps)
    chosen = []
    for u, v in candidate_edges:
        if remaining[u] > 0 and remaining[v] > 0:
            remaining[u] -= 1
            remaining[v] -= 1
            chosen.append((u, v))
    return chosen


def _finish(g, chosen, budget):
    dg = DeletionGraph(build_graph(g.n, chosen), g.n)
    if not check_budget(dg, budget):
        raise AssertionError("attack overdrew a deletion budget (bug)")
    return dg


def bipartition_attack(g, parts, budget):
    """Delete the cross edges of a vertex bipartition, budget permitting.

    Cross edges are processed in ascending (u, v) order; with budgets at
    least the maximum cross-degree this removes the entire cut and
    disconnects the graph.
    """
    a, b = parts
    if a.n != g.n or b.n != g.n:
        raise ValueError("parts are not over this graph's vertices")
    if len(a) + len(b) != g.n or (a.mask & b.mask).any():
        raise ValueError("parts must partition the vertex set")
    cross = [(int(u), int(v)) for u, v in g.edge_array()
             if a.mask[u] != a.mask[v]]
    return _finish(g, _greedy_delete(cross, budget), budget)


def random_attack(g, budget, seed):
    """Delete edges in a seeded uniformly-shuffled order, budget permitting."""
    edges = [(int(u), int(v)) for u, v in g.edge_array()]
    SplitMix64(seed).shuffle(edges)
    return _finish(g, _greedy_delete(edges, budget), budget)


def isolation_attack(g, target, budget):
    """Strip edges at one vertex (ascending neighbours) within budgets.

    If deg(target) <= k_target the vertex ends up isolated and the residual
    graph cannot be Hamiltonian.
    """
    if not 0 <= target < g.n:
        raise ValueError("target %d out of range for n=%d" % (target, g.n))
    remaining = list(budget.caps)
    chosen = []
    for w in g.neighbors(target):
        w = int(w)
        if remaining[target] <= 0:
            break
        if remaining[w] > 0:
            remaining[target] -= 1
            remaining[w] -= 1
            chosen.append((min(target, w), max(target, w)))
    return _finish(g, chosen, budget)


def apply_attack(g, dg):
    """Residual graph after an attack: G minus the deleted edges."""
    return subtract(g, dg.h)
